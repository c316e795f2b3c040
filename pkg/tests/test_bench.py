import pytest

from idslearn.automata import Dfa, minimize
from idslearn.bench import (
    CSV_HEADER, BenchSpec, TrialRecord, loglog_slope, mean_by_size, read_csv, run_bench,
    run_records, run_trial, to_csv, trial_seed, trial_target,
)
from idslearn.equivalence import check_equiv
from idslearn.generators import derive_seed, iter_random_words, random_dfa
from idslearn.ids import Variant, learn_stream
from idslearn.teacher import Teacher

SMALL = dict(state_sizes=[4, 6], trials_per_size=2, base_seed=5)


def strip_time(text):
    return [{k: v for k, v in row.items() if k != "time_ms"} for row in read_csv(text)]


def test_single_size_row_count():
    rows = read_csv(run_bench(BenchSpec(state_sizes=[5], trials_per_size=1)))
    assert len(rows) == 4
    assert [r["trial"] for r in rows] == ["0", "0", "mean", "mean"]
    assert {r["variant"] for r in rows} == {v.value for v in Variant}


def test_header():
    text = run_bench(BenchSpec(state_sizes=[3], trials_per_size=1))
    assert text.splitlines()[0] == ",".join(CSV_HEADER)


def test_csv_deterministic_except_time():
    assert strip_time(run_bench(BenchSpec(**SMALL))) == strip_time(run_bench(BenchSpec(**SMALL)))


def test_parallel_matches_serial():
    serial = [r.without_time() for r in run_records(BenchSpec(**SMALL))]
    parallel = [r.without_time() for r in run_records(BenchSpec(**SMALL), jobs=2)]
    assert serial == parallel


def test_variants_share_target_and_seed():
    records = run_records(BenchSpec(**SMALL))
    pairs = {}
    for r in records:
        pairs.setdefault((r.nominal_states, r.trial_index), set()).add(r.seed)
    assert all(len(seeds) == 1 for seeds in pairs.values())


def test_rejecting_target_converges_immediately():
    target = Dfa.from_table([[0, 0]], finals=[])
    for variant in Variant:
        rec = run_trial(target, variant, seed=1)
        assert rec.converged and rec.strings_consumed == 0 and rec.mquery == 0


def test_fig1_prefix_closed(fig1):
    rec = run_trial(fig1, Variant.PREFIX_CLOSED, seed=3)
    assert rec.converged
    assert rec.hypothesis_states == minimize(fig1).num_states


def test_rerun_is_identical_except_time(fig1):
    a = run_trial(fig1, "prefix-free", seed=9)
    b = run_trial(fig1, "prefix-free", seed=9)
    assert a.without_time() == b.without_time()


def test_budget_caps_work():
    target = random_dfa(40, 2, 11)
    rec = run_trial(target, Variant.PREFIX_FREE, seed=2, budget=100)
    assert not rec.converged
    assert rec.mquery + rec.bquery < 100 + 40 * 40 * 4  # one observation past the cap at most


def test_converged_rows_are_equivalent():
    spec = BenchSpec(**SMALL)
    for r in run_records(spec):
        assert r.converged
        target = trial_target(r.seed, r.nominal_states, 2)
        assert r.seed == trial_seed(spec.base_seed, r.nominal_states, r.trial_index)
        words = iter_random_words(2, target.num_states, derive_seed(r.seed, 1))
        result = learn_stream(Teacher(target), r.variant, words,
                              stop=lambda h: check_equiv(h.dfa, target).equivalent)
        assert check_equiv(result.hypothesis.dfa, target).equivalent
        assert result.stats.mquery == r.mquery


def test_spec_validation():
    with pytest.raises(ValueError):
        BenchSpec(trials_per_size=0)
    with pytest.raises(ValueError):
        BenchSpec(query_budget=0)
    with pytest.raises(ValueError):
        BenchSpec(variants=["suffix-free"])
    with pytest.raises(ValueError):
        run_trial(Dfa.from_table([[0]]), "prefix-free", 0, budget=0)


def test_mean_rows():
    records = [
        TrialRecord("prefix-free", 5, t, t, 1.0, 2 * t, 10, 2 * t, 3, t == 0) for t in range(2)
    ]
    rows = read_csv(to_csv(records))
    mean = rows[-1]
    assert mean["trial"] == "mean" and float(mean["mquery"]) == 1.0 and float(mean["converged"]) == 0.5
    assert mean_by_size(records, "prefix-free", "mquery") == {5: 1.0}


def test_loglog_slope_recovers_power():
    xs = [5, 10, 20, 40]
    assert loglog_slope(xs, [3 * x**2 for x in xs]) == pytest.approx(2.0)
    assert loglog_slope(xs, [7 * x for x in xs]) == pytest.approx(1.0)
