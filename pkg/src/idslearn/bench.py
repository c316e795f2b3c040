"""Experiment harness: random targets, random word streams, learn to convergence, CSV out."""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .automata import Dfa
from .equivalence import check_equiv
from .generators import derive_seed, iter_random_words, random_dfa
from .ids import Variant, learn_stream
from .teacher import Teacher

CSV_HEADER = [
    "variant", "nominal_states", "trial", "seed", "time_ms", "mquery",
    "bquery", "strings_consumed", "hypothesis_states", "converged",
]
DEFAULT_BUDGET = 10**7


@dataclass
class BenchSpec:
    state_sizes: Sequence[int] = tuple(range(5, 51, 5))
    trials_per_size: int = 10
    alphabet_size: int = 2
    variants: Sequence[Variant] = (Variant.PREFIX_FREE, Variant.PREFIX_CLOSED)
    base_seed: int = 0
    query_budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.trials_per_size < 1:
            raise ValueError("trials_per_size must be at least 1")
        if self.query_budget <= 0:
            raise ValueError("query_budget must be positive")
        if any(n < 1 for n in self.state_sizes):
            raise ValueError("state sizes must be positive")
        self.variants = tuple(Variant.parse(v) for v in self.variants)


@dataclass
class TrialRecord:
    variant: str
    nominal_states: int
    trial_index: int
    seed: int
    time_ms: float
    mquery: int
    bquery: int
    strings_consumed: int
    hypothesis_states: int
    converged: bool

    def csv_row(self) -> list:
        return [
            self.variant, self.nominal_states, self.trial_index, self.seed,
            f"{self.time_ms:.3f}", self.mquery, self.bquery,
            self.strings_consumed, self.hypothesis_states, str(self.converged).lower(),
        ]

    def without_time(self) -> dict:
        d = asdict(self)
        del d["time_ms"]
        return d


def run_trial(target: Dfa, variant, seed: int, budget: int = DEFAULT_BUDGET,
              nominal_states: Optional[int] = None, trial_index: int = 0) -> TrialRecord:
    """Learn ``target`` from a random word stream seeded by ``seed``.

    Equivalence is checked after every rebuilt hypothesis. ``time_ms`` counts
    learner work only.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    variant = Variant.parse(variant)
    words = iter_random_words(target.alphabet_size, target.num_states, derive_seed(seed, 1))
    result = learn_stream(
        Teacher(target), variant, words,
        stop=lambda h: check_equiv(h.dfa, target).equivalent,
        budget=budget,
    )
    return TrialRecord(
        variant=variant.value,
        nominal_states=target.num_states if nominal_states is None else nominal_states,
        trial_index=trial_index,
        seed=seed,
        time_ms=result.stats.elapsed_ms,
        mquery=result.stats.mquery,
        bquery=result.stats.bquery,
        strings_consumed=result.strings_consumed,
        hypothesis_states=result.hypothesis.num_states,
        converged=result.converged,
    )


def trial_seed(base_seed: int, size: int, trial: int) -> int:
    return derive_seed(base_seed, size, trial)


def trial_target(seed: int, size: int, alphabet_size: int) -> Dfa:
    return random_dfa(size, alphabet_size, derive_seed(seed, 0))


def _run_paired(args) -> list[TrialRecord]:
    size, trial, spec = args
    seed = trial_seed(spec.base_seed, size, trial)
    target = trial_target(seed, size, spec.alphabet_size)
    return [run_trial(target, v, seed, spec.query_budget, size, trial) for v in spec.variants]


def run_records(spec: BenchSpec, jobs: int = 1) -> list[TrialRecord]:
    """All trial records in (size, trial, variant) order; variants share target and words."""
    tasks = [(size, trial, spec) for size in spec.state_sizes for trial in range(spec.trials_per_size)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_run_paired, tasks))
    else:
        batches = [_run_paired(t) for t in tasks]
    return [r for batch in batches for r in batch]


def mean_rows(records: Iterable[TrialRecord]) -> list[list]:
    groups: dict = {}
    for r in records:
        groups.setdefault((r.nominal_states, r.variant), []).append(r)
    rows = []
    for (size, variant), rs in sorted(groups.items()):
        n = len(rs)

        def mean(attr):
            return sum(getattr(r, attr) for r in rs) / n

        rows.append([
            variant, size, "mean", "", f"{mean('time_ms'):.3f}", f"{mean('mquery'):.3f}",
            f"{mean('bquery'):.3f}", f"{mean('strings_consumed'):.3f}",
            f"{mean('hypothesis_states'):.3f}", f"{sum(r.converged for r in rs) / n:.3f}",
        ])
    return rows


def to_csv(records: Sequence[TrialRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(r.csv_row())
    writer.writerows(mean_rows(records))
    return buf.getvalue()


def run_bench(spec: BenchSpec, jobs: int = 1) -> str:
    return to_csv(run_records(spec, jobs))


def read_csv(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    return float(np.polyfit(lx, ly, 1)[0])


def mean_by_size(records: Iterable[TrialRecord], variant, attr: str) -> dict[int, float]:
    variant = Variant.parse(variant).value
    groups: dict = {}
    for r in records:
        if r.variant == variant:
            groups.setdefault(r.nominal_states, []).append(getattr(r, attr))
    return {size: sum(v) / len(v) for size, v in sorted(groups.items())}


