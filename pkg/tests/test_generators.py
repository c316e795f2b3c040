import math
from collections import Counter

from idslearn.automata import Dfa, access_words, delta_star, live_states
from idslearn.generators import (
    derive_seed, iter_random_words, live_complete_set, random_dfa, random_words,
)
from idslearn.ids import Variant, learn_stream
from idslearn.equivalence import check_equiv
from idslearn.teacher import Teacher

from conftest import random_targets, w


def test_random_dfa_single_state():
    d = random_dfa(1, 1, 7)
    assert d.transition == ((0,),)
    assert d.initial == 0


def test_random_dfa_is_deterministic():
    assert random_dfa(9, 3, 1234) == random_dfa(9, 3, 1234)
    assert random_dfa(9, 3, 1234) != random_dfa(9, 3, 1235)


def test_random_dfa_transition_targets_are_uniform():
    draws = 10_000
    counts = Counter()
    for seed in range(draws):
        d = random_dfa(5, 2, seed)
        for row in d.transition:
            for t in row:
                counts[t] += 1
        assert d.num_states == 5 and all(0 <= t < 5 for row in d.transition for t in row)
    n = draws * 10
    sigma = math.sqrt(0.2 * 0.8 / n)
    for t in range(5):
        assert abs(counts[t] / n - 0.2) < 3 * sigma


def test_random_dfa_final_count_covers_zero_to_n():
    sizes = Counter(len(random_dfa(4, 2, s).finals) for s in range(2000))
    assert set(sizes) == {0, 1, 2, 3, 4}


def test_random_words_single_length():
    words = random_words(2, 1, 5, seed=3)
    assert len(words) == 5 and all(len(x) == 1 for x in words)


def test_random_words_deterministic_and_prefix_stable():
    assert random_words(3, 6, 50, 9) == random_words(3, 6, 50, 9)
    assert random_words(3, 6, 2000, 9)[:50] == random_words(3, 6, 50, 9)


def test_random_words_length_histogram_uniform():
    n = 100_000
    lengths = Counter(len(x) for x in random_words(2, 4, n, seed=21))
    assert 0 not in lengths
    sigma = math.sqrt(0.25 * 0.75 / n)
    for length in (1, 2, 3, 4):
        assert abs(lengths[length] / n - 0.25) < 3 * sigma


def test_word_stream_never_yields_empty():
    it = iter_random_words(2, 3, 5)
    assert all(len(next(it)) >= 1 for _ in range(5000))


def test_derive_seed_distinct_children():
    seeds = {derive_seed(0, size, trial) for size in range(5, 51, 5) for trial in range(10)}
    assert len(seeds) == 100
    assert derive_seed(0, 5, 1) == derive_seed(0, 5, 1)


def test_live_complete_set_all_rejecting():
    d = Dfa.from_table([[1, 0], [1, 1]], finals=[])
    assert live_complete_set(d) == [()]


def test_live_complete_set_fig1(fig1):
    assert live_complete_set(fig1) == [(), w("b"), w("bb")]


def test_live_complete_set_reaches_every_reachable_live_state():
    for d in random_targets(50, 10, 10, seed=4):
        words = live_complete_set(d)
        assert () in words
        reached = {delta_star(d, d.initial, x) for x in words}
        assert live_states(d) & set(access_words(d)) <= reached


def test_live_complete_set_teaches_both_variants():
    for d in random_targets(30, 2, 10, seed=5):
        for variant in Variant:
            result = learn_stream(Teacher(d), variant, live_complete_set(d))
            assert check_equiv(result.hypothesis.dfa, d).equivalent
