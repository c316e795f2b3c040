"""Random targets, random observation words, and live-complete access sets.

All randomness flows from explicit 64-bit seeds through numpy's
``SeedSequence``, so derived streams are reproducible and independent.
"""
from __future__ import annotations

from itertools import islice
from typing import Iterator

import numpy as np

from .automata import EMPTY, Dfa, Word, access_words, live_states

WORD_CHUNK = 1024


def derive_seed(base_seed: int, *key: int) -> int:
    """A 64-bit child seed of ``base_seed`` identified by ``key``."""
    seq = np.random.SeedSequence(base_seed, spawn_key=tuple(key))
    return int(seq.generate_state(1, dtype=np.uint64)[0])


def random_dfa(num_states: int, alphabet_size: int, seed: int) -> Dfa:
    """Uniform random DFA; dead and unreachable states are kept.

    The number of finals is uniform on ``0..num_states`` and the finals are a
    uniform subset of that size.
    """
    if num_states < 1 or alphabet_size < 1:
        raise ValueError("num_states and alphabet_size must be positive")
    rng = np.random.default_rng(seed)
    n_finals = int(rng.integers(0, num_states + 1))
    finals = rng.choice(num_states, size=n_finals, replace=False)
    initial = int(rng.integers(0, num_states))
    table = rng.integers(0, num_states, size=(num_states, alphabet_size))
    return Dfa(
        num_states=num_states,
        alphabet_size=alphabet_size,
        initial=initial,
        finals=frozenset(int(q) for q in finals),
        transition=table.tolist(),
    )


def iter_random_words(alphabet_size: int, max_len: int, seed: int) -> Iterator[Word]:
    """Endless stream of non-empty words, lengths uniform on ``1..max_len``."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    rng = np.random.default_rng(seed)
    while True:
        lengths = rng.integers(1, max_len + 1, size=WORD_CHUNK)
        symbols = rng.integers(0, alphabet_size, size=int(lengths.sum())).tolist()
        pos = 0
        for n in lengths.tolist():
            yield tuple(symbols[pos:pos + n])
            pos += n


def random_words(alphabet_size: int, max_len: int, count: int, seed: int) -> list[Word]:
    """The first ``count`` words of :func:`iter_random_words`."""
    return list(islice(iter_random_words(alphabet_size, max_len, seed), count))


def live_complete_set(dfa: Dfa) -> list[Word]:
    """The empty word plus a shortest access word for each reachable live state."""
    live = live_states(dfa)
    words = {EMPTY}
    for q, w in access_words(dfa).items():
        if q in live:
            words.add(w)
    return sorted(words, key=lambda w: (len(w), w))
