"""Membership oracle over a hidden target DFA, and learner query counters."""
from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .automata import DEAD, Dfa, StateName, Word


class Teacher:
    """Answers ``name . suffix in L(target)?``.

    The dead sentinel is answered locally (it accepts nothing). End states of
    queried names are cached so repeated suffix queries only walk the suffix.
    """

    def __init__(self, target: Dfa):
        self._target = target
        self._flat = target.flat
        self._finals = target.final_flags
        self._k = target.alphabet_size
        self._states: dict[Word, int] = {(): target.initial}

    @property
    def alphabet_size(self) -> int:
        return self._k

    @property
    def labels(self) -> tuple:
        return self._target.labels

    def check_word(self, word: Sequence[int]) -> None:
        k = self._k
        for s in word:
            if not 0 <= s < k:
                raise ValueError(f"symbol {s} out of range for alphabet of size {k}")

    def _state(self, name: Word) -> int:
        q = self._states.get(name)
        if q is None:
            parent = self._states.get(name[:-1])
            if parent is not None:
                self.check_word(name[-1:])
                q = self._flat[parent * self._k + name[-1]]
            else:
                self.check_word(name)
                q = kernels.walk(self._flat, self._k, self._target.initial, name)
            self._states[name] = q
        return q

    def member(self, name: StateName, suffix: Word = ()) -> bool:
        if name is DEAD:
            return False
        self.check_word(suffix)
        q = kernels.walk(self._flat, self._k, self._state(tuple(name)), tuple(suffix))
        return bool(self._finals[q])

    def member_many(self, names: Sequence[Word], suffix: Word) -> bytearray:
        """Answers for ``name . suffix`` over plain-word names, as a 0/1 bytearray."""
        self.check_word(suffix)
        states = array("i", [self._state(n) for n in names])
        return kernels.accept_mask(self._flat, self._k, self._finals, states, tuple(suffix))

    def row(self, name: Word, suffixes: Sequence[Word]) -> int:
        """Bitset over ``suffixes``: bit ``j`` set iff ``name . suffixes[j]`` is accepted."""
        return kernels.accept_bits(self._flat, self._k, self._finals, self._state(name), list(suffixes))


@dataclass
class QueryStats:
    """Membership (externally supplied) and book-keeping (learner generated) counts."""

    mquery: int = 0
    bquery: int = 0
    elapsed_ms: float = 0.0

    def record_bquery(self, n: int = 1) -> "QueryStats":
        if n < 0:
            raise ValueError("query count must be non-negative")
        self.bquery += n
        return self

    def record_mquery(self) -> "QueryStats":
        self.mquery += 1
        return self

    @property
    def total(self) -> int:
        return self.mquery + self.bquery
