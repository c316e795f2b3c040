"""Observation table shared by ID and IDS: rows, partition refinement, quotient construction.

A row ``E[name]`` is a bitset over the distinguishing list ``V``: bit ``j``
is set iff the teacher accepts ``name . V[j]``. The dead sentinel always has
the empty row and is never queried.
"""
from __future__ import annotations

from bisect import insort
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .automata import DEAD, Dfa, StateName, Word, f_concat, word_key
from .teacher import QueryStats, Teacher


class TableInvariantError(RuntimeError):
    """The table violates an internal invariant (a construction bug, not bad input)."""


@dataclass
class Hypothesis:
    dfa: Dfa
    generation: int
    class_of: dict = field(repr=False, default_factory=dict)

    @property
    def num_states(self) -> int:
        return self.dfa.num_states


@dataclass(frozen=True)
class Violation:
    """Names ``first`` and ``second`` share a row but disagree after ``symbol``."""

    first: StateName
    second: StateName
    symbol: int
    first_succ_row: int
    second_succ_row: int


class ObservationTable:
    def __init__(self, teacher: Teacher, stats: Optional[QueryStats] = None):
        self.teacher = teacher
        self.k = teacher.alphabet_size
        self.stats = stats if stats is not None else QueryStats()
        self.V: list[Word] = [()]
        self.E: dict = {DEAD: 0}
        self.P: set = set()
        self.T: set = set()
        self._p_sorted: list[Word] = []
        self._t_sorted: list[Word] = []
        self._t_list: list[Word] = []
        # Row -> (successor rows, representative) for P', valid only while
        # V is unchanged since the last full congruence scan.
        self._reps: Optional[dict] = None
        self._unchecked: list[Word] = []
        # Distinct rows seen in T and in P'. The quotient depends only on
        # these and on V, so ``shape`` changes whenever it could differ.
        self._t_rows: set = set()
        self._p_rows: set = {0}
        self.shape = 0

    @property
    def i(self) -> int:
        """Index of the newest distinguishing string."""
        return len(self.V) - 1

    def row(self, name: StateName) -> int:
        return self.E[name]

    def row_set(self, name: StateName) -> set:
        """Row as a set of distinguishing words."""
        bits = self.E[name]
        return {v for j, v in enumerate(self.V) if bits >> j & 1}

    def sorted_p(self) -> list[StateName]:
        """P' in length-lex order, dead sentinel first."""
        return [DEAD] + self._p_sorted

    def sorted_t(self) -> list[Word]:
        return list(self._t_sorted)

    def add(self, names: Iterable[Word]) -> list[Word]:
        """Add ``names`` to P and their one-symbol extensions to T.

        Rows of names new to T are filled over the current V. Returns the new
        T names; the caller decides how to charge them.
        """
        new_t: list[Word] = []
        for name in names:
            name = tuple(name)
            if name in self.P:
                continue
            self.P.add(name)
            insort(self._p_sorted, name, key=word_key)
            self._unchecked.append(name)
            for cand in [name] + [name + (b,) for b in range(self.k)]:
                if cand not in self.T:
                    self.T.add(cand)
                    insort(self._t_sorted, cand, key=word_key)
                    self._t_list.append(cand)
                    new_t.append(cand)
        row = self.teacher.row
        E = self.E
        for name in new_t:
            E[name] = row(name, self.V)
            if E[name] not in self._t_rows:
                self._t_rows.add(E[name])
                self.shape += 1
        for name in self._unchecked:
            if E[name] not in self._p_rows:
                self._p_rows.add(E[name])
                self.shape += 1
        return new_t

    def _succ_rows(self, name: StateName) -> tuple:
        if name is DEAD:
            return (0,) * self.k
        E = self.E
        return tuple(E[name + (b,)] for b in range(self.k))

    def find_violation(self) -> Optional[Violation]:
        """Congruence check over P'; ``None`` means the partition is a congruence."""
        reps = self._reps
        if reps is not None:
            for name in sorted(self._unchecked, key=word_key):
                succ = self._succ_rows(name)
                seen = reps.get(self.E[name])
                if seen is None:
                    reps[self.E[name]] = (succ, name)
                elif seen[0] != succ:
                    break
            else:
                self._unchecked.clear()
                return None
        # Full scan, so the chosen pair does not depend on insertion history.
        reps = {}
        E = self.E
        for name in self.sorted_p():
            succ = self._succ_rows(name)
            seen = reps.get(E[name])
            if seen is None:
                reps[E[name]] = (succ, name)
                continue
            if seen[0] != succ:
                b = next(b for b in range(self.k) if seen[0][b] != succ[b])
                self._reps = None
                return Violation(seen[1], name, b, seen[0][b], succ[b])
        self._reps = reps
        self._unchecked.clear()
        return None

    def distinguishing_string(self, violation: Violation) -> Word:
        """``b . gamma`` with gamma the length-lex least word in the symmetric difference."""
        diff = violation.first_succ_row ^ violation.second_succ_row
        gamma = min((self.V[j] for j in range(len(self.V)) if diff >> j & 1), key=word_key)
        return (violation.symbol,) + gamma

    def add_distinguishing(self, v: Word) -> None:
        """Append ``v`` to V and extend every row of T with one query each."""
        if v in self.V:
            raise TableInvariantError(f"distinguishing string {v} already in V")
        self.V.append(v)
        bit = 1 << self.i
        names = self._t_list
        answers = self.teacher.member_many(names, v)
        self.stats.record_bquery(len(names))
        E = self.E
        for name, yes in zip(names, answers):
            if yes:
                E[name] |= bit
        self._reps = None
        self._t_rows = {E[name] for name in names}
        self._p_rows = {0} | {E[name] for name in self.P}
        self.shape += 1

    def refine(self) -> int:
        """Refine until the row partition of P' is a congruence; returns the number of new strings."""
        added = 0
        violation = self.find_violation()
        while violation is not None:
            self.add_distinguishing(self.distinguishing_string(violation))
            added += 1
            violation = self.find_violation()
        return added

    def is_congruence(self) -> bool:
        """Independent full check of the congruence condition (no caching)."""
        groups: dict = {}
        for name in self.sorted_p():
            succ = tuple(self.E[f_concat(name, b)] if name is not DEAD else 0 for b in range(self.k))
            if groups.setdefault(self.E[name], succ) != succ:
                return False
        return True

    def construct(self, generation: int = 0) -> Hypothesis:
        """Quotient automaton over the rows of T, with unmatched rows sent to the empty class."""
        E, k = self.E, self.k
        p_names = self.sorted_p()
        p_rows = {E[name] for name in p_names}
        unmatched = {E[b] for b in self._t_sorted if b not in self.P} - p_rows - {0}

        index: dict[int, int] = {}
        for name in self._t_sorted:
            index.setdefault(E[name], len(index))
        if unmatched and 0 not in index:
            index[0] = len(index)
        if () not in self.T:
            raise TableInvariantError("the empty word is missing from T")

        trans: list = [None] * len(index)
        for name in p_names:
            row = E[name]
            if row not in index:
                continue  # the empty class is not a state of this hypothesis
            c = index[row]
            if row == 0:
                trans[c] = [c] * k
                continue
            try:
                trans[c] = [index[E[name + (b,)]] for b in range(k)]
            except KeyError as exc:
                raise TableInvariantError(f"successor of {name} missing from T") from exc
        for row in unmatched:
            trans[index[row]] = [index[0]] * k
        if any(t is None for t in trans):
            raise TableInvariantError("constructed transition function is partial")

        class_of = {name: index[E[name]] for name in self._t_sorted}
        if 0 in index:
            class_of[DEAD] = index[0]
        dfa = Dfa(
            num_states=len(index),
            alphabet_size=k,
            initial=index[E[()]],
            finals=frozenset(c for row, c in index.items() if row & 1),
            transition=trans,
            labels=self.teacher.labels,
        )
        return Hypothesis(dfa=dfa, generation=generation, class_of=class_of)

