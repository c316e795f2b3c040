"""Deterministic finite automata over dense integer alphabets.

Symbols are ints ``0..alphabet_size-1`` and words are tuples of symbols.
Textual alphabets only exist at the file-format boundary (see
:mod:`idslearn.formats`).
"""
from __future__ import annotations

import string
from array import array
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Tuple, Union

from . import kernels

Word = Tuple[int, ...]
EMPTY: Word = ()

DEFAULT_LABELS = string.ascii_lowercase + string.ascii_uppercase + string.digits


class _Dead:
    """The dead-state sentinel used as a state name next to plain words."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "DEAD"

    def __reduce__(self):
        return "DEAD"


DEAD = _Dead()
StateName = Union[Word, _Dead]


def f_concat(name: StateName, symbol: int) -> StateName:
    """Extend a state name by one symbol; the dead sentinel absorbs."""
    if name is DEAD:
        return DEAD
    return name + (symbol,)


def prefixes(word: Sequence[int]) -> list[Word]:
    """All prefixes of ``word``, shortest first, including the empty word."""
    word = tuple(word)
    return [word[:n] for n in range(len(word) + 1)]


def word_key(word: Word) -> tuple[int, Word]:
    """Length-lexicographic sort key."""
    return (len(word), word)


def name_key(name: StateName) -> tuple[int, Word]:
    """Length-lex key with the dead sentinel ordered before every word."""
    if name is DEAD:
        return (-1, ())
    return (len(name), name)


def default_labels(alphabet_size: int) -> tuple[str, ...]:
    if alphabet_size > len(DEFAULT_LABELS):
        raise ValueError(f"no default labels for an alphabet of {alphabet_size} symbols")
    return tuple(DEFAULT_LABELS[:alphabet_size])


@dataclass(frozen=True)
class Dfa:
    """A complete DFA with states ``0..num_states-1``.

    ``transition[q][b]`` is the successor of state ``q`` on symbol ``b``.
    ``labels`` name the symbols when the automaton is written to text.
    """

    num_states: int
    alphabet_size: int
    initial: int
    finals: frozenset
    transition: tuple
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.num_states < 1:
            raise ValueError("a DFA needs at least one state")
        if self.alphabet_size < 1:
            raise ValueError("a DFA needs a non-empty alphabet")
        if not 0 <= self.initial < self.num_states:
            raise ValueError(f"initial state {self.initial} out of range")
        finals = frozenset(self.finals)
        for q in finals:
            if not 0 <= q < self.num_states:
                raise ValueError(f"final state {q} out of range")
        rows = tuple(tuple(int(t) for t in row) for row in self.transition)
        if len(rows) != self.num_states:
            raise ValueError("transition table must have one row per state")
        for q, row in enumerate(rows):
            if len(row) != self.alphabet_size:
                raise ValueError(f"state {q} has {len(row)} transitions, expected {self.alphabet_size}")
            for t in row:
                if not 0 <= t < self.num_states:
                    raise ValueError(f"transition target {t} out of range")
        labels = tuple(self.labels) or default_labels(self.alphabet_size)
        if len(labels) != self.alphabet_size:
            raise ValueError("one label per symbol required")
        object.__setattr__(self, "finals", finals)
        object.__setattr__(self, "transition", rows)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_table(cls, transition, initial: int = 0, finals: Iterable[int] = (), labels=()) -> "Dfa":
        transition = [list(row) for row in transition]
        return cls(
            num_states=len(transition),
            alphabet_size=len(transition[0]) if transition else 0,
            initial=initial,
            finals=frozenset(finals),
            transition=transition,
            labels=tuple(labels),
        )

    # Flat views consumed by the walk kernels.
    @cached_property
    def flat(self) -> array:
        return array("i", [t for row in self.transition for t in row])

    @cached_property
    def final_flags(self) -> bytes:
        return bytes(1 if q in self.finals else 0 for q in range(self.num_states))

    def is_final(self, q: int) -> bool:
        return q in self.finals

    def check_state(self, q: int) -> None:
        if not 0 <= q < self.num_states:
            raise ValueError(f"state {q} out of range for {self.num_states}-state DFA")

    def check_word(self, word: Sequence[int]) -> None:
        k = self.alphabet_size
        for s in word:
            if not 0 <= s < k:
                raise ValueError(f"symbol {s} out of range for alphabet of size {k}")

    def delta_star(self, q: int, word: Sequence[int]) -> int:
        return delta_star(self, q, word)

    def accepts(self, word: Sequence[int]) -> bool:
        return accepts(self, word)

    def encode(self, text: str) -> Word:
        """Map a label string such as ``"bab"`` to a word."""
        index = {c: i for i, c in enumerate(self.labels)}
        try:
            return tuple(index[c] for c in text)
        except KeyError as exc:
            raise ValueError(f"symbol {exc.args[0]!r} not in alphabet {''.join(self.labels)!r}") from None

    def decode(self, word: Sequence[int]) -> str:
        return "".join(self.labels[s] for s in word)


def delta_star(dfa: Dfa, q: int, word: Sequence[int]) -> int:
    """State reached from ``q`` after reading ``word``."""
    dfa.check_state(q)
    dfa.check_word(word)
    return kernels.walk(dfa.flat, dfa.alphabet_size, q, tuple(word))


def accepts(dfa: Dfa, word: Sequence[int]) -> bool:
    return delta_star(dfa, dfa.initial, word) in dfa.finals


def reachable_states(dfa: Dfa) -> list[int]:
    """States reachable from the initial state, in BFS order."""
    seen = {dfa.initial}
    order = [dfa.initial]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for t in dfa.transition[q]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def live_states(dfa: Dfa) -> set[int]:
    """States from which some word reaches a final state."""
    preds: list[list[int]] = [[] for _ in range(dfa.num_states)]
    for q, row in enumerate(dfa.transition):
        for t in row:
            preds[t].append(q)
    live = set(dfa.finals)
    queue = deque(live)
    while queue:
        q = queue.popleft()
        for p in preds[q]:
            if p not in live:
                live.add(p)
                queue.append(p)
    return live


def access_words(dfa: Dfa) -> dict[int, Word]:
    """Length-lex least access word for every reachable state."""
    access = {dfa.initial: EMPTY}
    queue = deque([dfa.initial])
    while queue:
        q = queue.popleft()
        w = access[q]
        for b, t in enumerate(dfa.transition[q]):
            if t not in access:
                access[t] = w + (b,)
                queue.append(t)
    return access


def trim(dfa: Dfa) -> Dfa:
    """Drop unreachable states, renumbering in BFS order."""
    order = reachable_states(dfa)
    if len(order) == dfa.num_states and order == list(range(dfa.num_states)):
        return dfa
    index = {q: i for i, q in enumerate(order)}
    return Dfa(
        num_states=len(order),
        alphabet_size=dfa.alphabet_size,
        initial=0,
        finals=frozenset(index[q] for q in order if q in dfa.finals),
        transition=[[index[t] for t in dfa.transition[q]] for q in order],
        labels=dfa.labels,
    )


def minimize(dfa: Dfa) -> Dfa:
    """Canonical minimal DFA: reachable part, Moore partition refinement.

    States of the result are numbered in BFS order from the initial state,
    so isomorphic inputs give identical outputs.
    """
    dfa = trim(dfa)
    n, k = dfa.num_states, dfa.alphabet_size
    block = [1 if q in dfa.finals else 0 for q in range(n)]
    num_blocks = len(set(block))
    while True:
        sigs: dict[tuple, int] = {}
        new_block = []
        for q in range(n):
            sig = (block[q],) + tuple(block[t] for t in dfa.transition[q])
            new_block.append(sigs.setdefault(sig, len(sigs)))
        block = new_block
        if len(sigs) == num_blocks:
            break
        num_blocks = len(sigs)

    reps: dict[int, int] = {}
    for q in range(n):
        reps.setdefault(block[q], q)
    quotient = Dfa(
        num_states=num_blocks,
        alphabet_size=k,
        initial=block[dfa.initial],
        finals=frozenset(block[q] for q in dfa.finals),
        transition=[[block[t] for t in dfa.transition[reps[c]]] for c in range(num_blocks)],
        labels=dfa.labels,
    )
    return trim(_renumber_bfs(quotient))


def _renumber_bfs(dfa: Dfa) -> Dfa:
    order = reachable_states(dfa)
    index = {q: i for i, q in enumerate(order)}
    rest = [q for q in range(dfa.num_states) if q not in index]
    for q in rest:
        index[q] = len(index)
    order += rest
    return Dfa(
        num_states=dfa.num_states,
        alphabet_size=dfa.alphabet_size,
        initial=index[dfa.initial],
        finals=frozenset(index[q] for q in dfa.finals),
        transition=[[index[t] for t in dfa.transition[q]] for q in order],
        labels=dfa.labels,
    )


def is_total(dfa: Dfa) -> bool:
    return all(len(row) == dfa.alphabet_size for row in dfa.transition) and len(dfa.transition) == dfa.num_states
