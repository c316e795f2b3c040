"""Language equivalence of DFAs.

``check_equiv`` is the Hopcroft-Karp union-find method (near-linear);
``check_equiv_bruteforce`` explores the product automaton breadth-first and
serves as its test oracle.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .automata import Dfa, Word


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    witness: Optional[Word] = None

    def __bool__(self) -> bool:
        return self.equivalent


def _check_alphabets(a: Dfa, b: Dfa) -> None:
    if a.alphabet_size != b.alphabet_size:
        raise ValueError(f"alphabet sizes differ: {a.alphabet_size} vs {b.alphabet_size}")


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of ``x`` and ``y``; False if they were already one set."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        return True


def _path(parents: dict, pair) -> Word:
    word = []
    while parents[pair] is not None:
        pair, b = parents[pair]
        word.append(b)
    return tuple(reversed(word))


def check_equiv(a: Dfa, b: Dfa) -> EquivalenceResult:
    _check_alphabets(a, b)
    off = a.num_states
    uf = UnionFind(a.num_states + b.num_states)
    start = (a.initial, b.initial)
    parents = {start: None}
    # Every pushed pair is a genuine product state; a finality mismatch among
    # them is the only way a merged class can be non-uniform.
    if (start[0] in a.finals) != (start[1] in b.finals):
        return EquivalenceResult(False, ())
    uf.union(start[0], start[1] + off)
    stack = [start]
    k = a.alphabet_size
    ta, tb, fa, fb = a.transition, b.transition, a.finals, b.finals
    while stack:
        pair = stack.pop()
        p, q = pair
        for s in range(k):
            np, nq = ta[p][s], tb[q][s]
            if uf.union(np, nq + off):
                nxt = (np, nq)
                parents[nxt] = (pair, s)
                if (np in fa) != (nq in fb):
                    return EquivalenceResult(False, _path(parents, nxt))
                stack.append(nxt)
    return EquivalenceResult(True)


def check_equiv_bruteforce(a: Dfa, b: Dfa) -> EquivalenceResult:
    _check_alphabets(a, b)
    start = (a.initial, b.initial)
    parents = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if (p in a.finals) != (q in b.finals):
            return EquivalenceResult(False, _path(parents, pair))
        for s in range(a.alphabet_size):
            nxt = (a.transition[p][s], b.transition[q][s])
            if nxt not in parents:
                parents[nxt] = (pair, s)
                queue.append(nxt)
    return EquivalenceResult(True)
