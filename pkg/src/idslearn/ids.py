"""Incremental learning with distinguishing sequences (IDS).

Both variants share one loop; they differ only in which names an observed
word contributes to P: the word itself (prefix-free) or all of its prefixes
(prefix-closed).
"""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .automata import Word, prefixes
from .table import Hypothesis, ObservationTable
from .teacher import QueryStats, Teacher


class Variant(enum.Enum):
    PREFIX_FREE = "prefix-free"
    PREFIX_CLOSED = "prefix-closed"

    @classmethod
    def parse(cls, value) -> "Variant":
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ValueError(f"unknown variant {value!r}; use prefix-free or prefix-closed") from None


class Rebuild(enum.Enum):
    """When ``observe`` constructs a new hypothesis.

    ``ON_CHANGE`` rebuilds whenever the table's quotient may have changed, so
    the hypothesis always equals the construction from the current table.
    ``ON_INCONSISTENCY`` rebuilds only when the hypothesis misclassifies the
    observed word; the table can then outrun a hypothesis that no short word
    contradicts.
    """

    ON_CHANGE = "on-change"
    ON_INCONSISTENCY = "on-inconsistency"


class IDSLearner:
    """One learning run. Construction processes the empty word and builds ``M_0``.

    Attributes mirror the algorithm's counters: ``k`` observations read,
    ``t`` hypothesis index, ``table.i`` the newest distinguishing string.
    ``stats.elapsed_ms`` accumulates wall-clock time spent inside the learner.
    """

    def __init__(self, teacher: Teacher, variant=Variant.PREFIX_CLOSED, stats: Optional[QueryStats] = None,
                 rebuild: Rebuild = Rebuild.ON_CHANGE):
        start = time.perf_counter()
        self.teacher = teacher
        self.variant = Variant.parse(variant)
        self.policy = Rebuild(rebuild)
        self.stats = stats if stats is not None else QueryStats()
        self.table = ObservationTable(teacher, self.stats)
        self.k = 0
        self.t = 0
        new = self.table.add([()])
        self.stats.record_bquery(len(new))
        self.table.refine()
        self.hypothesis = self._build()
        self.trace: list[Hypothesis] = [self.hypothesis]
        self.rebuilt = True
        self._tick(start)

    def _tick(self, start: float) -> None:
        self.stats.elapsed_ms += (time.perf_counter() - start) * 1000.0

    def _build(self) -> Hypothesis:
        self._built_shape = self.table.shape
        return self.table.construct(generation=self.t)

    @property
    def stale(self) -> bool:
        """True when the table may yield a different hypothesis than the current one."""
        return self.table.shape != self._built_shape

    def names_for(self, word: Word) -> list[Word]:
        if self.variant is Variant.PREFIX_FREE:
            return [word]
        return prefixes(word)

    def observe(self, word) -> Hypothesis:
        """Process one externally supplied word and return the current hypothesis."""
        start = time.perf_counter()
        word = tuple(word)
        self.teacher.check_word(word)
        self.stats.record_mquery()
        self.k += 1
        self.t += 1
        new = self.table.add(self.names_for(word))
        self.stats.record_bquery(self.table.i * len(new))
        self.table.refine()
        if self.policy is Rebuild.ON_CHANGE:
            needed = self.stale
        else:
            needed = self.hypothesis.dfa.accepts(word) != bool(self.table.E[word] & 1)
        if not needed:
            self.rebuilt = False
        else:
            self.hypothesis = self._build()
            self.trace.append(self.hypothesis)
            self.rebuilt = True
        self._tick(start)
        return self.hypothesis

    def rebuild(self) -> Hypothesis:
        """Construct a hypothesis from the current table regardless of consistency."""
        start = time.perf_counter()
        self.hypothesis = self._build()
        self.trace.append(self.hypothesis)
        self.rebuilt = True
        self._tick(start)
        return self.hypothesis


@dataclass
class LearnResult:
    hypothesis: Hypothesis
    stats: QueryStats
    trace: list = field(repr=False)
    converged: bool
    strings_consumed: int
    exhausted: bool


def learn_stream(
    teacher: Teacher,
    variant,
    source: Iterable,
    stop: Optional[Callable[[Hypothesis], bool]] = None,
    budget: Optional[int] = None,
    finalize: bool = True,
    rebuild: Rebuild = Rebuild.ON_CHANGE,
) -> LearnResult:
    """Feed ``source`` to a fresh learner until it runs out, ``stop`` fires, or the budget is spent.

    ``stop`` is only consulted on newly built hypotheses. ``budget`` caps
    ``mquery + bquery``. With ``finalize``, an exhausted finite source ends
    with a hypothesis built from the final table.
    """
    learner = IDSLearner(teacher, variant, rebuild=rebuild)
    stats = learner.stats
    converged = bool(stop and stop(learner.hypothesis))
    consumed = 0
    exhausted = False
    if not converged:
        it = iter(source)
        while True:
            if budget is not None and stats.total >= budget:
                break
            try:
                word = next(it)
            except StopIteration:
                exhausted = True
                break
            learner.observe(word)
            consumed += 1
            if learner.rebuilt and stop is not None and stop(learner.hypothesis):
                converged = True
                break
        if exhausted and finalize and learner.stale:
            learner.rebuild()
            converged = bool(stop and stop(learner.hypothesis))
    return LearnResult(
        hypothesis=learner.hypothesis,
        stats=stats,
        trace=[(h.generation, h) for h in learner.trace],
        converged=converged,
        strings_consumed=consumed,
        exhausted=exhausted,
    )
