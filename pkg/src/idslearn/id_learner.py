"""The batch ID learner: one refinement pass over a fixed live-complete set."""
from __future__ import annotations

from typing import Iterable, Optional

from .automata import Dfa
from .table import ObservationTable
from .teacher import QueryStats, Teacher


def id_learn(live_complete_set: Iterable, teacher: Teacher, stats: Optional[QueryStats] = None) -> Dfa:
    """Learn the target from a live-complete set of access words.

    The set must contain the empty word. If it is really live-complete for
    the target, the result is the canonical automaton of the target language.
    """
    table = id_table(live_complete_set, teacher, stats)
    return table.construct().dfa


def id_table(live_complete_set: Iterable, teacher: Teacher, stats: Optional[QueryStats] = None) -> ObservationTable:
    """The refined table ID builds before constructing its quotient."""
    words = {tuple(w) for w in live_complete_set}
    if () not in words:
        raise ValueError("a live-complete set must contain the empty word")
    for w in words:
        teacher.check_word(w)
    table = ObservationTable(teacher, stats)
    new = table.add(sorted(words, key=lambda w: (len(w), w)))
    table.stats.record_bquery(len(new))
    table.refine()
    return table
