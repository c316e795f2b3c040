import random

import pytest

from idslearn.automata import Dfa
from idslearn.generators import random_dfa

A, B = 0, 1


def fig1_target() -> Dfa:
    """Smallest automaton consistent with every cell of the worked-example table.

    Accepts exactly {b, bb}: q0 -b-> q1 -b-> q2, everything else falls into
    the dead state q3.
    """
    return Dfa.from_table([[3, 1], [3, 2], [3, 3], [3, 3]], initial=0, finals=[1, 2], labels="ab")


def w(text: str) -> tuple:
    return tuple("ab".index(c) for c in text)


@pytest.fixture
def fig1():
    return fig1_target()


def random_targets(count, lo, hi, seed, alphabet_size=2):
    rng = random.Random(seed)
    return [random_dfa(rng.randint(lo, hi), alphabet_size, rng.getrandbits(63)) for _ in range(count)]
