import random
import time
from collections import deque

import pytest

from idslearn.automata import Dfa, accepts, minimize
from idslearn.equivalence import UnionFind, check_equiv, check_equiv_bruteforce
from idslearn.generators import random_dfa

from conftest import random_targets


def product_oracle(a, b):
    """Plain BFS over pairs, no witness: is any reachable pair finality-split?"""
    seen = {(a.initial, b.initial)}
    queue = deque(seen)
    while queue:
        p, q = queue.popleft()
        if (p in a.finals) != (q in b.finals):
            return False
        for s in range(a.alphabet_size):
            nxt = (a.transition[p][s], b.transition[q][s])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


def test_reflexive():
    for d in random_targets(20, 1, 10, seed=1):
        assert check_equiv(d, d).equivalent
        assert check_equiv_bruteforce(d, d).equivalent


def test_against_minimized(fig1):
    assert check_equiv(fig1, minimize(fig1)).equivalent


def test_one_state_extremes():
    yes = Dfa.from_table([[0]], finals=[0])
    no = Dfa.from_table([[0]], finals=[])
    for check in (check_equiv, check_equiv_bruteforce):
        result = check(yes, no)
        assert not result.equivalent and result.witness == ()


def test_alphabet_mismatch():
    with pytest.raises(ValueError):
        check_equiv(Dfa.from_table([[0]]), Dfa.from_table([[0, 0]]))
    with pytest.raises(ValueError):
        check_equiv_bruteforce(Dfa.from_table([[0]]), Dfa.from_table([[0, 0]]))


def random_pair(rng):
    k = rng.randint(1, 3)
    a = random_dfa(rng.randint(1, 8), k, rng.getrandbits(63))
    if rng.random() < 0.3:
        b = minimize(a)
    else:
        b = random_dfa(rng.randint(1, 8), k, rng.getrandbits(63))
    return a, b


def test_verdicts_match_product_oracle():
    rng = random.Random(2)
    for _ in range(300):
        a, b = random_pair(rng)
        assert check_equiv(a, b).equivalent == product_oracle(a, b)


def test_witness_valid_and_symmetric():
    rng = random.Random(3)
    for _ in range(300):
        a, b = random_pair(rng)
        for check in (check_equiv, check_equiv_bruteforce):
            r = check(a, b)
            assert (r.witness is None) == r.equivalent
            if not r.equivalent:
                assert accepts(a, r.witness) != accepts(b, r.witness)
            assert check(b, a).equivalent == r.equivalent


def test_bruteforce_witness_is_shortest():
    rng = random.Random(4)
    for _ in range(100):
        a, b = random_pair(rng)
        r = check_equiv_bruteforce(a, b)
        if r.equivalent:
            continue
        shorter = [x for n in range(len(r.witness)) for x in _words(a.alphabet_size, n)]
        assert all(accepts(a, x) == accepts(b, x) for x in shorter)


def _words(k, n):
    if n == 0:
        yield ()
        return
    for x in _words(k, n - 1):
        for s in range(k):
            yield x + (s,)


def test_union_find():
    uf = UnionFind(6)
    assert uf.union(0, 1) and uf.union(2, 3) and uf.union(1, 3)
    assert not uf.union(0, 2)
    assert uf.find(0) == uf.find(3) != uf.find(4)


def test_large_random_pair_is_fast():
    a = random_dfa(10_000, 2, 1)
    b = random_dfa(10_000, 2, 2)
    start = time.perf_counter()
    check_equiv(a, a)
    check_equiv(a, b)
    check_equiv(a, minimize(a))
    assert time.perf_counter() - start < 9.0
