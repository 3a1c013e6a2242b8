from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from adlv.roots import (Root, dominance_leq, dominated, dominize, fundamental, is_dominant,
                        orbit, pairing, rho, two_rho_pairing)


def test_pairing_examples():
    assert pairing(Root(1, 2), (1, 0, 0)) == 1
    assert pairing(Root(1, 5), fundamental(5, 2)) == 1
    assert two_rho_pairing(fundamental(5, 2)) == 6


def test_rho_is_exact():
    assert rho(4) == (Fraction(3, 2), Fraction(1, 2), Fraction(-1, 2), Fraction(-3, 2))


def test_dominance_examples():
    assert dominance_leq(fundamental(4, 2), (2, 0, 0, 0))
    assert dominance_leq((2, 1, 0), (2, 1, 0))
    assert dominance_leq(fundamental(6, 3), (2, 1, 0, 0, 0, 0))
    assert not dominance_leq((2, 0, 0, 0), fundamental(4, 2))
    with pytest.raises(ValueError):
        dominance_leq((1, 0), (1, 0, 0))


def test_dominize_examples():
    assert dominize((0, 1, 0, 1, 0)) == (1, 1, 0, 0, 0)
    assert dominize((1, 0, 0, 0, -1)) == (1, 0, 0, 0, -1)


def _dominant(n, spread):
    return [v for v in product(range(spread, -1, -1), repeat=n) if is_dominant(v)]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_dominance_is_partial_order(n):
    vs = _dominant(n, 3)
    by_sum = {}
    for v in vs:
        by_sum.setdefault(sum(v), []).append(v)
    for group in by_sum.values():
        leq = {(a, b): dominance_leq(a, b) for a in group for b in group}
        for a in group:
            assert leq[a, a]
        for a in group:
            for b in group:
                if a != b and leq[a, b]:
                    assert not leq[b, a]
                for c in group:
                    if leq[a, b] and leq[b, c]:
                        assert leq[a, c]


@given(st.lists(st.integers(-4, 4), min_size=2, max_size=6), st.randoms())
def test_dominize_idempotent_and_invariant(lam, rnd):
    d = dominize(lam)
    assert dominize(d) == d
    shuffled = list(lam)
    rnd.shuffle(shuffled)
    assert dominize(shuffled) == d


@given(st.lists(st.integers(-4, 4), min_size=3, max_size=6), st.data())
def test_pairing_antisymmetric(lam, data):
    n = len(lam)
    i = data.draw(st.integers(1, n))
    j = data.draw(st.integers(1, n).filter(lambda x: x != i))
    assert pairing(Root(i, j), lam) + pairing(-Root(i, j), lam) == 0


def test_dominated_and_orbit():
    mu = (2, 0, 0, 0)
    assert dominated(mu) == [(1, 1, 0, 0), (2, 0, 0, 0)]
    assert len(orbit((1, 1, 0, 0))) == 6
    assert len(set(orbit((2, 1, 1, 0)))) == 12
