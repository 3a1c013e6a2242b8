from fractions import Fraction
from itertools import permutations

import pytest

from adlv.bruhat import sadm
from adlv.classify import load_data
from adlv.lp import (basic_class, defect, dim_closed_adlv, dom_decompose, has_positive_coxeter_part,
                     is_coxeter, is_nonempty, length_identity_holds, lp_set, newton_kappa, sadm0)
from adlv.roots import fundamental, is_dominant
from adlv.weyl import Element, from_word, perm_mul, supp_sigma, tau, translation


def perm_of_word(word, n):
    return from_word(word, 0, n).perm


def test_dom_decompose():
    d = dom_decompose(translation((2, 1, 0)))
    assert d.x == (0, 1, 2) and d.mu == (2, 1, 0) and d.y == (0, 1, 2)
    t2 = tau(5, 2)
    d = dom_decompose(t2)
    assert d.mu == fundamental(5, 2) and d.p == t2.perm
    assert all(length_identity_holds(w) for w in sadm(fundamental(6, 2)))


def test_lp_examples():
    assert lp_set(translation((2, 1, 0))) == {(0, 1, 2)}
    for w in sadm(fundamental(6, 3)):
        y = dom_decompose(w).y
        yinv = tuple(sorted(range(6), key=lambda i: y[i]))
        assert yinv in lp_set(w)


def _list_mus(n):
    rules = load_data("classification.json")["positive_coxeter"]
    from adlv.classify import _applies, _weight
    out = set()
    for r in rules:
        if _applies(r, n) and "weights" in r:
            out |= {_weight(n, t) for t in r["weights"]}
    return sorted(m for m in out if max(m) - min(m) <= 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_lp_definition_equals_lpr(n):
    mus = _list_mus(n) if n > 2 else [(1, 0), (2, 0), (3, 0)]
    for mu in mus:
        for w in sadm(mu):
            assert lp_set(w, "definition") == lp_set(w, "lpr")


def test_lp_definition_equals_lpr_n6():
    for mu in (fundamental(6, 2), (2, 0, 0, 0, 0, 0), fundamental(6, 3)):
        for w in sadm(mu):
            assert lp_set(w, "definition") == lp_set(w, "lpr")


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_is_coxeter_matches_enumeration(n):
    cox = set()
    for order in permutations(range(1, n)):
        cox.add(perm_of_word(list(order), n))
    for u in permutations(range(n)):
        assert is_coxeter(u) == (u in cox)


def test_is_coxeter_examples():
    assert is_coxeter(perm_of_word([1, 2, 3], 4))
    assert not is_coxeter((0, 1, 2))
    assert not is_coxeter((2, 1, 0))


def _conj(v, p):
    vinv = tuple(sorted(range(len(v)), key=lambda i: v[i]))
    return perm_mul(perm_mul(vinv, p), v)


def test_positive_coxeter_examples():
    for w in sadm0(fundamental(5, 2)):
        assert has_positive_coxeter_part(w) is not None
    mu = (2, 2, 1, 1, 0, 0)
    w = translation(mu) * from_word([4, 5, 3, 2, 1, 3], 0, 6)
    assert has_positive_coxeter_part(w) is None
    assert is_nonempty(w, sum(mu))
    for n, m in ((5, 2), (6, 5), (7, 3)):
        w = tau(n, m)
        v = has_positive_coxeter_part(w)
        assert v in lp_set(w)
        assert is_coxeter(_conj(v, dom_decompose(w).p))


def test_witness_is_lex_least():
    w = from_word([0], 2, 6)
    v = has_positive_coxeter_part(w)
    assert v == min(lp for lp in lp_set(w) if has_positive_coxeter_part(w) is not None
                    and _witness_ok(w, lp))


def _witness_ok(w, v):
    from adlv.lp import is_partial_coxeter
    return is_partial_coxeter(_conj(v, dom_decompose(w).p))


def test_nonempty_examples():
    u2 = [2, 3, 4, 5, 1, 2]
    w = translation(fundamental(6, 2)) * from_word(u2, 0, 6)
    assert not is_nonempty(w, 2)
    assert is_nonempty(from_word([0], 2, 6), 2)
    assert not is_nonempty(from_word([1, 5, 0], 3, 6), 3)
    assert not is_nonempty(tau(6, 2), 3)


@pytest.mark.parametrize("mu", [(1, 1, 0, 0, 0), (2, 1, 0, 0), (1, 1, 1, 0, 0, 0), (2, 2, 0)])
def test_finite_support_implies_nonempty(mu):
    m = sum(mu)
    for w in sadm(mu):
        if len(supp_sigma(w)) < len(mu):
            assert is_nonempty(w, m)


def test_sadm0_examples():
    assert set(sadm0(fundamental(7, 2))) == {tau(7, 2), from_word([0, 6], 2, 7),
                                              from_word([0, 6, 5, 4], 2, 7)}
    assert list(sadm0((1, 1, 1))) == [tau(3, 3)]
    with pytest.raises(ValueError):
        sadm0((1, 0, 0), 2)


def test_class_invariants():
    inv = newton_kappa(translation((0, 2, -1)))
    assert inv.newton == (2, 0, -1) and inv.kottwitz == 1
    for n, m in ((5, 2), (6, 3), (4, 6)):
        inv = newton_kappa(tau(n, m))
        assert inv == basic_class(n, m) and inv.is_basic
        assert inv.newton == (Fraction(m, n),) * n
    for n in range(2, 10):
        assert defect(n, 2) == (n - 2 if n % 2 == 0 else n - 1)


def test_newton_point_shape():
    for w in sadm((2, 1, 0, 0)):
        inv = newton_kappa(w)
        assert is_dominant(inv.newton)
        assert sum(inv.newton) == inv.kottwitz
        assert all(x.denominator <= 4 for x in inv.newton)


def test_dimension_formula():
    assert dim_closed_adlv(fundamental(5, 2), 2) == 1
    for n in (5, 7, 9):
        assert dim_closed_adlv(fundamental(n, 2)) == (n - 3) // 2
    for n in (4, 6, 8):
        assert dim_closed_adlv(fundamental(n, 2)) == (n - 2) // 2
    for m in (1, 3, 5, 7):
        assert dim_closed_adlv((m, 0)) == (m - 1) // 2
    with pytest.raises(ValueError):
        dim_closed_adlv((1, 0, 0), 2)
