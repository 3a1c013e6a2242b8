from collections import Counter

import pytest

from adlv.bruhat import sadm
from adlv.classify import sweep_pairs
from adlv.lp import basic_class, dim_closed_adlv, has_positive_coxeter_part, is_nonempty, sadm0
from adlv.reduction import (build_tree, dim_via_tree, enumerate_paths, find_minimal,
                            is_minimal_length, psi_class, same_cyclic_class, sigma_conj_step)
from adlv.roots import fundamental
from adlv.weyl import from_word, length, supp_sigma, tau


def test_sigma_conj_step_examples():
    w = from_word([0, 1, 5, 0], 3, 6)
    x, d = sigma_conj_step(w, 0)
    assert x == from_word([3, 1, 5, 0], 3, 6) and d == 0
    y, d = sigma_conj_step(x, 3)
    assert y == from_word([1, 5], 3, 6) and d == -2
    z, d = sigma_conj_step(tau(2, 1), 0)
    assert length(z) == 2 and d == 2


def test_find_minimal_examples():
    assert find_minimal(tau(5, 2)) == (tau(5, 2), ())
    w_min, _ = find_minimal(from_word([0, 1, 5, 0], 3, 6))
    assert length(w_min) == 2 and same_cyclic_class(w_min, from_word([1, 5], 3, 6))
    w_min, _ = find_minimal(from_word([0, 5, 4], 2, 6))
    assert length(w_min) == 1 and same_cyclic_class(w_min, from_word([5], 2, 6))


def test_tree_examples():
    t = build_tree(tau(4, 1))
    assert [p.steps for p in enumerate_paths(t)] == [()]
    t = build_tree(from_word([0, 1, 5, 0], 3, 6))
    assert set(t.leaves()) == {from_word([1, 5, 0], 3, 6), from_word([1, 5], 3, 6)}
    w2 = from_word([0, 5, 4], 2, 6)
    good = [p for p in enumerate_paths(build_tree(w2)) if psi_class(p.end) == basic_class(6, 2)]
    assert len(good) == 1
    assert (good[0].end, good[0].lI, good[0].lII) == (from_word([5], 2, 6), 0, 1)


def test_psi_class_examples():
    assert psi_class(from_word([1, 5], 3, 6)) == basic_class(6, 3)
    assert psi_class(tau(6, 3)).is_basic


def test_dim_via_tree_examples():
    assert dim_via_tree(tau(5, 3), 3) == 0
    assert dim_via_tree(from_word([0, 5, 4], 2, 6), 2) == 2
    assert max(dim_via_tree(w, 2) for w in sadm0(fundamental(6, 2))) == 2
    assert dim_via_tree(tau(5, 3), 2) is None


SMALL = [(n, mu) for n, mu in sweep_pairs(5, 2, 4)]


@pytest.mark.parametrize("n,mu", SMALL)
def test_tree_structure_and_emptiness(n, mu):
    m = sum(mu)
    for w in sadm(mu):
        tree = build_tree(w)
        for e1, e2 in tree.edges.values():
            assert length(e1.child) == length(e1.parent) - 1 and e1.kind == "I"
            assert length(e2.child) == length(e2.parent) - 2 and e2.kind == "II"
        for leaf in tree.leaves():
            assert is_minimal_length(leaf)
        for p in enumerate_paths(tree):
            assert p.lI + 2 * p.lII == length(w) - length(p.end)
        assert (dim_via_tree(w, m, tree) is None) == (not is_nonempty(w, m))


SHADOW = ([fundamental(n, 2) for n in range(4, 9)] + [(2,) + (0,) * (n - 1) for n in range(3, 7)]
          + [fundamental(n, 3) for n in (6, 7, 8)] + [(m, 0) for m in range(1, 7)])


@pytest.mark.parametrize("mu", SHADOW, ids=str)
def test_tree_dimension_matches_formula(mu):
    m = sum(mu)
    dims = [dim_via_tree(w, m) for w in sadm0(mu)]
    assert max(dims) == dim_closed_adlv(mu, m)


@pytest.mark.parametrize("mu", SHADOW, ids=str)
def test_positive_coxeter_has_type_one_free_path(mu):
    n, m = len(mu), sum(mu)
    target = basic_class(n, m)
    for w in sadm0(mu):
        if has_positive_coxeter_part(w) is None:
            continue
        d = dim_via_tree(w, m)
        paths = [p for p in enumerate_paths(build_tree(w)) if psi_class(p.end) == target]
        assert any(p.lI == 0 and p.lII + length(p.end) == d for p in paths)
        assert all(len(supp_sigma(p.end)) < n for p in paths)


@pytest.mark.parametrize("mu", [fundamental(6, 3), fundamental(6, 2), (2, 1, 0, 0)], ids=str)
def test_random_strategy_invariance(mu):
    n, m = len(mu), sum(mu)
    target = basic_class(n, m)
    for w in sadm(mu):
        base_tree = build_tree(w)
        base = Counter((p.lI, p.lII) for p in enumerate_paths(base_tree)
                       if psi_class(p.end) == target)
        d = dim_via_tree(w, m, base_tree)
        for seed in range(4):
            t = build_tree(w, seed=seed)
            assert dim_via_tree(w, m, t) == d
            got = Counter((p.lI, p.lII) for p in enumerate_paths(t) if psi_class(p.end) == target)
            assert got == base
