"""
Length positive elements, the non-emptiness criterion for X_w(tau^m),
positive Coxeter parts, class invariants and dimensions.

LP(w) is computed in two independent ways: straight from the defining
inequalities (`algorithm="definition"`) and through the root set Phi_w
(`algorithm="lpr"`).  The latter is vectorised over all of S_n with numpy
and is what the sweeps use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import gcd, lcm
from typing import Sequence

import numpy as np

from adlv.roots import dominize, rho, two_rho_pairing
from adlv.weyl import (
    Element, kappa, length, perm_act, perm_inv, perm_length, perm_mul,
    supp_sigma,
)


@dataclass(frozen=True)
class DomDecomposition:
    """w = x t^mu y with mu dominant and t^mu y minimal in W_0 t^mu y."""
    x: tuple[int, ...]
    mu: tuple[int, ...]
    y: tuple[int, ...]

    @property
    def p(self) -> tuple[int, ...]:
        return perm_mul(self.x, self.y)


@dataclass(frozen=True)
class ClassInvariant:
    newton: tuple[Fraction, ...]
    kottwitz: int

    @property
    def is_basic(self) -> bool:
        return len(set(self.newton)) <= 1


def dom_decompose(w: Element) -> DomDecomposition:
    lam = w.lam
    yinv = tuple(sorted(range(len(lam)), key=lambda i: -lam[i]))
    y = perm_inv(yinv)
    x = perm_mul(w.perm, yinv)
    return DomDecomposition(x, dominize(lam), y)


def _pos(a: int, b: int) -> int:
    """delta^+ of chi_ab (0-based indices)."""
    return 1 if a < b else 0


def lp_definition(w: Element) -> frozenset[tuple[int, ...]]:
    """Brute force over W_0 against every positive root."""
    d = dom_decompose(w)
    n = w.n
    lam = perm_act(perm_inv(d.y), d.mu)  # y^-1 mu
    p = d.p
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for v in permutations(range(n)):
        for i, j in pairs:
            a, b = v[i], v[j]
            if lam[a] - lam[b] + _pos(a, b) - _pos(p[a], p[b]) < 0:
                break
        else:
            out.append(v)
    return frozenset(out)


def phi_w(w: Element) -> frozenset[tuple[int, int]]:
    """Positive roots chi_ij (0-based i<j) with <a,mu> - d^-(y^-1 a) + d^-(x a) = 0."""
    d = dom_decompose(w)
    n = w.n
    yinv = perm_inv(d.y)
    out = set()
    for i in range(n):
        for j in range(i + 1, n):
            neg_y = 1 if yinv[i] > yinv[j] else 0
            neg_x = 1 if d.x[i] > d.x[j] else 0
            if d.mu[i] - d.mu[j] - neg_y + neg_x == 0:
                out.add((i, j))
    return frozenset(out)


@lru_cache(maxsize=None)
def _sn_tables(n: int):
    perms = np.array(list(permutations(range(n))), dtype=np.int8)
    inv = np.argsort(perms, axis=1).astype(np.int8)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    # inversion matrix: r has inversion at (i, j) iff r(i) > r(j)
    inversions = np.stack([perms[:, i] > perms[:, j] for i, j in pairs], axis=1)
    return perms, inv, pairs, inversions


def _lp_array(w: Element) -> np.ndarray:
    """LP(w) as rows of one-line permutations, via Phi_w."""
    n = w.n
    perms, inv, pairs, inversions = _sn_tables(n)
    phi = phi_w(w)
    outside = np.array([(i, j) not in phi for i, j in pairs], dtype=bool)
    if outside.any():
        ok = ~(inversions[:, outside].any(axis=1))
    else:
        ok = np.ones(len(perms), dtype=bool)
    rinv = inv[ok]  # r^-1 for admissible r
    yinv = np.array(perm_inv(dom_decompose(w).y), dtype=np.int8)
    return yinv[rinv]  # v = y^-1 r^-1, v(i) = y^-1(r^-1(i))


def lp_set(w: Element, algorithm: str = "lpr") -> frozenset[tuple[int, ...]]:
    if algorithm == "definition":
        return lp_definition(w)
    if algorithm == "lpr":
        return frozenset(tuple(int(a) for a in row) for row in _lp_array(w))
    raise ValueError(f"unknown algorithm {algorithm!r}")


def perm_supp(u: Sequence[int]) -> frozenset[int]:
    """Indices i (1..n-1) of s_i in the support of a finite permutation."""
    out, m = set(), -1
    for i, x in enumerate(u[:-1]):
        m = max(m, x)
        if m > i:
            out.add(i + 1)
    return frozenset(out)


def is_coxeter(u: Sequence[int]) -> bool:
    """Each simple reflection occurs exactly once in a reduced word."""
    n = len(u)
    return perm_length(u) == n - 1 and len(perm_supp(u)) == n - 1


def is_partial_coxeter(u: Sequence[int]) -> bool:
    """Coxeter element of some standard parabolic W_J: no simple reflection repeats."""
    return perm_length(u) == len(perm_supp(u))


def _conjugates(w: Element, V: np.ndarray) -> np.ndarray:
    """Rows v^-1 p(w) v for v in V."""
    p = np.array(w.perm, dtype=np.int8)
    Vinv = np.argsort(V, axis=1)
    img = p[V]  # p(v(i))
    return np.take_along_axis(Vinv, img.astype(np.int64), axis=1)


def _proper_support_mask(C: np.ndarray) -> np.ndarray:
    n = C.shape[1]
    prefmax = np.maximum.accumulate(C, axis=1)[:, :-1]
    return (prefmax == np.arange(n - 1)).any(axis=1)


def _partial_coxeter_mask(C: np.ndarray) -> np.ndarray:
    n = C.shape[1]
    inv = np.zeros(len(C), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            inv += C[:, i] > C[:, j]
    prefmax = np.maximum.accumulate(C, axis=1)[:, :-1]
    supp_size = (prefmax > np.arange(n - 1)).sum(axis=1)
    return inv == supp_size


def has_positive_coxeter_part(w: Element) -> tuple[int, ...] | None:
    """Lexicographically least v in LP(w) with v^-1 p(w) v a Coxeter element
    of a standard parabolic subgroup, or None."""
    V = _lp_array(w)
    hits = V[_partial_coxeter_mask(_conjugates(w, V))]
    if len(hits) == 0:
        return None
    best = min(tuple(int(a) for a in row) for row in hits)
    return best


def is_nonempty(w: Element, m: int) -> bool:
    """X_w(tau^m) != empty, by the support / length positivity criterion."""
    if kappa(w) != m:
        return False
    if len(supp_sigma(w)) < w.n:
        return True
    V = _lp_array(w)
    return not _proper_support_mask(_conjugates(w, V)).any()


def sadm0(mu: Sequence[int], m: int | None = None):
    from adlv.bruhat import AdmissibleSet, sadm
    mu = tuple(mu)
    if m is None:
        m = sum(mu)
    if m != sum(mu):
        raise ValueError(f"m={m} differs from the coordinate sum of {mu}")
    S = sadm(mu)
    return AdmissibleSet(mu, tuple(w for w in S if is_nonempty(w, m)), "minimal-rep")


def perm_order(u: Sequence[int]) -> int:
    seen, out = set(), 1
    for i in range(len(u)):
        if i in seen:
            continue
        c, j = 0, i
        while j not in seen:
            seen.add(j)
            j = u[j]
            c += 1
        out = lcm(out, c)
    return out


def newton_kappa(w: Element) -> ClassInvariant:
    from adlv.weyl import power
    d = perm_order(w.perm)
    wd = power(w, d)
    assert all(i == x for i, x in enumerate(wd.perm))
    newton = tuple(Fraction(x, d) for x in dominize(wd.lam))
    return ClassInvariant(newton, kappa(w))


def basic_class(n: int, m: int) -> ClassInvariant:
    return ClassInvariant((Fraction(m, n),) * n, m)


def defect(n: int, m: int) -> int:
    return n - gcd(n, m)


def dim_closed_adlv(mu: Sequence[int], m: int | None = None) -> int:
    """<rho, mu - nu_b> - def(b)/2 for the basic b = tau^m."""
    mu = tuple(mu)
    n = len(mu)
    if m is None:
        m = sum(mu)
    if m != sum(mu):
        raise ValueError(f"[tau^{m}] is not in B(G, mu) for mu={mu}")
    nu = Fraction(m, n)
    val = sum(r * (x - nu) for r, x in zip(rho(n), mu)) - Fraction(defect(n, m), 2)
    if val.denominator != 1 or val < 0:
        raise ValueError(f"non-integral dimension {val}")
    return int(val)


def length_identity_holds(w: Element) -> bool:
    d = dom_decompose(w)
    return length(w) == perm_length(d.x) + two_rho_pairing(d.mu) - perm_length(d.y)
