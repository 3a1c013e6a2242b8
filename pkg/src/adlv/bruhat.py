"""
Bruhat order on the extended affine Weyl group, minimal length coset
representatives for W_0 \\ W and the admissible sets Adm(mu), SAdm(mu).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from adlv.roots import dominance_leq, dominated, dominize, is_dominant, orbit
from adlv.weyl import (
    Element, finite, kappa, length, multiply, perm_inv, reduced_word, simple,
    translation,
)

# (w, w') -> bool; persisted by adlv.cache
_BRUHAT: dict[tuple[Element, Element], bool] = {}


def _left_descent(w: Element, ell: int) -> tuple[Element, int] | None:
    n = w.n
    for i in range(n):
        y = multiply(simple(n, i), w)
        ly = length(y)
        if ly < ell:
            return y, ly
    return None


def bruhat_leq(w: Element, v: Element) -> bool:
    """w <= v in the Bruhat order.

    Uses the lifting property: if s v < v then w <= v iff min(w, s w) <= s v.
    """
    if w.n != v.n:
        raise ValueError(f"size mismatch: n={w.n} vs n={v.n}")
    if kappa(w) != kappa(v):
        return False
    key = (w, v)
    hit = _BRUHAT.get(key)
    if hit is not None:
        return hit
    lw, lv = length(w), length(v)
    x, y = w, v
    result = None
    while result is None:
        if lw > lv:
            result = False
        elif lw == lv:
            result = x == y
        else:
            # lv > lw >= 0, so y has a left descent s
            n = y.n
            for i in range(n):
                s = simple(n, i)
                sy = multiply(s, y)
                lsy = length(sy)
                if lsy < lv:
                    sx = multiply(s, x)
                    lsx = length(sx)
                    if lsx < lw:
                        x, lw = sx, lsx
                    y, lv = sy, lsy
                    break
    _BRUHAT[key] = result
    return result


def min_coset_rep(lam: Sequence[int]) -> Element:
    """Minimal length element of W_0 t^lam, i.e. t^mu y with mu dominant."""
    lam = tuple(lam)
    # y^-1 = stable argsort of lam, descending
    yinv = tuple(sorted(range(len(lam)), key=lambda i: -lam[i]))
    y = perm_inv(yinv)
    return multiply(translation(dominize(lam)), finite(y))


def is_min_coset_rep(w: Element) -> bool:
    ell = length(w)
    return all(length(multiply(simple(w.n, i), w)) > ell for i in range(1, w.n))


def maximal_elements(mu: Sequence[int]) -> list[Element]:
    """The translations t^{w_0 mu}, one per distinct W_0-conjugate of mu."""
    return [translation(lam) for lam in orbit(mu)]


def sort_key(w: Element):
    word, omega = reduced_word(w)
    return (length(w), word, omega)


@dataclass(frozen=True)
class AdmissibleSet:
    mu: tuple[int, ...]
    elements: tuple[Element, ...]
    flavor: str  # "full" or "minimal-rep"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w) -> bool:
        return w in set(self.elements)


def _require_dominant(mu) -> tuple[int, ...]:
    mu = tuple(mu)
    if not is_dominant(mu):
        raise ValueError(f"mu={mu} is not dominant")
    return mu


def in_adm(w: Element, mu: Sequence[int], maxima: Iterable[Element] | None = None) -> bool:
    """w <= t^{w_0 mu} for some w_0."""
    if maxima is None:
        maxima = maximal_elements(mu)
    return any(bruhat_leq(w, t) for t in maxima)


def sadm_candidates(mu: Sequence[int]):
    """(nu, lam, min_coset_rep(lam)) for dominant nu <= mu and lam in W_0 nu."""
    for nu in dominated(_require_dominant(mu)):
        for lam in orbit(nu):
            yield nu, lam, min_coset_rep(lam)


def sadm(mu: Sequence[int]) -> AdmissibleSet:
    mu = _require_dominant(mu)
    maxima = maximal_elements(mu)
    elems = [w for _, _, w in sadm_candidates(mu) if in_adm(w, mu, maxima)]
    return AdmissibleSet(mu, tuple(sorted(elems, key=sort_key)), "minimal-rep")


def adm(mu: Sequence[int]) -> AdmissibleSet:
    mu = _require_dominant(mu)
    from itertools import permutations
    maxima = maximal_elements(mu)
    n = len(mu)
    elems = []
    for nu in dominated(mu):
        for lam in orbit(nu):
            for u in permutations(range(n)):
                w = Element(u, lam)
                if in_adm(w, mu, maxima):
                    elems.append(w)
    return AdmissibleSet(mu, tuple(sorted(elems, key=sort_key)), "full")


def is_admissible_set_consistent(A: AdmissibleSet) -> bool:
    m = sum(A.mu)
    ok = all(kappa(w) == m for w in A)
    if A.flavor == "minimal-rep":
        ok = ok and all(is_min_coset_rep(w) for w in A)
    return ok and all(dominance_leq(dominize(w.lam), A.mu) for w in A)
