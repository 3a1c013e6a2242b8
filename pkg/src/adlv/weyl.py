"""
The extended affine Weyl group of GL_n, W = W_0 x| Z^n.

An element is stored as a pair (u, lam) standing for u * t^lam, with the
finite part on the left.  Permutations are 0-based one-line tuples, u(i) =
perm[i], and act on vectors by (u lam)_{u(i)} = lam_i.  Multiplication:

    (u t^lam)(u' t^lam') = (u u') t^{u'^-1 lam + lam'}

The simple affine reflections are s_i = (i i+1) for 1 <= i < n and
s_0 = t^{chi_1n^vee} (1 n); tau = u_tau t^{e_n} with u_tau(i) = i + 1 mod n
generates the length zero subgroup and satisfies tau s_i tau^-1 = s_{i+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Element:
    perm: tuple[int, ...]
    lam: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.perm)

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def inverse(self) -> Element:
        return inverse(self)

    def __pow__(self, k: int) -> Element:
        return power(self, k)

    def __repr__(self) -> str:
        word, omega = reduced_word(self)
        letters = " ".join(f"s{i}" for i in word)
        return f"<{letters + ' ' if letters else ''}t^{omega} (n={self.n})>"


def _check(w: Element, v: Element) -> None:
    if len(w.perm) != len(v.perm):
        raise ValueError(f"size mismatch: n={w.n} vs n={v.n}")


def perm_mul(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """(uv)(i) = u(v(i))."""
    return tuple(u[j] for j in v)


def perm_inv(u: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(u)
    for i, j in enumerate(u):
        out[j] = i
    return tuple(out)


def perm_act(u: Sequence[int], lam: Sequence) -> tuple:
    out = [0] * len(u)
    for i, j in enumerate(u):
        out[j] = lam[i]
    return tuple(out)


def perm_length(u: Sequence[int]) -> int:
    n = len(u)
    return sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])


def multiply(w: Element, v: Element) -> Element:
    _check(w, v)
    u, lam = w.perm, w.lam
    u2, lam2 = v.perm, v.lam
    # (u2^-1 lam)_i = lam_{u2(i)}
    return Element(perm_mul(u, u2), tuple(lam[u2[i]] + lam2[i] for i in range(len(u))))


def inverse(w: Element) -> Element:
    return Element(perm_inv(w.perm), tuple(-x for x in perm_act(w.perm, w.lam)))


def identity(n: int) -> Element:
    return Element(tuple(range(n)), (0,) * n)


def translation(lam: Sequence[int]) -> Element:
    lam = tuple(lam)
    return Element(tuple(range(len(lam))), lam)


def finite(perm: Sequence[int]) -> Element:
    return Element(tuple(perm), (0,) * len(perm))


def power(w: Element, k: int) -> Element:
    base = w if k >= 0 else inverse(w)
    out = identity(w.n)
    for _ in range(abs(k)):
        out = multiply(out, base)
    return out


def kappa(w: Element) -> int:
    return sum(w.lam)


@lru_cache(maxsize=None)
def simple(n: int, i: int) -> Element:
    if not 0 <= i < n or n < 2:
        raise ValueError(f"no simple reflection s_{i} for n={n}")
    if i == 0:
        swap = list(range(n))
        swap[0], swap[n - 1] = n - 1, 0
        coroot = (1,) + (0,) * (n - 2) + (-1,)
        return multiply(translation(coroot), finite(swap))
    perm = list(range(n))
    perm[i - 1], perm[i] = i, i - 1
    return finite(perm)


@lru_cache(maxsize=None)
def tau(n: int, k: int = 1) -> Element:
    if k == 1:
        return Element(tuple((i + 1) % n for i in range(n)), (0,) * (n - 1) + (1,))
    if k == 0:
        return identity(n)
    return power(tau(n, 1), k)


def length(w: Element) -> int:
    """Length of u t^lam by the inversion-type formula.

    sum over i<j of |lam_i - lam_j + 1| if u(i) > u(j), else |lam_i - lam_j|.
    """
    u, lam = w.perm, w.lam
    n = len(u)
    total = 0
    for i in range(n):
        ui, li = u[i], lam[i]
        for j in range(i + 1, n):
            d = li - lam[j]
            if ui > u[j]:
                d += 1
            total += d if d >= 0 else -d
    return total


def from_word(word: Iterable[int], omega: int = 0, n: int | None = None) -> Element:
    """s_{i1} ... s_{ir} tau^omega; words need not be reduced."""
    word = list(word)
    if n is None:
        raise ValueError("n is required")
    out = identity(n)
    for i in word:
        out = multiply(out, simple(n, i))
    return multiply(out, tau(n, omega))


# idempotent memo: re-inserting an equal value is harmless
_REDUCED_WORDS: dict[Element, tuple[int, ...]] = {}


def reduced_word(w: Element) -> tuple[tuple[int, ...], int]:
    """Reduced word of the W_a-part and the Omega power: w = s_i1...s_ir tau^k."""
    k = kappa(w)
    cached = _REDUCED_WORDS.get(w)
    if cached is not None:
        return cached, k
    n = w.n
    x = multiply(w, tau(n, -k))
    word = []
    ell = length(x)
    while ell > 0:
        for i in range(n):
            y = multiply(simple(n, i), x)
            ly = length(y)
            if ly < ell:
                word.append(i)
                x, ell = y, ly
                break
        else:  # pragma: no cover - impossible for a Coxeter group
            raise AssertionError("no descent found")
    word = tuple(word)
    _REDUCED_WORDS[w] = word
    return word, k


def supp(w: Element) -> frozenset[int]:
    """Simple affine reflections occurring in a reduced word of the W_a-part."""
    return frozenset(reduced_word(w)[0])


def ad_tau(i: int, k: int, n: int) -> int:
    """Index of tau^k s_i tau^-k."""
    return (i + k) % n


def tau_orbits(k: int, n: int) -> list[frozenset[int]]:
    seen, out = set(), []
    for i in range(n):
        if i in seen:
            continue
        orb, j = set(), i
        while j not in orb:
            orb.add(j)
            j = ad_tau(j, k, n)
        seen |= orb
        out.append(frozenset(orb))
    return out


def supp_sigma(w: Element) -> frozenset[int]:
    """Support of the W_a-part closed under the rotation by kappa(w)."""
    n, k = w.n, kappa(w)
    out = set()
    for i in supp(w):
        j = i
        while j not in out:
            out.add(j)
            j = ad_tau(j, k, n)
    return frozenset(out)


def is_finite_parabolic(J: Iterable[int], n: int) -> bool:
    return len(set(J)) < n


def longest_parabolic(J: Iterable[int], n: int) -> Element:
    """Longest element of W_J for a proper subset J of {0..n-1}."""
    J = sorted(set(J))
    if any(not 0 <= i < n for i in J):
        raise ValueError("index out of range")
    if not is_finite_parabolic(J, n):
        raise ValueError("W_J is infinite for J = all of the affine simple reflections")
    w, ell = identity(n), 0
    while True:
        for i in J:
            y = multiply(w, simple(n, i))
            ly = length(y)
            if ly > ell:
                w, ell = y, ly
                break
        else:
            return w
