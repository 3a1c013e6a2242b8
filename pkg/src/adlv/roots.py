"""
Root data of GL_n.

Roots are chi_ij (i != j, 1-based as in the usual notation), cocharacters
are integer vectors of length n and rational vectors (Newton points, rho)
use `fractions.Fraction` so that no floating point is ever involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

Vector = tuple  # tuple[int, ...] or tuple[Fraction, ...]


@dataclass(frozen=True)
class Root:
    """The character chi_ij: diag(t_1..t_n) -> t_i / t_j."""
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j or min(self.i, self.j) < 1:
            raise ValueError(f"invalid root chi_{self.i},{self.j}")

    @property
    def positive(self) -> bool:
        return self.i < self.j

    def __neg__(self) -> Root:
        return Root(self.j, self.i)

    def coroot(self, n: int) -> tuple[int, ...]:
        v = [0] * n
        v[self.i - 1] += 1
        v[self.j - 1] -= 1
        return tuple(v)


def positive_roots(n: int) -> Iterator[Root]:
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            yield Root(i, j)


def pairing(alpha: Root, lam: Sequence) -> int | Fraction:
    """<chi_ij, lam> = lam_i - lam_j."""
    if max(alpha.i, alpha.j) > len(lam):
        raise ValueError("root index out of range")
    return lam[alpha.i - 1] - lam[alpha.j - 1]


def rho(n: int) -> tuple[Fraction, ...]:
    """Half sum of positive roots, ((n-1)/2, (n-3)/2, ..., -(n-1)/2)."""
    return tuple(Fraction(n - 1 - 2 * i, 2) for i in range(n))


def rho_pairing(lam: Sequence) -> int | Fraction:
    """<rho, lam>; pass 2*lam for the integral <2 rho, lam>."""
    return sum(r * x for r, x in zip(rho(len(lam)), lam))


def two_rho_pairing(lam: Sequence[int]) -> int:
    n = len(lam)
    return sum((n - 1 - 2 * i) * x for i, x in enumerate(lam))


def fundamental(n: int, k: int) -> tuple[int, ...]:
    """omega_k = (1,...,1,0,...,0) with k ones, 0 <= k <= n."""
    if not 0 <= k <= n:
        raise ValueError(f"omega_{k} undefined for n={n}")
    return (1,) * k + (0,) * (n - k)


def is_dominant(lam: Sequence) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:]))


def dominize(lam: Sequence) -> tuple:
    """The dominant element of the W_0-orbit of lam."""
    return tuple(sorted(lam, reverse=True))


def dominance_leq(mu1: Sequence, mu2: Sequence) -> bool:
    """mu1 <= mu2: mu2 - mu1 is a non-negative combination of positive coroots."""
    if len(mu1) != len(mu2):
        raise ValueError("length mismatch")
    acc = 0
    for a, b in zip(mu1, mu2):
        acc += b - a
        if acc < 0:
            return False
    return acc == 0


def add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def scale(c, a: Sequence) -> tuple:
    return tuple(c * x for x in a)


def dominated(mu: Sequence[int]) -> list[tuple[int, ...]]:
    """All dominant nu <= mu, in increasing order of <2 rho, nu>."""
    mu = tuple(mu)
    if not is_dominant(mu):
        raise ValueError(f"{mu} is not dominant")
    n, total = len(mu), sum(mu)
    lo, hi = mu[-1], mu[0]
    bounds = [sum(mu[:k + 1]) for k in range(n)]
    out = []

    def rec(prefix, acc, cap):
        k = len(prefix)
        if k == n:
            if acc == total:
                out.append(tuple(prefix))
            return
        rest = n - k - 1
        for x in range(min(cap, hi), lo - 1, -1):
            s = acc + x
            if s > bounds[k]:
                continue
            # remaining entries lie in [lo, x]
            if s + rest * x < total or s + rest * lo > total:
                continue
            prefix.append(x)
            rec(prefix, s, x)
            prefix.pop()

    rec([], 0, hi)
    out.sort(key=lambda nu: (two_rho_pairing(nu), tuple(-x for x in nu)))
    return out


def orbit(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """Distinct permutations of lam, in lexicographically decreasing order."""
    items = sorted(lam, reverse=True)
    n = len(items)
    out = []

    def rec(prefix, pool):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        seen = None
        for idx, x in enumerate(pool):
            if x == seen:
                continue
            seen = x
            prefix.append(x)
            rec(prefix, pool[:idx] + pool[idx + 1:])
            prefix.pop()

    rec([], items)
    return out
