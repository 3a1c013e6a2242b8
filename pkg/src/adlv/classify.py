"""
Coxeter type and positive Coxeter type of pairs (GL_n, mu), and the sweep
that compares computed verdicts with the known classification lists.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterator, Sequence

from adlv.bruhat import in_adm, maximal_elements, sadm_candidates
from adlv.lp import has_positive_coxeter_part, is_nonempty
from adlv.roots import fundamental, is_dominant
from adlv.weyl import Element, kappa, reduced_word, supp_sigma, tau_orbits


def normalize(mu: Sequence[int]) -> tuple[int, ...]:
    """Representative modulo Z omega_n with last entry 0."""
    c = mu[-1]
    return tuple(x - c for x in mu)


def dualize(mu: Sequence[int]) -> tuple[int, ...]:
    """-w_max mu, normalized."""
    return normalize(tuple(-x for x in reversed(mu)))


def is_sigma_coxeter(w: Element) -> bool:
    """Finite sigma-support and exactly one letter per rotation orbit met."""
    n = w.n
    ss = supp_sigma(w)
    if len(ss) == n:
        return False
    word, k = reduced_word(w)
    for orb in tau_orbits(k, n):
        if orb & ss and sum(1 for i in word if i in orb) != 1:
            return False
    return True


@dataclass(frozen=True)
class Verdict:
    n: int
    mu: tuple[int, ...]
    is_coxeter_type: bool
    is_positive_coxeter_type: bool
    witness: tuple[Element, str] | None
    coxeter_witness: tuple[Element, str] | None
    sadm_size: int
    sadm0_size: int
    complete: bool  # False when the scan stopped early


def classify_pair(n: int, mu: Sequence[int], exhaustive: bool = False) -> Verdict:
    """Scan SAdm(mu) and decide both flags.

    Candidates come in increasing dominance-size order, so failures coming
    from small nu <= mu are found early; unless `exhaustive`, the scan stops
    once both flags are known to be False.
    """
    mu = tuple(mu)
    if len(mu) != n or not is_dominant(mu):
        raise ValueError(f"mu={mu} is not a dominant cocharacter for n={n}")
    mu = normalize(mu)
    m = sum(mu)
    maxima = maximal_elements(mu)
    pos = cox = True
    witness = cox_witness = None
    n_sadm = n_sadm0 = 0
    complete = True
    for _, _, w in sadm_candidates(mu):
        if not in_adm(w, mu, maxima):
            continue
        n_sadm += 1
        nonempty = is_nonempty(w, m)
        n_sadm0 += nonempty
        if nonempty and pos and has_positive_coxeter_part(w) is None:
            pos = False
            witness = (w, "nonempty without positive Coxeter part")
        if cox and nonempty != is_sigma_coxeter(w):
            cox = False
            reason = ("nonempty but not sigma-Coxeter with finite support" if nonempty
                      else "sigma-Coxeter with finite support but empty")
            cox_witness = (w, reason)
        if not exhaustive and not pos and not cox:
            complete = False
            break
    return Verdict(n, mu, cox, pos, witness, cox_witness, n_sadm, n_sadm0, complete)


@lru_cache(maxsize=None)
def load_data(name: str) -> dict:
    """Read one of the bundled JSON fixtures."""
    return json.loads(resources.files("adlv.data").joinpath(name).read_text())


def _weight(n: int, terms: Sequence[Sequence[int]]) -> tuple[int, ...]:
    # [c, a, b] stands for c * omega_{a*n + b}
    out = [0] * n
    for c, a, b in terms:
        for i, x in enumerate(fundamental(n, a * n + b)):
            out[i] += c * x
    return normalize(out)


def _applies(rule: dict, n: int) -> bool:
    cond = rule["n"]
    return n >= cond["min"] if "min" in cond else n in cond["in"]


def _listed(key: str, n: int, mu: Sequence[int]) -> bool:
    mu = normalize(mu)
    if is_central(mu):
        return True
    for rule in load_data("classification.json")[key]:
        if not _applies(rule, n):
            continue
        if rule.get("all_noncentral"):
            return True
        if mu in {_weight(n, t) for t in rule["weights"]}:
            return True
    return False


def is_central(mu: Sequence[int]) -> bool:
    return len(set(mu)) == 1


def expected_verdict(n: int, mu: Sequence[int]) -> bool:
    """Positive Coxeter type according to the classification list."""
    return _listed("positive_coxeter", n, mu)


def expected_coxeter(n: int, mu: Sequence[int]) -> bool:
    """Coxeter type according to the bundled list for GL_n."""
    return _listed("coxeter", n, mu)


def sweep_pairs(n_max: int, spread_max: int, n2_max: int = 8) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Dominant mu with mu(n) = 0 and mu(1) <= spread_max for 2 <= n <= n_max;
    n = 2 runs up to m = n2_max."""
    for n in range(2, n_max + 1):
        top = max(spread_max, n2_max) if n == 2 else spread_max
        for mu in _dominant_with_spread(n, top):
            yield n, mu


def _dominant_with_spread(n: int, top: int) -> list[tuple[int, ...]]:
    def gen(k, cap):
        if k == 0:
            yield ()
            return
        for x in range(cap, -1, -1):
            for rest in gen(k - 1, x):
                yield (x,) + rest

    out = [t + (0,) for t in gen(n - 1, top)]
    out.sort(key=lambda mu: (sum(mu), mu))
    return out


@dataclass(frozen=True)
class SweepRow:
    verdict: Verdict
    expected: bool
    expected_cox: bool

    @property
    def match(self) -> bool:
        v = self.verdict
        return v.is_positive_coxeter_type == self.expected and v.is_coxeter_type == self.expected_cox


def verify_pair(n: int, mu: Sequence[int], exhaustive: bool = False) -> SweepRow:
    v = classify_pair(n, mu, exhaustive=exhaustive)
    return SweepRow(v, expected_verdict(n, mu), expected_coxeter(n, mu))


def verify_range(n_max: int, spread_max: int, n2_max: int = 8, threads: int = 1,
                 exhaustive: bool = False) -> list[SweepRow]:
    pairs = list(sweep_pairs(n_max, spread_max, n2_max))
    if threads <= 1:
        return [verify_pair(n, mu, exhaustive) for n, mu in pairs]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(verify_pair, [p[0] for p in pairs], [p[1] for p in pairs],
                             [exhaustive] * len(pairs), chunksize=4))
