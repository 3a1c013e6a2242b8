"""Checks of the bundled expected lists against the computations."""

from __future__ import annotations

from dataclasses import dataclass

from adlv.classify import load_data
from adlv.lp import basic_class, dim_closed_adlv, has_positive_coxeter_part, is_nonempty, sadm0
from adlv.reduction import build_tree, dim_via_tree, enumerate_paths, psi_class, sigma_conj_step
from adlv.weyl import Element, from_word, length, translation


@dataclass(frozen=True)
class Check:
    kind: str
    id: str
    ok: bool
    detail: str = ""


def lists() -> dict:
    return load_data("sadm0_lists.json")


def expected_sadm0(case: dict) -> set[Element]:
    n = case["n"]
    exp = {from_word(w, case["omega"], n) for w in case["words"]}
    if "extends" in case:
        exp |= set(sadm0(tuple(case["extends"])))
    return exp


def check_list(case: dict) -> Check:
    got = set(sadm0(tuple(case["mu"])))
    exp = expected_sadm0(case)
    ok = got == exp
    if "extends" in case:
        extra = {from_word(w, case["omega"], case["n"]) for w in case["words"]}
        ok = ok and not (extra & set(sadm0(tuple(case["extends"]))))
    return Check("sadm0", case["id"], ok, f"{len(got)} elements")


def check_witnesses(case: dict) -> Check:
    missing = [w for w in expected_sadm0(case) if has_positive_coxeter_part(w) is None]
    return Check("witness", case["id"], not missing, f"{len(missing)} without witness")


def check_dimension(case: dict) -> Check:
    mu = tuple(case["mu"])
    m = sum(mu)
    d = dim_closed_adlv(mu, m)
    tree_max = max(dim_via_tree(w, m) for w in expected_sadm0(case))
    ok = d == tree_max and case.get("dim", d) == d
    return Check("dim", case["id"], ok, f"closed={d} tree={tree_max} listed={case.get('dim', '-')}")


def _element(e: dict) -> Element:
    n = e["n"]
    if "mu" in e:
        return translation(tuple(e["mu"])) * from_word(e["finite_word"], 0, n)
    return from_word(e["word"], e["omega"], n)


def check_empty(e: dict) -> Check:
    w = _element(e)
    m = sum(e["mu"]) if "mu" in e else e["omega"]
    return Check("empty", e["id"], not is_nonempty(w, m))


def check_no_witness(e: dict) -> Check:
    w = _element(e)
    ok = is_nonempty(w, sum(e["mu"])) and has_positive_coxeter_part(w) is None
    return Check("no-witness", e["id"], ok)


def check_reduction(r: dict) -> Check:
    n, k = r["n"], r["omega"]
    w = from_word(r["word"], k, n)
    target = basic_class(n, k)
    if "moves" in r:
        x, ok = w, True
        for mv in r["moves"]:
            x, _ = sigma_conj_step(x, mv["s"])
            ok = ok and x == from_word(mv["to"], k, n)
        tree = build_tree(w)
        e1, e2 = tree.edges[w]
        ok = (ok and e1.child == from_word(r["type_I_end"], k, n)
              and e2.child == from_word(r["type_II_end"], k, n)
              and psi_class(e2.child) == target
              and r["type_I_empty"] == (not is_nonempty(e1.child, k)))
        return Check("reduction", r["id"], ok)
    paths = [p for p in enumerate_paths(build_tree(w)) if psi_class(p.end) == target]
    ok = (len(paths) == 1 and paths[0].end == from_word(r["end"], k, n)
          and (paths[0].lI, paths[0].lII) == (r["lI"], r["lII"]))
    return Check("reduction", r["id"], ok)


def run_all() -> list[Check]:
    d = lists()
    out = []
    for c in d["sadm0"]:
        out += [check_list(c), check_witnesses(c), check_dimension(c)]
    out += [check_empty(e) for e in d["empty"]]
    out += [check_no_witness(e) for e in d["nonempty_without_witness"]]
    out += [check_reduction(r) for r in d["reductions"]]
    return out
