"""Renderers for reports: TSV rows, DOT trees, JSON paths and figures."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence

from adlv.bruhat import sort_key
from adlv.classify import SweepRow
from adlv.io import element_to_json, element_to_word, word_text
from adlv.lp import has_positive_coxeter_part, is_nonempty, lp_set
from adlv.reduction import ReductionPath, ReductionTree
from adlv.weyl import Element, kappa, length

VERDICT_COLUMNS = ("n", "mu", "sadm", "sadm0", "coxeter", "positive_coxeter",
                   "witness", "expected", "match")
ELEMENT_COLUMNS = ("word", "length", "nonempty", "lp_size", "witness")


def _b(x: bool) -> str:
    return "true" if x else "false"


def _vec(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


def perm_text(v: Sequence[int]) -> str:
    """1-based one-line notation."""
    return _vec(i + 1 for i in v)


def verdict_row(row: SweepRow) -> list[str]:
    v = row.verdict
    wit = v.witness or v.coxeter_witness
    return [str(v.n), _vec(v.mu), str(v.sadm_size), str(v.sadm0_size),
            _b(v.is_coxeter_type), _b(v.is_positive_coxeter_type),
            word_text(wit[0]) if wit else "-", _b(row.expected), _b(row.match)]


def element_row(w: Element, m: int | None = None) -> list[str]:
    m = kappa(w) if m is None else m
    ne = is_nonempty(w, m)
    v = has_positive_coxeter_part(w)
    return [word_text(w), str(length(w)), _b(ne), str(len(lp_set(w))),
            perm_text(v) if v is not None else "-"]


def tsv(header: Iterable[str], rows: Iterable[Sequence[str]]) -> str:
    lines = ["\t".join(header)] + ["\t".join(r) for r in rows]
    return "\n".join(lines) + "\n"


def elements_json(elems: Iterable[Element]) -> str:
    return json.dumps([element_to_json(w) for w in sorted(elems, key=sort_key)])


def tree_dot(tree: ReductionTree) -> str:
    ids = {x: f"n{i}" for i, x in enumerate(tree.nodes)}
    out = ["digraph reduction {"]
    for x, name in ids.items():
        out.append(f'  {name} [label="{word_text(x)} (l={length(x)})"];')
    for x in tree.nodes:
        for e in tree.edges.get(x, ()):
            out.append(f'  {ids[x]} -> {ids[e.child]} [label="{e.kind}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def paths_json(paths: Iterable[ReductionPath]) -> str:
    rows = [{"lI": p.lI, "lII": p.lII, "end": element_to_word(p.end),
             "end_length": length(p.end), "kinds": [e.kind for e in p.steps]}
            for p in paths]
    return json.dumps(rows, indent=1)


def write_figures(rows: Sequence[SweepRow], outdir: str | Path) -> list[Path]:
    """Summary plots of a sweep; returns the written files."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    ns = sorted({r.verdict.n for r in rows})
    pos = [sum(r.verdict.is_positive_coxeter_type for r in rows if r.verdict.n == n) for n in ns]
    cox = [sum(r.verdict.is_coxeter_type for r in rows if r.verdict.n == n) for n in ns]
    tot = [sum(1 for r in rows if r.verdict.n == n) for n in ns]
    bad = [sum(not r.match for r in rows if r.verdict.n == n) for n in ns]

    fig, ax = plt.subplots(figsize=(6, 4))
    x = range(len(ns))
    ax.bar(x, tot, color="0.85", label="pairs tested")
    ax.bar(x, pos, color="tab:blue", label="positive Coxeter type")
    ax.bar(x, cox, color="tab:orange", label="Coxeter type")
    if any(bad):
        ax.plot(list(x), bad, "rx", label="disagreements")
    ax.set_xticks(list(x), [str(n) for n in ns])
    ax.set_yscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("number of mu")
    ax.legend(fontsize=8)
    fig.tight_layout()
    f1 = outdir / "verdicts_by_n.png"
    fig.savefig(f1, metadata={"Software": None})
    plt.close(fig)

    done = [r for r in rows if r.verdict.complete]
    fig, ax = plt.subplots(figsize=(6, 4))
    for n in ns:
        pts = [(r.verdict.sadm_size, r.verdict.sadm0_size) for r in done if r.verdict.n == n]
        if pts:
            ax.scatter(*zip(*pts), s=10, label=f"n={n}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("|SAdm(mu)|")
    ax.set_ylabel("|SAdm(mu)_0|")
    ax.legend(fontsize=8)
    fig.tight_layout()
    f2 = outdir / "sadm_sizes.png"
    fig.savefig(f2, metadata={"Software": None})
    plt.close(fig)
    return [f1, f2]
