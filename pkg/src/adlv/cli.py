"""Command-line entry point: ``adlv <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from adlv import bruhat, classify, fixtures, lp, reduction, report
from adlv.cache import MemoStore
from adlv.io import ParseError, element_to_json, parse_cocharacter, parse_element, word_text
from adlv.roots import is_dominant
from adlv.weyl import kappa, length, supp_sigma


@dataclass
class Config:
    n: int | None = None
    mu: tuple[int, ...] | None = None
    output: str | None = None
    cache_dir: str | None = None
    seed: int | None = None
    threads: int = 1


class BadInput(ValueError):
    pass


def _mu(args, required=True):
    if args.mu is None:
        if required:
            raise BadInput("--mu is required")
        return None
    mu = parse_cocharacter(args.mu, args.n)
    if args.n is None:
        args.n = len(mu)
    if args.n < 2:
        raise BadInput("n must be at least 2")
    if not is_dominant(mu):
        raise BadInput(f"mu={mu} is not dominant")
    return mu


def _w(args):
    if args.w is None:
        raise BadInput("--w is required")
    return parse_element(args.w, args.n)


def _words(elems, fmt) -> str:
    elems = sorted(elems, key=bruhat.sort_key)
    if fmt == "json":
        return report.elements_json(elems) + "\n"
    if fmt == "tsv":
        return report.tsv(("word", "length"), ([word_text(w), str(length(w))] for w in elems))
    return "".join(word_text(w) + "\n" for w in elems)


def cmd_sadm(args, out):
    out.write(_words(bruhat.sadm(_mu(args)), args.output))


def cmd_sadm0(args, out):
    out.write(_words(lp.sadm0(_mu(args)), args.output))


def cmd_adm(args, out):
    out.write(_words(bruhat.adm(_mu(args)), args.output))


def cmd_lp(args, out):
    w = _w(args)
    vs = sorted(lp.lp_set(w, algorithm=args.algorithm))
    if args.output == "json":
        out.write(json.dumps([[i + 1 for i in v] for v in vs]) + "\n")
    else:
        out.write("".join(report.perm_text(v) + "\n" for v in vs))


def cmd_nonempty(args, out):
    if args.w is not None:
        elems = [_w(args)]
        m = args.m if args.m is not None else kappa(elems[0])
    else:
        mu = _mu(args)
        elems = list(bruhat.sadm(mu))
        m = sum(mu)
    rows = [report.element_row(w, m) for w in elems]
    if args.output == "json":
        out.write(json.dumps([dict(zip(report.ELEMENT_COLUMNS, r)) for r in rows], indent=1) + "\n")
    else:
        out.write(report.tsv(report.ELEMENT_COLUMNS, rows))


def cmd_classify(args, out):
    mu = _mu(args)
    row = classify.verify_pair(args.n, mu, exhaustive=args.exhaustive)
    cells = report.verdict_row(row)
    if args.output == "tsv":
        out.write(report.tsv(report.VERDICT_COLUMNS, [cells]))
    elif args.output == "json":
        out.write(json.dumps(dict(zip(report.VERDICT_COLUMNS, cells)), indent=1) + "\n")
    else:
        v = row.verdict
        for key, val in zip(report.VERDICT_COLUMNS, cells):
            out.write(f"{key}: {val}\n")
        for label, wit in (("witness_reason", v.witness), ("coxeter_witness", v.coxeter_witness)):
            if wit:
                out.write(f"{label}: {word_text(wit[0])} ({wit[1]})\n")


def cmd_verify(args, out):
    checks = fixtures.run_all()
    bad = 0
    out.write(report.tsv(("check", "id", "ok", "detail"),
                         ([c.kind, c.id, report._b(c.ok), c.detail] for c in checks)))
    bad += sum(not c.ok for c in checks)
    rows = classify.verify_range(args.nmax, args.spread, args.n2max, threads=args.threads)
    table = report.tsv(report.VERDICT_COLUMNS, (report.verdict_row(r) for r in rows))
    out.write("\n" + table)
    bad += sum(not r.match for r in rows)
    out.write(f"\nchecks={len(checks)} pairs={len(rows)} mismatches={bad}\n")
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(table)
    if args.figures:
        report.write_figures(rows, args.figures)
    return 1 if bad else 0


def cmd_reduce(args, out):
    w = _w(args)
    tree = reduction.build_tree(w, seed=args.seed)
    if args.dot or args.output == "dot":
        out.write(report.tree_dot(tree))
    else:
        out.write(report.paths_json(reduction.enumerate_paths(tree)) + "\n")


def cmd_dim(args, out):
    mu = _mu(args)
    d = lp.dim_closed_adlv(mu, sum(mu))
    out.write(f"{d}\n")
    if args.check:
        m = sum(mu)
        best = max((reduction.dim_via_tree(w, m) for w in lp.sadm0(mu)), default=None)
        out.write(f"via_tree: {best}\n")
        return 0 if best == d else 1


def cmd_element(args, out):
    w = _w(args)
    inv = lp.newton_kappa(w)
    info = {
        "word": word_text(w),
        "element": element_to_json(w),
        "length": length(w),
        "kappa": kappa(w),
        "supp_sigma": sorted(supp_sigma(w)),
        "newton": [str(x) for x in inv.newton],
        "minimal_length": reduction.is_minimal_length(w),
    }
    if args.output == "json":
        out.write(json.dumps(info) + "\n")
    else:
        for k, v in info.items():
            out.write(f"{k}: {json.dumps(v) if not isinstance(v, str) else v}\n")


COMMANDS = {
    "sadm": cmd_sadm, "sadm0": cmd_sadm0, "adm": cmd_adm, "lp": cmd_lp,
    "nonempty": cmd_nonempty, "classify": cmd_classify, "verify": cmd_verify,
    "reduce": cmd_reduce, "dim": cmd_dim, "element": cmd_element,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="rank of GL_n")
    common.add_argument("--mu", help='cocharacter, "2,1,0,0" or "omega1+omega2"')
    common.add_argument("--w", help='element, JSON encoding or word form "s0 s5 t^2"')
    common.add_argument("--output", choices=("json", "tsv", "dot"))
    common.add_argument("--cache-dir", help="persist Bruhat/word memos here")
    common.add_argument("--seed", type=int, help="randomize the reduction strategy")
    common.add_argument("--threads", type=int, default=1)

    p = argparse.ArgumentParser(prog="adlv", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("sadm", "sadm0", "adm"):
        sub.add_parser(name, parents=[common])
    q = sub.add_parser("lp", parents=[common])
    q.add_argument("--algorithm", choices=("lpr", "definition"), default="lpr")
    q = sub.add_parser("nonempty", parents=[common])
    q.add_argument("--m", type=int, help="tau-power of b (default kappa(w))")
    q = sub.add_parser("classify", parents=[common])
    q.add_argument("--exhaustive", action="store_true")
    q = sub.add_parser("verify", parents=[common])
    q.add_argument("--nmax", type=int, default=8)
    q.add_argument("--spread", type=int, default=4)
    q.add_argument("--n2max", type=int, default=8)
    q.add_argument("--report", help="write the sweep TSV here")
    q.add_argument("--figures", help="directory for summary PNGs")
    q = sub.add_parser("reduce", parents=[common])
    q.add_argument("--dot", action="store_true")
    q = sub.add_parser("dim", parents=[common])
    q.add_argument("--check", action="store_true", help="compare with reduction trees")
    sub.add_parser("element", parents=[common])
    return p


def run_command(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = Config(n=args.n, output=args.output, cache_dir=args.cache_dir,
                    seed=args.seed, threads=args.threads)
    if config.threads < 1:
        print("adlv: error: --threads must be positive", file=sys.stderr)
        return 2
    store = MemoStore(config.cache_dir)
    store.load()
    try:
        code = COMMANDS[args.command](args, out) or 0
    except (BadInput, ParseError, ValueError) as exc:
        print(f"adlv: error: {exc}", file=sys.stderr)
        return 2
    store.flush()
    return code


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
