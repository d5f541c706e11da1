"""Command-line surface.

Subcommands: rank, unrank, cf, fbb, graph-of, count, table, verify,
diff-bfile.  Exit codes are a stable contract: 0 success, 1 verification
mismatch, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import sys
from math import comb

from . import correspondence, counting, fbb, labeling, poset, render
from .render import RenderSpec


def _parse_ranks(text, n):
    """Comma-separated labels; an `i-j` token names the pair directly."""
    ranks = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if "-" in token:
            i, j = token.split("-", 1)
            ranks.append(labeling.rank(n, int(i), int(j)))
        else:
            ranks.append(int(token))
    return frozenset(ranks)


def _render_poset(p, spec):
    if spec.format == "json":
        return render.poset_to_json(p)
    if spec.format == "dot":
        return render.poset_to_dot(p)
    if spec.format == "text":
        return render.poset_to_text(p)
    raise ValueError(f"format {spec.format!r} not valid for posets")


def _render_graph(g, spec):
    if spec.format == "json":
        return render.graph_to_json(g)
    if spec.format == "dot":
        return render.graph_to_dot(g)
    if spec.format == "text":
        return render.graph_to_text(g)
    raise ValueError(f"format {spec.format!r} not valid for graphs")


# -- command handlers (return process exit codes) -------------------------------


def _cmd_rank(args):
    print(labeling.rank(args.n, args.i, args.j))
    return 0


def _cmd_unrank(args):
    i, j = labeling.unrank(args.n, args.k)
    print(i, j)
    return 0


def _cmd_cf(args):
    spec = RenderSpec(args.format, args.output)
    spec.write(_render_poset(fbb.build_cf(args.n).poset, spec))
    return 0


def _cmd_fbb(args):
    spec = RenderSpec(args.format, args.output)
    block = fbb.build_fbb(args.n, _parse_ranks(args.ranks, args.n))
    spec.write(_render_poset(block.poset, spec))
    return 0


def _cmd_graph_of(args):
    spec = RenderSpec(args.format, args.output)
    block = fbb.build_fbb(args.n, _parse_ranks(args.ranks, args.n))
    spec.write(_render_graph(correspondence.phi(block), spec))
    return 0


def _cmd_count(args):
    fn = counting.count_d if args.kind == "d" else counting.count_f
    print(fn(args.n, args.q))
    return 0


def _cmd_table(args):
    spec = RenderSpec(args.format, args.output)
    spec.write(counting.emit_triangle(args.kind, args.max_n, args.format))
    return 0


def _cmd_diff_bfile(args):
    diff = counting.diff_bfile(args.path, args.kind)
    for warning in diff.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if diff.ok:
        print(f"{diff.compared} values compared, no mismatches")
        return 0
    for m in diff.mismatches:
        print(f"mismatch at (n={m.n}, q={m.q}): triangle {m.triangle_value}, "
              f"file {m.file_value} (line {m.line_no})")
    return 1


# -- verify ---------------------------------------------------------------------


def _check_rank_round_trip(n):
    top = labeling.pair_count(n)
    seen = set()
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            k = labeling.rank(n, i, j)
            if labeling.unrank(n, k) != (i, j):
                return False, f"unrank(rank({i},{j})) != ({i},{j})"
            seen.add(k)
    if seen != set(range(1, top + 1)):
        return False, f"rank image is not J_{top}"
    for k in range(1, top + 1):
        i, j = labeling.unrank(n, k)
        if labeling.rank(n, i, j) != k:
            return False, f"rank(unrank({k})) != {k}"
    return True, f"all {top} pairs round-trip"


def _check_cf_structure(n):
    block = fbb.build_cf(n)
    p = block.poset
    top = comb(n, 2)
    problems = []
    if len(p) != 2 * n - 1 + top:
        problems.append(f"|elements| = {len(p)}")
    if len(p.covers) != 2 * n - 2 + 2 * top:
        problems.append(f"|covers| = {len(p.covers)}")
    if poset.nullity(p) != top:
        problems.append(f"nullity = {poset.nullity(p)}")
    for name, pred in (("lattice", poset.is_lattice),
                       ("rc", poset.is_rc_lattice),
                       ("dismantlable", poset.is_dismantlable)):
        if not pred(p):
            problems.append(f"not {name}")
    if not fbb.is_basic_block_universal(p):
        problems.append("not a basic block")
    if not fbb.is_fundamental_basic_block(block):
        problems.append("not a fundamental basic block")
    if problems:
        return False, "; ".join(problems)
    return True, f"{len(p)} elements, {len(p.covers)} covers, nullity {top}"


def _check_triangle(n):
    top = comb(n, 2)
    for q in range(top + 2):
        d = counting.count_d(n, q)
        if d != counting.count_d_oracle(n, q):
            return False, f"d({n},{q}) disagrees with inclusion-exclusion"
        if d != counting.count_f(n, q):
            return False, f"f({n},{q}) != d({n},{q})"
    return True, f"d = oracle = f for q = 0..{top + 1}"


def run_verification(max_n, enum_cap=6):
    """The full invariant suite; returns (all_ok, checks) with one
    (name, ok, detail) triple per check."""
    if max_n < 2:
        raise ValueError(f"verify needs max_n >= 2, got {max_n}")
    checks = []
    for n in range(2, max_n + 1):
        ok, detail = _check_rank_round_trip(n)
        checks.append((f"rank-round-trip n={n}", ok, detail))
        ok, detail = _check_cf_structure(n)
        checks.append((f"cf-structure n={n}", ok, detail))
        ok, detail = _check_triangle(n)
        checks.append((f"count-agreement n={n}", ok, detail))
        if n <= enum_cap:
            for l in range(comb(n, 2) + 1):
                report = correspondence.verify_equivalence(n, l, cap=enum_cap)
                checks.append((f"equivalence n={n} l={l}", report.ok,
                               report.summary().replace("\n", " ")))
    return all(ok for _, ok, _ in checks), checks


def _cmd_verify(args):
    all_ok, checks = run_verification(args.max_n, args.enum_cap)
    spec = RenderSpec(args.format, args.output)
    if spec.format == "json":
        spec.write(render.report_to_json(checks))
    else:
        spec.write(render.report_to_text(checks))
    if not all_ok:
        first = next(name for name, ok, _ in checks if not ok)
        print(f"verification failed, first failing check: {first}",
              file=sys.stderr)
        return 1
    return 0


# -- parser ----------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fbblat",
        description="Fundamental basic blocks, edge-labeled graphs, and "
                    "their counting equivalence.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p, formats, default):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("-o", "--output", default=None,
                       help="write to this file instead of standard output")

    p = sub.add_parser("rank", help="label of the pair (i, j)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(handler=_cmd_rank)

    p = sub.add_parser("unrank", help="pair with label k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("k", type=int)
    p.set_defaults(handler=_cmd_unrank)

    p = sub.add_parser("cf", help="the complete fundamental basic block CF(n)")
    p.add_argument("--n", type=int, required=True)
    add_output(p, ("dot", "json", "text"), "text")
    p.set_defaults(handler=_cmd_cf)

    p = sub.add_parser("fbb", help="fundamental basic block from a rank set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ranks", required=True,
                   help="comma-separated labels; `i-j` tokens name pairs")
    add_output(p, ("dot", "json", "text"), "text")
    p.set_defaults(handler=_cmd_fbb)

    p = sub.add_parser("graph-of", help="the digraph of a fundamental basic block")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ranks", required=True)
    add_output(p, ("dot", "json", "text"), "text")
    p.set_defaults(handler=_cmd_graph_of)

    p = sub.add_parser("count", help="one exact count")
    p.add_argument("kind", choices=("d", "f"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("table", help="the whole triangle up to max-n")
    p.add_argument("kind", choices=("d", "f"))
    p.add_argument("--max-n", type=int, required=True)
    add_output(p, ("csv", "json"), "csv")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("verify", help="run the full invariant suite")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--enum-cap", type=int, default=6,
                   help="largest n verified by exhaustive enumeration")
    add_output(p, ("text", "json"), "text")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("diff-bfile", help="compare a b-file against a triangle")
    p.add_argument("kind", choices=("d", "f"))
    p.add_argument("path")
    p.set_defaults(handler=_cmd_diff_bfile)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
