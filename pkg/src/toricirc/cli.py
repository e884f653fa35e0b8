"""Command-line front end: ``toricirc <verb> ...``.

Exit codes: 0 when everything checked is consistent, 1 when a theorem check
found a violation, 2 on usage or input errors (including binomials outside
the toric ideal).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import circuits as circ
from . import config, fibers, graphs, verify
from .errors import NotInIdeal, ToricError
from .ideal import format_binomials, format_monomial, parse_binomial, toric_groebner

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load(args) -> tuple[config.Configuration, graphs.Graph | None]:
    """The configuration named on the command line, plus the graph if ``--graph``."""
    text = _read(args.input)
    if getattr(args, "graph", False):
        g = graphs.parse_graph(text)
        return g.incidence, g
    return config.parse_configuration(text), None


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _emit_report(rep: verify.TheoremReport, out) -> int:
    out.write(rep.format() + "\n")
    return EXIT_OK if rep.ok else EXIT_VIOLATION


# ---------------------------------------------------------------- verbs


def cmd_circuits(args, out) -> int:
    c, g = _load(args)
    if g is not None:
        found = graphs.enumerate_graph_circuits(g)
    else:
        found = circ.enumerate_circuits(c)
    for x in found:
        if not circ.in_filter(x.binomial, args.filter):
            continue
        if g is not None:
            out.write(f"{x.binomial}\t{graphs.classify_walk_type(x.binomial, g)}\n")
        else:
            out.write(f"{x.binomial}\n")
    return EXIT_OK


def cmd_generators(args, out) -> int:
    c, _ = _load(args)
    gb = toric_groebner(c)
    if args.minimal:
        out.write(format_binomials(fibers.minimal_generators(c, gb)))
    else:
        out.write("".join(f"{b}\n" for b in gb.elements))
    return EXIT_OK


def cmd_graph_check(args, out) -> int:
    g = graphs.parse_graph(_read(args.input))
    rep = verify.check_graph_theorems(g, args.input)
    cond = rep.conditions
    summary = [f"{k}: {_bool(cond[k])}" for k in ("OCC", "(v)", "(v')")]
    out.write(", ".join(summary + [rep.verdict]) + "\n")
    gap = rep.witness.get("normality_gap")
    out.write(f"normality witness: {gap if gap else 'none'}\n")
    return _emit_report(rep, out)


def cmd_build(args, out) -> int:
    if args.family == "veronese":
        out.write(config.format_configuration(config.veronese(args.d, args.r)))
    elif args.family == "sqfree-veronese":
        out.write(config.format_configuration(config.squarefree_veronese(args.d, args.r)))
    elif args.family == "root":
        out.write(config.format_configuration(config.root_config(args.type, args.d)))
    elif args.family == "clique-sum":
        out.write(graphs.format_graph(graphs.clique_sum_of_complete(args.k1, args.k2, args.shared)))
    return EXIT_OK


def cmd_binomial_check(args, out) -> int:
    c, _ = _load(args)
    b = parse_binomial(args.binomial, c.n)
    if any(c.degree_of(b.plus)[i] != c.degree_of(b.minus)[i] for i in range(c.d)):
        raise NotInIdeal(f"{b} is not in the toric ideal")
    gens = fibers.minimal_generators(c)
    out.write("in_ideal: true\n")
    out.write(f"circuit: {_bool(circ.is_circuit(b, c))}\n")
    out.write(f"class: {circ.squarefree_class(b)}\n")
    out.write(f"fundamental: {_bool(circ.is_fundamental(b, c))}\n")
    out.write(f"indispensable: {_bool(fibers.is_indispensable(b, c, gens))}\n")
    out.write(f"redundant: {_bool(fibers.is_redundant(b, c, gens))}\n")
    return EXIT_OK


def cmd_fiber(args, out) -> int:
    c, _ = _load(args)
    try:
        degree = [int(x) for x in args.degree.split(",")]
    except ValueError as exc:
        raise InputError(f"bad degree vector {args.degree!r}") from exc
    if len(degree) != c.d:
        raise InputError(f"degree vector has {len(degree)} entries, configuration has {c.d} rows")
    for m in fibers.enumerate_fiber(c, degree):
        out.write(format_monomial(m) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    what = args.what
    if what == "corpus":
        if args.random == args.exhaustive:
            raise InputError("choose exactly one of --exhaustive and --random")
        mode = "random" if args.random else "exhaustive"
        progress = None
        if args.progress:
            def progress(k, g):
                sys.stderr.write(f"\r{k} graphs")
        rep = verify.corpus_run(args.max_vertices, mode, args.sample, args.seed, progress)
        if args.progress:
            sys.stderr.write("\n")
        return _emit_report(rep, out)
    if what == "root":
        families = [args.family] if args.family else ["A", "B", "C", "D"]
        code = EXIT_OK
        for f in families:
            code = max(code, _emit_report(verify.check_root(f, args.d), out))
        return code
    if what == "veronese":
        return _emit_report(verify.check_veronese(args.d, args.r), out)
    if what == "sqfree-veronese":
        return _emit_report(verify.check_squarefree_veronese(args.d, args.r), out)
    if what == "graph":
        g = graphs.parse_graph(_read(args.input))
        code = _emit_report(verify.check_graph_theorems(g, args.input), out)
        return max(code, _emit_report(verify.cross_check_graph(g, args.input), out))
    c, _ = _load(args)
    if what == "zeroone":
        return _emit_report(verify.check_prop_zeroone(c), out)
    if what == "two-binomial":
        return _emit_report(verify.check_two_binomial_groebner(c), out)
    if what == "circuits":
        return _emit_report(verify.check_generated_by_circuits(c, args.filter), out)
    raise InputError(f"unknown check {what!r}")


# ---------------------------------------------------------------- parser


def _add_input(p, graph_flag: bool = True):
    p.add_argument("input", help="configuration file ('-' for stdin)")
    if graph_flag:
        p.add_argument("--graph", action="store_true", help="read a graph file and use its incidence configuration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricirc", description="Toric ideals, circuits and graph criteria.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("circuits", help="list circuits of a configuration or graph")
    _add_input(p)
    p.add_argument("--filter", choices=("all", "sf", "sfsf"), default="all")
    p.set_defaults(func=cmd_circuits)

    p = sub.add_parser("generators", help="reduced Groebner basis or a minimal generating set")
    _add_input(p)
    p.add_argument("--minimal", action="store_true")
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("graph-check", help="odd cycle condition, (v), (v') and theorem consistency")
    p.add_argument("input", help="graph file")
    p.set_defaults(func=cmd_graph_check)

    p = sub.add_parser("build", help="print a named configuration or graph")
    fam = p.add_subparsers(dest="family", required=True)
    for name in ("veronese", "sqfree-veronese"):
        q = fam.add_parser(name)
        q.add_argument("d", type=int)
        q.add_argument("r", type=int)
    q = fam.add_parser("root")
    q.add_argument("type", choices=("A", "B", "C", "D"))
    q.add_argument("d", type=int)
    q = fam.add_parser("clique-sum", help="clique sum of two complete graphs (graph file)")
    q.add_argument("k1", type=int)
    q.add_argument("k2", type=int)
    q.add_argument("shared", type=int, help="number of glued vertices (k-sum glues k+1)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("binomial-check", help="classify one binomial of the toric ideal")
    _add_input(p)
    p.add_argument("binomial", help="e.g. 'x1*x4 - x2*x3'")
    p.set_defaults(func=cmd_binomial_check)

    p = sub.add_parser("fiber", help="monomials of a given multidegree")
    _add_input(p)
    p.add_argument("--degree", required=True, help="comma-separated degree vector b1,...,bd")
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("verify", help="theorem checks on corpora and named families")
    checks = p.add_subparsers(dest="what", required=True)
    q = checks.add_parser("corpus")
    q.add_argument("--max-vertices", type=int, required=True)
    q.add_argument("--exhaustive", action="store_true")
    q.add_argument("--random", action="store_true")
    q.add_argument("--sample", type=int, default=200)
    q.add_argument("--seed", type=int, default=7)
    q.add_argument("--progress", action="store_true", help="report progress on stderr")
    q = checks.add_parser("root")
    q.add_argument("--family", choices=("A", "B", "C", "D"))
    q.add_argument("--d", type=int, required=True)
    for name in ("veronese", "sqfree-veronese"):
        q = checks.add_parser(name)
        q.add_argument("--d", type=int, required=True)
        q.add_argument("--r", type=int, required=True)
    q = checks.add_parser("graph")
    q.add_argument("input", help="graph file")
    for name in ("zeroone", "two-binomial"):
        _add_input(checks.add_parser(name))
    q = checks.add_parser("circuits")
    _add_input(q)
    q.add_argument("--filter", choices=("all", "sf", "sfsf"), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, ToricError, ValueError) as exc:
        sys.stderr.write(f"toricirc: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
