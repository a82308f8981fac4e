"""Command-line entry point: ``fraclab <verb> <subcommand> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from fraclab import guards
from fraclab.classify import HostClassFlags, PatternClassFlags, classify_hom, classify_indsub, classify_sub
from fraclab.errors import InvalidInput, LabError
from fraclab.graphcore import io
from fraclab.graphcore.chains import chain_condition_check, embed_into_subdivided_clique
from fraclab.graphcore.generate import KINDS, generate
from fraclab.graphcore.transform import enumerate_fractures, lift_colouring, subdivide, tensor


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _guard_pair(text: str):
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected name=int, got {text!r}")
    if name not in guards.DEFAULTS:
        raise argparse.ArgumentTypeError(f"unknown guard {name!r}; known: {', '.join(guards.DEFAULTS)}")
    try:
        return name, int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"guard value must be an integer, got {value!r}") from None


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise InvalidInput(f"{args.verb} {args.sub} needs {', '.join(missing)}")


def _emit(args, value, text: str | None = None) -> None:
    if args.json:
        print(json.dumps(value, sort_keys=True))
    else:
        print(text if text is not None else value)


# -- verbs -----------------------------------------------------------------

COUNTS = ("hom", "sub", "indsub", "cphom", "matchings", "indsets", "colourful-matchings", "colourful-indsets", "hom-td")


def cmd_count(args):
    from fraclab import counting
    sub = args.sub
    if sub in ("hom", "sub", "indsub", "hom-td"):
        _need(args, "pattern", "host")
        pattern, host = io.read_graph(args.pattern), io.read_graph(args.host)
        if sub == "hom-td":
            from fraclab.homdp import count_hom_td
            from fraclab.invariants import treewidth_exact
            _, td = treewidth_exact(pattern)
            value = count_hom_td(pattern, td, host)
        else:
            value = {"hom": counting.count_hom, "sub": counting.count_sub, "indsub": counting.count_indsub}[sub](pattern, host)
    elif sub in ("matchings", "indsets"):
        _need(args, "input", "k")
        graph = io.read_graph(args.input)
        value = (counting.count_matchings if sub == "matchings" else counting.count_indsets)(graph, args.k)
    else:
        _need(args, "input")
        cg = io.read_coloured(args.input)
        value = {
            "cphom": counting.count_cp_hom,
            "colourful-matchings": counting.count_colourful_matchings,
            "colourful-indsets": counting.count_colourful_indsets,
        }[sub](cg)
    _emit(args, {"count": value}, str(value))


TRANSFORMS = ("subdivide", "lift", "tensor", "export-dot", "generate", "chain-check", "embed", "wall-lift", "fractures")


def cmd_transform(args):
    sub = args.sub
    if sub == "generate":
        _need(args, "kind")
        graph = generate(args.kind, *args.params)
        _emit(args, {"n": graph.n, "edges": graph.edge_list}, io.format_graph(graph).rstrip("\n"))
    elif sub == "subdivide":
        _need(args, "input", "r")
        graph = subdivide(io.read_graph(args.input), args.r)
        _emit(args, {"n": graph.n, "edges": graph.edge_list}, io.format_graph(graph).rstrip("\n"))
    elif sub == "lift":
        _need(args, "input", "r")
        cg = lift_colouring(io.read_coloured(args.input), args.r)
        _emit(args, _cg_json(cg), io.format_coloured(cg).rstrip("\n"))
    elif sub == "tensor":
        _need(args, "input", "host")
        cg = tensor(io.read_coloured(args.input), io.read_coloured(args.host))
        _emit(args, _cg_json(cg), io.format_coloured(cg).rstrip("\n"))
    elif sub == "export-dot":
        _need(args, "input")
        text = open(args.input).read()
        if any(line.strip().startswith("%") for line in text.splitlines()):
            cg = io.parse_coloured(text, args.input)
            dot = io.to_dot(cg.host, "G", cg.colour)
        else:
            dot = io.to_dot(io.parse_graph(text, args.input))
        _emit(args, {"dot": dot}, dot.rstrip("\n"))
    elif sub == "chain-check":
        _need(args, "input", "r")
        ok = chain_condition_check(io.read_graph(args.input), args.r)
        _emit(args, {"ok": ok}, "yes" if ok else "no")
    elif sub == "embed":
        _need(args, "input", "r")
        emb = embed_into_subdivided_clique(io.read_graph(args.input), args.r)
        _emit(args, {"m": emb.m, "mapping": emb.mapping}, f"m {emb.m}\n" + "\n".join(f"{v} -> {x}" for v, x in enumerate(emb.mapping)))
    elif sub == "wall-lift":
        _need(args, "input", "k", "r", "divisors")
        from fraclab.reductions import wall_lift
        _, cg = wall_lift(args.k, [int(x) for x in args.divisors.split(",")], args.r, io.read_coloured(args.input))
        _emit(args, _cg_json(cg), io.format_coloured(cg).rstrip("\n"))
    elif sub == "fractures":
        _need(args, "pattern")
        fr = enumerate_fractures(io.read_graph(args.pattern))
        rows = [[[list(map(list, b)) for b in part] for part in f.blocks] for f in fr]
        _emit(args, {"fractures": rows}, "\n".join(json.dumps(r) for r in rows))


def _cg_json(cg):
    return {
        "pattern": {"n": cg.pattern.n, "edges": cg.pattern.edge_list},
        "host": {"n": cg.host.n, "edges": cg.host.edge_list},
        "colour": cg.colour,
    }


BASES = ("M", "N", "a", "ahat", "det")


def cmd_basis(args):
    from fraclab import hombasis
    from fraclab.linalg import determinant
    _need(args, "pattern")
    graph = io.read_graph(args.pattern)
    sub = args.sub
    if sub in ("M", "N"):
        mat = hombasis.matrix_M(graph) if sub == "M" else hombasis.matrix_N(graph)
        _emit(args, {"rows": [[_rat(x) for x in row] for row in mat.rows]}, mat.to_text().rstrip("\n"))
    elif sub == "det":
        dm = determinant(hombasis.matrix_M(graph)) if not graph.isolated() else None
        dn = determinant(hombasis.matrix_N(graph))
        _emit(args, {"det_M": None if dm is None else _rat(dm), "det_N": _rat(dn)},
              f"det M {'-' if dm is None else _rat(dm)}\ndet N {_rat(dn)}")
    else:
        coeffs = hombasis.match_coefficients(graph) if sub == "a" else hombasis.indset_coefficients(graph)
        values = [_rat(v) for v in coeffs.values()]
        _emit(args, {"coefficients": values}, "\n".join(values))


REDUCTIONS = ("match-pipeline", "indset-pipeline", "uncolour-matchings", "uncolour-indsets", "cphom-from-hom")


def cmd_reduce(args):
    from fraclab import reductions
    from fraclab.oracles import (
        CountingOracle, EdgeSubgraphOf, Problem, SubdividedCliqueSubgraphs, SubgraphOf,
    )
    _need(args, "input")
    cg = io.read_coloured(args.input)
    sub = args.sub
    if sub == "match-pipeline":
        r = args.r or 0
        oracle = CountingOracle(Problem.COLOURFUL_MATCHINGS, SubdividedCliqueSubgraphs(r))
        value = reductions.recover_cphom_via_matchings(cg, r, oracle)
    elif sub == "indset-pipeline":
        r = args.r or 0
        oracle = CountingOracle(Problem.COLOURFUL_INDSETS, EdgeSubgraphOf(lift_colouring(cg.require_hom(), r)))
        value = reductions.recover_cphom_via_indsets(cg, r, oracle)
    elif sub == "uncolour-matchings":
        oracle = CountingOracle(Problem.MATCHINGS, SubgraphOf(cg.host))
        value = reductions.colourful_from_uncoloured_matchings(cg, oracle)
    elif sub == "uncolour-indsets":
        oracle = CountingOracle(Problem.INDSETS, SubgraphOf(cg.host))
        value = reductions.colourful_from_uncoloured_indsets(cg, oracle)
    else:
        oracle = CountingOracle(Problem.HOM, SubgraphOf(cg.host, cg.pattern))
        value = reductions.cphom_from_hom(cg, oracle)
    if args.trace:
        for line in oracle.trace():
            print(line, file=sys.stderr)
    _emit(args, {"count": value, "queries": len(oracle.log)}, str(value))


INVARIANTS = ("clique", "independence", "biclique", "induced_biclique", "matching", "induced_matching", "all", "treewidth", "shallow-minor")


def cmd_invariant(args):
    from fraclab.invariants import SYMBOLS, InvariantKind, all_invariants, invariant, is_shallow_minor, treewidth_exact
    sub = args.sub
    if sub == "shallow-minor":
        _need(args, "pattern", "host", "depth")
        ok = is_shallow_minor(io.read_graph(args.pattern), io.read_graph(args.host), args.depth)
        _emit(args, {"shallow_minor": ok}, "yes" if ok else "no")
        return
    _need(args, "input")
    graph = io.read_graph(args.input)
    if sub == "treewidth":
        width, td = treewidth_exact(graph)
        text = f"treewidth {width}\n" + "\n".join(f"bag {i}: {sorted(b)}" for i, b in enumerate(td.bags))
        text += "".join(f"\ntree {i} {j}" for i, j in td.tree_edges())
        _emit(args, {"treewidth": width, "bags": [sorted(b) for b in td.bags], "tree": td.tree_edges()}, text)
    elif sub == "all":
        values = all_invariants(graph)
        _emit(args, values, "\n".join(f"{k} {v}" for k, v in values.items()))
    else:
        value = invariant(graph, sub)
        _emit(args, {SYMBOLS[InvariantKind(sub)]: value}, str(value))


def cmd_classify(args):
    h = PatternClassFlags(
        closure=args.pattern_closure, size=args.size, m=args.m, m_ind=args.m_ind,
        beta_ind=args.beta_ind, omega=args.omega, alpha=args.alpha, tw=args.tw,
    )
    g = HostClassFlags(density=args.host_density, omega=args.host_omega, beta=args.host_beta, alpha=args.host_alpha)
    verdict = {"sub": classify_sub, "indsub": classify_indsub, "hom": classify_hom}[args.sub](h, g)
    _emit(args, verdict.as_dict(), verdict.text)


def cmd_verify(args):
    from fraclab.verify import CHECKS, run_check
    names = list(CHECKS) if args.sub == "all" else [args.sub]
    results = []
    for name in names:
        res = run_check(name, seed=args.seed, trials=args.trials)
        results.append(res)
        if not args.json:
            print(res.line(), flush=True)
    if args.json:
        print(json.dumps([{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results], sort_keys=True))
    return 0 if all(r.passed for r in results) else 5


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from fraclab.verify import CHECKS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--guard", action="append", type=_guard_pair, default=[], metavar="NAME=INT",
                        help="override a size guard (repeatable)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int)

    io_opts = argparse.ArgumentParser(add_help=False)
    io_opts.add_argument("--pattern", help="pattern graph file")
    io_opts.add_argument("--host", help="host graph file (second coloured graph for tensor)")
    io_opts.add_argument("--in", dest="input", help="input graph or coloured-graph file")
    io_opts.add_argument("--r", type=int, help="subdivision parameter")
    io_opts.add_argument("--k", type=int, help="solution size / wall size")

    parser = argparse.ArgumentParser(prog="fraclab", description="Exact counting lab for subgraph-counting reductions.")
    verbs = parser.add_subparsers(dest="verb", required=True)

    def verb(name, choices, help_text, extra=()):
        p = verbs.add_parser(name, help=help_text, parents=[common, io_opts, *extra])
        p.add_argument("sub", choices=choices)
        return p

    verb("count", COUNTS, "brute-force and DP counters")
    t = verb("transform", TRANSFORMS, "graph transformations")
    t.add_argument("--kind", choices=KINDS)
    t.add_argument("--params", type=int, nargs="*", default=[])
    t.add_argument("--divisors", help="comma-separated subdivision multipliers, one per wall edge")
    verb("basis", BASES, "fracture / edge-subset matrices and coefficients")
    red = verb("reduce", REDUCTIONS, "oracle reductions")
    red.add_argument("--trace", action="store_true", help="print one line per oracle query to stderr")
    inv = verb("invariant", INVARIANTS, "graph invariants, treewidth, shallow minors")
    inv.add_argument("--depth", type=int)
    cls = verb("classify", ("sub", "indsub", "hom"), "complexity verdict from class flags")
    cls.add_argument("--pattern-closure", default="hereditary", choices=("monotone", "hereditary", "minor-closed"))
    for flag in ("size", "m", "m-ind", "beta-ind", "omega", "alpha", "tw", "host-omega", "host-beta", "host-alpha"):
        cls.add_argument(f"--{flag}", default="unknown", help="finite, infinite or unknown")
    cls.add_argument("--host-density", default="unknown", help="nowhere, somewhere or unknown")
    verb("verify", ("all", *CHECKS), "run acceptance checks")
    return parser


HANDLERS = {
    "count": cmd_count, "transform": cmd_transform, "basis": cmd_basis, "reduce": cmd_reduce,
    "invariant": cmd_invariant, "classify": cmd_classify, "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # usage errors exit 2, --help exits 0
        return exc.code if isinstance(exc.code, int) else 2
    try:
        with guards.override(**dict(args.guard)):
            status = HANDLERS[args.verb](args)
    except LabError as exc:
        print(f"fraclab: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"fraclab: error: {exc}", file=sys.stderr)
        return 2
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
