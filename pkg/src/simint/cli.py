"""Command-line interface: one binary, deterministic machine-readable output.

Every run ends with a summary line "ok key=value ...".  Exit codes: 0 on
success, 1 when a decision verb answers no or a verification fails, 2 on
usage errors, 3 when a size cap refuses the computation.
"""

import argparse
import json
import sys
from pathlib import Path

from .graphs import (
    CapExceeded,
    GraphError,
    Problem,
    brute_force,
    parse_graph,
)
from .simrep import (
    RepError,
    read_rep,
    realized_graph,
    verify_representation,
    write_rep,
)
from .constructors import (
    ConstructionError,
    EdgeCliqueCover,
    PathDecomposition,
    construct_bipartite,
    construct_3partite,
    construct_cycle,
    construct_from_ecc,
    construct_from_edges,
    construct_from_path_decomposition,
)
from .solvers import (
    SearchStats,
    dominating_set_fpt,
    enumerate_maximal_cliques,
    independent_set_fpt,
)
from .params import (
    ecc_exact,
    lmim_witness,
    linear_mim_exact,
    path_alpha_exact,
    path_decomposition_from_rep,
    pathwidth_exact,
    si_decide,
    si_exact,
    thinness_witness,
)
from .reductions import (
    GadgetError,
    coloring_gadget,
    misp_to_idsp_gadget,
    parse_dp_instance,
    parse_misp_instance,
    preprocess_degree_one,
    xi,
)
from . import selftest

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class _Output:
    def __init__(self, machine):
        self.machine = machine

    def text(self, line):
        if not self.machine:
            print(line)

    def line(self, line):
        print(line)

    def summary(self, **pairs):
        parts = ["ok"]
        for key, value in pairs.items():
            if isinstance(value, bool):
                value = "true" if value else "false"
            parts.append(f"{key}={value}")
        print(" ".join(parts))


def _read_text(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise SystemExit2(f"cannot read {path}: {exc}")


class SystemExit2(Exception):
    """Usage-level failure: message plus exit code 2."""


def _load_graph(path):
    return parse_graph(_read_text(path))


def _load_rep(path):
    return read_rep(_read_text(path))


def _parse_vertex_lines(text, what):
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise SystemExit2(f"{what} line {lineno}: expected integers")
    return out


def _write_or_print(out, path, text):
    if path:
        Path(path).write_text(text)
        out.text(f"wrote {path}")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------


def cmd_construct(args, out):
    g = _load_graph(args.graph)
    method = args.method
    if method == "edges":
        rep = construct_from_edges(g)
    elif method == "ecc":
        if not args.cover:
            raise SystemExit2("--method ecc needs --cover <file>")
        cover = EdgeCliqueCover(
            _parse_vertex_lines(_read_text(args.cover), "cover")
        )
        rep = construct_from_ecc(g, cover)
    elif method == "bipartite":
        rep = construct_bipartite(g)
    elif method == "3partite":
        s, extra = divmod(g.n, 3)
        if extra:
            raise SystemExit2("3-partite construction needs 3 equal parts")
        built, rep = construct_3partite(s)
        if built != g:
            raise SystemExit2(
                "graph is not the complete 3-partite graph with equal parts"
            )
    elif method == "cycle":
        built, rep = construct_cycle(g.n)
        if built != g:
            raise SystemExit2("graph is not the cycle in canonical numbering")
    elif method == "pathdecomp":
        if not args.decomposition:
            raise SystemExit2("--method pathdecomp needs --decomposition <file>")
        pd = PathDecomposition(
            _parse_vertex_lines(_read_text(args.decomposition), "decomposition")
        )
        rep = construct_from_path_decomposition(g, pd)
    else:  # pragma: no cover - argparse restricts choices
        raise SystemExit2(f"unknown method {method}")
    assert verify_representation(g, rep)
    _write_or_print(out, args.out, write_rep(g, rep))
    out.summary(method=method, n=g.n, d=rep.d)
    return EXIT_OK


def cmd_verify(args, out):
    g, rep = _load_rep(args.rep)
    if args.graph:
        g = _load_graph(args.graph)
        if g.n != rep.n:
            out.summary(valid=False, reason="vertex-count-mismatch")
            return EXIT_NO
    res = verify_representation(g, rep)
    if res:
        out.summary(valid=True, d=rep.d)
        return EXIT_OK
    out.text(f"violation: {res.kind} at vertex pair {res.pair}")
    out.summary(valid=False, kind=res.kind, pair=f"{res.pair[0]},{res.pair[1]}")
    return EXIT_NO


def cmd_si(args, out):
    g = _load_graph(args.graph)
    if args.d is not None:
        rep = si_decide(g, args.d)
        if rep is None:
            out.summary(result="no", d=args.d)
            return EXIT_NO
        if args.out:
            _write_or_print(out, args.out, write_rep(g, rep))
        out.summary(result="yes", d=args.d)
        return EXIT_OK
    value, rep = si_exact(g)
    if args.out:
        _write_or_print(out, args.out, write_rep(g, rep))
    out.summary(si=value)
    return EXIT_OK


def cmd_param(args, out):
    g = _load_graph(args.graph)
    if args.name == "ecc":
        value, cover = ecc_exact(g)
        for q in cover.cliques:
            out.text("clique " + " ".join(map(str, q)))
        out.summary(ecc=value)
    elif args.name == "pw":
        value, pd = pathwidth_exact(g)
        for bag in pd.bags:
            out.text("bag " + " ".join(map(str, sorted(bag))))
        out.summary(pw=value)
    elif args.name == "lmim":
        value, witness = linear_mim_exact(g)
        out.text("order " + " ".join(map(str, witness.order)))
        out.summary(lmim=value)
    elif args.name == "palpha":
        value = path_alpha_exact(g)
        out.summary(palpha=value)
    else:  # pragma: no cover
        raise SystemExit2(f"unknown parameter {args.name}")
    return EXIT_OK


def cmd_witness(args, out):
    g, rep = _load_rep(args.rep)
    if args.kind == "thin":
        witness = thinness_witness(g, rep)
        for part in witness.partition:
            out.text("class " + " ".join(map(str, part)))
        out.text("order " + " ".join(map(str, witness.order)))
        out.summary(classes=len(witness.partition), d=rep.d)
    elif args.kind == "lmim":
        witness = lmim_witness(g, rep)
        out.text("order " + " ".join(map(str, witness.order)))
        out.summary(bound=witness.bound, verified=witness.verified)
    elif args.kind == "pathdecomp":
        pd = path_decomposition_from_rep(g, rep)
        for bag in pd.bags:
            out.text("bag " + " ".join(map(str, sorted(bag))))
        out.summary(bags=len(pd.bags), width=pd.width)
    else:  # pragma: no cover
        raise SystemExit2(f"unknown witness kind {args.kind}")
    return EXIT_OK


def cmd_cliques(args, out):
    g, rep = _load_rep(args.rep)
    cliques = enumerate_maximal_cliques(g, rep)
    for q in cliques:
        out.line(" ".join(map(str, q)))
    out.summary(count=len(cliques))
    return EXIT_OK


def cmd_solve(args, out):
    g, rep = _load_rep(args.rep)
    stats = SearchStats()
    if args.problem == "is":
        witness = independent_set_fpt(g, rep, args.k, stats)
    else:
        witness = dominating_set_fpt(g, rep, args.k, stats)
    if witness is not None:
        out.line(" ".join(map(str, witness)))
        out.line(f"result=yes value={len(witness)} nodes={stats.nodes}")
        out.summary(result="yes", value=len(witness), nodes=stats.nodes)
        return EXIT_OK
    out.line(f"result=no value={args.k} nodes={stats.nodes}")
    out.summary(result="no", value=args.k, nodes=stats.nodes)
    return EXIT_NO


def cmd_reduce(args, out):
    text = _read_text(args.instance)
    stem = args.out or str(Path(args.instance).with_suffix(""))
    if args.kind == "coloring":
        inst = parse_dp_instance(text)
        while xi(inst) > 0:
            inst = preprocess_degree_one(inst)
        gad = coloring_gadget(inst)
        meta = {"k": gad.k, "d": gad.rep.d}
    else:
        inst = parse_misp_instance(text)
        gad = misp_to_idsp_gadget(inst)
        meta = {"k": gad.k, "q": gad.q, "m": gad.m, "target": gad.target}
    rep_path = stem + ".rep"
    meta_path = stem + ".meta.json"
    Path(rep_path).write_text(write_rep(gad.graph, gad.rep))
    Path(meta_path).write_text(json.dumps(meta, sort_keys=True) + "\n")
    out.text(f"wrote {rep_path}")
    out.text(f"wrote {meta_path}")
    out.summary(kind=args.kind, n=gad.graph.n, **meta)
    return EXIT_OK


def cmd_selftest(args, out):
    only = None
    if args.only:
        try:
            only = sorted({int(tok) for tok in args.only.split(",")})
        except ValueError:
            raise SystemExit2("--only expects a comma-separated criterion list")
    results = selftest.run_all(seed=args.seed, only=only)
    for res in results:
        out.line(res.summary())
        for message in res.failures[:10]:
            out.line(f"  failure: {message}")
        for message in res.skips[:10]:
            out.line(f"  skipped: {message}")
    passed = all(res.passed for res in results)
    out.summary(
        passed=passed,
        criteria=len(results),
        failures=sum(len(res.failures) for res in results),
        seed=args.seed,
    )
    return EXIT_OK if passed else EXIT_NO


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="simint",
        description="simultaneous interval representations of graphs",
    )
    parser.add_argument(
        "--format",
        choices=("text", "machine"),
        default="text",
        help="machine restricts stdout to summary and witness lines",
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for randomized checks"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", help="build a representation for a graph")
    p.add_argument(
        "--method",
        required=True,
        choices=("edges", "ecc", "bipartite", "3partite", "cycle", "pathdecomp"),
    )
    p.add_argument("--cover", help="clique cover file, one clique per line")
    p.add_argument(
        "--decomposition", help="path decomposition file, one bag per line"
    )
    p.add_argument("--out", help="write the representation here")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="check a representation document")
    p.add_argument("--graph", help="verify against this graph instead")
    p.add_argument("rep")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("si", help="label count of a graph")
    p.add_argument("--exact", action="store_true", help="compute the minimum")
    p.add_argument("--d", type=int, help="decide a specific budget instead")
    p.add_argument("--out", help="write the witness representation here")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_si)

    p = sub.add_parser("param", help="exact graph parameters")
    p.add_argument("name", choices=("ecc", "pw", "lmim", "palpha"))
    p.add_argument("graph")
    p.set_defaults(fn=cmd_param)

    p = sub.add_parser("witness", help="certificates extracted from a representation")
    p.add_argument("kind", choices=("thin", "lmim", "pathdecomp"))
    p.add_argument("rep")
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("cliques", help="enumerate maximal cliques")
    p.add_argument("rep")
    p.set_defaults(fn=cmd_cliques)

    p = sub.add_parser("solve", help="bounded-search independent/dominating set")
    p.add_argument("problem", choices=("is", "ds"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("rep")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("reduce", help="hardness construction generators")
    p.add_argument("kind", choices=("coloring", "idsp"))
    p.add_argument("instance")
    p.add_argument("--out", help="output path stem (default: instance stem)")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.set_defaults(fn=cmd_selftest)
    return parser


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = _Output(args.format == "machine")
    try:
        return args.fn(args, out)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap-exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphError, RepError, ConstructionError, GadgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
