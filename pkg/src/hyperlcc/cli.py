"""Command-line front end.

Exit status: 0 on success, 1 when a decision subcommand answers NO (or a
verification finds violations), 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from .archipelago import partition_archipelago, result_dict, witness_path
from .dot import archipelago_to_dot, bicolored_to_dot
from .generate import DEFAULT_SEED, gen_chain, gen_random
from .hypercore import Hypergraph, HypergraphError, parse_hypergraph, serialize_hypergraph, uniformize
from .oracle import BudgetExceeded, DEFAULT_BUDGET, enumerate_paths, oracle_lcc
from .pafp import (PafpBudgetExceeded, is_blue_induced_path, line_graph, pafp_exact,
                   parse_bicolored, screen_forbidden, serialize_bicolored,
                   solve_pafp_via_hypergraph)
from .pathcalc import ContractError, SearchBudgetExceeded, is_extendable, is_path_from_to, is_q_linear
from .verify import ORACLE_EDGE_LIMIT, check_partition

OK, NO, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args) -> Hypergraph:
    H = parse_hypergraph(_read(args.input))
    if getattr(args, "uniformize", False):
        H = uniformize(H)
    return H


def _load_uniform(args) -> Hypergraph:
    H = _load(args)
    if not H.is_uniform():
        raise UsageError("input is not k-uniform; pass --uniformize to pad short edges")
    return H


def _vertex(H, tok):
    if tok not in H.index:
        raise UsageError(f"unknown vertex {tok!r}")
    return H.index[tok]


def _original(H, ids):
    return [t for t in H.tokens(ids) if not t.startswith("_pad_")]


def cmd_lcc(args, out):
    H = _load_uniform(args)
    A, _ = partition_archipelago(H, _vertex(H, args.source))
    toks = _original(H, A.vertices) if args.uniformize else H.tokens(A.vertices)
    if args.format == "json":
        out.write(json.dumps(toks) + "\n")
    else:
        out.write(" ".join(toks) + "\n")
    return OK


def cmd_partition(args, out):
    H = _load_uniform(args)
    A, part = partition_archipelago(H, _vertex(H, args.source))
    if args.format == "json":
        out.write(json.dumps(result_dict(H, A, part), indent=2) + "\n")
    elif args.format == "dot":
        out.write(archipelago_to_dot(H, A))
    else:
        out.write(f"lcc: {' '.join(H.tokens(A.vertices))}\n")
        for isl in A.islands():
            parent = "-" if isl.parent is None else isl.parent
            out.write(f"island {isl.id} parent {parent} entry {{{' '.join(H.tokens(isl.entry))}}}"
                      f" vertices {{{' '.join(H.tokens(isl.vertices))}}}\n")
        for name in ("archipelago", "cut", "exterior"):
            out.write(f"{name}: {' '.join(map(str, sorted(getattr(part, name))))}\n")
    if args.verify:
        problems = check_partition(H, A, part, oracle_limit=args.oracle_limit)
        for p in problems:
            print(f"verify: {p}", file=sys.stderr)
        if problems:
            return NO
        print("verify: ok", file=sys.stderr)
    return OK


def cmd_witness(args, out):
    H = _load_uniform(args)
    x, y = _vertex(H, args.source), _vertex(H, args.target)
    A, _ = partition_archipelago(H, x)
    if not A.island_of[y]:
        out.write("NO\n")
        return NO
    P = witness_path(A, H, x, y, budget=args.budget)
    if args.format == "json":
        out.write(json.dumps({"path": P, "edges": [H.edge_tokens(e) for e in P]}) + "\n")
    else:
        for e in P:
            out.write(f"{e}: {' '.join(H.edge_tokens(e))}\n")
    return OK


def cmd_check_path(args, out):
    H = _load(args)
    for e in args.path:
        if not 0 <= e < H.m:
            raise UsageError(f"edge index {e} out of range")
    q = H.k - 2 if args.q is None else args.q
    if args.extendable:
        if not (args.source_set and args.target_set):
            raise UsageError("--extendable needs --from and --to")
        ok = is_extendable(H, args.path, [_vertex(H, t) for t in args.source_set],
                           [_vertex(H, t) for t in args.target_set])
    elif args.source_set or args.target_set:
        if not (args.source_set and args.target_set):
            raise UsageError("--from and --to go together")
        ok = is_path_from_to(H, args.path, [_vertex(H, t) for t in args.source_set],
                             [_vertex(H, t) for t in args.target_set], q)
    else:
        ok = is_q_linear(H, args.path, q)
    out.write("YES\n" if ok else "NO\n")
    return OK if ok else NO


def cmd_oracle(args, out):
    H = _load(args)
    q = H.k - 2 if args.q is None else args.q
    if not 1 <= q <= H.k - 1:
        raise UsageError(f"q must lie in [1, {H.k - 1}]")
    x = _vertex(H, args.source)
    if args.paths is not None:
        for P in enumerate_paths(H, x, q, args.paths, budget=args.budget):
            out.write(" ".join(map(str, P)) + "\n" if P else "()\n")
        return OK
    out.write(" ".join(H.tokens(oracle_lcc(H, x, q, budget=args.budget))) + "\n")
    return OK


def cmd_linegraph(args, out):
    H = _load_uniform(args)
    q = H.k - 2 if args.q is None else args.q
    if not 1 <= q <= H.k - 1:
        raise UsageError(f"q must lie in [1, {H.k - 1}]")
    G = line_graph(H, q)
    out.write(bicolored_to_dot(G) if args.format == "dot" else serialize_bicolored(G))
    return OK


def cmd_pafp(args, out):
    if args.graph is not None:
        if args.nodes is None:
            raise UsageError("--graph needs --nodes U V")
        G = parse_bicolored(_read(args.graph))
        u, v = args.nodes
        if u not in G.index or v not in G.index:
            raise UsageError("unknown node")
        if u == v:
            raise UsageError("nodes must differ")
        path = pafp_exact(G, u, v, budget=args.budget)
        if path is None:
            out.write("NO\n")
            return NO
        out.write("YES " + " ".join(G.nodes[w] for w in path) + "\n")
        return OK
    if args.input is None or args.edges is None:
        raise UsageError("pafp needs either -g/--nodes or -i/--edges")
    H = _load_uniform(args)
    e, f = args.edges
    if not (0 <= e < H.m and 0 <= f < H.m) or e == f:
        raise UsageError("--edges must be two distinct valid edge indices")
    if args.method == "exact":
        G = line_graph(H, H.k - 2)
        path = pafp_exact(G, e, f, budget=args.budget)
        if path is None:
            out.write("NO\n")
            return NO
        assert is_blue_induced_path(G, path)
        out.write("YES " + " ".join(G.nodes[w] for w in path) + "\n")
        return OK
    ok = solve_pafp_via_hypergraph(H, e, f)
    out.write("YES\n" if ok else "NO\n")
    return OK if ok else NO


def cmd_screen(args, out):
    if args.graph is not None:
        G = parse_bicolored(_read(args.graph))
    elif args.input is not None:
        H = _load_uniform(args)
        G = line_graph(H, H.k - 2)
    else:
        raise UsageError("screen needs -g GRAPH or -i HYPERGRAPH")
    found = screen_forbidden(G)
    for a, b, c in found:
        out.write(f"red-P3 {G.nodes[a]} {G.nodes[b]} {G.nodes[c]}\n")
    if found:
        return NO
    out.write("OK\n")
    return OK


def cmd_gen(args, out):
    if args.shape == "chain":
        out.write(serialize_hypergraph(gen_chain(args.length, args.k)))
        return OK
    if not args.verify:
        out.write(serialize_hypergraph(gen_random(args.n, args.m, args.k, args.seed)))
        return OK
    failures = 0
    for t in range(args.trials):
        H = gen_random(args.n, args.m, args.k, args.seed + t)
        for x in range(H.n):
            A, part = partition_archipelago(H, x)
            for p in check_partition(H, A, part, oracle_limit=args.oracle_limit):
                failures += 1
                print(f"seed {args.seed + t} source {H.vertices[x]}: {p}", file=sys.stderr)
    out.write(f"trials: {args.trials} failures: {failures}\n")
    return NO if failures else OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperlcc",
                                     description="(k-2)-linear connected components of hypergraphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def hyp(p, required=True):
        p.add_argument("-i", "--input", required=required, help="hypergraph file, '-' for stdin")
        p.add_argument("--uniformize", action="store_true", help="pad short edges to size k first")

    p = sub.add_parser("lcc", help="component of a source vertex")
    hyp(p)
    p.add_argument("--source", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_lcc)

    p = sub.add_parser("partition", help="archipelago and edge partition")
    hyp(p)
    p.add_argument("--source", required=True)
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.add_argument("--verify", action="store_true", help="run invariant checks on the result")
    p.add_argument("--oracle-limit", type=int, default=ORACLE_EDGE_LIMIT,
                   help="compare with the exhaustive oracle up to this many edges")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("witness", help="a (k-2)-linear path from source to target")
    hyp(p)
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("check-path", help="validate an edge sequence")
    hyp(p)
    p.add_argument("--path", type=int, nargs="*", default=[], help="edge indices")
    p.add_argument("--from", dest="source_set", nargs="+")
    p.add_argument("--to", dest="target_set", nargs="+")
    p.add_argument("--q", type=int)
    p.add_argument("--extendable", action="store_true")
    p.set_defaults(func=cmd_check_path)

    p = sub.add_parser("oracle", help="exhaustive q-linear reachability")
    hyp(p)
    p.add_argument("--source", required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--paths", type=int, metavar="MAXLEN", help="list paths up to MAXLEN edges instead")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("linegraph", help="bicolored line graph")
    hyp(p)
    p.add_argument("--q", type=int)
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("pafp", help="blue induced path between two nodes")
    hyp(p, required=False)
    p.add_argument("--edges", type=int, nargs=2, metavar=("E", "F"))
    p.add_argument("--method", choices=("archipelago", "exact"), default="archipelago")
    p.add_argument("-g", "--graph", help="bicolored graph file instead of a hypergraph")
    p.add_argument("--nodes", nargs=2, metavar=("U", "V"))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_pafp)

    p = sub.add_parser("screen", help="look for red induced P3s")
    hyp(p, required=False)
    p.add_argument("-g", "--graph")
    p.set_defaults(func=cmd_screen)

    p = sub.add_parser("gen", help="generate instances")
    gen = p.add_subparsers(dest="shape", required=True)
    g = gen.add_parser("random")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--k", type=int, default=3)
    g.add_argument("--seed", type=int, default=DEFAULT_SEED)
    g.add_argument("--verify", action="store_true", help="fuzz the algorithm instead of printing")
    g.add_argument("--trials", type=int, default=1)
    g.add_argument("--oracle-limit", type=int, default=ORACLE_EDGE_LIMIT)
    g = gen.add_parser("chain")
    g.add_argument("--length", type=int, required=True)
    g.add_argument("--k", type=int, default=3)
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args, out)
    except (UsageError, HypergraphError, ContractError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (BudgetExceeded, SearchBudgetExceeded, PafpBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
