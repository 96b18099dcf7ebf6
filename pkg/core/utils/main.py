#!/usr/bin/env python3
"""
Command-line front end for the signed-graph achromatic toolkit.

Every verb prints `key: value` lines on stdout; logging goes to stderr.
Exit codes: 0 yes/success, 1 no, 2 usage, 3 size guard, 4 malformed input, 130 interrupted.

    python -m core.utils.main compute --param psi2 data/figures/psi2_deletion.sg
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Iterable, List, Optional

import config
from core.cliques.cliques import add_apex, clique_counterexample
from core.exceptions import (
    EXIT_INTERRUPTED, EXIT_MALFORMED, EXIT_NO, EXIT_USAGE, EXIT_YES, SgachError,
)
from core.morphism.coloring import Coloring, read_coloring, write_coloring
from core.morphism.identify import identifiable_2ec, identifiable_signed
from core.morphism.quotient import quotient
from core.reduction.gadgets import apex_reduction, build_H, build_H_prime, witness_coloring
from core.reduction.three_partition import (
    brute_force_3partition, default_params, k_of, normalize_instance, parse_params_override,
    read_instance,
)
from core.sgraph.formats import read_graph, write_graph
from core.sgraph.graph import Graph2EC, SwitchingSet
from core.sgraph.switching import (
    SignedClass, rc_classes, switching_between, twin_pairs, uc4_antipodal, up3_between,
)
from core.solvers.achromatic import PARAMS, compute
from core.solvers.achromatic import verify_complete_2ec, verify_complete_signed

logger = logging.getLogger(__name__)

# parameters whose witness switching is stated against the class representative
CLASS_PARAMS = ('psis', 'chis', 'psi-max-class', 'psi-min-class')


def _emit(key: str, value: object) -> None:
    print(f"{key}: {value}")


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _names(g: Graph2EC, vertices: Iterable[int]) -> str:
    shown = " ".join(g.names[v] for v in vertices)
    return shown or "none"


# ----------------------------------------------------------------------
# verbs

def cmd_compute(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    result = compute(args.param, g, workers=args.threads, progress=args.progress)
    _emit("param", args.param)
    _emit("value", result.value)
    if not args.witness:
        return EXIT_YES

    witness_path = Path(args.witness)
    if args.param in CLASS_PARAMS:
        # restate the switching relative to the graph as it was read
        s = result.coloring.switching or SwitchingSet()
        coloring = result.coloring.with_switching(SignedClass.of(g).rebase(s))
        write_coloring(witness_path, coloring, g)
    elif result.graph == g:
        write_coloring(witness_path, result.coloring, g)
    else:
        graph_path = witness_path.with_suffix('.sg')
        write_graph(graph_path, result.graph, comments=[f"witness signature for {args.param}"])
        write_coloring(witness_path, result.coloring, result.graph)
        _emit("witness-graph", graph_path)
    _emit("witness-file", witness_path)
    return EXIT_YES


def cmd_equiv(args: argparse.Namespace) -> int:
    g1, g2 = read_graph(args.graph1), read_graph(args.graph2)
    s = switching_between(g1, g2)
    _emit("equivalent", _yes_no(s is not None))
    if s is None:
        return EXIT_NO
    _emit("switching", _names(g1, s.canonical(g1)))
    return EXIT_YES


def cmd_clique(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    pair = clique_counterexample(g, signed=args.mode == 'signed', workers=args.threads,
                                 progress=args.progress)
    _emit("clique", _yes_no(pair is None))
    if pair is None:
        return EXIT_YES
    _emit("identifiable-pair", _names(g, pair))
    return EXIT_NO


def cmd_identifiable(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    u, v = g.index(args.u), g.index(args.v)
    if args.mode == '2ec':
        ok = identifiable_2ec(g, u, v)
        _emit("identifiable", _yes_no(ok))
        if not ok:
            if g.has_edge(u, v):
                _emit("reason", "edge")
            else:
                _emit("reason", "up3")
                _emit("path", _names(g, up3_between(g, u, v).vertices))
        return EXIT_YES if ok else EXIT_NO

    s = identifiable_signed(g, u, v)
    _emit("identifiable", _yes_no(s is not None))
    if s is not None:
        _emit("switch", _names(g, s))
        return EXIT_YES
    if g.has_edge(u, v):
        _emit("reason", "edge")
    else:
        _emit("reason", "uc4")
        _emit("cycle", _names(g, uc4_antipodal(g, u, v).vertices))
    return EXIT_NO


def cmd_verify_coloring(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    col: Coloring = read_coloring(args.coloring, g)
    if args.mode == '2ec' and col.switching is not None:
        logger.info("applying the coloring's switch line before checking")
    image = quotient(g, col)
    _emit("colors", col.k)
    _emit("valid", _yes_no(image.ok))
    if not image.ok:
        _emit("violation", image.violation.describe(g))
        return EXIT_NO
    if not args.complete:
        return EXIT_YES
    if args.mode == 'signed':
        complete = verify_complete_signed(g, col)
    else:
        complete = verify_complete_2ec(g, col)
    _emit("complete", _yes_no(complete))
    return EXIT_YES if complete else EXIT_NO


def cmd_reduce3p(args: argparse.Namespace) -> int:
    inst = normalize_instance(read_instance(args.instance))
    if args.override_params:
        params = parse_params_override(args.override_params, args.connected)
    else:
        params = default_params(inst, args.connected)

    comments = [f"m={inst.m} B={inst.B}", params.comment()]
    h = build_H(inst, params)
    out = h
    if args.prime:
        out = Graph2EC.from_unsigned(build_H_prime(inst, params))
        comments.append("unsigned: every edge written positive")
    write_graph(args.out, out, comments=comments)
    _emit("vertices", out.n)
    _emit("edges", out.m)
    _emit("k", k_of(inst, params, primed=args.prime))
    _emit("q", params.q)
    _emit("r", params.r)
    _emit("p", params.p)
    _emit("out", args.out)

    if not args.witness:
        return EXIT_YES
    sol = brute_force_3partition(inst)
    _emit("solvable", _yes_no(sol is not None))
    if sol is None:
        return EXIT_NO
    _, coloring = witness_coloring(inst, params, sol)
    if args.prime:
        # z gets a color of its own; the coloring is complete for the signature of H plus a positive z
        coloring = Coloring(coloring.colors + (coloring.k + 1,), coloring.k + 1)
        graph_path = Path(args.witness).with_suffix('.sg')
        write_graph(graph_path, add_apex(h), comments=comments[:2] + ["witness signature: H plus positive z"])
        _emit("witness-graph", graph_path)
    write_coloring(args.witness, coloring, out)
    _emit("witness-file", args.witness)
    return EXIT_YES


def cmd_reduce_apex(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    sc = apex_reduction(g.underlying())
    write_graph(args.out, sc.representative, comments=["apex reduction: universal vertex, all edges positive"])
    _emit("vertices", sc.n)
    _emit("edges", sc.representative.m)
    _emit("out", args.out)
    return EXIT_YES


def cmd_twins(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    for u, v in twin_pairs(g):
        _emit("twins-2ec", _names(g, (u, v)))
    for u, v in twin_pairs(g, signed=True):
        _emit("twins-signed", _names(g, (u, v)))
    for members in rc_classes(g):
        _emit("rc-class", _names(g, members))
    return EXIT_YES


# ----------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='sgach',
        description='Exact achromatic parameters, cliques and reduction gadgets for signed graphs'
    )
    parser.add_argument(
        '-v', '--verbose',
        action='store_true',
        help='Log debug information to stderr'
    )
    sub = parser.add_subparsers(dest='verb', required=True)

    def add_threads(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            '--threads',
            type=int,
            default=config.WORKERS,
            help=f'Worker threads for the outer search (default: {config.WORKERS})'
        )
        p.add_argument(
            '--progress',
            action='store_true',
            help='Show a progress bar on stderr'
        )

    p = sub.add_parser('compute', help='Compute an achromatic or chromatic parameter')
    p.add_argument('--param', required=True, choices=sorted(PARAMS), help='Parameter to compute')
    p.add_argument('--witness', help='Write the witness coloring to this path')
    add_threads(p)
    p.add_argument('graph', help='Graph file')
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser('equiv', help='Decide switching equivalence of two graphs')
    p.add_argument('graph1')
    p.add_argument('graph2')
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser('clique', help='Decide whether a graph is a clique')
    p.add_argument('--mode', choices=('2ec', 'signed'), default='2ec')
    add_threads(p)
    p.add_argument('graph')
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser('identifiable', help='Decide whether two vertices can be identified')
    p.add_argument('--mode', choices=('2ec', 'signed'), default='2ec')
    p.add_argument('graph')
    p.add_argument('u', help='Vertex name')
    p.add_argument('v', help='Vertex name')
    p.set_defaults(func=cmd_identifiable)

    p = sub.add_parser('verify-coloring', help='Check a coloring file against a graph')
    p.add_argument('--mode', choices=('2ec', 'signed'), default='2ec')
    p.add_argument('--complete', action='store_true', help='Also require the coloring to be complete')
    p.add_argument('graph')
    p.add_argument('coloring')
    p.set_defaults(func=cmd_verify_coloring)

    p = sub.add_parser('reduce3p', help='Build the gadget graph of a 3-partition instance')
    p.add_argument('--connected', action='store_true', help='Build the connected variant')
    p.add_argument('--override-params', metavar='Q,R,P', help='Use these sizes instead of the defaults')
    p.add_argument('--prime', action='store_true', help='Emit the apex variant (unsigned, plus z)')
    p.add_argument('--out', required=True, help='Output graph file')
    p.add_argument('--witness', help='Solve the instance by brute force and write the witness coloring')
    p.add_argument('instance', help='3-partition instance file')
    p.set_defaults(func=cmd_reduce3p)

    p = sub.add_parser('reduce-apex', help='Add a universal vertex with all edges positive')
    p.add_argument('--out', required=True, help='Output graph file')
    p.add_argument('graph')
    p.set_defaults(func=cmd_reduce_apex)

    p = sub.add_parser('twins', help='List twin pairs and equal-neighbourhood classes')
    p.add_argument('graph')
    p.set_defaults(func=cmd_twins)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else config.LOG_LEVEL,
        format=config.LOG_FORMAT,
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except SgachError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return EXIT_INTERRUPTED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
