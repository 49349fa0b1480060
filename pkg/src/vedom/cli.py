"""Command-line surface.

Subcommands: analyze, recognize, reduce, expand, decompose, from-cnf,
enumerate.  Exit codes: 0 success, 1 a checked property was violated,
2 bad input.  All output is deterministic for fixed inputs and flags;
--json switches to a stable JSON rendering.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import (
    CnfFormatError,
    expand_backbone,
    parse_dimacs_cnf,
    sat_decide_via_graph,
    sat_to_graph,
    unit_cut_decompose,
)
from .domination import FULL_MODE_GUARD, InstanceTooLargeError, oracle_report
from .graph import Graph, GraphFormatError, bit_list, parse_edge_list, serialize_edge_list
from .harness import ORACLE_SWEEP_MAX, cross_validate, lemma_suite
from .recognizer import RecognitionResult, recognize
from .reduction import reduce_graph


def _read_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    report = oracle_report(g, guard=args.max_vertices)
    if args.json:
        _emit_json(report.to_json_dict())
        return 0
    print(f"vertices: {g.n}  edges: {len(g.edges)}")
    print(f"gamma_ve: {report.gamma_ve}")
    print(f"big_gamma_ve: {report.big_gamma_ve}")
    sizes = ", ".join(f"{k}:{v}" for k, v in sorted(report.minimal_size_multiset.items()))
    print(f"minimal set sizes: {sizes}")
    print(f"i_ve: {report.i_ve}  beta_ve: {report.beta_ve}")
    print(f"well-ve-dominated: {report.is_well_ve_dominated}")
    print(f"well-ve-covered: {report.is_well_ve_covered}")
    return 0


def _recognition_dict(result: RecognitionResult) -> dict:
    payload: dict = {
        "verdict": "yes" if result.verdict else "no",
        "case": result.case,
        "reduced_order": result.reduced_tree.n,
        "to_reduced": list(result.to_reduced),
    }
    if result.partition is not None:
        payload["labels"] = {str(v): lab for v, lab in enumerate(result.partition.label)}
        payload["units"] = [list(u) for u in result.partition.units]
        payload["backbone_edges"] = [list(e) for e in result.partition.backbone_edges]
    if result.certificate is not None:
        payload["certificate"] = bit_list(result.certificate)
    if result.refutation is not None:
        payload["refutation"] = {
            "reason": result.refutation.reason,
            "witness": list(result.refutation.witness),
        }
    return payload


def _cmd_recognize(args: argparse.Namespace) -> int:
    t = _read_graph(args.tree)
    result = recognize(t)
    if args.json:
        payload = _recognition_dict(result)
    else:
        print(f"verdict: {'yes' if result.verdict else 'no'} (case {result.case})")
        if result.partition is not None:
            labels = " ".join(
                f"{v}:{lab}" for v, lab in enumerate(result.partition.label)
            )
            print(f"labels: {labels}")
        if result.certificate is not None:
            print(f"certificate: {bit_list(result.certificate)}")
        if result.refutation is not None:
            print(
                f"refutation: {result.refutation.reason} "
                f"witness {list(result.refutation.witness)}"
            )
    if args.verify:
        oracle_says = oracle_report(t, guard=args.max_vertices).is_well_ve_dominated
        agree = oracle_says == result.verdict
        if args.json:
            payload["oracle_agrees"] = agree
            _emit_json(payload)
        else:
            print(f"oracle agrees: {agree}")
        return 0 if agree else 1
    if args.json:
        _emit_json(payload)
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    rmap = reduce_graph(g)
    representative = {
        str(v): rmap.representatives[rmap.class_of[v]] for v in range(g.n)
    }
    if args.json:
        _emit_json(
            {
                "edge_list": serialize_edge_list(rmap.reduced_graph),
                "representative_map": representative,
            }
        )
    else:
        sys.stdout.write(serialize_edge_list(rmap.reduced_graph))
        print(json.dumps(representative, sort_keys=True))
    return 0


def _cmd_expand(args: argparse.Namespace) -> int:
    r = _read_graph(args.backbone)
    t, partition = expand_backbone(r)
    if args.json:
        _emit_json(
            {
                "edge_list": serialize_edge_list(t),
                "units": [list(u) for u in partition.units],
            }
        )
    else:
        sys.stdout.write(serialize_edge_list(t))
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    t = _read_graph(args.tree)
    result = recognize(t)
    if result.case != "T2":
        print(f"error: tree does not decompose (case {result.case})", file=sys.stderr)
        return 2
    partition = result.partition
    bodies = unit_cut_decompose(result.reduced_tree, partition)
    if args.json:
        _emit_json(
            {
                "units": [list(u) for u in partition.units],
                "bodies": [serialize_edge_list(b) for b in bodies],
                "backbone_edges": [list(e) for e in partition.backbone_edges],
            }
        )
    else:
        for i, (leaf, s, w) in enumerate(partition.units):
            print(f"unit {i}: leaf={leaf} support={s} backbone={w}")
    return 0


def _cmd_from_cnf(args: argparse.Namespace) -> int:
    with open(args.dimacs, "r", encoding="utf-8") as handle:
        instance = parse_dimacs_cnf(handle.read())
    gadget = sat_to_graph(instance)
    payload: dict = {
        "vertices": gadget.graph.n,
        "edges": len(gadget.graph.edges),
        "clause_vertices": list(gadget.clause_vertices),
        "apex": gadget.apex,
    }
    if args.decide:
        payload["satisfiable"] = sat_decide_via_graph(instance)
    if args.json:
        payload["edge_list"] = serialize_edge_list(gadget.graph)
        _emit_json(payload)
    else:
        sys.stdout.write(serialize_edge_list(gadget.graph))
        if args.decide:
            print(f"satisfiable: {payload['satisfiable']}")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.max_n > ORACLE_SWEEP_MAX:
        print(
            f"error: --max-n above the oracle sweep limit {ORACLE_SWEEP_MAX}",
            file=sys.stderr,
        )
        return 2
    report = cross_validate(args.max_n, threads=args.threads)
    if args.lemmas:
        lemmas = lemma_suite(args.max_n, threads=args.threads)
        report.lemma_failures.extend(lemmas.lemma_failures)
        report.elapsed += lemmas.elapsed
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        print("order  trees  well-ve-dominated")
        for n in sorted(report.trees_checked):
            print(
                f"{n:>5}  {report.trees_checked[n]:>5}  {report.wvd_tree_census[n]:>5}"
            )
        print(f"mismatches: {len(report.recognizer_oracle_mismatches)}")
        for line in report.recognizer_oracle_mismatches:
            print(f"  {line}")
        if args.lemmas:
            print(f"lemma failures: {len(report.lemma_failures)}")
            for lemma_id, witness in report.lemma_failures:
                print(f"  {lemma_id}: {witness}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON output")
    common.add_argument(
        "--max-vertices",
        type=int,
        default=FULL_MODE_GUARD,
        help="override the oracle vertex guard",
    )
    common.add_argument(
        "--threads", type=int, default=1, help="worker processes for sweeps"
    )

    parser = argparse.ArgumentParser(
        prog="vedom",
        description="Exact analysis of vertex-edge domination in graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="exact oracle report")
    p.add_argument("graph", help="edge-list file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("recognize", parents=[common], help="well-ve-dominated tree test")
    p.add_argument("tree", help="edge-list file")
    p.add_argument("--verify", action="store_true", help="cross-check with the oracle")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("reduce", parents=[common], help="collapse identical neighborhoods")
    p.add_argument("graph", help="edge-list file")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("expand", parents=[common], help="backbone expansion")
    p.add_argument("backbone", help="edge-list file of the backbone tree")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("decompose", parents=[common], help="unit-cut decomposition")
    p.add_argument("tree", help="edge-list file")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("from-cnf", parents=[common], help="3-SAT reduction gadget")
    p.add_argument("dimacs", help="DIMACS CNF file")
    p.add_argument("--decide", action="store_true", help="decide satisfiability")
    p.set_defaults(func=_cmd_from_cnf)

    p = sub.add_parser("enumerate", parents=[common], help="tree sweep vs the oracle")
    p.add_argument("--max-n", type=int, required=True, help="largest order to sweep")
    p.add_argument("--lemmas", action="store_true", help="also run the lemma suite")
    p.set_defaults(func=_cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, CnfFormatError, InstanceTooLargeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
