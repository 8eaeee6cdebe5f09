"""Command-line interface wiring generation, checking, orienting, and export.

Exit codes: 0 when a command decides (either answer), 1 on usage errors,
2 when a size guard trips, 3 on invalid input. Negative answers are
decisions, not errors, so batch scripts can tell NO from failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families, netio, tc_solver
from .constrained_orient import (
    Infeasible,
    InvalidConstraints,
    constraints_from_reticulations,
    orient,
)
from .phylo_graph import (
    DirectedNetwork,
    InvalidParameter,
    UndirectedNetwork,
    ValidationError,
)
from .tc_conditions import condition_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_INVALID = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); remap to our codes
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="tcorient", description=__doc__)
    parser.add_argument(
        "--seed", type=int, default=None,
        help="reserved for future randomized features; currently a no-op",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", help="emit a generated family member")
    gen.add_argument("family", choices=["jellyfish", "ladder", "augmented-ladder"])
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument(
        "--certificate", action="store_true",
        help="augmented-ladder only: emit JSON with the network and its certificate",
    )

    check = sub.add_parser("check", help="run the necessary-condition checks")
    check.add_argument("file")
    check.add_argument("--json", action="store_true")

    orient_cmd = sub.add_parser("orient", help="constrained orientation for a root edge and reticulations")
    orient_cmd.add_argument("file")
    orient_cmd.add_argument("--root", required=True, metavar="U,V")
    orient_cmd.add_argument("--reticulations", default="", metavar="CSV")
    orient_cmd.add_argument("--json", action="store_true")

    tco = sub.add_parser("tc-orient", help="decide and construct a tree-child orientation")
    tco.add_argument("file")
    tco.add_argument("--json", action="store_true")
    tco.add_argument("--jobs", type=int, default=1)
    tco.add_argument("--max-candidates", type=int, default=tc_solver.DEFAULT_MAX_CANDIDATES)
    tco.add_argument("--verbose", action="store_true")

    aug = sub.add_parser("min-augment", help="minimum leaves to make tree-child orientable")
    aug.add_argument("file")
    aug.add_argument("--max", type=int, required=True, dest="max_added")
    aug.add_argument("--max-candidates", type=int, default=tc_solver.DEFAULT_MAX_CANDIDATES)
    aug.add_argument("--json", action="store_true")

    enum = sub.add_parser("enumerate", help="list all tree-child orientations")
    enum.add_argument("file")
    enum.add_argument("--max-candidates", type=int, default=tc_solver.DEFAULT_MAX_CANDIDATES)
    enum.add_argument("--json", action="store_true")

    dot = sub.add_parser("export-dot", help="emit DOT for a network document")
    dot.add_argument("file")
    dot.add_argument("--reticulations", default=None, metavar="CSV",
                     help="highlight these vertices in undirected output")
    return parser


def _read_document(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_undirected(path: str) -> UndirectedNetwork:
    net = netio.parse_network(_read_document(path))
    if not isinstance(net, UndirectedNetwork):
        raise ValidationError("this command expects an undirected network document")
    return net


def _split_csv(value: str) -> list[str]:
    return [tok for tok in (part.strip() for part in value.split(",")) if tok]


def _cmd_generate(args) -> int:
    if args.family == "ladder":
        print(netio.serialize_network(families.ladder(args.k)), end="")
    elif args.family == "jellyfish":
        print(netio.serialize_network(families.jellyfish(args.k)), end="")
    else:
        net, cert = families.augmented_ladder(args.k)
        if args.certificate:
            payload = json.loads(netio.report_to_json(cert))
            payload["network"] = netio.serialize_network(net)
            print(json.dumps(payload, sort_keys=True, indent=2))
        else:
            print(netio.serialize_network(net), end="")
    return EXIT_OK


def _cmd_check(args) -> int:
    net = _load_undirected(args.file)
    report = condition_report(net)
    if args.json:
        print(netio.report_to_json(report), end="")
    else:
        for line in report.details:
            print(line)
        print("conditions " + ("passed" if report.all_passed else "failed"))
    return EXIT_OK


def _cmd_orient(args) -> int:
    net = _load_undirected(args.file)
    root_names = _split_csv(args.root)
    if len(root_names) != 2:
        raise UsageError("--root must name two vertices, e.g. --root t_1,b_1")
    root_edge = net.edge_by_names(root_names[0], root_names[1])
    retic_ids = [net.vertex_id(name) for name in _split_csv(args.reticulations)]
    constraints = constraints_from_reticulations(net, root_edge, retic_ids)
    result = orient(net, constraints)
    if isinstance(result, Infeasible):
        payload = {
            "outcome": "infeasible",
            "reason": result.reason,
            "cut_vertices": list(result.witness.cut_vertex_names) if result.witness else None,
            "cut_edges": [list(e) for e in result.witness.cut_edge_names] if result.witness else None,
        }
        if args.json:
            print(json.dumps(payload, sort_keys=True, indent=2))
        else:
            print(f"infeasible: {result.reason}")
            if result.witness:
                print("cut vertices: " + " ".join(result.witness.cut_vertex_names))
                print("cut edges: " + " ".join(f"{u}-{v}" for u, v in result.witness.cut_edge_names))
    else:
        if args.json:
            print(json.dumps({"outcome": "oriented", "network": netio.serialize_network(result)},
                             sort_keys=True, indent=2))
        else:
            print(netio.serialize_network(result), end="")
    return EXIT_OK


def _cmd_tc_orient(args) -> int:
    net = _load_undirected(args.file)
    progress = None
    if args.verbose:
        def progress(root_names, sets_tried):
            print(f"root {root_names[0]}-{root_names[1]}: {sets_tried} sets tried",
                  file=sys.stderr)
    report = tc_solver.tree_child_orient(
        net, max_candidates=args.max_candidates, jobs=args.jobs, progress=progress
    )
    if args.json:
        print(netio.report_to_json(report), end="")
    else:
        print(f"outcome: {report.outcome}")
        if report.network is not None:
            print(f"root edge: {report.root_edge[0]},{report.root_edge[1]}")
            print("reticulations: " + ",".join(sorted(report.reticulations)))
            print(netio.serialize_network(report.network), end="")
    return EXIT_OK


def _cmd_min_augment(args) -> int:
    net = _load_undirected(args.file)
    try:
        added, placements = tc_solver.minimum_leaf_augmentation(
            net, args.max_added, max_candidates=args.max_candidates
        )
        payload = {
            "outcome": "found",
            "added": added,
            "placements": [[label, [u, v]] for label, (u, v) in placements],
        }
    except tc_solver.AugmentationNotFound:
        payload = {"outcome": "not_found", "max_added": args.max_added}
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif payload["outcome"] == "found":
        print(f"added: {payload['added']}")
        for label, (u, v) in placements:
            print(f"leaf {label} on edge {u}-{v}")
    else:
        print(f"not found with up to {args.max_added} leaves")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    net = _load_undirected(args.file)
    orientations = tc_solver.enumerate_tree_child_orientations(
        net, max_candidates=args.max_candidates
    )
    if args.json:
        payload = {
            "count": len(orientations),
            "networks": [netio.serialize_network(d) for d in orientations],
        }
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(f"# {len(orientations)} tree-child orientations")
        for dnet in orientations:
            print()
            print(netio.serialize_network(dnet), end="")
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    net = netio.parse_network(_read_document(args.file))
    highlight = _split_csv(args.reticulations) if args.reticulations else None
    if isinstance(net, DirectedNetwork) and highlight:
        raise UsageError("--reticulations applies only to undirected documents")
    print(netio.to_dot(net, highlight_reticulations=highlight), end="")
    return EXIT_OK


_COMMANDS = {
    "generate": _cmd_generate,
    "check": _cmd_check,
    "orient": _cmd_orient,
    "tc-orient": _cmd_tc_orient,
    "min-augment": _cmd_min_augment,
    "enumerate": _cmd_enumerate,
    "export-dot": _cmd_export_dot,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except tc_solver.SizeGuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValidationError, netio.ParseError, InvalidConstraints, InvalidParameter, KeyError) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
