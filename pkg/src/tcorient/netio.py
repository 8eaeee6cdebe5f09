"""Deterministic text formats: edge-list network documents, DOT, JSON reports.

The network document format (conventionally ``.pnet``) is line oriented,
UTF-8 with LF newlines:

    phylo-net v1 undirected
    # optional comments
    leaves a b c d
    edge a t1
    edge t1 t2

Directed documents add ``root <vertex>`` and the endpoint order of each
``edge`` line is the arc direction. Serialization is canonical (leaves in id
order, edges sorted by id pairs), so serializing, parsing, and serializing
again is byte-stable.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Iterable

from .phylo_graph import (
    DirectedNetwork,
    UndirectedNetwork,
    validate_directed,
    validate_undirected,
)

if TYPE_CHECKING:  # pragma: no cover
    from .families import AugmentationCertificate
    from .tc_conditions import ConditionReport
    from .tc_solver import SolverReport

HEADER_PREFIX = "phylo-net"
VERSION = "v1"


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class UnknownVersion(ParseError):
    pass


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_network(text: str) -> UndirectedNetwork | DirectedNetwork:
    """Parse a network document; validation errors propagate from the model."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty document")

    lineno, header = lines[0]
    tokens = header.split()
    if len(tokens) != 3 or tokens[0] != HEADER_PREFIX:
        raise ParseError(lineno, f"expected '{HEADER_PREFIX} {VERSION} undirected|directed' header")
    if tokens[1] != VERSION:
        raise UnknownVersion(lineno, f"unsupported version {tokens[1]!r}")
    mode = tokens[2]
    if mode not in ("undirected", "directed"):
        raise ParseError(lineno, f"unknown mode {mode!r}")

    leaves: list[str] | None = None
    root: str | None = None
    edges: list[tuple[str, str]] = []
    for lineno, line in lines[1:]:
        tokens = line.split()
        kind = tokens[0]
        if kind == "leaves":
            if leaves is not None:
                raise ParseError(lineno, "duplicate leaves line")
            leaves = tokens[1:]
        elif kind == "root":
            if mode != "directed":
                raise ParseError(lineno, "root line is only valid in directed documents")
            if root is not None:
                raise ParseError(lineno, "duplicate root line")
            if len(tokens) != 2:
                raise ParseError(lineno, "root line takes exactly one vertex name")
            root = tokens[1]
        elif kind == "edge":
            if len(tokens) != 3:
                raise ParseError(lineno, "edge line takes exactly two vertex names")
            edges.append((tokens[1], tokens[2]))
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")

    if leaves is None:
        raise ParseError(lines[-1][0], "missing leaves line")
    if not edges:
        raise ParseError(lines[-1][0], "document has no edges")

    if mode == "undirected":
        return validate_undirected(edges, leaves, allow_single_leaf=True)
    return validate_directed(edges, leaves, root=root)


def serialize_network(net: UndirectedNetwork | DirectedNetwork) -> str:
    """Canonical document for a network; inverse of :func:`parse_network`."""
    out: list[str] = []
    if isinstance(net, DirectedNetwork):
        out.append(f"{HEADER_PREFIX} {VERSION} directed")
        out.append(f"root {net.names[net.root]}")
        out.append("leaves " + " ".join(net.names[v] for v in net.leaves))
        for u, v in net.arcs:
            out.append(f"edge {net.names[u]} {net.names[v]}")
    else:
        out.append(f"{HEADER_PREFIX} {VERSION} undirected")
        out.append("leaves " + " ".join(net.names[v] for v in net.leaves))
        for u, v in net.edges:
            out.append(f"edge {net.names[u]} {net.names[v]}")
    return "\n".join(out) + "\n"


_LEAF_ATTRS = 'shape=plaintext, label="{label}"'
_TREE_ATTRS = 'shape=point, label=""'
_RETIC_ATTRS = 'shape=circle, style=filled, fillcolor=white, label=""'
_ROOT_ATTRS = 'shape=pentagon, style=filled, fillcolor=black, label=""'


def to_dot(
    net: UndirectedNetwork | DirectedNetwork,
    highlight_reticulations: Iterable[str] | None = None,
) -> str:
    """Deterministic DOT text; reticulations are drawn as unfilled circles.

    For directed networks the reticulations and root are derived from the
    structure; for undirected networks a reticulation highlight set may be
    supplied by vertex name.
    """
    directed = isinstance(net, DirectedNetwork)
    if directed:
        retic_ids = set(net.reticulations)
        root = net.root
    else:
        names = set(net.names)
        retic_ids = set()
        for name in highlight_reticulations or ():
            if name not in names:
                raise KeyError(f"no vertex named {name!r}")
            retic_ids.add(net.vertex_id(name))
        root = None

    lines = ["digraph phylo {" if directed else "graph phylo {"]
    for v in range(net.n_vertices):
        if v == root:
            attrs = _ROOT_ATTRS
        elif v in net.leaf_set:
            attrs = _LEAF_ATTRS.format(label=net.names[v])
        elif v in retic_ids:
            attrs = _RETIC_ATTRS
        else:
            attrs = _TREE_ATTRS
        lines.append(f"  n{v} [{attrs}];")
    connector = "->" if directed else "--"
    for u, v in (net.arcs if directed else net.edges):
        lines.append(f"  n{u} {connector} n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _solver_report_dict(report: "SolverReport") -> dict:
    data = {
        "outcome": report.outcome,
        "root_edge": list(report.root_edge) if report.root_edge else None,
        "reticulations": sorted(report.reticulations) if report.reticulations is not None else None,
        "counts": {
            "roots_tried": report.roots_tried,
            "reticulation_sets_tried": report.reticulation_sets_tried,
        },
        "pruned_by": dict(sorted(report.pruned_by.items())),
        "elapsed_ms": round(report.elapsed * 1000.0, 3),
    }
    data["network"] = serialize_network(report.network) if report.network is not None else None
    return data


def _condition_report_dict(report: "ConditionReport") -> dict:
    return {
        "outcome": "conditions_passed" if report.all_passed else "conditions_failed",
        "edge_bound_ok": report.edge_bound_ok,
        "leaf_distance_ok": report.leaf_distance_ok,
        "reticulation_count": report.reticulation_count,
        "counts": {"n_edges": report.n_edges, "n_leaves": report.n_leaves},
        "details": list(report.details),
    }


def _certificate_dict(cert: "AugmentationCertificate") -> dict:
    return {
        "outcome": "certificate",
        "root_edge": list(cert.root_edge),
        "reticulations": sorted(cert.reticulations),
        "added_leaves": [[label, [u, v]] for label, (u, v) in cert.added_leaves],
    }


def report_to_json(report) -> str:
    """Stable JSON for solver reports, condition reports, and certificates.

    Everything except ``elapsed_ms`` is deterministic, so reports are
    diffable once that field is masked.
    """
    from .families import AugmentationCertificate
    from .tc_conditions import ConditionReport
    from .tc_solver import SolverReport

    if isinstance(report, SolverReport):
        data = _solver_report_dict(report)
    elif isinstance(report, ConditionReport):
        data = _condition_report_dict(report)
    elif isinstance(report, AugmentationCertificate):
        data = _certificate_dict(report)
    else:
        raise TypeError(f"cannot serialize {type(report).__name__}")
    return json.dumps(data, sort_keys=True, indent=2) + "\n"
