"""Necessary conditions for tree-child orientability and related predicates.

A directed network is tree-child when every non-leaf vertex has at least one
child of in-degree one (a tree vertex or a leaf). For an undirected binary
network two cheap necessary conditions for tree-child orientability are
checked here: the edge count may not exceed ``5*|X| - 6``, and some pair of
leaves must lie at distance 2 or 3 (otherwise no orientation can contain a
cherry or reticulated cherry). Passing both says nothing either way; failing
either rules orientability out.
"""

from __future__ import annotations

from dataclasses import dataclass

from .phylo_graph import (
    DirectedNetwork,
    UndirectedNetwork,
    circuit_rank,
    leaf_distances,
)


@dataclass(frozen=True)
class ConditionReport:
    """Aggregated outcome of the necessary-condition checks."""

    edge_bound_ok: bool
    leaf_distance_ok: bool
    reticulation_count: int
    n_edges: int
    n_leaves: int
    details: tuple[str, ...]

    @property
    def all_passed(self) -> bool:
        return self.edge_bound_ok and self.leaf_distance_ok


def is_tree_child(dnet: DirectedNetwork) -> bool:
    """True iff every non-leaf vertex has a child that is a tree vertex or leaf."""
    for v in range(dnet.n_vertices):
        if v in dnet.leaf_set:
            continue
        if not any(dnet.in_degree(w) == 1 for w in dnet.children[v]):
            return False
    return True


def check_edge_bound(net: UndirectedNetwork) -> bool:
    """Edge-count bound; False implies the network is not tree-child orientable."""
    return net.n_edges <= 5 * net.n_leaves - 6


def check_leaf_distance(net: UndirectedNetwork) -> bool:
    """True iff some leaf pair is at distance 2 or 3.

    A single-leaf network has no pair and yields False; family-level tests
    treat that case separately.
    """
    dist = leaf_distances(net)
    leaves = net.leaves
    for i, x in enumerate(leaves):
        for y in leaves[i + 1 :]:
            if dist[x][y] in (2, 3):
                return True
    return False


def find_cherries(dnet: DirectedNetwork) -> list[tuple[int, int]]:
    """All leaf pairs sharing a parent, as sorted id pairs in sorted order."""
    by_parent: dict[int, list[int]] = {}
    for x in dnet.leaves:
        (parent,) = dnet.parents[x]
        by_parent.setdefault(parent, []).append(x)
    pairs = []
    for group in by_parent.values():
        group.sort()
        for i, x in enumerate(group):
            for y in group[i + 1 :]:
                pairs.append((x, y))
    return sorted(pairs)


def find_reticulated_cherries(dnet: DirectedNetwork) -> list[tuple[int, int]]:
    """Leaf pairs joined by an underlying length-3 path through exactly one reticulation.

    Works on the underlying graph: the two internal path vertices are the
    leaves' parents, which must be adjacent, one of them a reticulation.
    """
    underlying = set(dnet.underlying_edges)
    retics = set(dnet.reticulations)
    parent_of = {x: dnet.parents[x][0] for x in dnet.leaves}
    pairs = set()
    leaves = sorted(dnet.leaves)
    for i, x in enumerate(leaves):
        for y in leaves[i + 1 :]:
            p, q = parent_of[x], parent_of[y]
            if p == q:
                continue
            edge = (p, q) if p < q else (q, p)
            if edge in underlying and ((p in retics) + (q in retics)) == 1:
                pairs.add((x, y))
    return sorted(pairs)


def condition_report(net: UndirectedNetwork) -> ConditionReport:
    """Run all necessary-condition checks; any failure rules out orientability."""
    bound = 5 * net.n_leaves - 6
    edge_bound_ok = check_edge_bound(net)
    leaf_distance_ok = check_leaf_distance(net)
    rank = circuit_rank(net)
    details = [
        f"edge bound: {net.n_edges} edges vs limit {bound}: "
        + ("ok" if edge_bound_ok else "violated"),
        "leaf distance 2 or 3: " + ("present" if leaf_distance_ok else "absent"),
        f"reticulations required by any orientation: {rank}",
    ]
    return ConditionReport(
        edge_bound_ok=edge_bound_ok,
        leaf_distance_ok=leaf_distance_ok,
        reticulation_count=rank,
        n_edges=net.n_edges,
        n_leaves=net.n_leaves,
        details=tuple(details),
    )
