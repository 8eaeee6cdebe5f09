"""Deterministic generators for the jellyfish and ladder graph families.

Ladders ``L_k`` have two rails of k+1 internal vertices between leaf pairs
(a, c) and (b, d) plus a rung between every opposite pair; the rung count
k+1 is forced by the requirement that interior rail vertices have degree
three. Jellyfish ``J_k`` hang k leaves off a tentacle path that closes
through a six-vertex body: a complete graph on four vertices with two
vertex-disjoint edges subdivided, the subdivision points carrying the two
attachment edges. ``augmented_ladder`` attaches the minimum number of extra
leaves (k - 3) to ``L_k`` together with a root edge and reticulation set
that orient it as a tree-child network, and verifies that certificate on
construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constrained_orient import constraints_from_reticulations, orient
from .phylo_graph import (
    DirectedNetwork,
    InvalidParameter,
    InvariantViolation,
    UndirectedNetwork,
    attach_leaf,
    validate_undirected,
)
from .tc_conditions import is_tree_child


@dataclass(frozen=True)
class AugmentationCertificate:
    """Root edge, reticulation set, and leaf placements that witness
    tree-child orientability of an augmented ladder. All by vertex name."""

    root_edge: tuple[str, str]
    reticulations: tuple[str, ...]
    added_leaves: tuple[tuple[str, tuple[str, str]], ...]


def ladder(k: int) -> UndirectedNetwork:
    """Ladder graph with 2k+6 vertices, 3k+5 edges, and circuit rank k."""
    if k < 1:
        raise InvalidParameter(f"ladder parameter must be positive, got {k}")
    top = [f"t_{i}" for i in range(1, k + 2)]
    bot = [f"b_{i}" for i in range(1, k + 2)]
    edges: list[tuple[str, str]] = [("a", top[0]), ("b", bot[0])]
    edges += list(zip(top, top[1:]))
    edges += list(zip(bot, bot[1:]))
    edges += [(top[-1], "c"), (bot[-1], "d")]
    edges += list(zip(top, bot))
    return validate_undirected(edges, ["a", "b", "c", "d"])


def jellyfish(k: int) -> UndirectedNetwork:
    """Jellyfish graph with 2k+6 vertices, 2k+9 edges, and circuit rank 4."""
    if k < 1:
        raise InvalidParameter(f"jellyfish parameter must be positive, got {k}")
    leaves = [f"x_{i}" for i in range(1, k + 1)]
    tentacle = [f"xp_{i}" for i in range(1, k + 1)]
    edges: list[tuple[str, str]] = list(zip(leaves, tentacle))
    edges += list(zip(tentacle, tentacle[1:]))
    # body: K4 on u_1..u_4 with edges (u_1,u_2) and (u_3,u_4) subdivided by
    # the attachment points u_5 and u_6
    edges += [
        ("u_1", "u_5"),
        ("u_5", "u_2"),
        ("u_3", "u_6"),
        ("u_6", "u_4"),
        ("u_1", "u_3"),
        ("u_1", "u_4"),
        ("u_2", "u_3"),
        ("u_2", "u_4"),
    ]
    edges += [("u_5", tentacle[0]), ("u_6", tentacle[-1])]
    return validate_undirected(edges, leaves, allow_single_leaf=True)


def _augmentation_plan(k: int) -> tuple[tuple[str, str], list[tuple[str, tuple[str, str]]], list[str]]:
    """Root edge, leaf placements, and reticulation names for k >= 6."""
    placements: list[tuple[str, tuple[str, str]]] = [("x_1", ("b_1", "b_2"))]
    for j in range(1, (k - 4) // 2 + 1):
        placements.append((f"x_{2 * j}", (f"t_{2 * j + 1}", f"t_{2 * j + 2}")))
    for j in range(1, (k - 5) // 2 + 1):
        placements.append((f"x_{2 * j + 1}", (f"b_{2 * j + 2}", f"b_{2 * j + 3}")))
    if k % 2 == 1:
        placements.append((f"x_{k - 3}", (f"b_{k}", f"b_{k + 1}")))
        trio = [f"t_{k - 2}", f"b_{k}", f"b_{k + 1}"]
    else:
        placements.append((f"x_{k - 3}", (f"t_{k}", f"t_{k + 1}")))
        trio = [f"b_{k - 2}", f"t_{k}", f"t_{k + 1}"]
    placements.sort(key=lambda item: int(item[0].split("_")[1]))
    reticulations = [f"p_x_{i}" for i in range(2, k - 3)] + ["b_1", "b_2"] + trio
    return (f"t_{k - 2}", f"b_{k - 2}"), placements, reticulations


def _verify_certificate(
    net: UndirectedNetwork, cert: AugmentationCertificate
) -> DirectedNetwork:
    root_edge = net.edge_by_names(*cert.root_edge)
    retic_ids = [net.vertex_id(name) for name in cert.reticulations]
    constraints = constraints_from_reticulations(net, root_edge, retic_ids)
    dnet = orient(net, constraints)
    if not isinstance(dnet, DirectedNetwork) or not is_tree_child(dnet):
        raise InvariantViolation("augmented ladder certificate failed verification")
    return dnet


def augmented_ladder(k: int) -> tuple[UndirectedNetwork, AugmentationCertificate]:
    """Ladder with k-3 extra leaves plus a verified tree-child certificate.

    For k >= 6 the placement and reticulation pattern is closed form; for
    k of 4 or 5, where the pattern's index ranges degenerate, the minimum
    augmentation is found by exact search instead.
    """
    if k < 4:
        raise InvalidParameter(f"augmented ladder requires k >= 4, got {k}")
    from . import tc_solver  # local import; tc_solver must not depend on families

    base = ladder(k)
    if k < 6:
        added, placements = tc_solver.minimum_leaf_augmentation(base, k - 3)
        if added != k - 3:
            raise InvariantViolation(f"expected {k - 3} added leaves, search found {added}")
        hosts = tuple(base.edge_by_names(u, v) for _, (u, v) in placements)
        net, placements = tc_solver._attach_chain(base, hosts)
        report = tc_solver.tree_child_orient(net)
        if report.outcome != "orientable":
            raise InvariantViolation("searched augmentation is not orientable")
        cert = AugmentationCertificate(
            root_edge=report.root_edge,
            reticulations=report.reticulations,
            added_leaves=tuple(placements),
        )
        _verify_certificate(net, cert)
        return net, cert

    root_edge_names, placements, reticulations = _augmentation_plan(k)
    net = base
    for label, (u_name, v_name) in placements:
        net = attach_leaf(net, net.edge_by_names(u_name, v_name), label)
    cert = AugmentationCertificate(
        root_edge=root_edge_names,
        reticulations=tuple(reticulations),
        added_leaves=tuple(placements),
    )
    _verify_certificate(net, cert)
    return net, cert
