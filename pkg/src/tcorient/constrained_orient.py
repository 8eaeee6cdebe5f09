"""Constrained orientation: one root edge plus a desired in-degree per vertex.

``orient`` either returns the unique orientation meeting the constraints or
an ``Infeasible`` value carrying the reason: a degree-sum mismatch, or a
degree-cut witness proving that no orientation exists. The solver is a
worklist constraint propagation over the root-subdivided graph: arcs leave
the root, a vertex whose in-degree quota is met sends every remaining edge
outward, and a vertex whose out-degree quota is met pulls every remaining
edge inward. Propagation either orients every edge or proves infeasibility.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Mapping

from .phylo_graph import (
    DirectedNetwork,
    Edge,
    RootedGraph,
    UndirectedNetwork,
    check_directed_value,
    insert_root,
)


class InvalidConstraints(ValueError):
    pass


class UnverifiedDegreeCut(RuntimeError):
    """Internal error: infeasibility detected but no verifiable witness built."""


@dataclass(frozen=True)
class OrientationConstraints:
    """A root edge and the desired in-degree of every vertex of the network."""

    root_edge: Edge
    in_degree: Mapping[int, int]


@dataclass(frozen=True)
class DegreeCutWitness:
    """A pair (V', E') certifying that no constrained orientation exists.

    ``cut_edges`` live in the root-subdivided graph, where the root carries
    the id one past the base network's vertices. Name tuples are kept for
    reporting.
    """

    cut_vertices: frozenset[int]
    cut_edges: frozenset[Edge]
    cut_vertex_names: tuple[str, ...] = field(default=(), compare=False)
    cut_edge_names: tuple[tuple[str, str], ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class Infeasible:
    """Negative answer of ``orient``: reason plus witness when applicable."""

    reason: str  # "degree_sum_mismatch" or "degree_cut"
    witness: DegreeCutWitness | None = None


def constraints_from_reticulations(
    net: UndirectedNetwork, root_edge: Edge, reticulations
) -> OrientationConstraints:
    """In-degree map with 2 on the chosen reticulations and 1 elsewhere."""
    retics = set(reticulations)
    in_degree = {v: 2 if v in retics else 1 for v in range(net.n_vertices)}
    return OrientationConstraints(root_edge=root_edge, in_degree=in_degree)


def _check_constraints(net: UndirectedNetwork, c: OrientationConstraints) -> None:
    if c.root_edge not in net.edge_set:
        raise InvalidConstraints(f"root edge {c.root_edge} is not an edge of the network")
    for v in range(net.n_vertices):
        if v not in c.in_degree:
            raise InvalidConstraints(f"no in-degree given for vertex {net.names[v]!r}")
        q = c.in_degree[v]
        if not 1 <= q <= net.degree(v):
            raise InvalidConstraints(
                f"in-degree {q} for vertex {net.names[v]!r} outside [1, {net.degree(v)}]"
            )


def check_degree_sum(net: UndirectedNetwork, c: OrientationConstraints) -> bool:
    """True iff the desired in-degrees sum to the edge count plus one."""
    _check_constraints(net, c)
    return sum(c.in_degree[v] for v in range(net.n_vertices)) == net.n_edges + 1


class _RootedIncidence:
    """Indexed edge/incidence tables of the root-subdivided graph.

    Built once per root edge and shared across many quota vectors by the
    search layers; the root always has the last vertex id.
    """

    __slots__ = ("n", "root", "edges", "inc", "deg", "original_edge")

    def __init__(self, net: UndirectedNetwork, root_edge: Edge):
        u, v = root_edge
        rho = net.n_vertices
        self.n = rho + 1
        self.root = rho
        self.original_edge = root_edge
        edges = [e for e in net.edges if e != root_edge]
        edges.append((u, rho))
        edges.append((v, rho))
        self.edges = edges
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for ei, (a, b) in enumerate(edges):
            inc[a].append((ei, b))
            inc[b].append((ei, a))
        self.inc = inc
        self.deg = [len(lst) for lst in inc]


def _propagate(inc: _RootedIncidence, quota: list[int]) -> list[int] | None:
    """Run worklist propagation; return per-edge head vertices, or None.

    ``quota[v]`` is the required in-degree (0 for the root). None means the
    constraints are infeasible, either because a vertex was forced past a
    quota or because propagation stalled; by the degree-cut characterization
    both cases admit a witness.
    """
    edges = inc.edges
    incidence = inc.inc
    n_edges = len(edges)
    heads = [-1] * n_edges
    in_cnt = [0] * inc.n
    out_cnt = [0] * inc.n
    out_quota = [inc.deg[v] - quota[v] for v in range(inc.n)]
    unassigned = list(inc.deg)
    assigned_total = 0

    # FIFO worklist of vertices whose remaining edges are all forced; besides
    # the root, vertices with no out-capacity (leaves, and any vertex whose
    # quota equals its degree) are determined from the start.
    ready = deque([inc.root])
    queued = [False] * inc.n
    queued[inc.root] = True
    for v in range(inc.n):
        if v != inc.root and out_quota[v] == 0:
            ready.append(v)
            queued[v] = True

    while ready:
        v = ready.popleft()
        queued[v] = False
        if unassigned[v] == 0:
            continue
        if in_cnt[v] == quota[v]:
            head_is_other = True  # remaining edges leave v
        elif out_cnt[v] == out_quota[v]:
            head_is_other = False  # remaining edges enter v
        else:
            continue
        for ei, other in incidence[v]:
            if heads[ei] != -1:
                continue
            head, tail = (other, v) if head_is_other else (v, other)
            heads[ei] = head
            assigned_total += 1
            in_cnt[head] += 1
            out_cnt[tail] += 1
            unassigned[head] -= 1
            unassigned[tail] -= 1
            if in_cnt[head] > quota[head] or out_cnt[tail] > out_quota[tail]:
                return None
            for w in (head, tail):
                if (
                    not queued[w]
                    and unassigned[w] > 0
                    and (in_cnt[w] == quota[w] or out_cnt[w] == out_quota[w])
                ):
                    queued[w] = True
                    ready.append(w)

    if assigned_total != n_edges:
        return None
    return heads


def _is_acyclic(n: int, arcs) -> bool:
    indeg = [0] * n
    children: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        indeg[v] += 1
        children[u].append(v)
    queue = deque(v for v in range(n) if indeg[v] == 0)
    visited = 0
    while queue:
        u = queue.popleft()
        visited += 1
        for w in children[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return visited == n


def _build_orientation(
    net: UndirectedNetwork, inc: _RootedIncidence, heads: list[int]
) -> DirectedNetwork:
    rooted = insert_root(net, inc.original_edge)
    arcs = []
    for ei, (a, b) in enumerate(inc.edges):
        head = heads[ei]
        arcs.append((b if head == a else a, head))
    arcs.sort()
    # The characterization implies acyclicity, but re-check explicitly.
    if not _is_acyclic(inc.n, arcs):
        raise UnverifiedDegreeCut("propagation produced a cyclic orientation")
    binary = net.binary and all(
        q <= 2 for q in (len(p) for p in _parents_count(inc.n, arcs))
    )
    dnet = DirectedNetwork(
        names=rooted.names,
        arcs=tuple(arcs),
        root=inc.root,
        leaves=net.leaves,
        binary=binary,
    )
    check_directed_value(dnet)
    return dnet


def _parents_count(n: int, arcs):
    parents: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        parents[v].append(u)
    return parents


def orient(
    net: UndirectedNetwork, c: OrientationConstraints
) -> DirectedNetwork | Infeasible:
    """Solve the constrained orientation problem for ``(net, c)``.

    Returns the unique satisfying orientation, or ``Infeasible`` with a
    degree-sum mismatch or a verified degree-cut witness. Runs in time
    linear in the number of edges.
    """
    _check_constraints(net, c)
    if not check_degree_sum(net, c):
        return Infeasible("degree_sum_mismatch")
    inc = _RootedIncidence(net, c.root_edge)
    quota = [c.in_degree[v] for v in range(net.n_vertices)] + [0]
    heads = _propagate(inc, quota)
    if heads is None:
        witness = find_degree_cut(net, c)
        if witness is None:
            raise UnverifiedDegreeCut(
                "propagation failed but no degree cut was found; this is a bug"
            )
        return Infeasible("degree_cut", witness)
    return _build_orientation(net, inc, heads)


def find_degree_cut(
    net: UndirectedNetwork, c: OrientationConstraints
) -> DegreeCutWitness | None:
    """Find a degree cut for ``(net, c)``, or None when none exists.

    Peels the root-subdivided graph down to the maximal vertex set K in
    which every boundary vertex keeps strictly fewer boundary edges than its
    in-degree quota; a nonempty K yields the witness (boundary vertices,
    boundary edges). The fixpoint contains every valid cut region, so the
    peel is complete: it is nonempty exactly when orientation fails with a
    correct degree sum.
    """
    _check_constraints(net, c)
    if not check_degree_sum(net, c):
        raise InvalidConstraints("degree cut is only defined when the degree sum matches")
    rooted = insert_root(net, c.root_edge)
    n = rooted.n_vertices
    rho = rooted.root
    quota = [c.in_degree[v] for v in range(net.n_vertices)] + [0]

    in_k = [True] * n
    in_k[rho] = False
    bdeg = [0] * n
    for u, v in rooted.edges:
        if u == rho:
            bdeg[v] += 1
        elif v == rho:
            bdeg[u] += 1
    queue = deque(v for v in range(n) if in_k[v] and bdeg[v] >= quota[v])
    while queue:
        v = queue.popleft()
        if not in_k[v] or bdeg[v] < quota[v]:
            continue
        in_k[v] = False
        for w in rooted.adjacency[v]:
            if in_k[w]:
                bdeg[w] += 1
                if bdeg[w] >= quota[w]:
                    queue.append(w)

    if not any(in_k):
        return None

    cut_edges = []
    cut_vertices = set()
    for u, v in rooted.edges:
        if in_k[u] != in_k[v]:
            cut_edges.append((u, v))
            cut_vertices.add(u if in_k[u] else v)
    witness = DegreeCutWitness(
        cut_vertices=frozenset(cut_vertices),
        cut_edges=frozenset(cut_edges),
        cut_vertex_names=tuple(sorted(rooted.names[v] for v in cut_vertices)),
        cut_edge_names=tuple(
            sorted((rooted.names[u], rooted.names[v]) for u, v in sorted(cut_edges))
        ),
    )
    if not verify_degree_cut(net, c, witness):
        raise UnverifiedDegreeCut("extracted cut failed verification; this is a bug")
    return witness


def verify_degree_cut(
    net: UndirectedNetwork, c: OrientationConstraints, witness: DegreeCutWitness
) -> bool:
    """Check the four degree-cut conditions directly against the definition."""
    rooted = insert_root(net, c.root_edge)
    n = rooted.n_vertices
    rho = rooted.root
    edge_set = set(rooted.edges)
    cut = set(witness.cut_edges)
    vs = set(witness.cut_vertices)
    if not cut or not vs:
        return False
    if not cut <= edge_set or not vs <= set(range(n)) or rho in vs:
        return False

    # condition 3: every cut edge touches exactly one cut vertex
    for u, v in cut:
        if (u in vs) + (v in vs) != 1:
            return False

    # condition 4: each cut vertex touches between 1 and quota-1 cut edges
    per_vertex = {v: 0 for v in vs}
    for u, v in cut:
        if u in per_vertex:
            per_vertex[u] += 1
        if v in per_vertex:
            per_vertex[v] += 1
    for v, k in per_vertex.items():
        if not 1 <= k <= c.in_degree[v] - 1:
            return False

    # conditions 1 and 2: removing the cut disconnects the graph and
    # separates the root's component from every cut vertex
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in rooted.edges:
        if (u, v) in cut:
            continue
        adj[u].append(v)
        adj[v].append(u)
    comp = [-1] * n
    label = 0
    for start in range(n):
        if comp[start] != -1:
            continue
        comp[start] = label
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if comp[w] == -1:
                    comp[w] = label
                    queue.append(w)
        label += 1
    if label < 2:
        return False
    root_comp = comp[rho]
    return all(comp[v] != root_comp for v in vs)


def verify_orientation(
    dnet: DirectedNetwork, net: UndirectedNetwork, c: OrientationConstraints
) -> bool:
    """True iff ``dnet`` is an orientation of ``net`` satisfying ``c``."""
    try:
        _check_constraints(net, c)
    except InvalidConstraints:
        return False
    rooted = insert_root(net, c.root_edge)
    if dnet.n_vertices != rooted.n_vertices or dnet.root != rooted.root:
        return False
    if dnet.names != rooted.names or dnet.leaves != rooted.leaves:
        return False
    if dnet.underlying_edges != rooted.edges:
        return False
    if dnet.in_degree(dnet.root) != 0 or dnet.out_degree(dnet.root) != 2:
        return False
    for v in range(net.n_vertices):
        if dnet.in_degree(v) != c.in_degree[v]:
            return False
    return _is_acyclic(dnet.n_vertices, dnet.arcs)
