"""Core data model for undirected and directed phylogenetic networks.

An undirected network is a connected simple graph whose degree-one vertices
are exactly the labeled leaves; internal vertices have degree three (binary)
or at least three (non-binary). A directed network is a rooted DAG with root
degrees (0, 2), leaf degrees (1, 0), and, in the binary case, internal
degrees (1, 2) or (2, 1).

Vertices are addressed by dense integer ids. Ids are assigned by natural
order of the vertex names so that a network serialized and re-parsed keeps
identical ids; in directed networks the root is always the last id, matching
how root insertion appends the new root vertex.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

Edge = tuple[int, int]


class ValidationError(ValueError):
    """A raw graph violates the phylogenetic network invariants."""


class Disconnected(ValidationError):
    pass


class HasLoop(ValidationError):
    pass


class HasParallelEdge(ValidationError):
    pass


class DegreeViolation(ValidationError):
    def __init__(self, vertex: str, degree: int, message: str | None = None):
        self.vertex = vertex
        self.degree = degree
        super().__init__(message or f"vertex {vertex!r} has invalid degree {degree}")


class UnlabeledDegreeOneVertex(ValidationError):
    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(f"degree-one vertex {vertex!r} is not a labeled leaf")


class TooFewLeaves(ValidationError):
    pass


class EdgeNotFound(ValidationError):
    pass


class DuplicateLabel(ValidationError):
    pass


class InvalidParameter(ValueError):
    pass


class InvariantViolation(RuntimeError):
    """An internal structural identity failed; indicates a bug."""


_DIGITS = re.compile(r"(\d+)")


def _name_key(name: str) -> tuple:
    """Natural sort key: digit runs compare numerically, tiebreak on the raw string."""
    parts = tuple(
        (1, int(tok)) if tok.isdigit() else (0, tok)
        for tok in _DIGITS.split(name)
        if tok
    )
    return (parts, name)


def edge_key(u: int, v: int) -> Edge:
    """Canonical unordered edge key (min, max)."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class UndirectedNetwork:
    """Validated undirected phylogenetic network.

    ``names`` maps ids to vertex names; leaf labels coincide with leaf names.
    ``edges`` is sorted canonically. Instances are immutable; editing
    operations return new values.
    """

    names: tuple[str, ...]
    edges: tuple[Edge, ...]
    leaves: tuple[int, ...]
    binary: bool

    @property
    def n_vertices(self) -> int:
        return len(self.names)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_leaves(self) -> int:
        return len(self.leaves)

    @property
    def leaf_labels(self) -> dict[int, str]:
        return {v: self.names[v] for v in self.leaves}

    @cached_property
    def leaf_set(self) -> frozenset[int]:
        return frozenset(self.leaves)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _name_to_id(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def vertex_id(self, name: str) -> int:
        try:
            return self._name_to_id[name]
        except KeyError:
            raise KeyError(f"no vertex named {name!r}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set

    def edge_by_names(self, u_name: str, v_name: str) -> Edge:
        e = edge_key(self.vertex_id(u_name), self.vertex_id(v_name))
        if e not in self.edge_set:
            raise EdgeNotFound(f"no edge between {u_name!r} and {v_name!r}")
        return e

    def edge_names(self, e: Edge) -> tuple[str, str]:
        return (self.names[e[0]], self.names[e[1]])


@dataclass(frozen=True)
class RootedGraph:
    """Transient result of subdividing a root edge with a new root vertex.

    Not a valid ``UndirectedNetwork`` (the root has degree two); it exists
    only as the substrate that orientations are computed on. The root keeps
    the last id so the ids of the base network are unchanged.
    """

    names: tuple[str, ...]
    edges: tuple[Edge, ...]
    root: int
    leaves: tuple[int, ...]
    original_edge: Edge

    @property
    def n_vertices(self) -> int:
        return len(self.names)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class DirectedNetwork:
    """Validated rooted directed phylogenetic network."""

    names: tuple[str, ...]
    arcs: tuple[Edge, ...]
    root: int
    leaves: tuple[int, ...]
    binary: bool

    @property
    def n_vertices(self) -> int:
        return len(self.names)

    @property
    def n_arcs(self) -> int:
        return len(self.arcs)

    @property
    def n_leaves(self) -> int:
        return len(self.leaves)

    @property
    def leaf_labels(self) -> dict[int, str]:
        return {v: self.names[v] for v in self.leaves}

    @cached_property
    def leaf_set(self) -> frozenset[int]:
        return frozenset(self.leaves)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(c)) for c in out)

    @cached_property
    def parents(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.arcs:
            inn[v].append(u)
        return tuple(tuple(sorted(p)) for p in inn)

    @cached_property
    def _name_to_id(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def vertex_id(self, name: str) -> int:
        try:
            return self._name_to_id[name]
        except KeyError:
            raise KeyError(f"no vertex named {name!r}") from None

    def in_degree(self, v: int) -> int:
        return len(self.parents[v])

    def out_degree(self, v: int) -> int:
        return len(self.children[v])

    @cached_property
    def reticulations(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n_vertices) if self.in_degree(v) >= 2)

    @cached_property
    def tree_vertices(self) -> tuple[int, ...]:
        return tuple(
            v
            for v in range(self.n_vertices)
            if v != self.root and v not in self.leaf_set and self.in_degree(v) == 1
        )

    @cached_property
    def underlying_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(edge_key(u, v) for u, v in self.arcs))


@dataclass(frozen=True)
class NetworkStats:
    """Vertex/arc counts of a binary directed network.

    The counts are linked by three identities: the tree-vertex count is
    ``n_leaves + n_reticulations - 2``, the vertex count is twice that plus
    three, and the arc count is ``3*n_reticulations + 2*n_leaves - 2``.
    """

    n_leaves: int
    n_reticulations: int
    n_tree_vertices: int
    n_vertices: int
    n_arcs: int


def _canonical_ids(names: Iterable[str], last: str | None = None) -> dict[str, int]:
    ordered = sorted(set(names) - ({last} if last is not None else set()), key=_name_key)
    if last is not None:
        ordered.append(last)
    return {name: i for i, name in enumerate(ordered)}


def validate_undirected(
    edges: Iterable[tuple[str, str]],
    leaves: Iterable[str],
    vertices: Iterable[str] | None = None,
    *,
    allow_single_leaf: bool = False,
) -> UndirectedNetwork:
    """Validate a raw graph and return a canonicalized undirected network.

    ``edges`` and ``leaves`` name vertices by strings. ``vertices`` may add
    isolated vertices, which always fail validation; normally it is omitted
    and the vertex set is inferred. ``allow_single_leaf`` relaxes the usual
    two-leaf minimum for graph families that are defined with one leaf.
    """
    raw_edges = [(str(u), str(v)) for u, v in edges]
    leaf_names = [str(x) for x in leaves]
    if len(set(leaf_names)) != len(leaf_names):
        raise DuplicateLabel("leaf labels must be distinct")

    all_names = set(leaf_names)
    for u, v in raw_edges:
        all_names.add(u)
        all_names.add(v)
    if vertices is not None:
        all_names.update(str(v) for v in vertices)
    if not all_names:
        raise TooFewLeaves("empty graph")

    ids = _canonical_ids(all_names)
    names = tuple(sorted(ids, key=ids.get))

    seen: set[Edge] = set()
    for u, v in raw_edges:
        if u == v:
            raise HasLoop(f"loop at vertex {u!r}")
        e = edge_key(ids[u], ids[v])
        if e in seen:
            raise HasParallelEdge(f"parallel edge between {u!r} and {v!r}")
        seen.add(e)
    edge_tuple = tuple(sorted(seen))

    deg = [0] * len(names)
    for u, v in edge_tuple:
        deg[u] += 1
        deg[v] += 1

    leaf_ids = sorted(ids[x] for x in leaf_names)
    leaf_id_set = set(leaf_ids)
    for v, d in enumerate(deg):
        if v in leaf_id_set:
            if d != 1:
                raise DegreeViolation(names[v], d, f"leaf {names[v]!r} has degree {d}, expected 1")
        elif d == 1:
            raise UnlabeledDegreeOneVertex(names[v])
        elif d < 3:
            raise DegreeViolation(names[v], d)

    minimum = 1 if allow_single_leaf else 2
    if len(leaf_ids) < minimum:
        raise TooFewLeaves(f"{len(leaf_ids)} leaves, need at least {minimum}")

    # connectivity via BFS from vertex 0
    adj: list[list[int]] = [[] for _ in names]
    for u, v in edge_tuple:
        adj[u].append(v)
        adj[v].append(u)
    seen_v = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen_v:
                seen_v.add(w)
                queue.append(w)
    if len(seen_v) != len(names):
        raise Disconnected(f"{len(names) - len(seen_v)} vertices unreachable")

    binary = all(deg[v] == 3 for v in range(len(names)) if v not in leaf_id_set)
    return UndirectedNetwork(names=names, edges=edge_tuple, leaves=tuple(leaf_ids), binary=binary)


def check_directed_value(net: DirectedNetwork) -> None:
    """Check all directed-network invariants of an already-built value.

    Raises ``ValidationError`` on the first violation. Used both by the
    raw-input validator and as a safety net on internally built orientations.
    """
    n = net.n_vertices
    seen: set[Edge] = set()
    for u, v in net.arcs:
        if u == v:
            raise HasLoop(f"loop at vertex {net.names[u]!r}")
        if (u, v) in seen:
            raise HasParallelEdge(f"repeated arc {net.names[u]!r} -> {net.names[v]!r}")
        seen.add((u, v))

    if net.in_degree(net.root) != 0 or net.out_degree(net.root) != 2:
        raise DegreeViolation(
            net.names[net.root],
            net.in_degree(net.root) + net.out_degree(net.root),
            "root must have in-degree 0 and out-degree 2",
        )
    leaf_like = {v for v in range(n) if net.in_degree(v) == 1 and net.out_degree(v) == 0}
    if leaf_like != net.leaf_set:
        extra = leaf_like - net.leaf_set
        missing = net.leaf_set - leaf_like
        if extra:
            raise UnlabeledDegreeOneVertex(net.names[min(extra)])
        v = min(missing)
        raise DegreeViolation(net.names[v], net.in_degree(v) + net.out_degree(v),
                              f"labeled leaf {net.names[v]!r} is not an (in,out)=(1,0) vertex")
    for v in range(n):
        if v == net.root or v in net.leaf_set:
            continue
        din, dout = net.in_degree(v), net.out_degree(v)
        if net.binary:
            if (din, dout) not in ((1, 2), (2, 1)):
                raise DegreeViolation(net.names[v], din + dout,
                                      f"internal vertex {net.names[v]!r} has (in,out)=({din},{dout})")
        else:
            if din < 1 or din + dout < 3:
                raise DegreeViolation(net.names[v], din + dout,
                                      f"internal vertex {net.names[v]!r} has (in,out)=({din},{dout})")

    # acyclicity (Kahn) and reachability from the root
    indeg = [net.in_degree(v) for v in range(n)]
    queue = deque(v for v in range(n) if indeg[v] == 0)
    visited = 0
    while queue:
        u = queue.popleft()
        visited += 1
        for w in net.children[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if visited != n:
        raise ValidationError("directed network contains a cycle")

    reach = {net.root}
    queue = deque([net.root])
    while queue:
        u = queue.popleft()
        for w in net.children[u]:
            if w not in reach:
                reach.add(w)
                queue.append(w)
    if len(reach) != n:
        raise Disconnected("some vertex is unreachable from the root")


def validate_directed(
    arcs: Iterable[tuple[str, str]],
    leaves: Iterable[str],
    root: str | None = None,
) -> DirectedNetwork:
    """Validate raw directed input and return a canonicalized network.

    The root may be named explicitly; otherwise the unique in-degree-zero
    vertex is used. The root receives the last id.
    """
    raw_arcs = [(str(u), str(v)) for u, v in arcs]
    leaf_names = [str(x) for x in leaves]
    if len(set(leaf_names)) != len(leaf_names):
        raise DuplicateLabel("leaf labels must be distinct")
    all_names = set(leaf_names)
    for u, v in raw_arcs:
        all_names.add(u)
        all_names.add(v)
    if not all_names:
        raise TooFewLeaves("empty graph")

    if root is None:
        heads = {v for _, v in raw_arcs}
        sources = sorted(all_names - heads, key=_name_key)
        if len(sources) != 1:
            raise ValidationError(f"expected a unique root, found {len(sources)} source vertices")
        root = sources[0]
    elif root not in all_names:
        raise ValidationError(f"declared root {root!r} does not occur in the graph")

    ids = _canonical_ids(all_names, last=root)
    names = tuple(sorted(ids, key=ids.get))
    arc_tuple = tuple(sorted((ids[u], ids[v]) for u, v in raw_arcs))
    if len(set(arc_tuple)) != len(arc_tuple):
        raise HasParallelEdge("repeated arc")
    leaf_ids = tuple(sorted(ids[x] for x in leaf_names))

    in_cnt = [0] * len(names)
    out_cnt = [0] * len(names)
    for u, v in arc_tuple:
        out_cnt[u] += 1
        in_cnt[v] += 1
    leaf_id_set = set(leaf_ids)
    binary = all(
        (in_cnt[v], out_cnt[v]) in ((1, 2), (2, 1))
        for v in range(len(names))
        if v != ids[root] and v not in leaf_id_set
    )
    net = DirectedNetwork(names=names, arcs=arc_tuple, root=ids[root], leaves=leaf_ids, binary=binary)
    check_directed_value(net)
    return net


def leaf_distances(net: UndirectedNetwork) -> dict[int, dict[int, int]]:
    """All-pairs shortest-path edge counts between leaves, via BFS per leaf."""
    result: dict[int, dict[int, int]] = {}
    for src in net.leaves:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in net.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        result[src] = {leaf: dist[leaf] for leaf in net.leaves}
    return result


def _fresh_name(base: str, taken: set[str]) -> str:
    if base not in taken:
        return base
    i = 2
    while f"{base}_{i}" in taken:
        i += 1
    return f"{base}_{i}"


def insert_root(net: UndirectedNetwork, e: Edge) -> RootedGraph:
    """Subdivide edge ``e`` with a new root vertex, appended as the last id."""
    if e not in net.edge_set:
        raise EdgeNotFound(f"edge {e} not in network")
    u, v = e
    rho = net.n_vertices
    rho_name = _fresh_name("rho", set(net.names))
    edges = [x for x in net.edges if x != e]
    edges.extend([(u, rho), (v, rho)])
    return RootedGraph(
        names=net.names + (rho_name,),
        edges=tuple(sorted(edges)),
        root=rho,
        leaves=net.leaves,
        original_edge=e,
    )


def contract_root(rooted: RootedGraph) -> UndirectedNetwork:
    """Undo ``insert_root``: remove the root and restore the subdivided edge."""
    rho = rooted.root
    names = rooted.names[:rho]
    edges = [(u, v) for u, v in rooted.edges if rho not in (u, v)]
    edges.append(rooted.original_edge)
    leaf_names = [names[v] for v in rooted.leaves]
    return validate_undirected(
        [(names[u], names[v]) for u, v in edges], leaf_names, allow_single_leaf=True
    )


def attach_leaf(net: UndirectedNetwork, e: Edge, label: str) -> UndirectedNetwork:
    """Subdivide ``e`` and hang a new labeled leaf off the subdivision vertex."""
    if e not in net.edge_set:
        raise EdgeNotFound(f"edge {e} not in network")
    if label in net.names:
        raise DuplicateLabel(f"label {label!r} already in use")
    taken = set(net.names) | {label}
    mid = _fresh_name(f"p_{label}", taken)
    u_name, v_name = net.edge_names(e)
    edges = [net.edge_names(x) for x in net.edges if x != e]
    edges.extend([(u_name, mid), (mid, v_name), (mid, label)])
    leaf_names = [net.names[x] for x in net.leaves] + [label]
    return validate_undirected(edges, leaf_names, allow_single_leaf=True)


def circuit_rank(net: UndirectedNetwork) -> int:
    """Edges minus vertices plus one; the reticulation count of any orientation."""
    return net.n_edges - net.n_vertices + 1


def network_stats(dnet: DirectedNetwork) -> NetworkStats:
    """Counts of a binary directed network, with the three identities enforced."""
    x = dnet.n_leaves
    r = len(dnet.reticulations)
    t = len(dnet.tree_vertices)
    stats = NetworkStats(
        n_leaves=x,
        n_reticulations=r,
        n_tree_vertices=t,
        n_vertices=dnet.n_vertices,
        n_arcs=dnet.n_arcs,
    )
    if t != x + r - 2 or stats.n_vertices != 2 * t + 3 or stats.n_arcs != 3 * r + 2 * x - 2:
        raise InvariantViolation(f"count identities violated: {stats}")
    return stats
