"""Independent oracles and generators used across the test suite.

Everything here is deliberately naive: distances by Floyd-Warshall,
orientation counts by literal enumeration of every arc assignment, random
binary networks grown by sequential leaf attachment plus edge-pair joins.
These provide ground truth for the package's cleverer implementations.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

from tcorient.phylo_graph import UndirectedNetwork, edge_key, validate_undirected


def floyd_warshall(n: int, edges) -> list[list[float]]:
    big = float("inf")
    dist = [[0 if i == j else big for j in range(n)] for i in range(n)]
    for u, v in edges:
        dist[u][v] = 1
        dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == big:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def _rooted_edges(net: UndirectedNetwork, root_edge):
    rho = net.n_vertices
    edges = [e for e in net.edges if e != root_edge]
    edges.append((root_edge[0], rho))
    edges.append((root_edge[1], rho))
    return edges, rho


def literal_orientations(net: UndirectedNetwork, root_edge):
    """Every valid binary orientation for one root edge, by checking all
    2^|E| arc assignments of the rooted graph against the definition.

    Returns a sorted list of (arcs tuple, reticulation frozenset). Only for
    very small graphs.
    """
    edges, rho = _rooted_edges(net, root_edge)
    n = rho + 1
    leaf_set = net.leaf_set
    results = []
    for mask in range(1 << len(edges)):
        arcs = []
        for ei, (u, v) in enumerate(edges):
            arcs.append((u, v) if mask >> ei & 1 else (v, u))
        in_cnt = [0] * n
        out_cnt = [0] * n
        for u, v in arcs:
            out_cnt[u] += 1
            in_cnt[v] += 1
        if (in_cnt[rho], out_cnt[rho]) != (0, 2):
            continue
        ok = True
        for v in range(n):
            if v == rho:
                continue
            pair = (in_cnt[v], out_cnt[v])
            if v in leaf_set:
                if pair != (1, 0):
                    ok = False
                    break
            elif pair not in ((1, 2), (2, 1)):
                ok = False
                break
        if not ok:
            continue
        # acyclic
        indeg = in_cnt.copy()
        children = [[] for _ in range(n)]
        for u, v in arcs:
            children[u].append(v)
        queue = deque(v for v in range(n) if indeg[v] == 0)
        seen = 0
        while queue:
            u = queue.popleft()
            seen += 1
            for w in children[u]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        if seen != n:
            continue
        # reachable from the root
        reach = {rho}
        queue = deque([rho])
        while queue:
            u = queue.popleft()
            for w in children[u]:
                if w not in reach:
                    reach.add(w)
                    queue.append(w)
        if len(reach) != n:
            continue
        retics = frozenset(v for v in range(n) if in_cnt[v] == 2)
        results.append((tuple(sorted(arcs)), retics))
    results.sort(key=lambda item: item[0])
    return results


def random_binary_network(seed: int, n_leaves: int, n_retics: int) -> UndirectedNetwork:
    """Deterministic random binary network with the given leaf/cycle counts.

    Grows a random binary tree by leaf attachment, then adds each cycle by
    subdividing two distinct edges and joining the subdivision points.
    """
    if n_leaves < 2 or (n_leaves == 2 and n_retics > 0):
        raise ValueError("need n_leaves >= 3 for reticulations, >= 2 for trees")
    rng = random.Random(seed)
    leaves = [f"x{i}" for i in range(1, n_leaves + 1)]
    fresh = itertools.count(1)
    if n_leaves == 2:
        return validate_undirected([("x1", "x2")], leaves)

    hub = f"v{next(fresh)}"
    edges = [("x1", hub), ("x2", hub), ("x3", hub)]
    for leaf in leaves[3:]:
        u, v = edges.pop(rng.randrange(len(edges)))
        mid = f"v{next(fresh)}"
        edges += [(u, mid), (mid, v), (mid, leaf)]
    for _ in range(n_retics):
        i, j = rng.sample(range(len(edges)), 2)
        if i > j:
            i, j = j, i
        a, b = edges[j]
        c, d = edges[i]
        del edges[j]
        del edges[i]
        p = f"v{next(fresh)}"
        q = f"v{next(fresh)}"
        edges += [(c, p), (p, d), (a, q), (q, b), (p, q)]
    return validate_undirected(edges, leaves)


# (n_leaves, n_retics) configurations with at most 16 edges
SMALL_CONFIGS = [
    (3, 0), (4, 0), (5, 0), (6, 0), (7, 0),
    (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3),
    (5, 1), (5, 2), (5, 3), (6, 1), (6, 2), (7, 1), (8, 1),
]


def random_corpus(count: int, max_edges: int = 16) -> list[UndirectedNetwork]:
    """Deterministic corpus of random binary networks cycling the configs."""
    nets = []
    seed = 0
    while len(nets) < count:
        n_leaves, n_retics = SMALL_CONFIGS[len(nets) % len(SMALL_CONFIGS)]
        net = random_binary_network(seed, n_leaves, n_retics)
        seed += 1
        if net.n_edges <= max_edges:
            nets.append(net)
    return nets


def independent_vertex_sets(net: UndirectedNetwork, size: int):
    """Brute-force independent size-subsets of non-leaf vertices."""
    candidates = [v for v in range(net.n_vertices) if v not in net.leaf_set]
    for combo in itertools.combinations(candidates, size):
        if all(edge_key(u, v) not in net.edge_set for u, v in itertools.combinations(combo, 2)):
            yield combo
