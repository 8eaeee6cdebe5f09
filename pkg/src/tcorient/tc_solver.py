"""Exact decision and construction of tree-child orientations.

``tree_child_orient`` scans root edges in ascending order and, per root,
candidate reticulation sets of the forced size (the circuit rank) in
lexicographic order, handing each pair to the constrained-orientation
solver and keeping the first orientation that is tree-child; that first hit
is the lexicographically least solution. Sound pruning only: the
necessary-condition report up front, reticulation sets restricted to
independent sets (two adjacent reticulations force an arc whose tail is a
reticulation with a reticulation child), never both endpoints of the root
edge, and never leaves.

``brute_force_tree_child`` is the independent oracle: per root edge it
exhaustively enumerates arc assignments of the rooted graph (with only
local degree bounds pruning impossible branches) and filters valid
tree-child networks.
"""

from __future__ import annotations

import itertools
import math
import multiprocessing
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping

from .constrained_orient import (
    OrientationConstraints,
    _build_orientation,
    _is_acyclic,
    _propagate,
    _RootedIncidence,
    constraints_from_reticulations,
    orient,
)
from .phylo_graph import (
    DirectedNetwork,
    Edge,
    InvalidParameter,
    InvariantViolation,
    UndirectedNetwork,
    attach_leaf,
    check_directed_value,
    circuit_rank,
    insert_root,
)
from .tc_conditions import condition_report, is_tree_child

DEFAULT_MAX_CANDIDATES = 10**9
BRUTE_FORCE_EDGE_LIMIT = 22


class SizeGuardExceeded(RuntimeError):
    pass


class AugmentationNotFound(RuntimeError):
    def __init__(self, max_added: int):
        self.max_added = max_added
        super().__init__(f"no tree-child orientable augmentation with up to {max_added} leaves")


@dataclass(frozen=True)
class SolverReport:
    """Outcome of a tree-child orientation search plus search statistics.

    ``root_edge`` and ``reticulations`` are vertex names of the solution;
    ``pruned_by`` maps pruning reasons to how many candidates they removed.
    """

    outcome: str  # "orientable" or "not_orientable"
    network: DirectedNetwork | None
    root_edge: tuple[str, str] | None
    reticulations: tuple[str, ...] | None
    roots_tried: int
    reticulation_sets_tried: int
    pruned_by: Mapping[str, int]
    elapsed: float


def _require_binary(net: UndirectedNetwork, op: str) -> None:
    if not net.binary:
        raise InvalidParameter(f"{op} requires a binary network")


def _independent_sets(net: UndirectedNetwork, size: int) -> list[tuple[int, ...]]:
    """All independent ``size``-subsets of non-leaf vertices, lexicographic."""
    candidates = [v for v in range(net.n_vertices) if v not in net.leaf_set]
    if size == 0:
        return [()]
    if size > len(candidates):
        return []
    adj_mask = [0] * net.n_vertices
    for u, v in net.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
    results: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def extend(start: int, blocked: int) -> None:
        need = size - len(chosen)
        for i in range(start, len(candidates) - need + 1):
            v = candidates[i]
            if blocked >> v & 1:
                continue
            chosen.append(v)
            if need == 1:
                results.append(tuple(chosen))
            else:
                extend(i + 1, blocked | adj_mask[v])
            chosen.pop()

    extend(0, 0)
    return results


def _heads_tree_child(inc: _RootedIncidence, heads: list[int], quota: list[int]) -> bool:
    """Tree-child test on a completed propagation, using quotas as in-degrees."""
    good_child = [False] * inc.n
    for ei, (a, b) in enumerate(inc.edges):
        head = heads[ei]
        tail = b if head == a else a
        if quota[head] == 1:
            good_child[tail] = True
    for v in range(inc.n):
        if inc.deg[v] == 1:  # leaf in the rooted graph
            continue
        if not good_child[v]:
            return False
    return True


def _search_root(
    net: UndirectedNetwork,
    root_edge: Edge,
    indep_sets: list[tuple[int, ...]],
) -> tuple[int, int, tuple[int, ...] | None]:
    """Scan reticulation sets for one root edge.

    Returns (sets handed to the orienter, sets skipped because both root
    endpoints were reticulations, first tree-child reticulation set or None).
    """
    inc = _RootedIncidence(net, root_edge)
    n = net.n_vertices
    base = [1] * n + [0]
    u, v = root_edge
    tried = 0
    skipped = 0
    for retics in indep_sets:
        if u in retics and v in retics:
            skipped += 1
            continue
        quota = base.copy()
        for w in retics:
            quota[w] = 2
        tried += 1
        heads = _propagate(inc, quota)
        if heads is not None and _heads_tree_child(inc, heads, quota):
            return tried, skipped, retics
    return tried, skipped, None


_WORKER_STATE: tuple[UndirectedNetwork, list[tuple[int, ...]]] | None = None


def _init_worker(net: UndirectedNetwork, indep_sets: list[tuple[int, ...]]) -> None:
    global _WORKER_STATE
    _WORKER_STATE = (net, indep_sets)


def _worker_search_root(root_edge: Edge) -> tuple[int, int, tuple[int, ...] | None]:
    net, indep_sets = _WORKER_STATE  # type: ignore[misc]
    return _search_root(net, root_edge, indep_sets)


def _guarded_estimate(net: UndirectedNetwork, r: int, max_candidates: int) -> int:
    candidates = net.n_vertices - net.n_leaves
    estimate = net.n_edges * math.comb(max(candidates, 0), r) if r <= candidates else 0
    if estimate > max_candidates:
        raise SizeGuardExceeded(
            f"search space estimate {estimate} exceeds the cap {max_candidates}"
        )
    return estimate


def _not_orientable(pruned: dict[str, int], roots: int, sets_tried: int, start: float) -> SolverReport:
    return SolverReport(
        outcome="not_orientable",
        network=None,
        root_edge=None,
        reticulations=None,
        roots_tried=roots,
        reticulation_sets_tried=sets_tried,
        pruned_by=pruned,
        elapsed=time.perf_counter() - start,
    )


def _solution_report(
    net: UndirectedNetwork,
    root_edge: Edge,
    retics: tuple[int, ...],
    pruned: dict[str, int],
    roots: int,
    sets_tried: int,
    start: float,
) -> SolverReport:
    constraints = constraints_from_reticulations(net, root_edge, retics)
    dnet = orient(net, constraints)
    if not isinstance(dnet, DirectedNetwork) or not is_tree_child(dnet):
        raise InvariantViolation("recorded solution failed re-orientation")
    return SolverReport(
        outcome="orientable",
        network=dnet,
        root_edge=net.edge_names(root_edge),
        reticulations=tuple(net.names[v] for v in retics),
        roots_tried=roots,
        reticulation_sets_tried=sets_tried,
        pruned_by=pruned,
        elapsed=time.perf_counter() - start,
    )


def tree_child_orient(
    net: UndirectedNetwork,
    *,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    jobs: int = 1,
    progress: Callable[[tuple[str, str], int], None] | None = None,
) -> SolverReport:
    """Decide tree-child orientability; construct the least solution if any.

    The solution is minimal lexicographically by (root edge id pair, sorted
    reticulation ids). ``jobs`` > 1 spreads root edges over worker
    processes; the outcome is identical at any job count. ``progress`` is
    called per examined root edge with its names and the sets tried there.
    """
    _require_binary(net, "tree_child_orient")
    start = time.perf_counter()
    pruned: dict[str, int] = {}

    report = condition_report(net)
    if not report.edge_bound_ok:
        pruned["edge_bound"] = 1
        return _not_orientable(pruned, 0, 0, start)
    if not report.leaf_distance_ok:
        pruned["leaf_distance"] = 1
        return _not_orientable(pruned, 0, 0, start)

    r = circuit_rank(net)
    _guarded_estimate(net, r, max_candidates)
    indep_sets = _independent_sets(net, r)
    n_internal = net.n_vertices - net.n_leaves
    pruned["adjacent_reticulations"] = math.comb(n_internal, r) - len(indep_sets) if r <= n_internal else 0
    pruned["leaf_reticulations"] = math.comb(net.n_vertices, r) - (
        math.comb(n_internal, r) if r <= n_internal else 0
    )

    roots = list(net.edges)
    roots_tried = 0
    sets_tried = 0
    skipped_rc = 0
    solution: tuple[Edge, tuple[int, ...]] | None = None

    if jobs > 1 and len(roots) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs, _init_worker, (net, indep_sets)) as pool:
            for root_edge, (tried, skipped, retics) in zip(
                roots, pool.imap(_worker_search_root, roots)
            ):
                roots_tried += 1
                sets_tried += tried
                skipped_rc += skipped
                if progress is not None:
                    progress(net.edge_names(root_edge), tried)
                if retics is not None:
                    solution = (root_edge, retics)
                    pool.terminate()
                    break
    else:
        for root_edge in roots:
            tried, skipped, retics = _search_root(net, root_edge, indep_sets)
            roots_tried += 1
            sets_tried += tried
            skipped_rc += skipped
            if progress is not None:
                progress(net.edge_names(root_edge), tried)
            if retics is not None:
                solution = (root_edge, retics)
                break

    pruned["root_children"] = skipped_rc
    if solution is None:
        return _not_orientable(pruned, roots_tried, sets_tried, start)
    return _solution_report(net, solution[0], solution[1], pruned, roots_tried, sets_tried, start)


def orient_with_predicate(
    net: UndirectedNetwork,
    predicate: Callable[[DirectedNetwork], bool],
    *,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> SolverReport:
    """Search for an orientation satisfying an arbitrary class predicate.

    Same skeleton as ``tree_child_orient`` but with only class-independent
    pruning: reticulation counts fixed by the circuit rank, leaves excluded,
    and never both root-edge endpoints as reticulations.
    """
    _require_binary(net, "orient_with_predicate")
    start = time.perf_counter()
    pruned: dict[str, int] = {}
    r = circuit_rank(net)
    _guarded_estimate(net, r, max_candidates)
    candidates = [v for v in range(net.n_vertices) if v not in net.leaf_set]
    n_internal = len(candidates)
    pruned["leaf_reticulations"] = math.comb(net.n_vertices, r) - (
        math.comb(n_internal, r) if r <= n_internal else 0
    )
    skipped_rc = 0
    roots_tried = 0
    sets_tried = 0
    for root_edge in net.edges:
        roots_tried += 1
        inc = _RootedIncidence(net, root_edge)
        base = [1] * net.n_vertices + [0]
        u, v = root_edge
        for retics in itertools.combinations(candidates, r):
            if u in retics and v in retics:
                skipped_rc += 1
                continue
            quota = base.copy()
            for w in retics:
                quota[w] = 2
            sets_tried += 1
            heads = _propagate(inc, quota)
            if heads is None:
                continue
            dnet = _build_orientation(net, inc, heads)
            if predicate(dnet):
                pruned["root_children"] = skipped_rc
                return SolverReport(
                    outcome="orientable",
                    network=dnet,
                    root_edge=net.edge_names(root_edge),
                    reticulations=tuple(net.names[w] for w in retics),
                    roots_tried=roots_tried,
                    reticulation_sets_tried=sets_tried,
                    pruned_by=pruned,
                    elapsed=time.perf_counter() - start,
                )
    pruned["root_children"] = skipped_rc
    return _not_orientable(pruned, roots_tried, sets_tried, start)


def _enumerate_orientations(
    net: UndirectedNetwork, root_edge: Edge
) -> Iterator[tuple[tuple[Edge, ...], frozenset[int]]]:
    """Yield (arcs, reticulation set) of every valid orientation for one root.

    Exhaustive backtracking over arc assignments; branches are cut only when
    a vertex provably exceeds binary degree bounds, so every valid
    orientation is produced. Deterministic order. Binary networks only.
    """
    inc = _RootedIncidence(net, root_edge)
    n = inc.n
    rho = inc.root
    edges = inc.edges
    leaf_set = net.leaf_set
    max_in = [1 if v in leaf_set else 2 for v in range(n)]
    max_out = [0 if v in leaf_set else 2 for v in range(n)]
    max_in[rho] = 0
    max_out[rho] = 2

    heads = [-1] * len(edges)
    in_cnt = [0] * n
    out_cnt = [0] * n

    def force(ei: int, head: int) -> None:
        a, b = edges[ei]
        tail = b if head == a else a
        heads[ei] = head
        in_cnt[head] += 1
        out_cnt[tail] += 1

    free: list[int] = []
    for ei, (a, b) in enumerate(edges):
        if rho in (a, b):
            force(ei, a if b == rho else b)  # arcs leave the root
        elif a in leaf_set:
            force(ei, a)  # pendant edges point at their leaf
        elif b in leaf_set:
            force(ei, b)
        else:
            free.append(ei)

    def viable() -> bool:
        return all(in_cnt[v] <= max_in[v] and out_cnt[v] <= max_out[v] for v in range(n))

    if not viable():
        return

    def complete() -> Iterator[tuple[tuple[Edge, ...], frozenset[int]]]:
        arcs = []
        for ei, (a, b) in enumerate(edges):
            head = heads[ei]
            arcs.append((b if head == a else a, head))
        arcs.sort()
        if not _is_acyclic(n, arcs):
            return
        reach = {rho}
        children: dict[int, list[int]] = {}
        for u, v in arcs:
            children.setdefault(u, []).append(v)
        queue = deque([rho])
        while queue:
            u = queue.popleft()
            for w in children.get(u, ()):
                if w not in reach:
                    reach.add(w)
                    queue.append(w)
        if len(reach) != n:
            return
        retics = frozenset(v for v in range(n) if in_cnt[v] == 2)
        yield tuple(arcs), retics

    def assign(i: int) -> Iterator[tuple[tuple[Edge, ...], frozenset[int]]]:
        if i == len(free):
            yield from complete()
            return
        ei = free[i]
        a, b = edges[ei]
        for head, tail in ((a, b), (b, a)):
            if in_cnt[head] < max_in[head] and out_cnt[tail] < max_out[tail]:
                heads[ei] = head
                in_cnt[head] += 1
                out_cnt[tail] += 1
                yield from assign(i + 1)
                heads[ei] = -1
                in_cnt[head] -= 1
                out_cnt[tail] -= 1

    yield from assign(0)


def _orientation_to_network(
    net: UndirectedNetwork, root_edge: Edge, arcs: tuple[Edge, ...]
) -> DirectedNetwork:
    rooted = insert_root(net, root_edge)
    dnet = DirectedNetwork(
        names=rooted.names,
        arcs=tuple(sorted(arcs)),
        root=rooted.root,
        leaves=net.leaves,
        binary=True,
    )
    check_directed_value(dnet)
    return dnet


def brute_force_tree_child(net: UndirectedNetwork) -> SolverReport:
    """Independent oracle: exhaustive arc-assignment search for tree-child orientations.

    ``reticulation_sets_tried`` counts the valid orientations enumerated.
    Guarded to at most 22 edges.
    """
    _require_binary(net, "brute_force_tree_child")
    if net.n_edges > BRUTE_FORCE_EDGE_LIMIT:
        raise SizeGuardExceeded(
            f"{net.n_edges} edges exceed the brute-force limit {BRUTE_FORCE_EDGE_LIMIT}"
        )
    start = time.perf_counter()
    best: tuple[Edge, tuple[int, ...], tuple[Edge, ...]] | None = None
    enumerated = 0
    for root_edge in net.edges:
        for arcs, retics in _enumerate_orientations(net, root_edge):
            enumerated += 1
            dnet = _orientation_to_network(net, root_edge, arcs)
            if not is_tree_child(dnet):
                continue
            key = (root_edge, tuple(sorted(retics)))
            if best is None or key < (best[0], best[1]):
                best = (root_edge, key[1], arcs)
    if best is None:
        return _not_orientable({}, net.n_edges, enumerated, start)
    root_edge, retics, arcs = best
    dnet = _orientation_to_network(net, root_edge, arcs)
    return SolverReport(
        outcome="orientable",
        network=dnet,
        root_edge=net.edge_names(root_edge),
        reticulations=tuple(net.names[v] for v in retics),
        roots_tried=net.n_edges,
        reticulation_sets_tried=enumerated,
        pruned_by={},
        elapsed=time.perf_counter() - start,
    )


def enumerate_tree_child_orientations(
    net: UndirectedNetwork, *, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> list[DirectedNetwork]:
    """All tree-child orientations over every root edge and reticulation set.

    Returned in ascending (root edge, reticulation set) order; orientations
    are unique per constraint set, so no deduplication is needed.
    """
    _require_binary(net, "enumerate_tree_child_orientations")
    r = circuit_rank(net)
    _guarded_estimate(net, r, max_candidates)
    indep_sets = _independent_sets(net, r)
    found: list[DirectedNetwork] = []
    for root_edge in net.edges:
        inc = _RootedIncidence(net, root_edge)
        base = [1] * net.n_vertices + [0]
        u, v = root_edge
        for retics in indep_sets:
            if u in retics and v in retics:
                continue
            quota = base.copy()
            for w in retics:
                quota[w] = 2
            heads = _propagate(inc, quota)
            if heads is None or not _heads_tree_child(inc, heads, quota):
                continue
            found.append(_build_orientation(net, inc, heads))
    return found


# ---------------------------------------------------------------------------
# Fast exact decision engine used inside the augmentation search.
# Backtracks directly over arc assignments with unit propagation of degree
# bounds plus two tree-child rules: a committed reticulation's child cannot
# be a reticulation, and no vertex may have two committed-reticulation
# children. Matches tree_child_orient's verdict (equivalence is tested);
# used where the per-placement search skeleton would be too slow.
# ---------------------------------------------------------------------------


class _TCEngine:
    def __init__(self, net: UndirectedNetwork, root_edge: Edge):
        inc = _RootedIncidence(net, root_edge)
        self.inc = inc.inc
        self.n = inc.n
        self.rho = inc.root
        self.edges = inc.edges
        self.leaf_set = net.leaf_set
        self.heads = [-1] * len(inc.edges)
        self.in_cnt = [0] * self.n
        self.out_cnt = [0] * self.n
        self.unassigned = list(inc.deg)
        self.max_in = [1 if v in self.leaf_set else 2 for v in range(self.n)]
        self.max_in[self.rho] = 0
        self.max_out = [0 if v in self.leaf_set else 2 for v in range(self.n)]
        self.max_out[self.rho] = 2
        self.trail: list[tuple] = []
        self.dirty: list[int] = []

    def _set_head(self, ei: int, head: int) -> bool:
        a, b = self.edges[ei]
        tail = b if head == a else a
        in_cnt = self.in_cnt
        out_cnt = self.out_cnt
        self.heads[ei] = head
        in_cnt[head] += 1
        out_cnt[tail] += 1
        self.unassigned[head] -= 1
        self.unassigned[tail] -= 1
        self.trail.append((ei, head, tail))
        if in_cnt[head] > self.max_in[head] or out_cnt[tail] > self.max_out[tail]:
            return False
        # a committed reticulation's single child must stay a tree vertex
        if in_cnt[tail] == 2 and not self._restrict_to_tree(head):
            return False
        if in_cnt[head] == 2 and not self._on_retic_commit(head):
            return False
        if out_cnt[tail] == 2 and not self._check_two_children(tail):
            return False
        self.dirty.append(head)
        self.dirty.append(tail)
        return True

    def _restrict_to_tree(self, v: int) -> bool:
        if self.max_in[v] == 1:
            return self.in_cnt[v] <= 1
        if self.in_cnt[v] >= 2:
            return False
        self.trail.append((-1, v, self.max_in[v]))
        self.max_in[v] = 1
        self.dirty.append(v)
        return True

    def _on_retic_commit(self, v: int) -> bool:
        # restrict existing children, and both parents' other children
        heads = self.heads
        for ei, other in self.inc[v]:
            h = heads[ei]
            if h == other:  # arc v -> other
                if not self._restrict_to_tree(other):
                    return False
            elif h == v and self.out_cnt[other] == 2:
                if not self._check_two_children(other):
                    return False
        return True

    def _check_two_children(self, t: int) -> bool:
        heads = self.heads
        in_cnt = self.in_cnt
        retic_children = 0
        for ei, other in self.inc[t]:
            if heads[ei] == other and in_cnt[other] == 2:
                retic_children += 1
        return retic_children < 2

    def _propagate_units(self) -> bool:
        dirty = self.dirty
        heads = self.heads
        while dirty:
            v = dirty.pop()
            if self.unassigned[v] == 0:
                continue
            if self.in_cnt[v] == self.max_in[v]:
                outward = True
            elif self.out_cnt[v] == self.max_out[v]:
                outward = False
            else:
                continue
            for ei, other in self.inc[v]:
                if heads[ei] == -1 and not self._set_head(ei, other if outward else v):
                    return False
        return True

    def _undo_to(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            ei, x, y = trail.pop()
            if ei >= 0:
                self.heads[ei] = -1
                self.in_cnt[x] -= 1
                self.out_cnt[y] -= 1
                self.unassigned[x] += 1
                self.unassigned[y] += 1
            else:
                self.max_in[x] = y

    def _pick_edge(self) -> int:
        heads = self.heads
        in_cnt = self.in_cnt
        out_cnt = self.out_cnt
        best = -1
        best_score = -1
        for ei, (a, b) in enumerate(self.edges):
            if heads[ei] != -1:
                continue
            score = in_cnt[a] + out_cnt[a] + in_cnt[b] + out_cnt[b]
            if score > best_score:
                best, best_score = ei, score
        return best

    def _finish(self) -> tuple[Edge, ...] | None:
        arcs = []
        for ei, (a, b) in enumerate(self.edges):
            head = self.heads[ei]
            arcs.append((b if head == a else a, head))
        arcs.sort()
        if not _is_acyclic(self.n, arcs):
            return None
        good_child = [False] * self.n
        for u, v in arcs:
            if self.in_cnt[v] == 1:
                good_child[u] = True
        for v in range(self.n):
            if v in self.leaf_set:
                continue
            if not good_child[v]:
                return None
        return tuple(arcs)

    def search(self) -> tuple[Edge, ...] | None:
        mark = len(self.trail)
        self.dirty.clear()
        ok = True
        for ei, (a, b) in enumerate(self.edges):
            if self.heads[ei] != -1:
                continue
            if self.rho in (a, b):
                if not self._set_head(ei, a if b == self.rho else b):
                    ok = False
                    break
            elif a in self.leaf_set or b in self.leaf_set:
                if not self._set_head(ei, a if a in self.leaf_set else b):
                    ok = False
                    break
        if ok and self._propagate_units():
            result = self._branch()
            if result is not None:
                return result
        self._undo_to(mark)
        return None

    def _branch(self) -> tuple[Edge, ...] | None:
        ei = self._pick_edge()
        if ei == -1:
            return self._finish()
        a, b = self.edges[ei]
        for head in (a, b):
            mark = len(self.trail)
            self.dirty.clear()
            if self._set_head(ei, head) and self._propagate_units():
                result = self._branch()
                if result is not None:
                    return result
            self._undo_to(mark)
        return None


def _decide_tree_child(net: UndirectedNetwork) -> DirectedNetwork | None:
    """Fast yes/no tree-child orientability decision with a constructed witness."""
    report = condition_report(net)
    if not report.all_passed:
        return None
    for root_edge in net.edges:
        arcs = _TCEngine(net, root_edge).search()
        if arcs is not None:
            dnet = _orientation_to_network(net, root_edge, arcs)
            if not is_tree_child(dnet):
                raise InvariantViolation("engine produced a non-tree-child orientation")
            return dnet
    return None


def _attach_chain(
    net: UndirectedNetwork, hosts: tuple[Edge, ...]
) -> tuple[UndirectedNetwork, list[tuple[str, tuple[str, str]]]]:
    """Attach one leaf per host edge; repeated hosts subdivide left to right."""
    taken = set(net.names)
    labels: list[str] = []
    for i in range(len(hosts)):
        label = f"x{i + 1}"
        while label in taken:
            label = "n" + label
        taken.add(label)
        labels.append(label)

    current = net
    placements: list[tuple[str, tuple[str, str]]] = []
    last_mid: dict[Edge, str] = {}
    for host, label in zip(hosts, labels):
        u_name, v_name = net.edge_names(host)
        attach_u = last_mid.get(host, u_name)
        before = set(current.names)
        current = attach_leaf(current, current.edge_by_names(attach_u, v_name), label)
        mid = (set(current.names) - before - {label}).pop()
        last_mid[host] = mid
        placements.append((label, (u_name, v_name)))
    return current, placements


def minimum_leaf_augmentation(
    net: UndirectedNetwork,
    max_added: int,
    *,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> tuple[int, list[tuple[str, tuple[str, str]]]]:
    """Smallest number of attached leaves making the network tree-child orientable.

    Exact search: for each count, every multiset of host edges is tried
    (attaching twice to an edge subdivides its pieces left to right) until
    one yields a tree-child orientable network. Returns the count and the
    placement list of (leaf label, original host edge names). Entire levels
    whose edge/leaf counts already violate the edge bound are skipped, since
    every placement of that size shares those counts.
    """
    _require_binary(net, "minimum_leaf_augmentation")
    for added in range(max_added + 1):
        if net.n_edges + 2 * added > 5 * (net.n_leaves + added) - 6:
            continue
        n_combos = math.comb(net.n_edges + added - 1, added) if added else 1
        if n_combos > max_candidates:
            raise SizeGuardExceeded(
                f"{n_combos} placements of {added} leaves exceed the cap {max_candidates}"
            )
        if added == 0:
            if _decide_tree_child(net) is not None:
                return 0, []
            continue
        for hosts in itertools.combinations_with_replacement(net.edges, added):
            candidate, placements = _attach_chain(net, hosts)
            if _decide_tree_child(candidate) is not None:
                return added, placements
    raise AugmentationNotFound(max_added)
