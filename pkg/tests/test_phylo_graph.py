import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import util
from tcorient import (
    DirectedNetwork,
    attach_leaf,
    circuit_rank,
    contract_root,
    insert_root,
    leaf_distances,
    network_stats,
    orient,
    constraints_from_reticulations,
    validate_undirected,
)
from tcorient.phylo_graph import (
    DegreeViolation,
    Disconnected,
    DuplicateLabel,
    EdgeNotFound,
    HasLoop,
    HasParallelEdge,
    InvariantViolation,
    TooFewLeaves,
    UnlabeledDegreeOneVertex,
)
from tcorient import families

PROPERTY_SETTINGS = settings(
    max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)

small_nets = st.builds(
    util.random_binary_network,
    seed=st.integers(0, 10_000),
    n_leaves=st.integers(3, 6),
    n_retics=st.integers(0, 2),
)


class TestValidateUndirected:
    def test_ladder_3_counts(self, ladder_3):
        assert ladder_3.n_vertices == 12
        assert ladder_3.n_edges == 14
        assert ladder_3.binary

    def test_degree_two_vertex_rejected(self):
        with pytest.raises(DegreeViolation) as exc:
            validate_undirected([("a", "u"), ("u", "b")], ["a", "b"])
        assert exc.value.vertex == "u"
        assert exc.value.degree == 2

    def test_single_edge_degenerate_tree_is_valid(self):
        net = validate_undirected([("a", "b")], ["a", "b"])
        assert net.n_vertices == 2
        assert net.n_leaves == 2
        assert net.binary

    def test_loop_rejected(self):
        with pytest.raises(HasLoop):
            validate_undirected([("a", "a"), ("a", "b")], ["b"])

    def test_parallel_edge_rejected(self):
        with pytest.raises(HasParallelEdge):
            validate_undirected([("a", "b"), ("b", "a")], ["a", "b"])

    def test_disconnected_rejected(self):
        with pytest.raises(Disconnected):
            validate_undirected([("a", "b"), ("c", "d")], ["a", "b", "c", "d"])

    def test_unlabeled_degree_one_vertex(self):
        with pytest.raises(UnlabeledDegreeOneVertex):
            validate_undirected(
                [("a", "v"), ("b", "v"), ("v", "w")], ["a", "b"]
            )

    def test_labeled_vertex_with_wrong_degree(self):
        with pytest.raises(DegreeViolation):
            validate_undirected(
                [("a", "v"), ("b", "v"), ("c", "v")], ["a", "b", "c", "v"]
            )

    def test_too_few_leaves(self):
        with pytest.raises(TooFewLeaves):
            validate_undirected([], [])

    def test_single_leaf_needs_relaxation(self):
        # complete graph on u1..u4 with one edge subdivided to carry the leaf
        edges = [
            ("u1", "p"), ("p", "u2"), ("u3", "u4"),
            ("u1", "u3"), ("u1", "u4"), ("u2", "u3"), ("u2", "u4"),
            ("p", "x"),
        ]
        with pytest.raises(TooFewLeaves):
            validate_undirected(edges, ["x"])
        net = validate_undirected(edges, ["x"], allow_single_leaf=True)
        assert net.n_leaves == 1

    def test_non_binary_detected(self):
        # internal vertex of degree four
        edges = [("a", "v"), ("b", "v"), ("c", "v"), ("d", "v")]
        net = validate_undirected(edges, ["a", "b", "c", "d"])
        assert not net.binary

    def test_duplicate_leaf_labels(self):
        with pytest.raises(DuplicateLabel):
            validate_undirected([("a", "b")], ["a", "a"])


class TestLeafDistances:
    def test_cherry_distance_two(self):
        edges = [("x", "p"), ("y", "p"), ("p", "q"), ("z", "q"), ("w", "q")]
        net = validate_undirected(edges, ["x", "y", "z", "w"])
        dist = leaf_distances(net)
        x, y = net.vertex_id("x"), net.vertex_id("y")
        assert dist[x][y] == 2

    def test_ladder_1_opposite_leaves(self):
        net = families.ladder(1)
        dist = leaf_distances(net)
        assert dist[net.vertex_id("a")][net.vertex_id("b")] == 3

    def test_jellyfish_2_leaf_pair(self, jellyfish_2):
        dist = leaf_distances(jellyfish_2)
        x1, x2 = jellyfish_2.vertex_id("x_1"), jellyfish_2.vertex_id("x_2")
        assert dist[x1][x2] == 3

    @PROPERTY_SETTINGS
    @given(net=small_nets)
    def test_agrees_with_floyd_warshall(self, net):
        oracle = util.floyd_warshall(net.n_vertices, net.edges)
        dist = leaf_distances(net)
        for x in net.leaves:
            for y in net.leaves:
                assert dist[x][y] == oracle[x][y]

    @PROPERTY_SETTINGS
    @given(net=small_nets)
    def test_symmetric_zero_diagonal(self, net):
        dist = leaf_distances(net)
        for x in net.leaves:
            assert dist[x][x] == 0
            for y in net.leaves:
                assert dist[x][y] == dist[y][x]


class TestInsertRoot:
    def test_ladder_3_counts(self, ladder_3):
        rooted = insert_root(ladder_3, ladder_3.edges[0])
        assert rooted.n_vertices == 13
        assert len(rooted.edges) == 15
        assert rooted.degree(rooted.root) == 2

    def test_pendant_edge_root_is_adjacent_to_leaf(self, ladder_3):
        e = ladder_3.edge_by_names("a", "t_1")
        rooted = insert_root(ladder_3, e)
        assert ladder_3.vertex_id("a") in rooted.adjacency[rooted.root]
        assert ladder_3.vertex_id("t_1") in rooted.adjacency[rooted.root]

    def test_jellyfish_1_counts(self):
        net = families.jellyfish(1)
        assert (net.n_vertices, net.n_edges) == (8, 11)
        rooted = insert_root(net, net.edges[0])
        assert (rooted.n_vertices, len(rooted.edges)) == (9, 12)

    def test_missing_edge(self, ladder_3):
        with pytest.raises(EdgeNotFound):
            insert_root(ladder_3, (0, 1))

    @PROPERTY_SETTINGS
    @given(net=small_nets, pick=st.integers(0, 10_000))
    def test_contract_round_trip(self, net, pick):
        e = net.edges[pick % net.n_edges]
        assert contract_root(insert_root(net, e)) == net


class TestAttachLeaf:
    def test_ladder_5_counts(self):
        net = families.ladder(5)
        assert net.n_edges == 20
        grown = attach_leaf(net, net.edge_by_names("b_1", "b_2"), "x_new")
        assert grown.n_edges == 22
        assert grown.n_leaves == 5
        assert grown.binary

    def test_attach_to_pendant_edge(self):
        edges = [("x", "p"), ("y", "p"), ("p", "q"), ("z", "q"), ("w", "q")]
        net = validate_undirected(edges, ["x", "y", "z", "w"])
        grown = attach_leaf(net, net.edge_by_names("x", "p"), "x2")
        assert grown.binary
        assert grown.n_leaves == 5

    def test_duplicate_label(self, ladder_3):
        with pytest.raises(DuplicateLabel):
            attach_leaf(ladder_3, ladder_3.edges[0], "a")

    def test_missing_edge(self, ladder_3):
        with pytest.raises(EdgeNotFound):
            attach_leaf(ladder_3, (0, 1), "z")

    def test_seven_leaves_on_ladder_10(self):
        net, cert = families.augmented_ladder(10)
        assert len(cert.added_leaves) == 7
        assert net.n_leaves == 11
        assert net.n_edges == 49

    @PROPERTY_SETTINGS
    @given(net=small_nets, pick=st.integers(0, 10_000))
    def test_preserves_circuit_rank(self, net, pick):
        e = net.edges[pick % net.n_edges]
        assert circuit_rank(attach_leaf(net, e, "zz")) == circuit_rank(net)


class TestCircuitRank:
    @pytest.mark.parametrize("k", range(1, 9))
    def test_jellyfish_rank_constant(self, k):
        assert circuit_rank(families.jellyfish(k)) == 4

    @pytest.mark.parametrize("k", range(1, 9))
    def test_ladder_rank(self, k):
        assert circuit_rank(families.ladder(k)) == k

    def test_tree_rank_zero(self):
        net = util.random_binary_network(5, 6, 0)
        assert circuit_rank(net) == 0


class TestNetworkStats:
    def _oriented(self, seed, n_leaves, n_retics):
        from tcorient import orient_with_predicate

        net = util.random_binary_network(seed, n_leaves, n_retics)
        report = orient_with_predicate(net, lambda d: True)
        assert report.outcome == "orientable", "generated network should be orientable"
        return report.network

    def test_three_leaves_three_reticulations(self):
        stats = network_stats(self._oriented(1, 3, 3))
        assert (stats.n_leaves, stats.n_reticulations) == (3, 3)
        assert stats.n_tree_vertices == 4
        assert stats.n_vertices == 11
        assert stats.n_arcs == 13

    def test_cherry_tree(self):
        net = validate_undirected([("a", "b")], ["a", "b"])
        res = orient(net, constraints_from_reticulations(net, net.edges[0], []))
        stats = network_stats(res)
        assert (stats.n_tree_vertices, stats.n_vertices, stats.n_arcs) == (0, 3, 2)

    def test_five_leaves_four_reticulations(self):
        stats = network_stats(self._oriented(2, 5, 4))
        assert stats.n_tree_vertices == 7
        assert stats.n_arcs == 20

    def test_identities_hold_on_random_orientations(self):
        for seed in range(6):
            stats = network_stats(self._oriented(seed, 4, 2))
            assert stats.n_tree_vertices == stats.n_leaves + stats.n_reticulations - 2
            assert stats.n_vertices == 2 * stats.n_tree_vertices + 3
            assert stats.n_arcs == 3 * stats.n_reticulations + 2 * stats.n_leaves - 2

    def test_inconsistent_counts_raise(self):
        # hand-built value bypassing validation: a lone root with two leaves
        # plus a dangling extra arc breaks the count identities
        bogus = DirectedNetwork(
            names=("a", "b", "c", "rho"),
            arcs=((3, 0), (3, 1), (0, 2)),
            root=3,
            leaves=(1, 2),
            binary=True,
        )
        with pytest.raises(InvariantViolation):
            network_stats(bogus)
