import pytest

import util
from tcorient import (
    check_edge_bound,
    check_leaf_distance,
    condition_report,
    families,
    find_cherries,
    find_reticulated_cherries,
    is_tree_child,
    tree_child_orient,
    validate_directed,
)


def _names(dnet, pairs):
    return sorted((dnet.names[u], dnet.names[v]) for u, v in pairs)


@pytest.fixture(scope="module")
def mixed_cherry_net():
    """Hand-built tree-child network with one cherry and one reticulated cherry."""
    arcs = [
        ("rho", "q"), ("rho", "c"),
        ("c", "x4"), ("c", "x5"),
        ("q", "p1"), ("q", "r"),
        ("p1", "x1"), ("p1", "r"),
        ("r", "x2"),
    ]
    return validate_directed(arcs, ["x1", "x2", "x4", "x5"], root="rho")


class TestIsTreeChild:
    def test_hand_built_tree_child(self, mixed_cherry_net):
        assert is_tree_child(mixed_cherry_net)

    def test_plain_tree(self):
        dnet = validate_directed(
            [("r", "p"), ("r", "x3"), ("p", "x1"), ("p", "x2")],
            ["x1", "x2", "x3"],
            root="r",
        )
        assert is_tree_child(dnet)

    def test_adjacent_reticulations_rejected(self):
        arcs = [
            ("rho", "u"), ("rho", "v"),
            ("u", "r1"), ("v", "r1"),
            ("u", "r2"), ("r1", "r2"),
            ("r2", "x"), ("v", "y"),
        ]
        dnet = validate_directed(arcs, ["x", "y"], root="rho")
        assert not is_tree_child(dnet)


class TestEdgeBound:
    def test_tight_three_leaf_network(self):
        net = util.random_binary_network(0, 3, 2)
        assert net.n_edges == 9 == 5 * net.n_leaves - 6
        assert check_edge_bound(net)

    def test_ladder_4_violates(self):
        net = families.ladder(4)
        assert net.n_edges == 17
        assert not check_edge_bound(net)

    def test_ladder_3_exactly_at_bound(self, ladder_3):
        assert ladder_3.n_edges == 14 == 5 * ladder_3.n_leaves - 6
        assert check_edge_bound(ladder_3)


class TestLeafDistance:
    def test_network_with_cherry(self):
        # every binary tree contains two leaves at distance 2
        cherry = util.random_binary_network(2, 3, 0)
        assert check_leaf_distance(cherry)

    def test_jellyfish_2(self, jellyfish_2):
        assert check_leaf_distance(jellyfish_2)

    def test_single_leaf_vacuously_false(self):
        net = families.jellyfish(1)
        assert not check_leaf_distance(net)


class TestCherries:
    def test_rooted_triple(self):
        dnet = validate_directed(
            [("r", "p"), ("r", "x3"), ("p", "x1"), ("p", "x2")],
            ["x1", "x2", "x3"],
            root="r",
        )
        assert _names(dnet, find_cherries(dnet)) == [("x1", "x2")]

    def test_mixed_network(self, mixed_cherry_net):
        assert _names(mixed_cherry_net, find_cherries(mixed_cherry_net)) == [("x4", "x5")]

    def test_no_shared_parent(self):
        arcs = [
            ("r", "a"), ("r", "b"),
            ("a", "x1"), ("a", "w"),
            ("b", "w"), ("b", "x2"),
            ("w", "x3"),
        ]
        dnet = validate_directed(arcs, ["x1", "x2", "x3"], root="r")
        assert find_cherries(dnet) == []
        # but both leaf pairs through the reticulation qualify as reticulated cherries
        assert _names(dnet, find_reticulated_cherries(dnet)) == [("x1", "x3"), ("x2", "x3")]


class TestReticulatedCherries:
    def test_tree_has_none(self):
        dnet = validate_directed(
            [("r", "p"), ("r", "x3"), ("p", "x1"), ("p", "x2")],
            ["x1", "x2", "x3"],
            root="r",
        )
        assert find_reticulated_cherries(dnet) == []

    def test_mixed_network(self, mixed_cherry_net):
        pairs = _names(mixed_cherry_net, find_reticulated_cherries(mixed_cherry_net))
        assert pairs == [("x1", "x2")]

    def test_ladder_3_solution_has_cherry_structure(self, ladder_3):
        report = tree_child_orient(ladder_3)
        dnet = report.network
        combined = find_cherries(dnet) + find_reticulated_cherries(dnet)
        assert combined


class TestConditionReport:
    def test_jellyfish_5(self):
        report = condition_report(families.jellyfish(5))
        assert report.n_edges == 19 == 5 * report.n_leaves - 6
        assert report.edge_bound_ok
        assert report.leaf_distance_ok
        assert report.reticulation_count == 4
        assert report.all_passed

    def test_ladder_5_fails_bound(self):
        report = condition_report(families.ladder(5))
        assert report.n_edges == 20
        assert not report.edge_bound_ok
        assert not report.all_passed

    def test_ladder_3_passes_all(self, ladder_3):
        report = condition_report(ladder_3)
        assert report.all_passed
        assert report.reticulation_count == 3
        assert len(report.details) == 3
