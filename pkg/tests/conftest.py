import pytest

from tcorient import families, validate_undirected


@pytest.fixture(scope="session")
def ladder_3():
    return families.ladder(3)


@pytest.fixture(scope="session")
def jellyfish_2():
    return families.jellyfish(2)


@pytest.fixture
def four_cycle_net():
    """Square with a pendant leaf on every corner; circuit rank 1."""
    edges = [
        ("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"),
        ("a", "xa"), ("b", "xb"), ("c", "xc"), ("d", "xd"),
    ]
    return validate_undirected(edges, ["xa", "xb", "xc", "xd"])


@pytest.fixture
def theta_net():
    """Triangle feeding a second triangle through a bridge; circuit rank 2."""
    edges = [
        ("u1", "u2"), ("u1", "w"), ("u2", "w"), ("w", "q"),
        ("q", "s"), ("q", "t"), ("s", "t"),
        ("s", "xs"), ("t", "xt"), ("u1", "x1"), ("u2", "x2"),
    ]
    return validate_undirected(edges, ["xs", "xt", "x1", "x2"])
