from app.src.graphs.graph import Graph
from app.src.graphs.graph_errors import OracleLimitError
from app.src.graphs.oracle import (
    brute_force_mis,
    enumerate_maximal_sets,
    independent_sets_of_size,
    is_independent,
    is_maximal_independent,
    maximum_sets,
)
from conftest import nx_maximal_independent_sets
import pytest


def test_brute_force_examples():
    assert brute_force_mis(Graph.cycle(5)) == 2
    assert brute_force_mis(Graph.petersen()) == 4
    assert brute_force_mis(Graph.complete(4)) == 1
    assert brute_force_mis(Graph.empty(4)) == 4


def test_maximal_sets_of_triangle():
    assert enumerate_maximal_sets(Graph.complete(3)) == {
        frozenset({1}),
        frozenset({2}),
        frozenset({3}),
    }


def test_maximal_sets_of_path():
    assert enumerate_maximal_sets(Graph.path(4)) == {
        frozenset({1, 3}),
        frozenset({1, 4}),
        frozenset({2, 4}),
    }
    assert maximum_sets(Graph.path(4)) == enumerate_maximal_sets(Graph.path(4))
    assert maximum_sets(Graph.path(3)) == {frozenset({1, 3})}


def test_matches_networkx(rng):
    for _ in range(50):
        g = Graph.random(rng.randint(1, 9), rng, rng.random())
        sets = enumerate_maximal_sets(g)
        assert sets == nx_maximal_independent_sets(g)
        assert brute_force_mis(g) == max(len(s) for s in sets)


def test_independence_predicates():
    g = Graph.path(4)
    assert is_independent(g, {1, 3})
    assert not is_independent(g, {1, 2})
    assert is_maximal_independent(g, {1, 4})
    assert not is_maximal_independent(g, {1})
    assert not is_maximal_independent(g, {1, 2})


def test_independent_sets_of_size():
    assert independent_sets_of_size(Graph.empty(3), 2) == {
        frozenset({1, 2}),
        frozenset({1, 3}),
        frozenset({2, 3}),
    }
    assert independent_sets_of_size(Graph.complete(3), 2) == set()


def test_oracle_limit():
    with pytest.raises(OracleLimitError):
        brute_force_mis(Graph.empty(17))
    with pytest.raises(OracleLimitError):
        enumerate_maximal_sets(Graph.empty(5), limit=4)
    assert brute_force_mis(Graph.empty(5), limit=5) == 5
