"""End-to-end checks at the sizes the engine is expected to handle."""

from app.src.bench.bench import count_table_nonzeros, dense_product_counts, lower_bound
from app.src.bench.verification import run_oracle_sweep
from app.src.graphs.graph import Graph
from app.src.graphs.independence import extract_independent_sets, independence_number
from app.src.graphs.oracle import brute_force_mis, maximum_sets
from conftest import nx_maximal_independent_sets
import pytest
import random


@pytest.mark.parametrize("m", [1, 2, 3])
def test_exhaustive_oracle_equivalence(m):
    report = run_oracle_sweep(m)
    assert report.exhaustive
    assert report.passed, [c.detail for c in report.failed]


@pytest.mark.slow
def test_sampled_oracle_equivalence_m4():
    report = run_oracle_sweep(4, samples=500)
    product = report.checks[0]
    assert product.name == "product"
    assert product.checked == 500
    assert report.passed, [c.detail for c in report.failed]


@pytest.mark.slow
def test_complexity_counts_m4():
    assert count_table_nonzeros(4) == 4096
    report = dense_product_counts(4)
    assert report.dense_efb_mults == 4096
    assert report.dense_gamma_mults == 65536
    assert report.dense_gamma_mults > report.dense_efb_mults > lower_bound(4)


def _check_graph(graph: Graph):
    alpha = independence_number(graph)
    assert alpha == brute_force_mis(graph)
    assert extract_independent_sets(graph, alpha) == maximum_sets(graph)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_every_small_graph(m):
    for index in range(1 << (m * (m - 1) // 2)):
        _check_graph(Graph.from_index(m, index))


@pytest.mark.slow
def test_every_graph_on_five_vertices():
    for index in range(1024):
        _check_graph(Graph.from_index(5, index))


@pytest.mark.slow
def test_random_graphs_up_to_ten_vertices():
    rng = random.Random(2009)
    for _ in range(200):
        graph = Graph.random(rng.randint(1, 10), rng, rng.choice([0.3, 0.5, 0.7]))
        _check_graph(graph)
        alpha = independence_number(graph)
        expected = {s for s in nx_maximal_independent_sets(graph) if len(s) == alpha}
        assert extract_independent_sets(graph, alpha) == expected
