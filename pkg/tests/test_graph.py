from app.src.graphs.graph import Graph, ModifiedAdjacency, ZeroOneMatrix, load_graph, parse_dimacs, parse_edgelist
from app.src.graphs.graph_errors import GraphFormatError, GraphValidationError
import numpy as np
import pytest


def test_from_edges_builds_symmetric_matrix():
    g = Graph.from_edges(3, [(1, 2), (3, 2)])
    assert g.m == 3
    assert g.entry(1, 2) == g.entry(2, 1) == 1
    assert g.entry(1, 3) == 0
    assert g.edges() == [(1, 2), (2, 3)]


@pytest.mark.parametrize(
    "matrix",
    [
        [[0, 1], [0, 0]],
        [[1, 0], [0, 0]],
        [[0, 2], [2, 0]],
        [[0, 1, 0]],
        [],
    ],
)
def test_invalid_adjacency(matrix):
    with pytest.raises(GraphValidationError):
        Graph(matrix)


def test_invalid_edges():
    with pytest.raises(GraphValidationError):
        Graph.from_edges(2, [(1, 3)])
    with pytest.raises(GraphValidationError):
        Graph.from_edges(2, [(2, 2)])
    with pytest.raises(GraphValidationError):
        Graph.from_edges(0, [])


def test_named_graphs():
    assert len(Graph.complete(4).edges()) == 6
    assert Graph.empty(3).edges() == []
    assert Graph.path(3).edges() == [(1, 2), (2, 3)]
    assert len(Graph.cycle(5).edges()) == 5
    petersen = Graph.petersen()
    assert petersen.m == 10
    assert len(petersen.edges()) == 15
    assert all(row.sum() == 3 for row in petersen.matrix)


def test_from_index_enumerates_all_graphs():
    seen = {tuple(Graph.from_index(4, i).edges()) for i in range(1 << 6)}
    assert len(seen) == 64
    assert Graph.from_index(3, 0) == Graph.empty(3)
    assert Graph.from_index(3, 7) == Graph.complete(3)


def test_complement():
    g = Graph.path(4)
    c = g.complement()
    assert c.edges() == [(1, 3), (1, 4), (2, 4)]
    assert c.complement() == g
    assert Graph.complete(3).complement() == Graph.empty(3)


def test_neighbor_masks():
    assert Graph.path(3).neighbor_masks() == [0b010, 0b101, 0b010]


def test_modified_adjacency():
    g = Graph.from_edges(3, [(1, 3)])
    a = g.modified()
    assert a.matrix.tolist() == [[0, 0, 1], [1, 0, 0], [1, 1, 0]]
    with pytest.raises(GraphValidationError):
        ModifiedAdjacency([[0, 1], [0, 0]])


def test_matrix_is_read_only():
    g = Graph.path(2)
    with pytest.raises(ValueError):
        g.matrix[0, 1] = 0


def test_zero_one_matrix_need_not_be_symmetric():
    a = ZeroOneMatrix(np.array([[0, 1], [0, 0]]))
    assert a.entry(1, 2) == 1 and a.entry(2, 1) == 0
    with pytest.raises(IndexError):
        a.entry(3, 1)


def test_parse_dimacs():
    text = "c path on three vertices\n\np edge 3 2\ne 1 2\ne 2 3\n"
    assert parse_dimacs(text) == Graph.path(3)


def test_dimacs_header_mismatch_only_warns(caplog):
    g = parse_dimacs("p edge 3 5\ne 1 2\n")
    assert g.edges() == [(1, 2)]
    assert "declares 5 edges" in caplog.text


@pytest.mark.parametrize(
    "text",
    [
        "e 1 2\n",
        "p edge 3 1\np edge 3 1\n",
        "p edge x 1\n",
        "p edge 3 1\ne 1\n",
        "p edge 3 1\nx 1 2\n",
        "p edge 2 1\ne 1 3\n",
        "",
    ],
)
def test_malformed_dimacs(text):
    with pytest.raises(GraphFormatError):
        parse_dimacs(text)


def test_parse_edgelist():
    text = "# a triangle plus an isolated vertex\n1 2\n2 3\n3 1\n4\n"
    g = parse_edgelist(text)
    assert g.m == 4
    assert g.edges() == [(1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("text", ["1 2 3\n", "0 1\n", "a b\n", "# nothing\n", "1 1\n"])
def test_malformed_edgelist(text):
    with pytest.raises(GraphFormatError):
        parse_edgelist(text)


def test_load_graph(tmp_path):
    dimacs = tmp_path / "p3.col"
    dimacs.write_text("p edge 3 2\ne 1 2\ne 2 3\n", encoding="utf-8")
    assert load_graph(dimacs) == Graph.path(3)

    edges = tmp_path / "p3.txt"
    edges.write_text("1 2\n2 3\n", encoding="utf-8")
    assert load_graph(edges, "edgelist") == Graph.path(3)

    with pytest.raises(GraphFormatError):
        load_graph(edges, "graphml")
