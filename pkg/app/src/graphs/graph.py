from app.src.graphs.graph_errors import GraphFormatError, GraphValidationError
from itertools import combinations
from pathlib import Path
import numpy as np
import logging


logger = logging.getLogger(__name__)


class ZeroOneMatrix:
    """Square 0/1 matrix; vertices are numbered from 1."""

    def __init__(self, matrix):
        arr = np.array(matrix, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise GraphValidationError(f"Expected a non-empty square matrix, got shape {arr.shape}")
        if not np.isin(arr, (0, 1)).all():
            raise GraphValidationError("Matrix entries must be 0 or 1")
        arr.setflags(write=False)
        self._matrix = arr

    @property
    def m(self) -> int:
        return self._matrix.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def entry(self, i: int, j: int) -> int:
        self._check_vertex(i)
        self._check_vertex(j)
        return int(self._matrix[i - 1, j - 1])

    def _check_vertex(self, i: int):
        if not 1 <= i <= self.m:
            raise IndexError(f"Vertex {i} out of range 1..{self.m}")

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return bool(np.array_equal(self._matrix, other._matrix))

    __hash__ = None

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._matrix.tolist()})"


class Graph(ZeroOneMatrix):
    """Simple undirected graph given by a symmetric adjacency matrix."""

    def __init__(self, adjacency):
        super().__init__(adjacency)
        if not np.array_equal(self._matrix, self._matrix.T):
            raise GraphValidationError("Adjacency matrix must be symmetric")
        if np.diagonal(self._matrix).any():
            raise GraphValidationError("Adjacency matrix must have a zero diagonal")

    @classmethod
    def from_edges(cls, m: int, edges) -> "Graph":
        if m < 1:
            raise GraphValidationError(f"A graph needs at least one vertex, got m={m}")
        arr = np.zeros((m, m), dtype=np.int64)
        for u, v in edges:
            if not (1 <= u <= m and 1 <= v <= m):
                raise GraphValidationError(f"Edge ({u}, {v}) out of range 1..{m}")
            if u == v:
                raise GraphValidationError(f"Self loop on vertex {u}")
            arr[u - 1, v - 1] = arr[v - 1, u - 1] = 1
        return cls(arr)

    @classmethod
    def empty(cls, m: int) -> "Graph":
        return cls.from_edges(m, [])

    @classmethod
    def complete(cls, m: int) -> "Graph":
        return cls.from_edges(m, combinations(range(1, m + 1), 2))

    @classmethod
    def path(cls, m: int) -> "Graph":
        return cls.from_edges(m, [(i, i + 1) for i in range(1, m)])

    @classmethod
    def cycle(cls, m: int) -> "Graph":
        return cls.from_edges(m, [(i, i % m + 1) for i in range(1, m + 1)])

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, i % 5 + 1) for i in range(1, 6)]
        spokes = [(i, i + 5) for i in range(1, 6)]
        inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    @classmethod
    def random(cls, m: int, rng, p: float = 0.5) -> "Graph":
        return cls.from_edges(
            m, [(u, v) for u, v in combinations(range(1, m + 1), 2) if rng.random() < p]
        )

    @classmethod
    def from_index(cls, m: int, index: int) -> "Graph":
        """The index-th graph on m vertices, one bit per vertex pair."""
        pairs = list(combinations(range(1, m + 1), 2))
        return cls.from_edges(m, [pair for bit, pair in enumerate(pairs) if index >> bit & 1])

    def edges(self) -> list[tuple[int, int]]:
        return [
            (int(i) + 1, int(j) + 1)
            for i, j in zip(*np.nonzero(np.triu(self._matrix, 1)))
        ]

    def neighbor_masks(self) -> list[int]:
        """Bitmask of neighbours per vertex, bit v-1 for vertex v."""
        return [
            sum(1 << int(j) for j in np.flatnonzero(row)) for row in self._matrix
        ]

    def complement(self) -> "Graph":
        return Graph(1 - self._matrix - np.eye(self.m, dtype=np.int64))

    def modified(self) -> "ModifiedAdjacency":
        return ModifiedAdjacency.from_graph(self)


class ModifiedAdjacency(ZeroOneMatrix):
    """A' with a'_ij = a_ij above the diagonal and 1 below it."""

    def __init__(self, matrix):
        super().__init__(matrix)
        if np.diagonal(self._matrix).any():
            raise GraphValidationError("Modified adjacency must have a zero diagonal")
        if not np.tril(self._matrix, -1)[np.tril_indices(self.m, -1)].all():
            raise GraphValidationError("Modified adjacency must be 1 below the diagonal")

    @classmethod
    def from_graph(cls, graph: Graph) -> "ModifiedAdjacency":
        arr = np.triu(graph.matrix, 1) + np.tril(np.ones_like(graph.matrix), -1)
        return cls(arr)


# ingestion


def parse_dimacs(text: str) -> Graph:
    m = None
    declared = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        match fields[0]:
            case "p":
                if m is not None:
                    raise GraphFormatError(f"line {lineno}: duplicate problem line")
                if len(fields) != 4 or not fields[2].isdigit() or not fields[3].isdigit():
                    raise GraphFormatError(f"line {lineno}: expected 'p edge <n> <m>'")
                m, declared = int(fields[2]), int(fields[3])
            case "e":
                if m is None:
                    raise GraphFormatError(f"line {lineno}: edge before the problem line")
                if len(fields) != 3 or not fields[1].isdigit() or not fields[2].isdigit():
                    raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
                edges.append((int(fields[1]), int(fields[2])))
            case _:
                raise GraphFormatError(f"line {lineno}: unknown line type {fields[0]!r}")

    if m is None:
        raise GraphFormatError("missing 'p edge <n> <m>' line")
    if declared != len(edges):
        logger.warning("DIMACS header declares %d edges, found %d", declared, len(edges))
    try:
        return Graph.from_edges(m, edges)
    except GraphValidationError as e:
        raise GraphFormatError(str(e)) from e


def parse_edgelist(text: str) -> Graph:
    """One 'u v' pair per line (1-based); a lone 'v' only declares a vertex."""
    m = 0
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) > 2 or not all(f.isdigit() for f in fields):
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        vertices = [int(f) for f in fields]
        if min(vertices) < 1:
            raise GraphFormatError(f"line {lineno}: vertices are numbered from 1")
        m = max(m, *vertices)
        if len(vertices) == 2:
            edges.append((vertices[0], vertices[1]))

    if m == 0:
        raise GraphFormatError("edge list contains no vertices")
    try:
        return Graph.from_edges(m, edges)
    except GraphValidationError as e:
        raise GraphFormatError(str(e)) from e


def load_graph(path: str | Path, fmt: str = "dimacs") -> Graph:
    text = Path(path).read_text(encoding="utf-8")
    match fmt:
        case "dimacs":
            graph = parse_dimacs(text)
        case "edgelist":
            graph = parse_edgelist(text)
        case _:
            raise GraphFormatError(f"Unknown graph format: {fmt}")
    logger.info("loaded %s graph from %s: m=%d, %d edges", fmt, path, graph.m, len(graph.edges()))
    return graph
