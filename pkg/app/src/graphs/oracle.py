"""Combinatorial oracles for independent sets.

Exhaustive subset enumeration for the independence number and Bron-Kerbosch
with pivoting (run on the complement, so cliques there are independent sets
here) for the list of maximal independent sets. Both work on vertex bitmasks.
"""

from app.src.graphs.graph_errors import OracleLimitError
from app.src.graphs.graph import Graph
from app.utils.constants import DEFAULT_ORACLE_LIMIT

VertexSet = frozenset[int]


def _check_limit(graph: Graph, limit: int):
    if graph.m > limit:
        raise OracleLimitError(
            f"Oracle enumeration is limited to {limit} vertices, graph has {graph.m}"
        )


def _to_set(mask: int) -> VertexSet:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _to_mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def is_independent(graph: Graph, vertices) -> bool:
    mask = _to_mask(vertices)
    nbrs = graph.neighbor_masks()
    return all(not (nbrs[v - 1] & mask) for v in vertices)


def is_maximal_independent(graph: Graph, vertices) -> bool:
    if not is_independent(graph, vertices):
        return False
    mask = _to_mask(vertices)
    nbrs = graph.neighbor_masks()
    return all(
        nbrs[v] & mask
        for v in range(graph.m)
        if not mask >> v & 1
    )


def brute_force_mis(graph: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> int:
    """Independence number by checking every vertex subset."""
    _check_limit(graph, limit)
    nbrs = graph.neighbor_masks()
    best = 0
    for subset in range(1, 1 << graph.m):
        size = subset.bit_count()
        if size <= best:
            continue
        rest = subset
        while rest:
            low = rest & -rest
            if nbrs[low.bit_length() - 1] & subset:
                break
            rest ^= low
        else:
            best = size
    return best


def enumerate_maximal_sets(
    graph: Graph, limit: int = DEFAULT_ORACLE_LIMIT
) -> set[VertexSet]:
    _check_limit(graph, limit)
    full = (1 << graph.m) - 1
    # non-neighbours in the graph are neighbours in the complement
    comp = [full & ~(nb | 1 << v) for v, nb in enumerate(graph.neighbor_masks())]
    found: set[VertexSet] = set()

    def expand(r: int, p: int, x: int):
        if not p and not x:
            found.add(_to_set(r))
            return
        pivot_pool = p | x
        pivot = max(
            (v for v in range(graph.m) if pivot_pool >> v & 1),
            key=lambda v: (comp[v] & p).bit_count(),
        )
        candidates = p & ~comp[pivot]
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            expand(r | low, p & comp[v], x & comp[v])
            p &= ~low
            x |= low
            candidates ^= low

    expand(0, full, 0)
    return found


def maximum_sets(graph: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> set[VertexSet]:
    maximal = enumerate_maximal_sets(graph, limit)
    alpha = max(len(s) for s in maximal)
    return {s for s in maximal if len(s) == alpha}


def independent_sets_of_size(
    graph: Graph, k: int, limit: int = DEFAULT_ORACLE_LIMIT
) -> set[VertexSet]:
    _check_limit(graph, limit)
    nbrs = graph.neighbor_masks()
    out = set()
    for subset in range(1 << graph.m):
        if subset.bit_count() != k:
            continue
        if all(not (nbrs[v] & subset) for v in range(graph.m) if subset >> v & 1):
            out.add(_to_set(subset))
    return out
