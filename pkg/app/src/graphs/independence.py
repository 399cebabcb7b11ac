"""Independent sets as nonzero powers of O = sum_i o_i.

With e_i = p_i q_i, o_i = q_i prod_j e_j^{a'_ij} where A' is the adjacency
matrix with its lower triangle set to 1. o_i o_j vanishes exactly when
a'_ij = 1, so the surviving terms of O^k are the products o_j1 ... o_jk over
independent sets j1 < ... < jk, and their q slots spell the set out.
"""

from app.src.algebra.efb import EfbElement, EfbMultivector, Q, PQ, QP, mv_product
from app.src.algebra.spinor import is_simple_spinor_form
from app.src.algebra.transform import gamma_to_efb, witt_vector
from app.src.graphs.graph_errors import GraphValidationError, NotIndependentError
from app.src.graphs.graph import Graph, ZeroOneMatrix
from app.src.graphs.oracle import VertexSet, enumerate_maximal_sets
from app.utils.constants import DEFAULT_ORACLE_LIMIT
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator
import logging


logger = logging.getLogger(__name__)


def _check_vertex(i: int, m: int):
    if not 1 <= i <= m:
        raise IndexError(f"Vertex {i} out of range 1..{m}")


def _rows(matrix: Graph | ZeroOneMatrix) -> ZeroOneMatrix:
    return matrix.modified() if isinstance(matrix, Graph) else matrix


def z_vector(i: int, graph: Graph) -> EfbMultivector:
    """z_i = q_i + sum_j a_ij p_j."""
    _check_vertex(i, graph.m)
    m = graph.m
    z = gamma_to_efb(witt_vector("q", i, m))
    for j in range(1, m + 1):
        if graph.entry(i, j):
            z = z + gamma_to_efb(witt_vector("p", j, m))
    return z


def e_bivector(i: int, m: int) -> EfbMultivector:
    """e_i = p_i q_i, identity factors q_j p_j + p_j q_j elsewhere."""
    _check_vertex(i, m)
    choices = [(PQ,) if j == i else (QP, PQ) for j in range(1, m + 1)]
    return EfbMultivector(m, {EfbElement.from_slots(s).code: 1 for s in product(*choices)})


def o_multivector(i: int, matrix: ZeroOneMatrix) -> EfbMultivector:
    """o_i in the EFB: q at slot i, e_j where a_ij = 1, identity elsewhere.

    Accepts any 0/1 matrix; a ModifiedAdjacency gives the graph construction.
    """
    m = matrix.m
    _check_vertex(i, m)
    choices = []
    for j in range(1, m + 1):
        if j == i:
            choices.append((Q,))
        elif matrix.entry(i, j):
            choices.append((PQ,))
        else:
            choices.append((QP, PQ))
    return EfbMultivector(m, {EfbElement.from_slots(s).code: 1 for s in product(*choices)})


@dataclass(frozen=True)
class PairProduct:
    """One row of the o-product case table for the unordered pair i < j."""

    i: int
    j: int
    a_ij: int
    a_ji: int
    forward: EfbMultivector
    backward: EfbMultivector

    @property
    def forward_zero(self) -> bool:
        return self.forward.is_zero()

    @property
    def backward_zero(self) -> bool:
        return self.backward.is_zero()

    @property
    def anticommutator(self) -> EfbMultivector:
        return self.forward + self.backward


def pair_products_table(matrix: Graph | ZeroOneMatrix) -> list[PairProduct]:
    rows = _rows(matrix)
    o_terms = {i: o_multivector(i, rows) for i in range(1, rows.m + 1)}
    return [
        PairProduct(
            i=i,
            j=j,
            a_ij=rows.entry(i, j),
            a_ji=rows.entry(j, i),
            forward=mv_product(o_terms[i], o_terms[j]),
            backward=mv_product(o_terms[j], o_terms[i]),
        )
        for i, j in combinations(range(1, rows.m + 1), 2)
    ]


def ordered_zero_pattern(matrix: Graph | ZeroOneMatrix) -> dict[tuple[int, int], bool]:
    """Whether o_i o_j = 0 for every ordered pair, diagonal included."""
    rows = _rows(matrix)
    o_terms = {i: o_multivector(i, rows) for i in range(1, rows.m + 1)}
    return {
        (i, j): mv_product(o_terms[i], o_terms[j]).is_zero()
        for i in o_terms
        for j in o_terms
    }


def big_o(graph: Graph) -> EfbMultivector:
    rows = graph.modified()
    total = EfbMultivector.zero(graph.m)
    for i in range(1, graph.m + 1):
        total = total + o_multivector(i, rows)
    return total


def power_sequence(graph: Graph, max_k: int | None = None) -> Iterator[tuple[int, EfbMultivector]]:
    """Yield (k, O^k) for k = 1, 2, ... and stop after the first zero power."""
    limit = graph.m if max_k is None else min(max_k, graph.m)
    o = big_o(graph)
    current = o
    for k in range(1, limit + 1):
        if k > 1:
            current = mv_product(current, o)
        logger.debug("O^%d has %d terms", k, len(current))
        yield k, current
        if current.is_zero():
            return


def _check_k(graph: Graph, k: int):
    if not 1 <= k <= graph.m:
        raise ValueError(f"k must lie in 1..{graph.m}, got {k}")


def power(graph: Graph, k: int) -> EfbMultivector:
    _check_k(graph, k)
    result = None
    for _, value in power_sequence(graph, k):
        result = value
        if value.is_zero():
            return value
    return result


def independence_test(graph: Graph, k: int) -> bool:
    return not power(graph, k).is_zero()


def independence_number(graph: Graph, max_k: int | None = None) -> int:
    alpha = 0
    for k, value in power_sequence(graph, max_k):
        if value.is_zero():
            break
        alpha = k
    return alpha


def clique_number(graph: Graph, max_k: int | None = None) -> int:
    return independence_number(graph.complement(), max_k)


def q_slots(code: int, m: int) -> VertexSet:
    element = EfbElement(m, code)
    return frozenset(i for i, s in enumerate(element.slots, 1) if s == Q)


def sets_in_power(value: EfbMultivector) -> set[VertexSet]:
    return {q_slots(code, value.m) for code, _ in value}


def extract_independent_sets(graph: Graph, k: int) -> set[VertexSet]:
    return sets_in_power(power(graph, k))


def o_product(graph: Graph, vertices) -> EfbMultivector:
    """o_j1 o_j2 ... o_jk for the vertices in ascending order."""
    rows = graph.modified()
    ordered = sorted(vertices)
    if not ordered:
        raise ValueError("Vertex set must not be empty")
    result = o_multivector(ordered[0], rows)
    for v in ordered[1:]:
        result = mv_product(result, o_multivector(v, rows))
    return result


def maximal_term_is_simple(graph: Graph, vertices) -> bool:
    value = o_product(graph, vertices)
    if value.is_zero():
        raise NotIndependentError(f"{sorted(vertices)} is not an independent set")
    return is_simple_spinor_form(value) is not None


def graph_spinor(graph: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> EfbMultivector:
    """Sum over maximal independent sets of their EFB element, each with weight +1."""
    terms = {}
    for vertices in enumerate_maximal_sets(graph, limit):
        element = is_simple_spinor_form(o_product(graph, vertices))
        if element is None:
            raise ValueError(f"Maximal set {sorted(vertices)} did not give a single EFB term")
        terms[element.code] = 1
    return EfbMultivector(graph.m, terms)


def unique_maximum_graph(m: int, k: int) -> Graph:
    """Graph whose only maximum independent set is {1..k}.

    1..k stay independent, k+1..m form a clique and every one of them is
    joined to all of 1..k. For k = 1 this only exists when m = 1.
    """
    if not 1 <= k <= m:
        raise GraphValidationError(f"k must lie in 1..{m}, got {k}")
    if k == 1 and m > 1:
        raise GraphValidationError("No graph on more than one vertex has a unique maximum set of size 1")
    edges = [(u, v) for u, v in combinations(range(k + 1, m + 1), 2)]
    edges += [(u, v) for u in range(1, k + 1) for v in range(k + 1, m + 1)]
    return Graph.from_edges(m, edges)


def leading_q_element(m: int, k: int) -> EfbElement:
    """q_1 ... q_k e_{k+1} ... e_m."""
    return EfbElement.from_slots([Q] * k + [PQ] * (m - k))
