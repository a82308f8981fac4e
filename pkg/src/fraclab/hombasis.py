"""Fracture and edge-subset matrices, and the coefficient functions they determine.

``matrix_M(H)[rho, sigma]`` counts colour-preserving homomorphisms between
fractured graphs, ``matrix_N(H)[A, B]`` between edge-subgraphs. Both are
invertible, so the coefficient vectors are the unique solutions of the
transposed systems whose right-hand sides are brute-force colourful counts of
the fractured graphs (resp. edge-subgraphs) themselves.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from fraclab import guards
from fraclab.counting import count_colour_preserving, count_colourful_indsets, count_colourful_matchings
from fraclab.errors import InternalConsistencyError, InvalidInput
from fraclab.graphcore import (
    EdgeSubset,
    Fracture,
    Graph,
    edge_subgraph,
    enumerate_edge_subsets,
    enumerate_fractures,
    fracture_count,
    fractured_graph,
)
from fraclab.linalg import RationalMatrix, solve_exact


def require_no_isolated(graph: Graph) -> None:
    iso = graph.isolated()
    if iso:
        raise InvalidInput(f"pattern has isolated vertices {sorted(iso)}; fracture machinery needs none")


def top_closed_form(graph: Graph) -> int:
    """prod over v of (-1)^(deg v - 1) (deg v - 1)!, the value of a at the coarsest fracture."""
    out = 1
    for v in graph.vertices():
        d = graph.degree(v)
        out *= (-1) ** (d - 1) * math.factorial(d - 1)
    return out


def matrix_M(graph: Graph) -> RationalMatrix:
    require_no_isolated(graph)
    guards.check("fractures", fracture_count(graph))
    return _matrix_M(graph)


@lru_cache(maxsize=64)
def _matrix_M(graph: Graph) -> RationalMatrix:
    fractures = enumerate_fractures(graph)
    coloured = [fractured_graph(graph, f) for f in fractures]
    rows = tuple(
        tuple(Fraction(count_colour_preserving(a, b)) for b in coloured) for a in coloured
    )
    return RationalMatrix(rows, tuple(fractures))


def matrix_N(graph: Graph) -> RationalMatrix:
    guards.check("edge_subsets_edges", graph.m)
    return _matrix_N(graph)


@lru_cache(maxsize=64)
def _matrix_N(graph: Graph) -> RationalMatrix:
    subsets = enumerate_edge_subsets(graph)
    coloured = [edge_subgraph(graph, s) for s in subsets]
    rows = tuple(
        tuple(Fraction(count_colour_preserving(a, b)) for b in coloured) for a in coloured
    )
    return RationalMatrix(rows, tuple(subsets))


def match_coefficients(graph: Graph) -> dict[Fracture, Fraction]:
    """a(rho) for every fracture of ``graph``, coarsest first."""
    require_no_isolated(graph)
    guards.check("fractures", fracture_count(graph))
    return dict(_match_coefficients(graph))


@lru_cache(maxsize=64)
def _match_coefficients(graph: Graph):
    mat = _matrix_M(graph)
    rhs = [count_colourful_matchings(fractured_graph(graph, f)) for f in mat.keys]
    a = solve_exact(mat.transpose(), rhs)
    top = Fracture.coarsest(graph)
    got = a[mat.position(top)]
    if got != top_closed_form(graph):
        raise InternalConsistencyError(
            f"a(top) = {got} differs from the closed form {top_closed_form(graph)}"
        )
    return tuple(zip(mat.keys, a))


def indset_coefficients(graph: Graph) -> dict[EdgeSubset, Fraction]:
    """a-hat(A) for every edge subset A of ``graph``, by (size, lexicographic)."""
    guards.check("edge_subsets_edges", graph.m)
    return dict(_indset_coefficients(graph))


@lru_cache(maxsize=64)
def _indset_coefficients(graph: Graph):
    mat = _matrix_N(graph)
    rhs = [count_colourful_indsets(edge_subgraph(graph, s)) for s in mat.keys]
    a = solve_exact(mat.transpose(), rhs)
    full = EdgeSubset(graph, graph.edges)
    if a[mat.position(full)] == 0:
        raise InternalConsistencyError("a-hat(E(H)) vanished")
    return tuple(zip(mat.keys, a))
