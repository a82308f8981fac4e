"""Reductions as oracle algorithms.

The two interpolation pipelines recover #cp-hom((H, id) -> (G, c)) from
colourful matching / independent-set counts of products with fractured
graphs (resp. edge-subgraphs) of H^r. The inclusion-exclusion routines turn
uncoloured counts into colourful ones. None of these functions counts
colour-preserving homomorphisms of the input directly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from fraclab import guards
from fraclab.counting import automorphism_count
from fraclab.errors import InternalConsistencyError, InvalidInput, SingularMatrix
from fraclab.graphcore.generate import wall
from fraclab.graphcore.transform import (
    edge_subgraph,
    fracture_count,
    fractured_graph,
    lift_colouring,
    lift_colouring_by,
    tensor,
)
from fraclab.graphcore.types import ColouredGraph, EdgeSubset, Fracture, Graph
from fraclab.hombasis import indset_coefficients, matrix_M, matrix_N, require_no_isolated, top_closed_form
from fraclab.linalg import solve_exact
from fraclab.oracles import (
    CountingOracle,
    EdgeSubgraphOf,
    Problem,
    Query,
    SubdividedCliqueSubgraphs,
    SubgraphOf,
)


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise InternalConsistencyError(f"{what} is not an integer: {value}")
    return int(value)


def _solve(matrix, rhs):
    try:
        return solve_exact(matrix.transpose(), rhs)
    except SingularMatrix as exc:
        raise InternalConsistencyError(f"interpolation system is singular ({exc.kind})") from exc


def _check_input(cg: ColouredGraph, r: int) -> None:
    if r < 0:
        raise InvalidInput("r must be non-negative")
    cg.require_hom().require_surjective()
    require_no_isolated(cg.pattern)


def recover_cphom_via_matchings(cg: ColouredGraph, r: int, oracle: CountingOracle | None = None) -> int:
    _check_input(cg, r)
    lifted = lift_colouring(cg, r)
    pattern = lifted.pattern
    guards.check("fractures", fracture_count(pattern))
    if oracle is None:
        oracle = CountingOracle(Problem.COLOURFUL_MATCHINGS, SubdividedCliqueSubgraphs(r))
    mat = matrix_M(pattern)
    rhs = [
        oracle.ask(Query(Problem.COLOURFUL_MATCHINGS, tensor(lifted, fractured_graph(pattern, sigma))))
        for sigma in mat.keys
    ]
    coeff = _solve(mat, rhs)
    top = coeff[mat.position(Fracture.coarsest(pattern))]
    return _exact(top / top_closed_form(pattern), "recovered cp-hom count")


def recover_cphom_via_indsets(cg: ColouredGraph, r: int, oracle: CountingOracle | None = None) -> int:
    _check_input(cg, r)
    lifted = lift_colouring(cg, r)
    pattern = lifted.pattern
    guards.check("edge_subsets_edges", pattern.m)
    if oracle is None:
        oracle = CountingOracle(Problem.COLOURFUL_INDSETS, EdgeSubgraphOf(lifted))
    mat = matrix_N(pattern)
    rhs = [
        oracle.ask(Query(Problem.COLOURFUL_INDSETS, tensor(lifted, edge_subgraph(pattern, b))))
        for b in mat.keys
    ]
    coeff = _solve(mat, rhs)
    full = EdgeSubset(pattern, pattern.edges)
    hat = indset_coefficients(pattern)[full]
    return _exact(coeff[mat.position(full)] / hat, "recovered cp-hom count")


def _colour_subsets(items):
    items = tuple(items)
    guards.check("colour_subsets", len(items))
    for size in range(len(items) + 1):
        for subset in itertools.combinations(items, size):
            yield frozenset(subset)


def colourful_from_uncoloured_matchings(cg: ColouredGraph, oracle: CountingOracle | None = None) -> int:
    """Sum over edge-colour sets S of (-1)^(k-|S|) times the k-matchings among host edges coloured in S."""
    cg.require_hom()
    host = cg.host
    k = cg.pattern.m
    if oracle is None:
        oracle = CountingOracle(Problem.MATCHINGS, SubgraphOf(host))
    identity = tuple(range(host.n))
    total = 0
    for s in _colour_subsets(cg.pattern.edge_list):
        sub = host.with_edges(e for e in host.edge_list if cg.edge_colour(e) in s)
        count = oracle.ask(Query(Problem.MATCHINGS, sub, k=k, origin=identity))
        total += (-1) ** (k - len(s)) * count
    return total


def colourful_from_uncoloured_indsets(cg: ColouredGraph, oracle: CountingOracle | None = None) -> int:
    """Sum over vertex-colour sets S of (-1)^(k-|S|) times the k-independent sets of G[c^-1(S)]."""
    cg.require_hom()
    host = cg.host
    k = cg.pattern.n
    if oracle is None:
        oracle = CountingOracle(Problem.INDSETS, SubgraphOf(host))
    total = 0
    for s in _colour_subsets(cg.pattern.vertices()):
        sub, keep = host.induced(v for v in host.vertices() if cg.colour[v] in s)
        count = oracle.ask(Query(Problem.INDSETS, sub, k=k, origin=keep))
        total += (-1) ** (k - len(s)) * count
    return total


def colourful_homs_from_hom(cg: ColouredGraph, oracle: CountingOracle | None = None) -> int:
    """Homomorphisms H -> G whose image meets every colour class."""
    cg.require_hom()
    pattern, host = cg.pattern, cg.host
    if oracle is None:
        oracle = CountingOracle(Problem.HOM, SubgraphOf(host, pattern))
    total = 0
    for s in _colour_subsets(pattern.vertices()):
        sub, keep = host.induced(v for v in host.vertices() if cg.colour[v] in s)
        count = oracle.ask(Query(Problem.HOM, sub, pattern=pattern, origin=keep))
        total += (-1) ** (pattern.n - len(s)) * count
    return total


def cphom_from_hom(cg: ColouredGraph, oracle: CountingOracle | None = None) -> int:
    """#cp-hom via uncoloured hom counts.

    For a colourful hom phi, c o phi is a bijective endomorphism of H, i.e.
    an automorphism, and composing with its inverse is a bijection onto the
    cp-homs. So colourful homs = |Aut(H)| * cp-homs.
    """
    cg.require_hom().require_surjective()
    colourful = colourful_homs_from_hom(cg, oracle)
    aut = automorphism_count(cg.pattern)
    if colourful % aut:
        raise InternalConsistencyError(f"{colourful} colourful homs not divisible by |Aut(H)| = {aut}")
    return colourful // aut


def wall_lift(k: int, divisors, r: int, cg: ColouredGraph) -> tuple[Graph, ColouredGraph]:
    """Subdivide the i-th edge of W_{k,k} (sorted order) d_i * r times and lift (G, c) along it."""
    if k < 1 or r < 1:
        raise InvalidInput("k and r must be positive")
    w = wall(k, k)
    if cg.pattern != w:
        raise InvalidInput(f"pattern is not the wall W_{{{k},{k}}}")
    divisors = list(divisors)
    if len(divisors) != w.m:
        raise InvalidInput(f"need {w.m} divisors (one per wall edge), got {len(divisors)}")
    if any(d < 1 for d in divisors):
        raise InvalidInput("divisors must be positive")
    cg.require_hom().require_surjective()
    hit = {cg.edge_colour(e) for e in cg.host.edges}
    if hit != w.edges:
        # an unused wall edge would leave its subdivision vertices without preimages
        raise InvalidInput(f"wall edges {sorted(w.edges - hit)} have no host edge coloured onto them")
    lifted = lift_colouring_by(cg, {e: d * r for e, d in zip(w.edge_list, divisors)})
    return lifted.pattern, lifted.require_surjective()
