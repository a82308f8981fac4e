"""Exact clique, independence, biclique and matching numbers by exhaustive search."""

from __future__ import annotations

import enum
from functools import lru_cache

from fraclab import guards
from fraclab.errors import InvalidInput
from fraclab.graphcore.types import Graph


class InvariantKind(str, enum.Enum):
    CLIQUE = "clique"
    INDEPENDENCE = "independence"
    BICLIQUE = "biclique"
    INDUCED_BICLIQUE = "induced_biclique"
    MATCHING = "matching"
    INDUCED_MATCHING = "induced_matching"


SYMBOLS = {
    InvariantKind.CLIQUE: "omega",
    InvariantKind.INDEPENDENCE: "alpha",
    InvariantKind.BICLIQUE: "beta",
    InvariantKind.INDUCED_BICLIQUE: "beta_ind",
    InvariantKind.MATCHING: "m",
    InvariantKind.INDUCED_MATCHING: "m_ind",
}


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_clique_mask(adj: list[int] | tuple[int, ...], within: int) -> int:
    """Size of a maximum clique inside the vertex set ``within`` (Bron-Kerbosch with pivoting)."""
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        pivot = max(_bits(cand | excl), key=lambda u: (cand & adj[u]).bit_count())
        for v in list(_bits(cand & ~adj[pivot])):
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, within, 0)
    return best


def clique_number(graph: Graph) -> int:
    return max_clique_mask(graph.adj_mask, (1 << graph.n) - 1)


def _complement_masks(graph: Graph) -> list[int]:
    full = (1 << graph.n) - 1
    return [full & ~m & ~(1 << v) for v, m in enumerate(graph.adj_mask)]


def independence_number(graph: Graph) -> int:
    return max_clique_mask(_complement_masks(graph), (1 << graph.n) - 1)


def matching_number(graph: Graph) -> int:
    adj = graph.adj_mask

    @lru_cache(maxsize=None)
    def rec(free: int) -> int:
        # drop vertices with no free neighbour; branch on the lowest remaining one
        while free:
            v = (free & -free).bit_length() - 1
            if adj[v] & free:
                break
            free &= ~(1 << v)
        if not free:
            return 0
        rest = free & ~(1 << v)
        best = rec(rest)
        for w in _bits(adj[v] & rest):
            best = max(best, 1 + rec(rest & ~(1 << w)))
        return best

    return rec((1 << graph.n) - 1)


def induced_matching_number(graph: Graph) -> int:
    """Maximum set of edges, pairwise vertex-disjoint with no edge joining two of them."""
    edges = graph.edge_list
    adj = graph.adj_mask
    closed = [(1 << u) | (1 << v) | adj[u] | adj[v] for u, v in edges]
    ends = [(1 << u) | (1 << v) for u, v in edges]
    m = len(edges)
    # compatibility graph on edges; an induced matching is a clique in it
    compat = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if not closed[i] & ends[j]:
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    return max_clique_mask(compat, (1 << m) - 1)


def _biclique(graph: Graph, induced: bool) -> int:
    """Largest k with disjoint A, B of size k and every A-B pair adjacent.

    A is grown in increasing label order; C is the common neighbourhood of A,
    which never meets A. For induced bicliques A and B must be independent,
    so B is a maximum independent subset of C.
    """
    n = graph.n
    adj = graph.adj_mask
    co = _complement_masks(graph)
    full = (1 << n) - 1
    best = 0

    def side_b(common: int) -> int:
        return max_clique_mask(co, common) if induced else common.bit_count()

    def grow(size: int, last: int, common: int, allowed: int) -> None:
        nonlocal best
        if size:
            best = max(best, min(size, side_b(common)))
        if common.bit_count() <= best:
            return
        for v in range(last + 1, n):
            if not allowed >> v & 1:
                continue
            nxt = common & adj[v]
            if nxt.bit_count() <= best:
                continue
            grow(size + 1, v, nxt, allowed & co[v] if induced else allowed)

    grow(0, -1, full, full)
    return best


def invariant(graph: Graph, kind: InvariantKind | str) -> int:
    try:
        kind = InvariantKind(kind)
    except ValueError:
        raise InvalidInput(f"unknown invariant {kind!r}") from None
    guards.check("invariant_vertices", graph.n)
    if kind is InvariantKind.CLIQUE:
        return clique_number(graph)
    if kind is InvariantKind.INDEPENDENCE:
        return independence_number(graph)
    if kind is InvariantKind.MATCHING:
        return matching_number(graph)
    if kind is InvariantKind.INDUCED_MATCHING:
        return induced_matching_number(graph)
    return _biclique(graph, induced=kind is InvariantKind.INDUCED_BICLIQUE)


def all_invariants(graph: Graph) -> dict[str, int]:
    return {SYMBOLS[k]: invariant(graph, k) for k in InvariantKind}
