"""Ground-truth counters.

Every homomorphism-style count goes through :func:`count_maps`, a backtracking
search over maps ``src -> dst`` restricted to per-vertex candidate sets. The
coloured variants are the special case where the candidates of ``v`` are the
target vertices carrying ``v``'s colour.
"""

from __future__ import annotations

import math
from functools import lru_cache

from fraclab import guards
from fraclab.errors import InvalidInput
from fraclab.graphcore.types import ColouredGraph, Graph


def _search_order(src: Graph, vertices: list[int], candidates) -> list[int]:
    """Greedy connected order: next is the vertex with most already-placed
    neighbours, ties broken by fewest candidates, then label."""
    order: list[int] = []
    placed: set[int] = set()
    remaining = set(vertices)
    while remaining:
        v = min(
            remaining,
            key=lambda x: (-len(src.adj[x] & placed), len(candidates[x]), x),
        )
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    return order


def _components(graph: Graph) -> list[list[int]]:
    seen = [False] * graph.n
    comps = []
    for s in graph.vertices():
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in graph.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _count_block(src: Graph, dst: Graph, vertices, candidates, injective, induced, limit) -> int:
    order = _search_order(src, vertices, candidates)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[w] for w in src.adj[v] if w in pos and pos[w] < i] for i, v in enumerate(order)]
    non_back = []
    if induced:
        for i, v in enumerate(order):
            non_back.append([j for j in range(i) if order[j] not in src.adj[v]])
    cands = [candidates[v] for v in order]
    dadj = dst.adj
    image = [0] * len(order)
    used: set[int] = set()
    k = len(order)

    def rec(i: int) -> int:
        if i == k:
            return 1
        count = 0
        nbrs = back[i]
        for x in cands[i]:
            if injective and x in used:
                continue
            ax = dadj[x]
            if any(image[j] not in ax for j in nbrs):
                continue
            if induced and any(image[j] in ax for j in non_back[i]):
                continue
            image[i] = x
            if injective:
                used.add(x)
            count += rec(i + 1)
            if injective:
                used.discard(x)
            if limit and count >= limit:
                return count
        return count

    return rec(0)


def count_maps(src: Graph, dst: Graph, candidates=None, *, injective=False, induced=False, limit=0) -> int:
    """Number of edge-preserving maps ``src -> dst`` with ``phi(v) in candidates[v]``.

    ``injective`` restricts to injective maps; ``induced`` additionally
    requires non-edges to map to non-edges. With ``limit`` the search stops
    once that many maps are found (used for existence tests).
    """
    if candidates is None:
        everything = tuple(dst.vertices())
        candidates = [everything] * src.n
    if any(not c for c in candidates):
        return 0
    if injective:
        return _count_block(src, dst, list(src.vertices()), candidates, True, induced, limit)
    total = 1
    for comp in _components(src):
        total *= _count_block(src, dst, comp, candidates, False, False, limit)
        if total == 0:
            return 0
    return total


def count_colour_preserving(src: ColouredGraph, dst: ColouredGraph) -> int:
    """#Hom((F, c_F) -> (G, c_G)): homomorphisms that commute with the colourings."""
    if src.pattern != dst.pattern:
        raise InvalidInput("coloured graphs use different patterns")
    candidates = [dst.classes[c] for c in src.colour]
    return count_maps(src.host, dst.host, candidates)


def count_cp_hom(cg: ColouredGraph) -> int:
    """#Hom((H, id_H) -> (G, c)); zero when c misses a colour."""
    cg.require_hom()
    return count_colour_preserving(ColouredGraph.identity(cg.pattern), cg)


def count_hom(pattern: Graph, host: Graph) -> int:
    guards.check("hom_pattern_vertices", pattern.n)
    return count_maps(pattern, host)


def automorphism_count(graph: Graph) -> int:
    guards.check("automorphism_vertices", graph.n)
    # same degree is necessary; cheap pruning that does not change the count
    cands = [tuple(w for w in graph.vertices() if graph.degree(w) == graph.degree(v)) for v in graph.vertices()]
    return count_maps(graph, graph, cands, injective=True, induced=True)


def count_sub(pattern: Graph, host: Graph) -> int:
    """Subgraphs of ``host`` isomorphic to ``pattern``: injective homs / |Aut|."""
    guards.check("hom_pattern_vertices", pattern.n)
    if pattern.n > host.n:
        return 0
    return count_maps(pattern, host, injective=True) // automorphism_count(pattern)


def count_indsub(pattern: Graph, host: Graph) -> int:
    guards.check("hom_pattern_vertices", pattern.n)
    if pattern.n > host.n:
        return 0
    return count_maps(pattern, host, injective=True, induced=True) // automorphism_count(pattern)


def has_subgraph(pattern: Graph, host: Graph) -> bool:
    if pattern.n > host.n:
        return False
    return count_maps(pattern, host, injective=True, limit=1) > 0


# -- matchings and independent sets ----------------------------------------

def count_matchings(graph: Graph, k: int) -> int:
    """Number of k-matchings (sets of k pairwise disjoint edges)."""
    if k < 0:
        raise InvalidInput("k must be non-negative")
    guards.check("enumeration", math.comb(graph.m, k))
    edges = [(1 << u) | (1 << v) for u, v in graph.edge_list]

    @lru_cache(maxsize=None)
    def rec(start: int, need: int, used: int) -> int:
        if need == 0:
            return 1
        total = 0
        for i in range(start, len(edges) - need + 1):
            if not edges[i] & used:
                total += rec(i + 1, need - 1, used | edges[i])
        return total

    return rec(0, k, 0)


def count_indsets(graph: Graph, k: int) -> int:
    """Number of independent sets of size k."""
    if k < 0:
        raise InvalidInput("k must be non-negative")
    guards.check("enumeration", math.comb(graph.n, k))
    adj = graph.adj_mask
    n = graph.n

    @lru_cache(maxsize=None)
    def rec(start: int, need: int, blocked: int) -> int:
        if need == 0:
            return 1
        total = 0
        for v in range(start, n - need + 1):
            if not blocked >> v & 1:
                total += rec(v + 1, need - 1, blocked | adj[v])
        return total

    return rec(0, k, 0)


def count_colourful_matchings(cg: ColouredGraph) -> int:
    """k-matchings using every pattern-edge colour exactly once (k = |E(pattern)|).

    Host edge {u, v} has colour {c(u), c(v)}.
    """
    cg.require_hom()
    by_colour: dict = {e: [] for e in cg.pattern.edge_list}
    for e in cg.host.edge_list:
        by_colour[cg.edge_colour(e)].append((1 << e[0]) | (1 << e[1]))
    classes = sorted(by_colour.values(), key=len)
    if any(not cls for cls in classes):
        return 0
    return _colourful_pick(tuple(tuple(c) for c in classes))


def count_colourful_indsets(cg: ColouredGraph) -> int:
    """k-independent sets using every vertex colour exactly once (k = |V(pattern)|)."""
    cg.require_hom()
    adj = cg.host.adj_mask
    classes = sorted(cg.classes, key=len)
    if any(not cls for cls in classes):
        return 0
    k = len(classes)

    def rec(i: int, blocked: int) -> int:
        if i == k:
            return 1
        return sum(rec(i + 1, blocked | adj[v] | (1 << v)) for v in classes[i] if not blocked >> v & 1)

    return rec(0, 0)


def _colourful_pick(classes: tuple[tuple[int, ...], ...]) -> int:
    k = len(classes)

    @lru_cache(maxsize=None)
    def rec(i: int, used: int) -> int:
        if i == k:
            return 1
        return sum(rec(i + 1, used | e) for e in classes[i] if not e & used)

    return rec(0, 0)
