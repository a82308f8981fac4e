"""Named graph families with deterministic labelling (row-major for grids and walls)."""

from __future__ import annotations

import itertools

from fraclab.errors import InvalidInput
from fraclab.graphcore.types import Graph


def clique(k: int) -> Graph:
    return Graph.from_edges(k, itertools.combinations(range(k), 2))


def matching(k: int) -> Graph:
    """k disjoint edges {2i, 2i+1}."""
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def independent(k: int) -> Graph:
    return Graph.empty(k)


def path(n: int) -> Graph:
    """Path on n vertices (n-1 edges)."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInput("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """Centre 0 joined to k leaves."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def paw() -> Graph:
    """Triangle 0-1-2 with pendant vertex 3 attached to 0."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def grid(k: int) -> Graph:
    """The k-by-k grid; vertex (i, j) (0-based) is labelled i*k + j."""
    edges = []
    for i in range(k):
        for j in range(k):
            if j + 1 < k:
                edges.append((i * k + j, i * k + j + 1))
            if i + 1 < k:
                edges.append((i * k + j, (i + 1) * k + j))
    return Graph.from_edges(k * k, edges)


def wall(k: int, length: int) -> Graph:
    """Wall of height k and length ``length``.

    v_{i,j} (1-based) is labelled (i-1)*length + (j-1). Rows are paths; the two
    end columns are paths; an inner rung joins v_{i,j} and v_{i+1,j} when
    i + j is even.
    """
    def lab(i, j):
        return (i - 1) * length + (j - 1)

    edges = set()
    for i in range(1, k + 1):
        for j in range(1, length):
            edges.add((lab(i, j), lab(i, j + 1)))
    for i in range(1, k):
        edges.add((lab(i, 1), lab(i + 1, 1)))
        edges.add((lab(i, length), lab(i + 1, length)))
        for j in range(1, length + 1):
            if (i + j) % 2 == 0:
                edges.add((lab(i, j), lab(i + 1, j)))
    return Graph.from_edges(k * length, edges)


_KINDS = {
    "clique": (clique, 1),
    "matching": (matching, 1),
    "independent": (independent, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "grid": (grid, 1),
    "wall": (wall, 2),
    "biclique": (complete_bipartite, 2),
    "paw": (paw, 0),
}

KINDS = tuple(_KINDS)


def generate(kind: str, *params: int) -> Graph:
    if kind not in _KINDS:
        raise InvalidInput(f"unknown graph kind {kind!r}; expected one of {', '.join(KINDS)}")
    fn, arity = _KINDS[kind]
    if len(params) != arity:
        raise InvalidInput(f"{kind} takes {arity} parameter(s), got {len(params)}")
    if any(p <= 0 for p in params):
        raise InvalidInput(f"{kind} parameters must be positive")
    return fn(*params)


def isolated_free_graphs(max_edges: int) -> list[Graph]:
    """One representative per isomorphism class of graphs with 1..max_edges edges
    and no isolated vertices, grown edge by edge."""
    import networkx as nx

    def key(g: Graph):
        return (g.n, g.m, tuple(sorted(g.degree(v) for v in g.vertices())))

    def to_nx(g: Graph):
        h = nx.Graph()
        h.add_nodes_from(g.vertices())
        h.add_edges_from(g.edges)
        return h

    layer = [Graph.from_edges(2, [(0, 1)])]
    out = list(layer)
    for _ in range(max_edges - 1):
        buckets: dict = {}
        nxt = []
        for g in layer:
            n = g.n
            candidates = [(u, v) for u, v in itertools.combinations(range(n), 2) if not g.has_edge(u, v)]
            candidates += [(u, n) for u in range(n)] + [(n, n + 1)]
            for u, v in candidates:
                size = max(n, u + 1, v + 1)
                h = Graph.from_edges(size, [*g.edges, (u, v)])
                bucket = buckets.setdefault(key(h), [])
                hx = to_nx(h)
                if any(nx.is_isomorphic(hx, other) for other in bucket):
                    continue
                bucket.append(hx)
                nxt.append(h)
        layer = nxt
        out.extend(layer)
    return out
