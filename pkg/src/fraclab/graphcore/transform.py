"""Structural transformations: subdivision, colour lifting, fractures,
coloured tensor products and edge-subgraphs."""

from __future__ import annotations

import itertools
from typing import Iterator, Mapping, NamedTuple

from fraclab import guards
from fraclab.errors import InvalidColouring, InvalidInput
from fraclab.graphcore.types import ColouredGraph, Edge, EdgeSubset, Fracture, Graph


# -- subdivision -----------------------------------------------------------

def subdivision_paths(graph: Graph, counts: Mapping[Edge, int]) -> tuple[Graph, dict[Edge, tuple[int, ...]]]:
    """Subdivide edge ``e`` ``counts[e]`` times.

    Returns the new graph and, per original edge ``(u, v)`` with ``u < v``, the
    full vertex path ``(u, w_1, ..., w_s, v)``. Interior vertices are labelled
    consecutively from ``n`` in sorted edge order, each path numbered from its
    smaller endpoint.
    """
    nxt = graph.n
    edges: list[Edge] = []
    paths: dict[Edge, tuple[int, ...]] = {}
    for e in graph.edge_list:
        s = counts.get(e, 0)
        if s < 0:
            raise InvalidInput(f"negative subdivision count for edge {e}")
        path = (e[0], *range(nxt, nxt + s), e[1])
        nxt += s
        paths[e] = path
        edges.extend(zip(path, path[1:]))
    return Graph.from_edges(nxt, edges), paths


def subdivide(graph: Graph, r: int) -> Graph:
    """G^r: every edge becomes a path with r+1 edges."""
    if r < 0:
        raise InvalidInput("r must be non-negative")
    if r == 0:
        return graph
    return subdivision_paths(graph, dict.fromkeys(graph.edges, r))[0]


def lift_colouring_by(cg: ColouredGraph, counts: Mapping[Edge, int]) -> ColouredGraph:
    """Subdivide the pattern edge ``e`` ``counts[e]`` times and lift (G, c) along it.

    A host edge coloured onto ``e`` is subdivided just as often; its i-th
    interior vertex receives the colour of the i-th interior vertex of the
    pattern path, both paths read starting from the end coloured by the
    smaller endpoint of ``e``.
    """
    cg.require_hom()
    pattern, ppaths = subdivision_paths(cg.pattern, counts)
    c = cg.colour
    host_counts = {e: counts.get(cg.edge_colour(e), 0) for e in cg.host.edges}
    host, hpaths = subdivision_paths(cg.host, host_counts)
    colour = list(c) + [0] * (host.n - cg.host.n)
    for e, hpath in hpaths.items():
        ppath = ppaths[cg.edge_colour(e)]
        if c[e[0]] == ppath[0]:
            oriented = ppath
        elif c[e[1]] == ppath[0]:
            oriented = ppath[::-1]
        else:  # unreachable for a homomorphism on a simple edge
            raise InvalidColouring(f"host edge {e} has no endpoint coloured {ppath[0]}")
        for w, x in zip(hpath[1:-1], oriented[1:-1]):
            colour[w] = x
    return ColouredGraph(pattern, host, tuple(colour))


def lift_colouring(cg: ColouredGraph, r: int) -> ColouredGraph:
    """(G, c) -> (G^r, c^r), coloured by H^r."""
    if r < 0:
        raise InvalidInput("r must be non-negative")
    if r == 0:
        return cg.require_hom()
    return lift_colouring_by(cg, dict.fromkeys(cg.pattern.edges, r))


# -- fractures -------------------------------------------------------------

def set_partitions(items: tuple) -> Iterator[tuple[tuple, ...]]:
    """Partitions of ``items`` in restricted-growth-string order.

    The one-block partition comes first and the all-singletons partition last.
    """
    n = len(items)
    if n == 0:
        yield ()
        return
    rgs = [0] * n
    while True:
        nblocks = max(rgs) + 1
        blocks: list[list] = [[] for _ in range(nblocks)]
        for item, b in zip(items, rgs):
            blocks[b].append(item)
        yield tuple(tuple(b) for b in blocks)
        # next restricted growth string in lexicographic order
        i = n - 1
        while i > 0:
            if rgs[i] <= max(rgs[:i]):
                rgs[i] += 1
                for j in range(i + 1, n):
                    rgs[j] = 0
                break
            i -= 1
        else:
            return


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def fracture_count(graph: Graph) -> int:
    total = 1
    for v in graph.vertices():
        total *= bell(graph.degree(v))
    return total


def enumerate_fractures(graph: Graph) -> list[Fracture]:
    """All fractures of ``graph``, coarsest first, in lexicographic order."""
    guards.check("fractures", fracture_count(graph))
    per_vertex = [
        [tuple(sorted(p)) for p in set_partitions(graph.incident(v))]
        for v in graph.vertices()
    ]
    return [Fracture(tuple(choice)) for choice in itertools.product(*per_vertex)]


def fractured_graph(graph: Graph, fracture: Fracture) -> ColouredGraph:
    """(H#rho, c_rho): one vertex per (v, block), numbered in (v, block rank) order."""
    fracture.validate(graph)
    index: dict[tuple[int, int], int] = {}
    colour: list[int] = []
    for v, part in enumerate(fracture.blocks):
        for b in range(len(part)):
            index[(v, b)] = len(colour)
            colour.append(v)
    edges = []
    for e in graph.edge_list:
        u, v = e
        edges.append((index[(u, fracture.block_of(u, e))], index[(v, fracture.block_of(v, e))]))
    return ColouredGraph(graph, Graph.from_edges(len(colour), edges), tuple(colour))


# -- tensor product --------------------------------------------------------

def tensor(a: ColouredGraph, b: ColouredGraph) -> ColouredGraph:
    """Coloured tensor product; vertices are colour-agreeing pairs in sorted order."""
    if a.pattern != b.pattern:
        raise InvalidInput("tensor factors must be coloured by the same pattern")
    pairs = sorted((x, y) for x in a.host.vertices() for y in b.classes[a.colour[x]])
    index = {p: i for i, p in enumerate(pairs)}
    edges = []
    for x1, x2 in a.host.edges:
        c1, c2 = a.colour[x1], a.colour[x2]
        for y1 in b.classes[c1]:
            for y2 in b.host.adj[y1]:
                if b.colour[y2] == c2:
                    edges.append((index[(x1, y1)], index[(x2, y2)]))
    colour = tuple(a.colour[x] for x, _ in pairs)
    return ColouredGraph(a.pattern, Graph.from_edges(len(pairs), edges), colour)


def edge_subgraph(graph: Graph, subset: EdgeSubset) -> ColouredGraph:
    """(H[A], id_H)."""
    if subset.pattern != graph:
        raise InvalidInput("edge subset belongs to a different pattern")
    return ColouredGraph(graph, Graph(graph.n, subset.members), tuple(range(graph.n)))


def enumerate_edge_subsets(graph: Graph) -> list[EdgeSubset]:
    """All subsets of E(H), ordered by (size, lexicographic)."""
    guards.check("edge_subsets_edges", graph.m)
    edges = graph.edge_list
    return [
        EdgeSubset(graph, frozenset(combo))
        for k in range(len(edges) + 1)
        for combo in itertools.combinations(edges, k)
    ]


class ColouringCheck(NamedTuple):
    is_hom: bool
    is_surjective: bool


def check_colouring(cg: ColouredGraph) -> ColouringCheck:
    return ColouringCheck(cg.is_hom, cg.is_surjective)
