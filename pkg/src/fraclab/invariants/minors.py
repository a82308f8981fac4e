"""Shallow minors by exhaustive search over contraction models."""

from __future__ import annotations

from fraclab import guards
from fraclab.counting import has_subgraph
from fraclab.errors import InvalidInput
from fraclab.graphcore.types import Graph


def _radius_ok(graph: Graph, part: int, d: int) -> bool:
    """G[part] is connected and some vertex of it reaches all others within d steps inside it."""
    adj = graph.adj_mask
    members = [v for v in range(graph.n) if part >> v & 1]
    for centre in members:
        seen = frontier = 1 << centre
        for _ in range(d):
            nxt = 0
            for x in range(graph.n):
                if frontier >> x & 1:
                    nxt |= adj[x] & part
            frontier = nxt & ~seen
            seen |= nxt
            if not frontier:
                break
        if seen == part:
            return True
    return False


def _contract(graph: Graph, parts: list[int]) -> Graph:
    owner = {}
    for i, p in enumerate(parts):
        for v in range(graph.n):
            if p >> v & 1:
                owner[v] = i
    edges = {(owner[u], owner[v]) for u, v in graph.edges if owner[u] != owner[v]}
    return Graph.from_edges(len(parts), edges)


def shallow_minor_models(graph: Graph, d: int):
    """Yield every partition of V(G) into parts of radius <= d (as bitmask lists).

    Vertices are placed in label order; a part is closed off once no later
    vertex can join it, so only the final check is needed per part.
    """
    n = graph.n

    def rec(v: int, parts: list[int]):
        if v == n:
            if all(_radius_ok(graph, p, d) for p in parts):
                yield list(parts)
            return
        for i in range(len(parts)):
            parts[i] |= 1 << v
            yield from rec(v + 1, parts)
            parts[i] &= ~(1 << v)
        parts.append(1 << v)
        yield from rec(v + 1, parts)
        parts.pop()

    yield from rec(0, [])


def is_shallow_minor(pattern: Graph, host: Graph, d: int) -> bool:
    if d < 0:
        raise InvalidInput("depth must be non-negative")
    guards.check("minor_host_vertices", host.n)
    if pattern.n > host.n or pattern.m > host.m:
        return False
    if has_subgraph(pattern, host):
        return True
    for parts in shallow_minor_models(host, d):
        if len(parts) < pattern.n:
            continue
        if has_subgraph(pattern, _contract(host, parts)):
            return True
    return False
