"""Degree-2 chain structure and embeddings into subdivided cliques.

A *branch* vertex has degree >= 3. Every edge of a graph lies on exactly one
maximal walk whose interior vertices all have degree 2; such a walk either
joins two branch vertices (possibly the same one), leaves a branch vertex and
dies at a degree-1 vertex, is a whole path component, or is a whole cycle
component.

A simple path between two distinct branch vertices is a concatenation of
branch-to-branch chains (its interior branch vertices split it), so "every
such path has length divisible by r+1" holds iff every branch-to-branch chain
has length divisible by r+1. Closed chains and cycle components are checked
too: a cycle in the r-subdivision of a clique passes through an original
vertex every r+1 steps, so these lengths must also be divisible.
"""

from __future__ import annotations

from typing import NamedTuple

from fraclab.errors import InvalidInput
from fraclab.graphcore.generate import clique
from fraclab.graphcore.transform import subdivision_paths
from fraclab.graphcore.types import Graph, norm_edge


class Chain(NamedTuple):
    kind: str  # "branch", "dangling", "path", "cycle", "isolated"
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def chains(graph: Graph) -> list[Chain]:
    """Decompose ``graph`` into maximal degree-2 chains (deterministic order)."""
    deg = [graph.degree(v) for v in graph.vertices()]
    seen: set = set()
    out: list[Chain] = []

    def walk(start: int, first: int) -> list[int]:
        seq = [start, first]
        seen.add(norm_edge(start, first))
        while deg[seq[-1]] == 2 and seq[-1] != start:
            cur = seq[-1]
            nxt = next(w for w in sorted(graph.adj[cur]) if norm_edge(cur, w) not in seen)
            seen.add(norm_edge(cur, nxt))
            seq.append(nxt)
        return seq

    for x in graph.vertices():
        if deg[x] >= 3:
            for y in sorted(graph.adj[x]):
                if norm_edge(x, y) not in seen:
                    seq = walk(x, y)
                    kind = "dangling" if deg[seq[-1]] == 1 else "branch"
                    out.append(Chain(kind, tuple(seq)))
    for s in graph.vertices():
        if deg[s] == 0:
            out.append(Chain("isolated", (s,)))
        elif deg[s] == 1:
            (y,) = graph.adj[s]
            if norm_edge(s, y) not in seen:
                out.append(Chain("path", tuple(walk(s, y))))
    for s in graph.vertices():
        if deg[s] == 2:
            y = min(graph.adj[s])
            if norm_edge(s, y) not in seen:
                out.append(Chain("cycle", tuple(walk(s, y))))
    return out


def chain_condition_check(graph: Graph, r: int) -> bool:
    """Lengths of branch-to-branch chains, closed chains and cycle components
    are all multiples of r+1."""
    if r < 0:
        raise InvalidInput("r must be non-negative")
    step = r + 1
    return all(
        ch.length % step == 0
        for ch in chains(graph)
        if ch.kind in ("branch", "cycle")
    )


class Embedding(NamedTuple):
    m: int
    mapping: tuple[int, ...]  # vertex of F -> vertex of K_m^r
    target: Graph             # K_m^r with the standard subdivision labelling


def embed_into_subdivided_clique(graph: Graph, r: int) -> Embedding:
    """Injective homomorphism of ``graph`` into K_m^r.

    Vertices at distance a multiple of r+1 from a branch vertex along a chain
    become clique vertices ("anchors"); dangling chains and path components
    are first padded with fresh vertices to a multiple of r+1. Each run of
    r+1 edges between consecutive anchors is then routed along the subdivided
    clique edge joining their images. The result is re-verified before being
    returned.
    """
    if not chain_condition_check(graph, r):
        raise InvalidInput("chain condition violated: cannot embed into a subdivided clique")
    step = r + 1
    fresh = graph.n
    anchors: dict[int, int] = {}
    segments: list[tuple[int, ...]] = []

    def anchor(v: int) -> None:
        if v not in anchors:
            anchors[v] = len(anchors)

    for ch in chains(graph):
        seq = list(ch.vertices)
        if ch.kind == "isolated":
            anchor(seq[0])
            continue
        if ch.kind in ("dangling", "path"):
            pad = -ch.length % step
            seq.extend(range(fresh, fresh + pad))
            fresh += pad
        if ch.kind == "cycle" or (ch.kind == "branch" and seq[0] == seq[-1]):
            if ch.length // step < 3:
                raise InvalidInput(f"closed chain of length {ch.length} has no image in K_m^{r}")
        for i in range(0, len(seq) - 1, step):
            segments.append(tuple(seq[i:i + step + 1]))
        for v in seq[::step]:
            anchor(v)

    pairs = [frozenset((seg[0], seg[-1])) for seg in segments]
    if len(set(pairs)) != len(pairs):
        raise InvalidInput("two chains of length r+1 join the same pair of branch vertices")

    m = max(len(anchors), 1)
    target, paths = subdivision_paths(clique(m), dict.fromkeys(clique(m).edges, r))
    image: dict[int, int] = {v: a for v, a in anchors.items()}
    for seg in segments:
        a, b = anchors[seg[0]], anchors[seg[-1]]
        route = paths[norm_edge(a, b)]
        if route[0] != a:
            route = route[::-1]
        for v, w in zip(seg, route):
            image[v] = w
    mapping = tuple(image[v] for v in graph.vertices())
    if not verify_embedding(graph, target, mapping):
        raise InvalidInput("constructed embedding failed verification")
    return Embedding(m, mapping, target)


def verify_embedding(graph: Graph, target: Graph, mapping: tuple[int, ...]) -> bool:
    """Independent check: ``mapping`` is injective and edge-preserving."""
    if len(mapping) != graph.n or len(set(mapping)) != graph.n:
        return False
    if any(not 0 <= x < target.n for x in mapping):
        return False
    return all(target.has_edge(mapping[u], mapping[v]) for u, v in graph.edges)
