"""Immutable graph types shared by every module.

Vertices are the dense integers ``0..n-1``; an edge is a sorted pair ``(u, v)``
with ``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from fraclab.errors import InvalidColouring, InvalidInput

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise InvalidInput(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInput("vertex count must be non-negative")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise InvalidInput(f"bad edge {e} for a graph on {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset(norm_edge(int(u), int(v)) for u, v in edges))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, frozenset())

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks, for the exhaustive searches."""
        return tuple(sum(1 << w for w in nb) for nb in self.adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and ((u, v) if u < v else (v, u)) in self.edges

    def incident(self, v: int) -> tuple[Edge, ...]:
        """E_G(v) in sorted order."""
        return tuple(sorted(norm_edge(v, w) for w in self.adj[v]))

    def isolated(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """G[S], relabelled densely; also returns new-label -> old-label."""
        keep = tuple(sorted(set(vertices)))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph.from_edges(len(keep), edges), keep

    def with_edges(self, edges: Iterable[Edge]) -> "Graph":
        """G[A]: same vertex set, edge set A (must be a subset of E(G))."""
        sub = frozenset(norm_edge(u, v) for u, v in edges)
        if not sub <= self.edges:
            raise InvalidInput("edge set is not a subset of E(G)")
        return Graph(self.n, sub)

    def complement(self) -> "Graph":
        return Graph.from_edges(
            self.n,
            [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)],
        )

    def is_subgraph_of(self, other: "Graph") -> bool:
        """Label-preserving containment (same labels, fewer vertices/edges)."""
        return self.n <= other.n and self.edges <= other.edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edge_list)})"


@dataclass(frozen=True)
class ColouredGraph:
    """An H-coloured graph (G, c): ``colour[u]`` is the pattern vertex of host vertex ``u``.

    Construction only checks shapes; ``is_hom`` / ``is_surjective`` report the
    two properties the reductions care about, and ``require_hom``
    enforces the first.
    """

    pattern: Graph
    host: Graph
    colour: tuple[int, ...]

    def __post_init__(self):
        colour = tuple(int(c) for c in self.colour)
        object.__setattr__(self, "colour", colour)
        if len(colour) != self.host.n:
            raise InvalidColouring(
                f"colour map has {len(colour)} entries for {self.host.n} host vertices"
            )
        for u, c in enumerate(colour):
            if not 0 <= c < self.pattern.n:
                raise InvalidColouring(f"vertex {u} has colour {c} outside the pattern")

    @classmethod
    def identity(cls, pattern: Graph, host: Graph | None = None) -> "ColouredGraph":
        host = pattern if host is None else host
        if host.n != pattern.n:
            raise InvalidInput("identity colouring needs equal vertex sets")
        return cls(pattern, host, tuple(range(pattern.n)))

    @classmethod
    def from_mapping(cls, pattern: Graph, host: Graph, colour: Mapping[int, int]) -> "ColouredGraph":
        return cls(pattern, host, tuple(colour[u] for u in range(host.n)))

    @cached_property
    def is_hom(self) -> bool:
        c = self.colour
        return all(self.pattern.has_edge(c[u], c[v]) for u, v in self.host.edges)

    @cached_property
    def is_surjective(self) -> bool:
        return len(set(self.colour)) == self.pattern.n

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Host vertices grouped by colour: ``classes[v]`` is c^{-1}(v)."""
        out: list[list[int]] = [[] for _ in range(self.pattern.n)]
        for u, c in enumerate(self.colour):
            out[c].append(u)
        return tuple(tuple(x) for x in out)

    def edge_colour(self, e: Edge) -> Edge:
        return norm_edge(self.colour[e[0]], self.colour[e[1]])

    def require_hom(self) -> "ColouredGraph":
        if not self.is_hom:
            bad = next(e for e in self.host.edge_list if not self.pattern.has_edge(*map(self.colour.__getitem__, e)))
            raise InvalidColouring(f"colour is not a homomorphism: host edge {bad} maps to a non-edge")
        return self

    def require_surjective(self) -> "ColouredGraph":
        if not self.is_surjective:
            missing = sorted(set(range(self.pattern.n)) - set(self.colour))
            raise InvalidColouring(f"colour is not surjective: pattern vertices {missing} unused")
        return self


@dataclass(frozen=True)
class Fracture:
    """Per-vertex partitions of incident edge sets, in canonical form.

    ``blocks[v]`` is a tuple of blocks, each a sorted tuple of edges; blocks
    are ordered by their smallest edge.
    """

    blocks: tuple[tuple[tuple[Edge, ...], ...], ...]

    @classmethod
    def canonical(cls, blocks: Iterable[Iterable[Iterable[Sequence[int]]]]) -> "Fracture":
        out = []
        for part in blocks:
            bs = [tuple(sorted(norm_edge(*e) for e in block)) for block in part]
            out.append(tuple(sorted(bs)))
        return cls(tuple(out))

    @classmethod
    def coarsest(cls, graph: Graph) -> "Fracture":
        return cls(tuple((graph.incident(v),) if graph.adj[v] else () for v in graph.vertices()))

    @classmethod
    def finest(cls, graph: Graph) -> "Fracture":
        return cls(tuple(tuple((e,) for e in graph.incident(v)) for v in graph.vertices()))

    def validate(self, graph: Graph) -> "Fracture":
        if len(self.blocks) != graph.n:
            raise InvalidInput(f"fracture has {len(self.blocks)} parts for {graph.n} vertices")
        for v, part in enumerate(self.blocks):
            flat = [e for block in part for e in block]
            if any(not block for block in part):
                raise InvalidInput(f"empty block at vertex {v}")
            if sorted(flat) != list(graph.incident(v)):
                raise InvalidInput(f"blocks at vertex {v} do not partition its incident edges")
            if part != tuple(sorted(tuple(sorted(b)) for b in part)):
                raise InvalidInput(f"blocks at vertex {v} are not in canonical form")
        return self

    def block_of(self, v: int, e: Edge) -> int:
        for i, block in enumerate(self.blocks[v]):
            if e in block:
                return i
        raise KeyError((v, e))

    def size(self) -> int:
        return sum(len(p) for p in self.blocks)


@dataclass(frozen=True)
class EdgeSubset:
    pattern: Graph
    members: frozenset[Edge]

    def __post_init__(self):
        members = frozenset(norm_edge(*e) for e in self.members)
        object.__setattr__(self, "members", members)
        if not members <= self.pattern.edges:
            raise InvalidInput("edge subset is not contained in E(pattern)")

    def sorted_members(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.members))
