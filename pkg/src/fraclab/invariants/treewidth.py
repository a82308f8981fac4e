"""Exact treewidth via elimination orderings.

For an eliminated set S and a vertex v outside it, Q(S, v) is the set of
vertices outside S + v reachable from v through S; eliminating v after S
creates a bag of size |Q(S, v)| + 1. The width is decided for increasing k by
a memoised search over eliminated sets, starting from a contraction-degeneracy
lower bound and stopping at the greedy min-fill upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from fraclab import guards
from fraclab.errors import InvalidInput
from fraclab.graphcore.types import Graph


@dataclass(frozen=True)
class TreeDecomposition:
    tree: tuple[frozenset[int], ...]   # adjacency over bag indices
    bags: tuple[frozenset[int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    @classmethod
    def from_edges(cls, bags, tree_edges) -> "TreeDecomposition":
        nbrs = [set() for _ in bags]
        for i, j in tree_edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return cls(tuple(frozenset(s) for s in nbrs), tuple(frozenset(b) for b in bags))

    def tree_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nb in enumerate(self.tree) for j in nb if i < j]

    def problems(self, graph: Graph) -> list[str]:
        """Violated decomposition axioms (empty when valid)."""
        out = []
        k = len(self.bags)
        if k == 0:
            return ["no bags"] if graph.n else []
        if any(j == i or i not in self.tree[j] for i in range(k) for j in self.tree[i]):
            out.append("bag adjacency is not symmetric and loop-free")
        if len(self.tree_edges()) != k - 1 or len(_reach(self.tree, {0}, range(k))) != k:
            out.append("bags do not form a tree")
        covered = set().union(*self.bags)
        if any(not 0 <= x < graph.n for x in covered):
            out.append("bag contains a vertex outside the graph")
        if covered != set(graph.vertices()):
            out.append("some vertex lies in no bag")
        for u, v in graph.edge_list:
            if not any(u in b and v in b for b in self.bags):
                out.append(f"edge {(u, v)} lies in no bag")
        for v in graph.vertices():
            holding = [i for i, b in enumerate(self.bags) if v in b]
            if holding and len(_reach(self.tree, {holding[0]}, holding)) != len(holding):
                out.append(f"bags containing vertex {v} are not connected")
        return out

    def validate(self, graph: Graph) -> "TreeDecomposition":
        problems = self.problems(graph)
        if problems:
            raise InvalidInput("invalid tree decomposition: " + "; ".join(problems))
        return self


def _reach(adj, start: set[int], allowed) -> set[int]:
    allowed = set(allowed)
    seen = set(start)
    stack = list(start)
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in allowed and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _q(adj: tuple[int, ...], eliminated: int, v: int) -> int:
    """Bitmask of Q(S, v)."""
    seen = 1 << v
    frontier = 1 << v
    out = 0
    while frontier:
        x = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        nb = adj[x] & ~seen
        seen |= nb
        out |= nb & ~eliminated
        frontier |= nb & eliminated
    return out


def _lower_bound(graph: Graph) -> int:
    """Contraction degeneracy heuristic: contract a min-degree vertex into its
    min-degree neighbour; the largest minimum degree met bounds tw from below."""
    nbrs = {v: set(graph.adj[v]) for v in graph.vertices()}
    best = 0
    while len(nbrs) > 1:
        v = min(nbrs, key=lambda x: (len(nbrs[x]), x))
        best = max(best, len(nbrs[v]))
        if not nbrs[v]:
            del nbrs[v]
            continue
        u = min(nbrs[v], key=lambda x: (len(nbrs[x]), x))
        for w in nbrs.pop(v):
            nbrs[w].discard(v)
            if w != u:
                nbrs[w].add(u)
                nbrs[u].add(w)
    return best


def _min_fill_order(graph: Graph) -> list[int]:
    nbrs = {v: set(graph.adj[v]) for v in graph.vertices()}
    order = []

    def fill(v):
        ns = list(nbrs[v])
        return sum(1 for i, a in enumerate(ns) for b in ns[i + 1:] if b not in nbrs[a])

    while nbrs:
        v = min(nbrs, key=lambda x: (fill(x), len(nbrs[x]), x))
        ns = nbrs.pop(v)
        for a in ns:
            nbrs[a].discard(v)
            nbrs[a] |= ns - {a}
        order.append(v)
    return order


def order_width(graph: Graph, order: list[int]) -> int:
    adj = graph.adj_mask
    eliminated = 0
    width = -1 if graph.n == 0 else 0
    for v in order:
        width = max(width, _q(adj, eliminated, v).bit_count())
        eliminated |= 1 << v
    return width


def decomposition_from_order(graph: Graph, order: list[int]) -> TreeDecomposition:
    """Bag i = {order[i]} + Q(order[:i], order[i]); bag i hangs below the bag of
    the earliest-eliminated vertex of its Q-set (or the last bag)."""
    if graph.n == 0:
        return TreeDecomposition((), ())
    adj = graph.adj_mask
    pos = {v: i for i, v in enumerate(order)}
    eliminated = 0
    bags, edges = [], []
    for i, v in enumerate(order):
        q = _q(adj, eliminated, v)
        eliminated |= 1 << v
        bag = {v} | {w for w in range(graph.n) if q >> w & 1}
        bags.append(bag)
        if i < len(order) - 1:
            later = [pos[w] for w in bag if w != v]
            edges.append((i, min(later) if later else len(order) - 1))
    return TreeDecomposition.from_edges(bags, edges)


def _order_within(graph: Graph, k: int) -> list[int] | None:
    """An elimination order of width <= k, or None."""
    n = graph.n
    adj = graph.adj_mask
    failed: set[int] = set()

    def search(eliminated: int) -> list[int] | None:
        if n - eliminated.bit_count() <= k + 1:
            return [v for v in range(n) if not eliminated >> v & 1]
        if eliminated in failed:
            return None
        for v in range(n):
            if eliminated >> v & 1:
                continue
            if _q(adj, eliminated, v).bit_count() <= k:
                rest = search(eliminated | 1 << v)
                if rest is not None:
                    return [v, *rest]
        failed.add(eliminated)
        return None

    return search(0)


def treewidth_exact(graph: Graph) -> tuple[int, TreeDecomposition]:
    guards.check("treewidth_vertices", graph.n)
    if graph.n == 0:
        return -1, TreeDecomposition((), ())
    greedy = _min_fill_order(graph)
    upper = order_width(graph, greedy)
    order = greedy
    for k in range(_lower_bound(graph), upper):
        found = _order_within(graph, k)
        if found is not None:
            order = found
            break
    td = decomposition_from_order(graph, order).validate(graph)
    return td.width, td
