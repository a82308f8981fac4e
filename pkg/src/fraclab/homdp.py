"""Homomorphism counting by dynamic programming over a tree decomposition.

The decomposition is rooted and processed as a nice decomposition: every
child is reached through a chain of forget then introduce steps, and nodes
with several children are joins. A table maps assignments of the current bag
(tuples in sorted-bag order) to the number of extensions to the vertices
already forgotten below.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

from fraclab.graphcore.types import Graph
from fraclab.invariants.treewidth import TreeDecomposition


def _introduce(table, bag: tuple, v: int, pattern: Graph, host: Graph):
    """Add v to the bag; its image must be adjacent to the images of its bag neighbours."""
    new_bag = tuple(sorted((*bag, v)))
    at = new_bag.index(v)
    nbr_pos = [i for i, x in enumerate(bag) if x in pattern.adj[v]]
    out = {}
    for assign, count in table.items():
        cands = None
        for i in nbr_pos:
            a = host.adj[assign[i]]
            cands = a if cands is None else cands & a
        for y in (range(host.n) if cands is None else cands):
            out[assign[:at] + (y,) + assign[at:]] = count
    return new_bag, out


def _forget(table, bag: tuple, v: int):
    at = bag.index(v)
    out = defaultdict(int)
    for assign, count in table.items():
        out[assign[:at] + assign[at + 1:]] += count
    return bag[:at] + bag[at + 1:], dict(out)


def _move(table, bag: tuple, target: frozenset, pattern: Graph, host: Graph):
    for v in [x for x in bag if x not in target]:
        bag, table = _forget(table, bag, v)
    for v in sorted(target - set(bag)):
        bag, table = _introduce(table, bag, v, pattern, host)
    return bag, table


def count_hom_td(pattern: Graph, td: TreeDecomposition, host: Graph) -> int:
    """#Hom(pattern -> host) in time about |bags| * |V(host)|^(width+1)."""
    td.validate(pattern)
    if pattern.n == 0:
        return 1
    root = 0
    parent = {root: None}
    order = [root]
    for x in order:
        for y in sorted(td.tree[x]):
            if y not in parent:
                parent[y] = x
                order.append(y)
    tables = {}
    for x in reversed(order):
        target = td.bags[x]
        acc = None
        for child in (c for c in td.tree[x] if parent.get(c) == x):
            cbag, ctab = tables.pop(child)
            _, ctab = _move(ctab, cbag, target, pattern, host)
            if acc is None:
                acc = ctab
            else:  # join
                acc = {a: c * ctab[a] for a, c in acc.items() if a in ctab}
        if acc is None:
            _, acc = _move({(): 1}, (), target, pattern, host)
        tables[x] = (tuple(sorted(target)), acc)
    bag, table = tables[root]
    _, table = _move(table, bag, frozenset(), pattern, host)
    return table.get((), 0)
