"""Seeded random graphs for property tests and the ``verify`` command."""

from __future__ import annotations

import random

from fraclab.graphcore.types import ColouredGraph, Graph


def rng_for(seed: int, *salt) -> random.Random:
    """Independent stream per (seed, salt) so suites do not perturb each other."""
    return random.Random(repr((seed, *salt)))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(v, rng.randrange(v)) for v in range(1, n)])


def random_surjective_colour(rng: random.Random, k: int, n: int) -> tuple[int, ...]:
    if n < k:
        raise ValueError(f"cannot colour {n} vertices surjectively with {k} colours")
    colour = list(range(k)) + [rng.randrange(k) for _ in range(n - k)]
    rng.shuffle(colour)
    return tuple(colour)


def random_coloured(rng: random.Random, pattern: Graph, max_vertices: int, p: float = 0.5) -> ColouredGraph:
    """Host with a uniform surjective colour map; each pair whose colours are
    adjacent in the pattern becomes an edge with probability p."""
    n = rng.randint(pattern.n, max(pattern.n, max_vertices))
    colour = random_surjective_colour(rng, pattern.n, n)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if pattern.has_edge(colour[u], colour[v]) and rng.random() < p
    ]
    return ColouredGraph(pattern, Graph.from_edges(n, edges), colour)


def random_pattern(rng: random.Random, max_vertices: int, p: float = 0.5) -> Graph:
    return random_graph(rng, rng.randint(1, max_vertices), p)
