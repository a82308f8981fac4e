import itertools
import math
import random

import networkx as nx
import pytest
from networkx.algorithms import isomorphism

from fraclab import guards
from fraclab.counting import (
    automorphism_count,
    count_colour_preserving,
    count_colourful_indsets,
    count_colourful_matchings,
    count_cp_hom,
    count_hom,
    count_indsets,
    count_indsub,
    count_matchings,
    count_sub,
    has_subgraph,
)
from fraclab.errors import GuardExceeded
from fraclab.graphcore import ColouredGraph, Fracture, Graph, fractured_graph
from fraclab.graphcore.generate import clique, complete_bipartite, cycle, independent, matching, path
from fraclab.sampling import random_coloured, random_graph, random_pattern


def nxg(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def brute_hom(h, g, colour_of=None):
    total = 0
    for phi in itertools.product(range(g.n), repeat=h.n):
        if all(g.has_edge(phi[u], phi[v]) for u, v in h.edges):
            if colour_of is None or all(colour_of(v, phi[v]) for v in range(h.n)):
                total += 1
    return total


def test_hom_examples():
    g = complete_bipartite(2, 3)
    assert count_hom(clique(2), g) == 2 * g.m
    assert count_hom(clique(3), g) == 0
    assert count_hom(path(3), clique(3)) == 12


def test_hom_matches_brute_force():
    rng = random.Random(0)
    for _ in range(60):
        h = random_graph(rng, rng.randint(1, 4))
        g = random_graph(rng, rng.randint(1, 5))
        assert count_hom(h, g) == brute_hom(h, g)


def test_hom_guard():
    with pytest.raises(GuardExceeded):
        count_hom(clique(9), clique(9))


def test_cp_hom_examples():
    for h in (clique(3), path(4), complete_bipartite(2, 2)):
        assert count_cp_hom(ColouredGraph.identity(h)) == 1
    # colour class of vertex 2 empty
    cg = ColouredGraph(clique(3), Graph.from_edges(2, [(0, 1)]), (0, 1))
    assert count_cp_hom(cg) == 0
    # C_6 coloured twice around K_3 is bipartite, so it has no triangle at all
    c6 = ColouredGraph(clique(3), cycle(6), (0, 1, 2, 0, 1, 2))
    assert count_cp_hom(c6) == 0 == count_hom(clique(3), cycle(6))


def test_cp_hom_matches_brute_force():
    rng = random.Random(1)
    for _ in range(60):
        pattern = random_pattern(rng, 4)
        cg = random_coloured(rng, pattern, 6)
        assert count_cp_hom(cg) == brute_hom(pattern, cg.host, lambda v, x: cg.colour[x] == v)


def test_sub_matches_networkx():
    rng = random.Random(2)
    for _ in range(40):
        h = random_graph(rng, rng.randint(1, 4))
        g = random_graph(rng, rng.randint(1, 6))
        gm = isomorphism.GraphMatcher(nxg(g), nxg(h))
        induced = sum(1 for _ in gm.subgraph_isomorphisms_iter())
        mono = sum(1 for _ in gm.subgraph_monomorphisms_iter())
        aut = automorphism_count(h)
        assert count_indsub(h, g) == induced // aut
        assert count_sub(h, g) == mono // aut


def test_sub_examples():
    g = cycle(5)
    assert count_sub(clique(2), g) == 5
    assert count_sub(matching(2), path(4)) == 1
    assert count_indsub(clique(2), path(3)) == 2
    assert count_indsub(independent(2), clique(3)) == 0
    assert has_subgraph(cycle(4), complete_bipartite(2, 2))
    assert not has_subgraph(clique(3), complete_bipartite(3, 3))


def test_automorphisms():
    assert automorphism_count(clique(4)) == 24
    assert automorphism_count(path(3)) == 2
    assert automorphism_count(cycle(6)) == 12


def brute_matchings(g, k):
    return sum(
        1 for s in itertools.combinations(g.edge_list, k)
        if len({x for e in s for x in e}) == 2 * k
    )


def brute_indsets(g, k):
    return sum(
        1 for s in itertools.combinations(range(g.n), k)
        if not any(g.has_edge(a, b) for a, b in itertools.combinations(s, 2))
    )


def test_matchings_and_indsets():
    assert count_matchings(cycle(6), 3) == 2
    assert count_matchings(cycle(6), 1) == 6
    assert count_indsets(clique(5), 2) == 0
    rng = random.Random(3)
    for _ in range(40):
        g = random_graph(rng, rng.randint(0, 8))
        k = rng.randint(0, 4)
        assert count_matchings(g, k) == brute_matchings(g, k)
        assert count_indsets(g, k) == brute_indsets(g, k)


def test_enumeration_guard():
    with guards.override(enumeration=10):
        with pytest.raises(GuardExceeded):
            count_indsets(Graph.empty(10), 5)


def brute_colourful_matchings(cg):
    k = cg.pattern.m
    total = 0
    for s in itertools.combinations(cg.host.edge_list, k):
        if len({x for e in s for x in e}) == 2 * k and len({cg.edge_colour(e) for e in s}) == k:
            total += 1
    return total


def brute_colourful_indsets(cg):
    k = cg.pattern.n
    total = 0
    for s in itertools.combinations(range(cg.host.n), k):
        if len({cg.colour[v] for v in s}) == k and not any(cg.host.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
            total += 1
    return total


def test_colourful_examples():
    k2 = clique(2)
    host = complete_bipartite(2, 3)
    cg = ColouredGraph(k2, host, (0, 0, 1, 1, 1))
    assert count_colourful_matchings(cg) == host.m
    bottom = fractured_graph(clique(3), Fracture.finest(clique(3)))
    assert count_colourful_matchings(bottom) == 1
    assert count_colourful_indsets(ColouredGraph.identity(path(3))) == 0
    assert count_colourful_indsets(ColouredGraph(path(3), Graph.empty(3), (0, 1, 2))) == 1


def test_colourful_indsets_on_wrapped_six_cycle():
    # C_6 coloured onto the path 0-1-2 by 0,1,2,1,0,1
    cg = ColouredGraph(path(3), cycle(6), (0, 1, 2, 1, 0, 1))
    assert cg.is_hom
    # colour 2 forces vertex 2, so colour 1 must be 5, which blocks both colour-0 vertices
    assert count_colourful_indsets(cg) == brute_colourful_indsets(cg) == 0


def test_colourful_counts_match_brute_force():
    rng = random.Random(4)
    for _ in range(60):
        pattern = random_pattern(rng, 4)
        cg = random_coloured(rng, pattern, 8)
        assert count_colourful_matchings(cg) == brute_colourful_matchings(cg)
        assert count_colourful_indsets(cg) == brute_colourful_indsets(cg)


def test_colour_preserving_multiplicativity_example():
    from fraclab.graphcore import tensor
    rng = random.Random(5)
    pattern = clique(3)
    f, a, b = (random_coloured(rng, pattern, 6, p=0.8) for _ in range(3))
    assert count_colour_preserving(f, tensor(a, b)) == count_colour_preserving(f, a) * count_colour_preserving(f, b)
