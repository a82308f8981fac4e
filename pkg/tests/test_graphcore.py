import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from fraclab import guards
from fraclab.errors import GuardExceeded, InvalidColouring, InvalidInput
from fraclab.graphcore import (
    ColouredGraph,
    EdgeSubset,
    Fracture,
    Graph,
    chain_condition_check,
    check_colouring,
    edge_subgraph,
    embed_into_subdivided_clique,
    enumerate_edge_subsets,
    enumerate_fractures,
    fracture_count,
    fractured_graph,
    generate,
    lift_colouring,
    subdivide,
    tensor,
    verify_embedding,
)
from fraclab.graphcore import io
from fraclab.graphcore.generate import clique, cycle, grid, isolated_free_graphs, matching, paw, path, star, wall
from fraclab.graphcore.transform import bell, set_partitions


def nxg(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


# -- types -----------------------------------------------------------------

def test_graph_rejects_bad_edges():
    with pytest.raises(InvalidInput):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(InvalidInput):
        Graph.from_edges(2, [(0, 2)])


def test_graph_basics():
    g = paw()
    assert g.m == 4 and g.degree(0) == 3
    assert g.incident(0) == ((0, 1), (0, 2), (0, 3))
    sub, keep = g.induced([1, 2, 3])
    assert keep == (1, 2, 3) and sub.edge_list == ((0, 1),)
    assert g.complement().m == 2


def test_colouring_validation():
    k3 = clique(3)
    with pytest.raises(InvalidColouring):
        ColouredGraph(k3, path(3), (0, 3, 1))
    cg = ColouredGraph(k3, Graph.from_edges(2, [(0, 1)]), (0, 0))
    assert check_colouring(cg) == (False, False)
    with pytest.raises(InvalidColouring):
        cg.require_hom()
    ok = ColouredGraph(k3, Graph.from_edges(2, [(0, 1)]), (0, 1))
    assert check_colouring(ok) == (True, False)


# -- io --------------------------------------------------------------------

def test_graph_roundtrip():
    g = wall(3, 4)
    assert io.parse_graph(io.format_graph(g, "wall")) == g


def test_coloured_roundtrip():
    cg = ColouredGraph.identity(paw())
    assert io.parse_coloured(io.format_coloured(cg)) == cg


@pytest.mark.parametrize("text", [
    "e 0 1\n",
    "p 2 1\ne 1 0\n",
    "p 2 2\ne 0 1\n",
    "p 2 1\ne 0 x\n",
    "p 2 1\ne 0 1\nc 0 0\n",
    "p 2 1\np 2 1\ne 0 1\n",
])
def test_parse_graph_errors(text):
    with pytest.raises(InvalidInput):
        io.parse_graph(text)


def test_parse_coloured_needs_every_colour():
    text = "%pattern\np 2 1\ne 0 1\n%host\np 2 1\ne 0 1\nc 0 0\n"
    with pytest.raises(InvalidInput):
        io.parse_coloured(text)


def test_dot_export():
    dot = io.to_dot(path(3), "P")
    assert dot.startswith("graph P {") and "0 -- 1;" in dot


def test_digest_is_stable():
    assert io.digest(clique(3)) == io.digest(Graph.from_edges(3, [(2, 1), (0, 2), (1, 0)]))
    assert io.digest(clique(3)) != io.digest(path(3))


# -- generators ------------------------------------------------------------

def test_generators():
    assert generate("clique", 4).m == 6
    assert generate("matching", 3).n == 6
    assert generate("biclique", 2, 3).m == 6
    assert grid(3).m == 12
    with pytest.raises(InvalidInput):
        generate("clique", 0)
    with pytest.raises(InvalidInput):
        generate("wall", 3)


def test_small_wall_is_four_cycle():
    assert nx.is_isomorphic(nxg(wall(2, 2)), nxg(cycle(4)))


def test_wall_matches_drawn_figure():
    # the drawn W_{4,5}: node (a, b) at column a = 1..5, row b = 1..4
    edges = set()
    for b in range(1, 4):
        edges.add(((1, b), (1, b + 1)))
        edges.add(((5, b), (5, b + 1)))
    for a in range(1, 5):
        for b in range(1, 5):
            edges.add(((a, b), (a + 1, b)))
    edges |= {((3, 1), (3, 2)), ((3, 3), (3, 4)), ((2, 2), (2, 3)), ((4, 2), (4, 3))}
    drawn = nx.Graph(list(edges))
    assert drawn.number_of_nodes() == 20 and drawn.number_of_edges() == 26
    assert nx.is_isomorphic(drawn, nxg(wall(4, 5)))


def test_isolated_free_enumeration_counts():
    # isolated-vertex-free graphs with exactly m edges: 1, 2, 5, 11, 26
    counts = [0] * 6
    for g in isolated_free_graphs(5):
        counts[g.m] += 1
        assert not g.isolated()
    assert counts[1:] == [1, 2, 5, 11, 26]


# -- subdivision and lifting ----------------------------------------------

def test_subdivided_triangle_is_six_cycle():
    assert nx.is_isomorphic(nxg(subdivide(clique(3), 1)), nxg(cycle(6)))


@given(st.integers(1, 5), st.integers(0, 3))
def test_subdivision_sizes(k, r):
    g = clique(k)
    s = subdivide(g, r)
    assert s.n == g.n + r * g.m and s.m == (r + 1) * g.m


def test_lift_identity_is_identity():
    cg = ColouredGraph.identity(paw())
    lifted = lift_colouring(cg, 2)
    assert lifted.colour == tuple(range(lifted.host.n))
    assert lifted.host == lifted.pattern


def test_lift_is_hom_and_respects_orientation():
    k3 = clique(3)
    host = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    cg = ColouredGraph(k3, host, (0, 1, 2, 0, 1, 2))
    for r in range(4):
        lifted = lift_colouring(cg, r)
        assert lifted.is_hom and lifted.is_surjective


# -- fractures -------------------------------------------------------------

@pytest.mark.parametrize("n", range(7))
def test_set_partitions_bell(n):
    parts = list(set_partitions(tuple(range(n))))
    assert len(parts) == bell(n) == len(set(parts))
    if n:
        assert parts[0] == (tuple(range(n)),)
        assert parts[-1] == tuple((i,) for i in range(n))


def test_fracture_counts():
    assert fracture_count(clique(3)) == 8
    assert fracture_count(clique(4)) == 625
    assert len(enumerate_fractures(clique(3))) == 8


def test_fracture_guard():
    with guards.override(fractures=10):
        with pytest.raises(GuardExceeded):
            enumerate_fractures(clique(4))


def test_coarsest_and_finest_fractured_graphs():
    k3 = clique(3)
    fr = enumerate_fractures(k3)
    assert fr[0] == Fracture.coarsest(k3) and fr[-1] == Fracture.finest(k3)
    top = fractured_graph(k3, fr[0])
    assert top.host == k3 and top.colour == (0, 1, 2)
    bottom = fractured_graph(k3, fr[-1])
    assert nx.is_isomorphic(nxg(bottom.host), nxg(matching(3)))
    assert bottom.is_hom and bottom.is_surjective


def test_fracture_validation():
    with pytest.raises(InvalidInput):
        Fracture((((0, 1),),)).validate(clique(2))
    with pytest.raises(InvalidInput):
        Fracture(((((0, 1),),), ((((0, 1), (0, 1))),))).validate(clique(2))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_fractured_graph_structure(seed):
    import random
    rng = random.Random(seed)
    g = rng.choice([paw(), clique(3), star(3), path(4)])
    f = rng.choice(enumerate_fractures(g))
    cg = fractured_graph(g, f)
    assert cg.host.m == g.m
    assert cg.host.n == f.size()
    assert cg.is_hom


# -- tensor and edge subsets ----------------------------------------------

def test_tensor_with_identity_is_neutral():
    k3 = clique(3)
    host = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    cg = ColouredGraph(k3, host, (0, 1, 2, 0, 1, 2))
    prod = tensor(cg, ColouredGraph.identity(k3))
    assert prod.host == host and prod.colour == cg.colour


def test_tensor_rejects_mixed_patterns():
    with pytest.raises(InvalidInput):
        tensor(ColouredGraph.identity(clique(3)), ColouredGraph.identity(path(3)))


def test_edge_subsets():
    subsets = enumerate_edge_subsets(clique(3))
    assert len(subsets) == 8 and subsets[0].members == frozenset()
    assert [len(s.members) for s in subsets] == sorted(len(s.members) for s in subsets)
    cg = edge_subgraph(clique(3), EdgeSubset(clique(3), frozenset({(0, 1)})))
    assert cg.host.m == 1 and cg.colour == (0, 1, 2)
    with pytest.raises(InvalidInput):
        EdgeSubset(path(3), frozenset({(0, 2)}))


# -- chains and embeddings ------------------------------------------------

def test_chain_condition():
    assert chain_condition_check(subdivide(clique(4), 1), 1)
    assert chain_condition_check(subdivide(clique(4), 2), 2)
    assert not chain_condition_check(clique(4), 1)
    assert chain_condition_check(path(7), 2)  # no branch vertices
    assert not chain_condition_check(cycle(5), 1)


def test_embedding_of_subdivided_clique():
    emb = embed_into_subdivided_clique(subdivide(clique(4), 1), 1)
    assert emb.m == 4
    assert verify_embedding(subdivide(clique(4), 1), emb.target, emb.mapping)


@pytest.mark.parametrize("r", [0, 1, 2])
def test_embedding_of_subgraphs_of_subdivided_cliques(r):
    import random
    rng = random.Random(r)
    base = subdivide(clique(5), r)
    for _ in range(20):
        sub = base.with_edges(e for e in base.edge_list if rng.random() < 0.7)
        emb = embed_into_subdivided_clique(sub, r)
        assert verify_embedding(sub, emb.target, emb.mapping)


def test_embedding_rejects_chain_violation():
    with pytest.raises(InvalidInput):
        embed_into_subdivided_clique(clique(4), 1)


def test_verify_embedding_detects_bad_maps():
    t = subdivide(clique(3), 1)
    assert not verify_embedding(path(2), t, (0, 1))
    assert not verify_embedding(path(2), t, (0, 0))
