import itertools
import random

import networkx as nx
import pytest

from fraclab import guards
from fraclab.errors import GuardExceeded, InvalidInput
from fraclab.graphcore import Graph, subdivide
from fraclab.graphcore.generate import clique, complete_bipartite, cycle, grid, path, star, wall
from fraclab.invariants import (
    InvariantKind,
    TreeDecomposition,
    all_invariants,
    invariant,
    is_shallow_minor,
    treewidth_exact,
)
from fraclab.invariants.treewidth import order_width
from fraclab.sampling import random_graph, random_tree


def brute_invariants(g):
    subsets = [s for k in range(g.n + 1) for s in itertools.combinations(range(g.n), k)]
    clique_ok = lambda s: all(g.has_edge(a, b) for a, b in itertools.combinations(s, 2))  # noqa: E731
    indep = lambda s: not any(g.has_edge(a, b) for a, b in itertools.combinations(s, 2))  # noqa: E731
    out = {"omega": max(len(s) for s in subsets if clique_ok(s)), "alpha": max(len(s) for s in subsets if indep(s))}
    beta = beta_ind = 0
    for a in subsets:
        for b in subsets:
            if len(a) == len(b) and not set(a) & set(b) and all(g.has_edge(x, y) for x in a for y in b):
                beta = max(beta, len(a))
                if indep(a) and indep(b):
                    beta_ind = max(beta_ind, len(a))
    out["beta"], out["beta_ind"] = beta, beta_ind
    m = m_ind = 0
    for k in range(1, g.m + 1):
        for s in itertools.combinations(g.edge_list, k):
            if len({x for e in s for x in e}) < 2 * k:
                continue
            m = max(m, k)
            if not any(g.has_edge(x, y) for e, f in itertools.combinations(s, 2) for x in e for y in f):
                m_ind = max(m_ind, k)
    out["m"], out["m_ind"] = m, m_ind
    return out


def test_invariant_examples():
    assert invariant(clique(5), "clique") == 5
    assert invariant(path(4), InvariantKind.INDUCED_MATCHING) == 1
    k33 = complete_bipartite(3, 3)
    assert invariant(k33, "induced_biclique") == 3
    assert invariant(k33, "clique") == 2
    assert invariant(Graph.empty(4), "biclique") == 0


def test_invariants_match_brute_force():
    rng = random.Random(0)
    for _ in range(80):
        g = random_graph(rng, rng.randint(0, 7), rng.random())
        assert all_invariants(g) == brute_invariants(g)


def test_invariant_relations():
    rng = random.Random(1)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 14), rng.random())
        v = all_invariants(g)
        assert v["m_ind"] <= v["m"] and v["beta_ind"] <= v["beta"]
        assert (v["omega"] >= 2) == (g.m > 0)


def test_matching_number_matches_networkx():
    rng = random.Random(2)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 20), rng.random() * 0.5)
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        assert invariant(g, "matching") == len(nx.max_weight_matching(h, maxcardinality=True))


def test_invariant_guard_and_bad_kind():
    with pytest.raises(GuardExceeded):
        invariant(Graph.empty(21), "clique")
    with pytest.raises(InvalidInput):
        invariant(clique(2), "girth")


# -- treewidth -------------------------------------------------------------

@pytest.mark.parametrize("k", [2, 3, 4])
def test_grid_treewidth(k):
    width, td = treewidth_exact(grid(k))
    assert width == k and td.width == k
    assert td.problems(grid(k)) == []


@pytest.mark.parametrize("n", range(1, 9))
def test_clique_treewidth(n):
    assert treewidth_exact(clique(n))[0] == n - 1


def test_tree_treewidth():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(2, 18)
        assert treewidth_exact(random_tree(rng, n))[0] == 1


def test_treewidth_matches_brute_force_orders():
    rng = random.Random(4)
    for _ in range(60):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, rng.random())
        best = min(order_width(g, list(p)) for p in itertools.permutations(range(n)))
        width, td = treewidth_exact(g)
        assert width == best
        assert td.problems(g) == [] and td.width == width


def test_treewidth_of_small_families():
    assert treewidth_exact(cycle(9))[0] == 2
    assert treewidth_exact(subdivide(clique(4), 1))[0] == 3
    assert treewidth_exact(wall(3, 5))[0] == 3
    assert treewidth_exact(Graph.empty(3))[0] == 0


def test_decomposition_validation():
    g = path(3)
    good = TreeDecomposition.from_edges([{0, 1}, {1, 2}], [(0, 1)])
    assert good.problems(g) == []
    assert TreeDecomposition.from_edges([{0, 1}, {2}], [(0, 1)]).problems(g)
    assert TreeDecomposition.from_edges([{0, 1}, {2}, {1, 2}], [(0, 1), (1, 2)]).problems(g)
    assert TreeDecomposition.from_edges([{0, 1}, {1, 2}], []).problems(g)
    with pytest.raises(InvalidInput):
        TreeDecomposition.from_edges([{0}], []).validate(g)


def test_treewidth_guard():
    with pytest.raises(GuardExceeded):
        treewidth_exact(Graph.empty(19))
    with guards.override(treewidth_vertices=20):
        assert treewidth_exact(wall(4, 5))[0] >= 2


# -- shallow minors --------------------------------------------------------

def test_depth_zero_is_subgraph():
    assert is_shallow_minor(path(3), cycle(5), 0)
    assert not is_shallow_minor(clique(3), cycle(6), 0)


def test_shallow_minor_examples():
    assert is_shallow_minor(clique(3), cycle(6), 1)
    assert not is_shallow_minor(clique(4), cycle(8), 8)
    assert is_shallow_minor(clique(3), subdivide(clique(3), 1), 1)
    assert not is_shallow_minor(clique(3), subdivide(clique(3), 2), 0)


def test_depth_limits_part_radius():
    # K_3 from C_9: parts must be paths of 3 vertices, radius 1
    assert is_shallow_minor(clique(3), cycle(9), 1)
    assert not is_shallow_minor(clique(3), cycle(9), 0)
    # K_3 from C_7 needs a part of 3+ vertices; a path of 5 vertices has radius 2
    assert is_shallow_minor(clique(3), cycle(7), 1)


def test_shallow_minor_guard():
    with pytest.raises(GuardExceeded):
        is_shallow_minor(clique(3), cycle(10), 1)
