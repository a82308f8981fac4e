import random

import pytest

from fraclab.counting import count_hom
from fraclab.errors import InvalidInput
from fraclab.graphcore.generate import clique, complete_bipartite, path
from fraclab.homdp import count_hom_td
from fraclab.invariants import TreeDecomposition, treewidth_exact
from fraclab.sampling import random_graph, random_tree


def test_examples():
    td = TreeDecomposition.from_edges([{0, 1}, {1, 2}], [(0, 1)])
    assert count_hom_td(path(3), td, clique(3)) == 12
    _, td3 = treewidth_exact(clique(3))
    assert count_hom_td(clique(3), td3, complete_bipartite(3, 3)) == 0


def test_trees_match_brute_force():
    rng = random.Random(0)
    for _ in range(50):
        h = random_tree(rng, rng.randint(2, 7))
        g = random_graph(rng, rng.randint(1, 8))
        _, td = treewidth_exact(h)
        assert count_hom_td(h, td, g) == count_hom(h, g)


def test_general_patterns_match_brute_force():
    rng = random.Random(1)
    for _ in range(50):
        h = random_graph(rng, rng.randint(1, 6), rng.random())
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        _, td = treewidth_exact(h)
        assert count_hom_td(h, td, g) == count_hom(h, g)


def test_single_bag_decomposition():
    h = clique(4)
    td = TreeDecomposition.from_edges([set(range(4))], [])
    assert count_hom_td(h, td, clique(5)) == 5 * 4 * 3 * 2


def test_rejects_invalid_decomposition():
    with pytest.raises(InvalidInput):
        count_hom_td(path(3), TreeDecomposition.from_edges([{0, 1}], []), clique(3))
