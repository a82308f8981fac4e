"""Graph invariants, exact treewidth and shallow minors."""

from fraclab.invariants.measures import SYMBOLS, InvariantKind, all_invariants, invariant
from fraclab.invariants.minors import is_shallow_minor
from fraclab.invariants.treewidth import TreeDecomposition, decomposition_from_order, treewidth_exact

__all__ = [
    "SYMBOLS", "InvariantKind", "TreeDecomposition", "all_invariants",
    "decomposition_from_order", "invariant", "is_shallow_minor", "treewidth_exact",
]
