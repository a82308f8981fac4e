"""Exact counting of homomorphisms, subgraphs and induced subgraphs, together
with the fracture / tensor / subdivision machinery used to interpolate
homomorphism counts from matching and independent-set oracles."""

from fraclab.graphcore import (
    ColouredGraph,
    EdgeSubset,
    Fracture,
    Graph,
)

__version__ = "0.1.0"

__all__ = ["ColouredGraph", "EdgeSubset", "Fracture", "Graph", "__version__"]
