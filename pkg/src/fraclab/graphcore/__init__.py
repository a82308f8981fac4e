"""Graph representation, codecs, generators and structural transformations."""

from fraclab.graphcore.chains import (
    Embedding,
    chain_condition_check,
    chains,
    embed_into_subdivided_clique,
    verify_embedding,
)
from fraclab.graphcore.generate import generate
from fraclab.graphcore.transform import (
    check_colouring,
    edge_subgraph,
    enumerate_edge_subsets,
    enumerate_fractures,
    fracture_count,
    fractured_graph,
    lift_colouring,
    lift_colouring_by,
    subdivide,
    subdivision_paths,
    tensor,
)
from fraclab.graphcore.types import ColouredGraph, Edge, EdgeSubset, Fracture, Graph

__all__ = [
    "ColouredGraph", "Edge", "EdgeSubset", "Embedding", "Fracture", "Graph",
    "chain_condition_check", "chains", "check_colouring", "edge_subgraph",
    "embed_into_subdivided_clique", "enumerate_edge_subsets", "enumerate_fractures",
    "fracture_count", "fractured_graph", "generate", "lift_colouring",
    "lift_colouring_by", "subdivide", "subdivision_paths", "tensor", "verify_embedding",
]
