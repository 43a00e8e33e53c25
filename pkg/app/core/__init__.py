"""
Domain types for embedded-, weighted- and edge-graphs
"""

from .errors import (
    EmbeddedGraphError,
    GraphValidationError,
    DimensionMismatch,
    DuplicateEdge,
    DuplicateVertex,
    UnknownEndpoint,
    ZeroVector,
    NonFiniteComponent,
)
from .vectors import EdgeKey, EmbeddingVector, VertexId, as_vector
from .graphs import (
    AnyGraph,
    EdgeGraph,
    EmbeddedGraph,
    WeightedGraph,
    build_edge_graph,
    build_embedded_graph,
    build_weighted_graph,
    graph_stats,
    isolated_vertices,
    symmetrize,
)

__all__ = [
    'EmbeddedGraphError',
    'GraphValidationError',
    'DimensionMismatch',
    'DuplicateEdge',
    'DuplicateVertex',
    'UnknownEndpoint',
    'ZeroVector',
    'NonFiniteComponent',
    'EdgeKey',
    'EmbeddingVector',
    'VertexId',
    'as_vector',
    'AnyGraph',
    'EdgeGraph',
    'EmbeddedGraph',
    'WeightedGraph',
    'build_edge_graph',
    'build_embedded_graph',
    'build_weighted_graph',
    'graph_stats',
    'isolated_vertices',
    'symmetrize',
]
