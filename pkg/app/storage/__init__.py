"""
Graph representations, JSON documents and DOT/TSV export
"""

from .representations import (
    DEFAULT_DENSE_CAP,
    AdjacencyMatrixRep,
    EdgeListRep,
    GraphRepresentation,
    RepresentationKind,
    VectorLabeledEdgeListRep,
    from_representation,
    to_representation,
)
from .labels import LabeledGraph, build_labeled_graph, embed_labeled_graph
from .json_io import (
    read_any_graph_json,
    read_edge_graph_json,
    read_graph_json,
    read_labeled_graph_json,
    read_weighted_graph_json,
    write_any_graph_json,
    write_edge_graph_json,
    write_graph_json,
    write_labeled_graph_json,
    write_weighted_graph_json,
)
from .export import LabelMode, export_dot, export_tsv

__all__ = [
    'DEFAULT_DENSE_CAP',
    'AdjacencyMatrixRep',
    'EdgeListRep',
    'GraphRepresentation',
    'RepresentationKind',
    'VectorLabeledEdgeListRep',
    'from_representation',
    'to_representation',
    'LabeledGraph',
    'build_labeled_graph',
    'embed_labeled_graph',
    'read_any_graph_json',
    'read_edge_graph_json',
    'read_graph_json',
    'read_labeled_graph_json',
    'read_weighted_graph_json',
    'write_any_graph_json',
    'write_edge_graph_json',
    'write_graph_json',
    'write_labeled_graph_json',
    'write_weighted_graph_json',
    'LabelMode',
    'export_dot',
    'export_tsv',
]
