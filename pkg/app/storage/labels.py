"""
Token-labeled graphs: edges named by a word, resolved to vectors through a model
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Mapping, Tuple

from ..core.graphs import EmbeddedGraph, frozen_edge_map, validate_edge_key, validate_vertices, build_embedded_graph
from ..core.vectors import EdgeKey, VertexId
from ..embeddings.store import EmbeddingStore, lookup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabeledGraph:
    vertices: Tuple[VertexId, ...]
    edges: Mapping[EdgeKey, str]


def build_labeled_graph(vertices: Iterable[VertexId], edges: Iterable[Tuple[Tuple[VertexId, VertexId], str]]) -> LabeledGraph:
    names = validate_vertices(vertices)
    known = set(names)
    seen = set()
    tokens = {}
    for edge, token in edges:
        key = validate_edge_key(edge, known, seen)
        tokens[key] = token
    return LabeledGraph(vertices=names, edges=frozen_edge_map(tokens))


def embed_labeled_graph(lg: LabeledGraph, store: EmbeddingStore) -> EmbeddedGraph:
    """Replace every edge token by its word vector; unknown tokens raise UnknownToken"""
    edges = [(key, lookup(store, token)) for key, token in lg.edges.items()]
    logger.info(f"embedded {len(edges)} token-labeled edges at dim {store.dim}")
    return build_embedded_graph(lg.vertices, edges, dim=store.dim)
