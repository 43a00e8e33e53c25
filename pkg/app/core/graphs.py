"""
The three graph kinds and their validated constructors.

An embedded-graph G=(V,E,X) labels each directed edge with a d-dimensional
vector, a weighted-graph G=(V,E,W) with a real weight, and an edge-graph
G=(V,E) only records which ordered pairs are connected. All three are
immutable values: vertices iterate sorted by name, edges sorted by
(source, target), and two graphs built from the same input compare equal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Set, Tuple, Union

from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    InvalidVertex,
    NonFiniteWeight,
    UnknownEndpoint,
    UnspecifiedDimension,
)
from .vectors import EdgeKey, EmbeddingVector, VertexId, as_vector, check_dim

EdgeLike = Union[EdgeKey, Tuple[VertexId, VertexId]]


@dataclass(frozen=True)
class EdgeGraph:
    vertices: Tuple[VertexId, ...]
    edges: Tuple[EdgeKey, ...]

    def has_edge(self, source: VertexId, target: VertexId) -> bool:
        return EdgeKey(source, target) in self.edges


@dataclass(frozen=True)
class WeightedGraph:
    vertices: Tuple[VertexId, ...]
    edges: Mapping[EdgeKey, float]

    def weight(self, source: VertexId, target: VertexId) -> float:
        return self.edges[EdgeKey(source, target)]


@dataclass(frozen=True)
class EmbeddedGraph:
    vertices: Tuple[VertexId, ...]
    edges: Mapping[EdgeKey, EmbeddingVector]
    dim: int

    def vector(self, source: VertexId, target: VertexId) -> EmbeddingVector:
        return self.edges[EdgeKey(source, target)]

    def edges_by_vertex(self) -> Dict[VertexId, List[EdgeKey]]:
        """Outgoing edge keys per vertex, every vertex present"""
        out: Dict[VertexId, List[EdgeKey]] = {v: [] for v in self.vertices}
        for key in self.edges:
            out[key.source].append(key)
        return out


AnyGraph = Union[EmbeddedGraph, WeightedGraph, EdgeGraph]


# =========================
# Shared validation
# =========================

def validate_vertices(vertices: Iterable[VertexId]) -> Tuple[VertexId, ...]:
    seen: Set[VertexId] = set()
    for name in vertices:
        if not isinstance(name, str) or not name:
            raise InvalidVertex(name)
        if name in seen:
            raise DuplicateVertex(name)
        seen.add(name)
    return tuple(sorted(seen))


def validate_edge_key(edge: EdgeLike, known: Set[VertexId], seen: Set[EdgeKey]) -> EdgeKey:
    key = EdgeKey(*edge)
    for endpoint in key:
        if endpoint not in known:
            raise UnknownEndpoint(key.source, key.target, endpoint)
    if key in seen:
        raise DuplicateEdge(key.source, key.target)
    seen.add(key)
    return key


def frozen_edge_map(items: Dict[EdgeKey, object]) -> Mapping:
    return MappingProxyType({key: items[key] for key in sorted(items)})


# =========================
# Constructors
# =========================

def build_embedded_graph(
    vertices: Iterable[VertexId],
    edges: Iterable[Tuple[EdgeLike, Union[EmbeddingVector, Iterable[float]]]],
    dim: Optional[int] = None,
) -> EmbeddedGraph:
    """
    Build a validated embedded-graph.

    dim is inferred from the first edge vector when not given; a graph
    without edges needs it explicitly.
    """
    names = validate_vertices(vertices)
    known = set(names)
    seen: Set[EdgeKey] = set()
    labelled: Dict[EdgeKey, EmbeddingVector] = {}

    for edge, raw in edges:
        key = validate_edge_key(edge, known, seen)
        vector = as_vector(raw)
        if dim is None:
            dim = vector.dim
        check_dim(vector, dim, f"edge {key.source!r} -> {key.target!r}")
        labelled[key] = vector

    if dim is None or dim < 1:
        raise UnspecifiedDimension()
    return EmbeddedGraph(vertices=names, edges=frozen_edge_map(labelled), dim=int(dim))


def build_weighted_graph(
    vertices: Iterable[VertexId],
    edges: Iterable[Tuple[EdgeLike, float]],
) -> WeightedGraph:
    names = validate_vertices(vertices)
    known = set(names)
    seen: Set[EdgeKey] = set()
    weights: Dict[EdgeKey, float] = {}

    for edge, raw in edges:
        key = validate_edge_key(edge, known, seen)
        weight = float(raw)
        if not math.isfinite(weight):
            raise NonFiniteWeight(key.source, key.target, weight)
        weights[key] = weight

    return WeightedGraph(vertices=names, edges=frozen_edge_map(weights))


def build_edge_graph(vertices: Iterable[VertexId], edges: Iterable[EdgeLike]) -> EdgeGraph:
    names = validate_vertices(vertices)
    known = set(names)
    seen: Set[EdgeKey] = set()
    for edge in edges:
        validate_edge_key(edge, known, seen)
    return EdgeGraph(vertices=names, edges=tuple(sorted(seen)))


# =========================
# Derived values
# =========================

def graph_stats(g: AnyGraph) -> Tuple[int, int, Optional[int]]:
    """(N_v, N_e, dim); dim is None for weighted and edge graphs"""
    dim = g.dim if isinstance(g, EmbeddedGraph) else None
    return len(g.vertices), len(g.edges), dim


def symmetrize(g: EmbeddedGraph) -> EmbeddedGraph:
    """Add the reverse of every edge whose reverse is absent, with the same vector"""
    edges: Dict[EdgeKey, EmbeddingVector] = dict(g.edges)
    for key, vector in g.edges.items():
        edges.setdefault(key.reversed(), vector)
    return build_embedded_graph(g.vertices, edges.items(), dim=g.dim)


def isolated_vertices(g: AnyGraph) -> Tuple[VertexId, ...]:
    """Vertices that are no edge's endpoint, sorted"""
    touched: Set[VertexId] = set()
    for key in g.edges:
        touched.update(key)
    return tuple(v for v in g.vertices if v not in touched)
