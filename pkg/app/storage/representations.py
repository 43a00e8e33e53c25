"""
Physical encodings of an embedded-graph: adjacency matrix, edge list and
vector-labeled edge list (VLE).

All three convert losslessly back to an EmbeddedGraph. The list encodings
carry isolated vertices explicitly; VLE shares one table row between edges
whose vectors are bitwise identical, and is a storage encoding only: loading
always materializes one vector per edge.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple, Union

import numpy as np

from ..core.errors import DimensionMismatch, InvalidVectorReference, TooLargeForDense
from ..core.graphs import EmbeddedGraph, build_embedded_graph, isolated_vertices
from ..core.vectors import EdgeKey, EmbeddingVector, VertexId

logger = logging.getLogger(__name__)

DEFAULT_DENSE_CAP = 4096
# payload size of one vertex reference in the list encodings
VERTEX_REF_BYTES = 8


class RepresentationKind(str, Enum):
    ADJACENCY = "adjacency"
    EDGE_LIST = "edge_list"
    VLE = "vle"


@dataclass(frozen=True, eq=False)
class AdjacencyMatrixRep:
    """N_v x N_v presence matrix plus an N_v x N_v x d vector tensor"""
    vertex_order: Tuple[VertexId, ...]
    presence: np.ndarray
    vectors: np.ndarray
    dim: int
    _index: Dict[VertexId, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = len(self.vertex_order)
        if self.presence.shape != (n, n) or self.vectors.shape != (n, n, self.dim):
            raise DimensionMismatch(n, self.presence.shape[0], "adjacency matrix shape")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertex_order)})

    def has_edge(self, source: VertexId, target: VertexId) -> bool:
        """Constant-time presence check"""
        return bool(self.presence[self._index[source], self._index[target]])

    @property
    def nbytes(self) -> int:
        return int(self.presence.nbytes + self.vectors.nbytes)


@dataclass(frozen=True)
class EdgeListRep:
    rows: Tuple[Tuple[VertexId, VertexId, EmbeddingVector], ...]
    isolated_vertices: Tuple[VertexId, ...]
    dim: int

    @property
    def nbytes(self) -> int:
        per_row = 2 * VERTEX_REF_BYTES + self.dim * 8
        return len(self.rows) * per_row + len(self.isolated_vertices) * VERTEX_REF_BYTES


@dataclass(frozen=True)
class VectorLabeledEdgeListRep:
    rows: Tuple[Tuple[VertexId, VertexId, int], ...]
    vector_table: Tuple[EmbeddingVector, ...]
    isolated_vertices: Tuple[VertexId, ...]
    dim: int

    @property
    def nbytes(self) -> int:
        per_row = 3 * VERTEX_REF_BYTES
        return (len(self.rows) * per_row
                + len(self.vector_table) * self.dim * 8
                + len(self.isolated_vertices) * VERTEX_REF_BYTES)


GraphRepresentation = Union[AdjacencyMatrixRep, EdgeListRep, VectorLabeledEdgeListRep]


# =========================
# EmbeddedGraph -> representation
# =========================

def _to_adjacency(g: EmbeddedGraph, dense_cap: int) -> AdjacencyMatrixRep:
    n = len(g.vertices)
    if n > dense_cap:
        raise TooLargeForDense(n, dense_cap)
    index = {v: i for i, v in enumerate(g.vertices)}
    presence = np.zeros((n, n), dtype=bool)
    vectors = np.zeros((n, n, g.dim), dtype=np.float64)
    for key, vector in g.edges.items():
        i, j = index[key.source], index[key.target]
        presence[i, j] = True
        vectors[i, j] = vector.array
    return AdjacencyMatrixRep(vertex_order=g.vertices, presence=presence, vectors=vectors, dim=g.dim)


def _to_edge_list(g: EmbeddedGraph) -> EdgeListRep:
    rows = tuple((key.source, key.target, vector) for key, vector in g.edges.items())
    return EdgeListRep(rows=rows, isolated_vertices=isolated_vertices(g), dim=g.dim)


def _to_vle(g: EmbeddedGraph) -> VectorLabeledEdgeListRep:
    table: List[EmbeddingVector] = []
    ids: Dict[EmbeddingVector, int] = {}
    rows = []
    for key, vector in g.edges.items():
        # EmbeddingVector hashes and compares bitwise
        vector_id = ids.get(vector)
        if vector_id is None:
            vector_id = ids[vector] = len(table)
            table.append(vector)
        rows.append((key.source, key.target, vector_id))
    logger.debug(f"vle: {len(rows)} edges share {len(table)} vectors")
    return VectorLabeledEdgeListRep(
        rows=tuple(rows),
        vector_table=tuple(table),
        isolated_vertices=isolated_vertices(g),
        dim=g.dim,
    )


def to_representation(
    g: EmbeddedGraph,
    kind: Union[RepresentationKind, str],
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> GraphRepresentation:
    kind = RepresentationKind(kind)
    if kind is RepresentationKind.ADJACENCY:
        return _to_adjacency(g, dense_cap)
    if kind is RepresentationKind.EDGE_LIST:
        return _to_edge_list(g)
    return _to_vle(g)


# =========================
# representation -> EmbeddedGraph
# =========================

def _vertices_of(rows, isolated: Tuple[VertexId, ...]) -> List[VertexId]:
    names = dict.fromkeys(isolated)
    for row in rows:
        names.setdefault(row[0])
        names.setdefault(row[1])
    return list(names)


def from_representation(rep: GraphRepresentation) -> EmbeddedGraph:
    if isinstance(rep, AdjacencyMatrixRep):
        edges = [
            (EdgeKey(rep.vertex_order[i], rep.vertex_order[j]), rep.vectors[i, j])
            for i, j in np.argwhere(rep.presence)
        ]
        return build_embedded_graph(rep.vertex_order, edges, dim=rep.dim)

    if isinstance(rep, EdgeListRep):
        edges = [((source, target), vector) for source, target, vector in rep.rows]
        return build_embedded_graph(_vertices_of(rep.rows, rep.isolated_vertices), edges, dim=rep.dim)

    edges = []
    for source, target, vector_id in rep.rows:
        if not 0 <= vector_id < len(rep.vector_table):
            raise InvalidVectorReference(vector_id, len(rep.vector_table))
        edges.append(((source, target), rep.vector_table[vector_id]))
    return build_embedded_graph(_vertices_of(rep.rows, rep.isolated_vertices), edges, dim=rep.dim)
