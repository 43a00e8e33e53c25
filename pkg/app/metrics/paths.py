"""
Target-conditioned edge and path distances
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from ..core.errors import DimensionMismatch, NoPath, UnknownVertex
from ..core.graphs import EmbeddedGraph
from ..core.vectors import EdgeKey, EmbeddingVector, VertexId
from ..embeddings.similarity import cosine

logger = logging.getLogger(__name__)

# totals equal to this many decimals count as tied
TIE_DECIMALS = 12


class Direction(str, Enum):
    DIRECTED = "directed"
    UNDIRECTED = "undirected"


@dataclass(frozen=True)
class PathResult:
    """
    Best route between two vertices.

    path holds edge keys in traversal order, so the target of each key is the
    source of the next; in undirected mode a key may be the reverse of the
    stored edge it walks along.
    """
    total_distance: float
    path: Tuple[EdgeKey, ...]
    vertices: Tuple[VertexId, ...]
    distances: Tuple[float, ...] = ()


def edge_distance(x: EmbeddingVector, target: EmbeddingVector) -> float:
    """1 - cos(x, target), in [0, 2]"""
    return 1.0 - cosine(x, target)


Arcs = Dict[VertexId, Dict[VertexId, float]]


def _arcs(g: EmbeddedGraph, target: EmbeddingVector, direction: Direction) -> Arcs:
    """Traversable hops u -> v with their edge distance (the cheaper one when two edges qualify)"""
    if target.dim != g.dim:
        raise DimensionMismatch(g.dim, target.dim, "distance target")
    arcs: Arcs = {v: {} for v in g.vertices}

    def _add(u: VertexId, v: VertexId, d: float) -> None:
        current = arcs[u].get(v)
        if current is None or d < current:
            arcs[u][v] = d

    for key, vector in g.edges.items():
        d = edge_distance(vector, target)
        _add(key.source, key.target, d)
        if direction is Direction.UNDIRECTED:
            _add(key.target, key.source, d)
    return arcs


def _check_vertices(g: EmbeddedGraph, *names: VertexId) -> None:
    known = set(g.vertices)
    for name in names:
        if name not in known:
            raise UnknownVertex(name)


def path_distance(
    g: EmbeddedGraph,
    source: VertexId,
    target_vertex: VertexId,
    target: EmbeddingVector,
    direction: Union[Direction, str] = Direction.DIRECTED,
) -> PathResult:
    """
    Minimum sum of edge distances over all routes from source to target_vertex.

    Edge distances are non-negative, so a label-setting search is exact.
    Labels compare as (distance rounded to TIE_DECIMALS, edge count, edge keys),
    so routes whose totals differ only by float rounding tie, and ties go to
    fewer edges and then lexicographic edge-key order. The reported total is
    the unrounded sum of the chosen route.
    """
    direction = Direction(direction)
    _check_vertices(g, source, target_vertex)
    arcs = _arcs(g, target, direction)

    heap: List[Tuple[float, int, Tuple[EdgeKey, ...], float, Tuple[float, ...], VertexId]] = [
        (0.0, 0, (), 0.0, (), source)
    ]
    settled = set()
    while heap:
        _, hops, path, total, parts, u = heapq.heappop(heap)
        if u in settled:
            continue
        settled.add(u)
        if u == target_vertex:
            vertices = (source,) + tuple(key.target for key in path)
            logger.debug(f"path {source} -> {target_vertex}: {total:.6f} over {hops} edges")
            return PathResult(total_distance=total, path=path, vertices=vertices, distances=parts)
        for v, d in arcs[u].items():
            if v not in settled:
                reached = total + d
                heapq.heappush(heap, (round(reached, TIE_DECIMALS), hops + 1, path + (EdgeKey(u, v),), reached, parts + (d,), v))

    raise NoPath(source, target_vertex, direction.value)


def route_distance(
    g: EmbeddedGraph,
    route: Sequence[VertexId],
    target: EmbeddingVector,
    direction: Union[Direction, str] = Direction.DIRECTED,
) -> PathResult:
    """Sum of edge distances along a caller-chosen vertex route"""
    direction = Direction(direction)
    if not route:
        raise UnknownVertex("")
    _check_vertices(g, *route)
    arcs = _arcs(g, target, direction)

    total = 0.0
    path: List[EdgeKey] = []
    parts: List[float] = []
    for u, v in zip(route, route[1:]):
        d = arcs[u].get(v)
        if d is None:
            raise NoPath(u, v, direction.value)
        total += d
        path.append(EdgeKey(u, v))
        parts.append(d)
    return PathResult(total_distance=total, path=tuple(path), vertices=tuple(route), distances=tuple(parts))


def distances_from(
    g: EmbeddedGraph,
    source: VertexId,
    target: EmbeddingVector,
    direction: Union[Direction, str] = Direction.DIRECTED,
) -> Dict[VertexId, float]:
    """Shortest distance from source to every reachable vertex"""
    direction = Direction(direction)
    _check_vertices(g, source)
    arcs = _arcs(g, target, direction)
    index = {name: i for i, name in enumerate(g.vertices)}

    rows, cols, data = [], [], []
    for u, hops in arcs.items():
        for v, d in hops.items():
            if u != v:
                rows.append(index[u])
                cols.append(index[v])
                data.append(d)
    n = len(g.vertices)
    # explicit zeros stay in the sparse structure and count as zero-length edges
    matrix = csr_matrix((np.asarray(data, dtype=np.float64), (rows, cols)), shape=(n, n))
    dist = dijkstra(matrix, directed=True, indices=index[source])
    return {name: float(dist[i]) for name, i in index.items() if np.isfinite(dist[i])}
