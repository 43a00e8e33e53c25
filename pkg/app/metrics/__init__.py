"""
Edge/path distances and graph similarity
"""

from .paths import (
    Direction,
    PathResult,
    distances_from,
    edge_distance,
    path_distance,
    route_distance,
)
from .comparison import (
    CorrespondenceReport,
    edge_correspondence,
    graph_similarity,
    pairwise_similarity,
)

__all__ = [
    'Direction',
    'PathResult',
    'distances_from',
    'edge_distance',
    'path_distance',
    'route_distance',
    'CorrespondenceReport',
    'edge_correspondence',
    'graph_similarity',
    'pairwise_similarity',
]
