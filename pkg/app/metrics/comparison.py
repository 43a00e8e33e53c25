"""
Graph similarity: mean cosine over corresponding edges
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Mapping, Optional, Tuple

from ..core.errors import DimensionMismatch, NoCorrespondingEdges
from ..core.graphs import EmbeddedGraph
from ..core.vectors import EdgeKey
from ..embeddings.similarity import cosine


@dataclass(frozen=True)
class CorrespondenceReport:
    matched: Tuple[EdgeKey, ...]
    only_in_first: Tuple[EdgeKey, ...]
    only_in_second: Tuple[EdgeKey, ...]

    def summary(self) -> str:
        return (f"matched={len(self.matched)} "
                f"only_in_first={len(self.only_in_first)} "
                f"only_in_second={len(self.only_in_second)}")


def edge_correspondence(g1: EmbeddedGraph, g2: EmbeddedGraph) -> CorrespondenceReport:
    """Edges correspond when their (source, target) vertex names are equal"""
    first, second = set(g1.edges), set(g2.edges)
    return CorrespondenceReport(
        matched=tuple(sorted(first & second)),
        only_in_first=tuple(sorted(first - second)),
        only_in_second=tuple(sorted(second - first)),
    )


def graph_similarity(g1: EmbeddedGraph, g2: EmbeddedGraph) -> float:
    """Average cosine between the vectors of corresponding edges; unmatched edges are ignored"""
    if g1.dim != g2.dim:
        raise DimensionMismatch(g1.dim, g2.dim, "graph similarity")
    report = edge_correspondence(g1, g2)
    if not report.matched:
        raise NoCorrespondingEdges()
    total = math.fsum(cosine(g1.edges[key], g2.edges[key]) for key in report.matched)
    return total / len(report.matched)


def pairwise_similarity(graphs: Mapping[str, EmbeddedGraph]) -> Dict[Tuple[str, str], Optional[float]]:
    """Similarity for every unordered pair in input order; None where no edges correspond"""
    table: Dict[Tuple[str, str], Optional[float]] = {}
    for (name1, g1), (name2, g2) in combinations(graphs.items(), 2):
        try:
            table[(name1, name2)] = graph_similarity(g1, g2)
        except NoCorrespondingEdges:
            table[(name1, name2)] = None
    return table
