"""
Downward translation: embedded-graph -> weighted-graph -> edge-graph
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Mapping, Union

from ..core.errors import DimensionMismatch
from ..core.graphs import (
    EdgeGraph,
    EmbeddedGraph,
    WeightedGraph,
    build_edge_graph,
    build_weighted_graph,
)
from ..core.vectors import EmbeddingVector, as_vector
from ..embeddings.similarity import cosine, inner_product

logger = logging.getLogger(__name__)


class Metric(str, Enum):
    COSINE = "cosine"
    INNER_PRODUCT = "inner_product"

    @classmethod
    def parse(cls, value: Union["Metric", str]) -> "Metric":
        aliases = {"cos": cls.COSINE, "dot": cls.INNER_PRODUCT, "inner": cls.INNER_PRODUCT}
        if isinstance(value, str) and value in aliases:
            return aliases[value]
        return cls(value)


_SCORERS = {
    Metric.COSINE: cosine,
    Metric.INNER_PRODUCT: inner_product,
}


@dataclass(frozen=True)
class TranslationSpec:
    """Target vector X* and the scoring function F(X(e); X*)"""
    target: EmbeddingVector
    metric: Metric = Metric.COSINE

    def __post_init__(self) -> None:
        object.__setattr__(self, "target", as_vector(self.target))
        object.__setattr__(self, "metric", Metric.parse(self.metric))


def translate(g: EmbeddedGraph, spec: TranslationSpec) -> WeightedGraph:
    """Score every edge vector against the target; topology is unchanged"""
    if spec.target.dim != g.dim:
        raise DimensionMismatch(g.dim, spec.target.dim, "translation target")
    score = _SCORERS[spec.metric]
    # per-edge scores are independent, evaluated in edge-key order
    weights = [(key, score(vector, spec.target)) for key, vector in g.edges.items()]
    logger.debug(f"translated {len(weights)} edges with {spec.metric.value}")
    return build_weighted_graph(g.vertices, weights)


def threshold(w: WeightedGraph, cutoff: float) -> EdgeGraph:
    """Keep an edge iff its weight is strictly greater than cutoff; all vertices survive"""
    kept = [key for key, weight in w.edges.items() if weight > cutoff]
    logger.debug(f"threshold {cutoff}: kept {len(kept)} of {len(w.edges)} edges")
    return build_edge_graph(w.vertices, kept)


def translate_and_threshold(g: EmbeddedGraph, spec: TranslationSpec, cutoff: float) -> EdgeGraph:
    return threshold(translate(g, spec), cutoff)


def translate_many(g: EmbeddedGraph, specs: Mapping[str, TranslationSpec]) -> Dict[str, WeightedGraph]:
    """One weighted-graph per named target, e.g. the family/friend/work/digital columns"""
    return {name: translate(g, spec) for name, spec in specs.items()}
