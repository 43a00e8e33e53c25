"""
Shared fixtures: the relation table used for the threshold workflow, the
trust-route graph and a small word-vector model for end-to-end runs.
"""

import math
from pathlib import Path
from typing import Dict

import numpy as np
import pytest
from hypothesis import settings

from app.core import EmbeddedGraph, EmbeddingVector, WeightedGraph, build_embedded_graph, build_weighted_graph
from app.embeddings import EmbeddingStore, build_store, write_word_vectors
from app.storage import read_graph_json

FIXTURES = Path(__file__).resolve().parent.parent / "data" / "fixtures"

settings.register_profile("embedgraph", deadline=None)
settings.load_profile("embedgraph")

COLUMNS = ("family", "friend", "work", "digital")

# cosine of each relation word against the four targets
RELATION_WEIGHTS: Dict[str, Dict[str, float]] = {
    "mother":     {"family": 0.61, "friend": 0.54, "work": 0.09, "digital": 0.02},
    "father":     {"family": 0.57, "friend": 0.56, "work": 0.12, "digital": 0.00},
    "son":        {"family": 0.54, "friend": 0.54, "work": 0.04, "digital": 0.02},
    "daughter":   {"family": 0.53, "friend": 0.53, "work": 0.05, "digital": 0.05},
    "wife":       {"family": 0.56, "friend": 0.55, "work": 0.08, "digital": -0.03},
    "husband":    {"family": 0.53, "friend": 0.54, "work": 0.13, "digital": 0.00},
    "friend":     {"family": 0.49, "friend": 1.00, "work": 0.09, "digital": -0.07},
    "boss":       {"family": 0.10, "friend": 0.29, "work": 0.12, "digital": 0.02},
    "colleague":  {"family": 0.20, "friend": 0.62, "work": 0.11, "digital": -0.04},
    "computer":   {"family": 0.08, "friend": 0.08, "work": 0.19, "digital": 0.37},
    "smartphone": {"family": 0.05, "friend": 0.04, "work": 0.02, "digital": 0.35},
    "car":        {"family": 0.22, "friend": 0.23, "work": 0.09, "digital": 0.04},
    "motorcycle": {"family": 0.17, "friend": 0.18, "work": 0.04, "digital": 0.02},
}

CUTOFFS = {"family": 0.5, "friend": 0.6, "work": 0.1, "digital": 0.3}

EXPECTED_KEPT = {
    "family": {"mother", "father", "son", "daughter", "wife", "husband"},
    "friend": {"friend", "colleague"},
    "work": {"father", "husband", "boss", "colleague", "computer"},
    "digital": {"computer", "smartphone"},
}

UNIT_TARGET = EmbeddingVector([1.0, 0.0])

# 3-d toy vocabulary covering the fixture tokens
TOY_VECTORS: Dict[str, list] = {
    "family": [1.0, 0.2, 0.0],
    "friend": [0.3, 1.0, 0.1],
    "trust": [0.5, 0.5, 0.5],
    "mother": [0.9, 0.3, 0.1],
    "father": [0.8, 0.4, 0.0],
    "speak": [0.2, 0.9, 0.1],
    "talk": [0.3, 0.8, 0.2],
    "scold": [-0.6, 0.4, 0.3],
    "write": [0.1, 0.2, 0.9],
    "draw": [0.2, 0.1, 0.8],
    "hit": [-0.7, -0.2, 0.4],
    "listen": [0.4, 0.7, 0.0],
    "hear": [0.5, 0.6, 0.1],
    "complain": [-0.5, 0.6, -0.2],
    "read": [0.0, 0.3, 0.9],
    "study": [0.1, 0.4, 0.8],
    "ignore": [-0.4, -0.3, -0.6],
    "have": [0.6, 0.1, 0.3],
    "hold": [0.7, 0.2, 0.3],
    "throw": [-0.2, -0.8, 0.3],
}


def relation_weighted_graph(column: str) -> WeightedGraph:
    """'me' -> word edges weighted with the given target column"""
    edges = [(("me", word), row[column]) for word, row in RELATION_WEIGHTS.items()]
    return build_weighted_graph(["me", *RELATION_WEIGHTS], edges)


def relation_embedded_graph(column: str) -> EmbeddedGraph:
    """
    2-d stand-in for one target column: the edge vector [w, sqrt(1 - w^2)]
    has cosine w against UNIT_TARGET.
    """
    edges = []
    for word, row in RELATION_WEIGHTS.items():
        w = row[column]
        edges.append((("me", word), [w, math.sqrt(1.0 - w * w)]))
    return build_embedded_graph(["me", *RELATION_WEIGHTS], edges)


@pytest.fixture
def trust_route() -> EmbeddedGraph:
    return read_graph_json((FIXTURES / "trust_route.json").read_bytes())


@pytest.fixture
def trust_target() -> EmbeddingVector:
    return UNIT_TARGET


@pytest.fixture
def toy_store() -> EmbeddingStore:
    return build_store(TOY_VECTORS)


@pytest.fixture
def toy_model(tmp_path, toy_store) -> Path:
    path = tmp_path / "toy.txt"
    path.write_bytes(write_word_vectors(toy_store, "text"))
    return path


@pytest.fixture
def wide_store() -> EmbeddingStore:
    """300-d random vectors for every relation word"""
    rng = np.random.default_rng(7)
    return build_store({word: rng.normal(size=300) for word in RELATION_WEIGHTS})


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("EMBEDGRAPH_MODEL", "EMBEDGRAPH_DENSE_CAP", "EMBEDGRAPH_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
