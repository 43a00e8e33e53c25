"""
Graph JSON documents.

Embedded graphs are written in one of three layouts:

    {"kind": "embedded", "layout": "edge_list", "dim": 3, "vertices": [...],
     "edges": [{"source": "a", "target": "b", "vector": [1.0, 0.0, 0.0]}]}

    {"kind": "embedded", "layout": "vle", "dim": 3, "vertices": [...],
     "edges": [{"source": "a", "target": "b", "vector_id": 0}],
     "vectors": [[1.0, 0.0, 0.0]]}

    {"kind": "embedded", "layout": "adjacency", "dim": 3, "vertices": [...],
     "presence": [[0, 1], [0, 0]], "vectors": [[null, [1.0, 0.0, 0.0]], [null, null]]}

Weighted graphs put "weight" on each edge, edge-graphs carry bare
source/target pairs and token-labeled graphs a "token". "kind" and "layout"
are optional on input and inferred from the fields present.
"""

from __future__ import annotations

import json
import logging
from typing import Any, BinaryIO, Dict, List, Literal, Optional, Type, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError

from ..core.errors import InvalidVectorReference, SchemaError
from ..core.graphs import (
    AnyGraph,
    EdgeGraph,
    EmbeddedGraph,
    WeightedGraph,
    build_edge_graph,
    build_embedded_graph,
    build_weighted_graph,
)
from .labels import LabeledGraph, build_labeled_graph
from .representations import (
    DEFAULT_DENSE_CAP,
    AdjacencyMatrixRep,
    EdgeListRep,
    RepresentationKind,
    VectorLabeledEdgeListRep,
    to_representation,
)

logger = logging.getLogger(__name__)

Source = Union[bytes, str, BinaryIO]


# =========================
# Schema models
# =========================

class _Doc(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)


class VectorEdgeDoc(_Doc):
    source: str
    target: str
    vector: List[float]


class VectorRefEdgeDoc(_Doc):
    source: str
    target: str
    vector_id: int


class WeightEdgeDoc(_Doc):
    source: str
    target: str
    weight: float


class PlainEdgeDoc(_Doc):
    source: str
    target: str


class TokenEdgeDoc(_Doc):
    source: str
    target: str
    token: str


class EdgeListDoc(_Doc):
    kind: Literal["embedded"] = "embedded"
    layout: Literal["edge_list"] = "edge_list"
    dim: int
    vertices: List[str]
    edges: List[VectorEdgeDoc]


class VleDoc(_Doc):
    kind: Literal["embedded"] = "embedded"
    layout: Literal["vle"] = "vle"
    dim: int
    vertices: List[str]
    edges: List[VectorRefEdgeDoc]
    vectors: List[List[float]]


class AdjacencyDoc(_Doc):
    kind: Literal["embedded"] = "embedded"
    layout: Literal["adjacency"] = "adjacency"
    dim: int
    vertices: List[str]
    presence: List[List[int]]
    vectors: List[List[Optional[List[float]]]]


class WeightedDoc(_Doc):
    kind: Literal["weighted"] = "weighted"
    layout: Literal["edge_list"] = "edge_list"
    vertices: List[str]
    edges: List[WeightEdgeDoc]


class EdgeGraphDoc(_Doc):
    kind: Literal["edge"] = "edge"
    layout: Literal["edge_list"] = "edge_list"
    vertices: List[str]
    edges: List[PlainEdgeDoc]


class LabeledDoc(_Doc):
    kind: Literal["labeled"] = "labeled"
    layout: Literal["edge_list"] = "edge_list"
    vertices: List[str]
    edges: List[TokenEdgeDoc]


# =========================
# Parsing
# =========================

def _reject_constant(name: str) -> float:
    raise SchemaError(f"non-finite number {name} is not allowed")


def _load_object(source: Source) -> Dict[str, Any]:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, (bytes, bytearray)):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as e:
            raise SchemaError(f"document is not UTF-8: {e}") from None
    try:
        data = json.loads(source, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise SchemaError(e.msg, line=e.lineno) from None
    if not isinstance(data, dict):
        raise SchemaError("top-level value must be an object")
    return data


def _infer_kind(data: Dict[str, Any]) -> str:
    kind = data.get("kind")
    if isinstance(kind, str):
        return kind
    edges = data.get("edges")
    fields = set()
    if isinstance(edges, list):
        for edge in edges:
            if isinstance(edge, dict):
                fields.update(edge)
    if "dim" in data or "vectors" in data or fields & {"vector", "vector_id"}:
        return "embedded"
    if "weight" in fields:
        return "weighted"
    if "token" in fields:
        return "labeled"
    return "edge"


def _infer_layout(data: Dict[str, Any]) -> str:
    layout = data.get("layout")
    if isinstance(layout, str):
        return layout
    if "presence" in data:
        return RepresentationKind.ADJACENCY.value
    if "vectors" in data:
        return RepresentationKind.VLE.value
    return RepresentationKind.EDGE_LIST.value


_EMBEDDED_MODELS: Dict[str, Type[_Doc]] = {
    "edge_list": EdgeListDoc,
    "vle": VleDoc,
    "adjacency": AdjacencyDoc,
}

_OTHER_MODELS: Dict[str, Type[_Doc]] = {
    "weighted": WeightedDoc,
    "edge": EdgeGraphDoc,
    "labeled": LabeledDoc,
}


def _validate(model: Type[_Doc], data: Dict[str, Any]) -> _Doc:
    try:
        return model.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        more = f" (+{e.error_count() - 1} more)" if e.error_count() > 1 else ""
        raise SchemaError(f"{first['msg']}{more}", field=first["loc"]) from None


def _parse(data: Dict[str, Any]) -> _Doc:
    kind = _infer_kind(data)
    if kind == "embedded":
        layout = _infer_layout(data)
        model = _EMBEDDED_MODELS.get(layout)
        if model is None:
            raise SchemaError(f"unknown layout {layout!r}", field=["layout"])
        return _validate(model, data)
    model = _OTHER_MODELS.get(kind)
    if model is None:
        raise SchemaError(f"unknown graph kind {kind!r}", field=["kind"])
    return _validate(model, data)


def _embedded_from_doc(doc: _Doc) -> EmbeddedGraph:
    if isinstance(doc, EdgeListDoc):
        edges = [((e.source, e.target), e.vector) for e in doc.edges]
        return build_embedded_graph(doc.vertices, edges, dim=doc.dim)

    if isinstance(doc, VleDoc):
        edges = []
        for e in doc.edges:
            if not 0 <= e.vector_id < len(doc.vectors):
                raise InvalidVectorReference(e.vector_id, len(doc.vectors))
            edges.append(((e.source, e.target), doc.vectors[e.vector_id]))
        return build_embedded_graph(doc.vertices, edges, dim=doc.dim)

    n = len(doc.vertices)
    if len(doc.presence) != n or any(len(row) != n for row in doc.presence):
        raise SchemaError(f"presence must be a {n} x {n} matrix", field=["presence"])
    if len(doc.vectors) != n or any(len(row) != n for row in doc.vectors):
        raise SchemaError(f"vectors must be a {n} x {n} matrix", field=["vectors"])
    edges = []
    for i, row in enumerate(doc.presence):
        for j, flag in enumerate(row):
            cell = doc.vectors[i][j]
            if flag and cell is None:
                raise SchemaError("present edge has no vector", field=["vectors", i, j])
            if not flag and cell is not None:
                raise SchemaError("absent edge carries a vector", field=["vectors", i, j])
            if flag:
                edges.append(((doc.vertices[i], doc.vertices[j]), cell))
    return build_embedded_graph(doc.vertices, edges, dim=doc.dim)


def _graph_from_doc(doc: _Doc) -> Union[AnyGraph, LabeledGraph]:
    if isinstance(doc, WeightedDoc):
        return build_weighted_graph(doc.vertices, [((e.source, e.target), e.weight) for e in doc.edges])
    if isinstance(doc, EdgeGraphDoc):
        return build_edge_graph(doc.vertices, [(e.source, e.target) for e in doc.edges])
    if isinstance(doc, LabeledDoc):
        return build_labeled_graph(doc.vertices, [((e.source, e.target), e.token) for e in doc.edges])
    return _embedded_from_doc(doc)


def read_any_graph_json(source: Source) -> Union[AnyGraph, LabeledGraph]:
    return _graph_from_doc(_parse(_load_object(source)))


def _read_expecting(source: Source, expected: type, name: str):
    graph = read_any_graph_json(source)
    if not isinstance(graph, expected):
        actual = type(graph).__name__
        raise SchemaError(f"expected {name} graph, got {actual}", field=["kind"])
    return graph


def read_graph_json(source: Source) -> EmbeddedGraph:
    return _read_expecting(source, EmbeddedGraph, "an embedded")


def read_weighted_graph_json(source: Source) -> WeightedGraph:
    return _read_expecting(source, WeightedGraph, "a weighted")


def read_edge_graph_json(source: Source) -> EdgeGraph:
    return _read_expecting(source, EdgeGraph, "an edge")


def read_labeled_graph_json(source: Source) -> LabeledGraph:
    return _read_expecting(source, LabeledGraph, "a token-labeled")


# =========================
# Writing
# =========================

def _dump(doc: Dict[str, Any]) -> bytes:
    # float repr is the shortest string that round-trips
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def write_graph_json(
    g: EmbeddedGraph,
    kind: Union[RepresentationKind, str] = RepresentationKind.EDGE_LIST,
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> bytes:
    rep = to_representation(g, kind, dense_cap=dense_cap)
    doc: Dict[str, Any] = {"kind": "embedded", "layout": RepresentationKind(kind).value,
                           "dim": g.dim, "vertices": list(g.vertices)}

    if isinstance(rep, EdgeListRep):
        doc["edges"] = [{"source": s, "target": t, "vector": v.tolist()} for s, t, v in rep.rows]
    elif isinstance(rep, VectorLabeledEdgeListRep):
        doc["edges"] = [{"source": s, "target": t, "vector_id": i} for s, t, i in rep.rows]
        doc["vectors"] = [v.tolist() for v in rep.vector_table]
    elif isinstance(rep, AdjacencyMatrixRep):
        doc["presence"] = rep.presence.astype(np.int8).tolist()
        doc["vectors"] = [
            [rep.vectors[i, j].tolist() if rep.presence[i, j] else None for j in range(len(g.vertices))]
            for i in range(len(g.vertices))
        ]
    return _dump(doc)


def write_weighted_graph_json(w: WeightedGraph) -> bytes:
    return _dump({
        "kind": "weighted",
        "layout": "edge_list",
        "vertices": list(w.vertices),
        "edges": [{"source": k.source, "target": k.target, "weight": weight} for k, weight in w.edges.items()],
    })


def write_edge_graph_json(e: EdgeGraph) -> bytes:
    return _dump({
        "kind": "edge",
        "layout": "edge_list",
        "vertices": list(e.vertices),
        "edges": [{"source": k.source, "target": k.target} for k in e.edges],
    })


def write_labeled_graph_json(lg: LabeledGraph) -> bytes:
    return _dump({
        "kind": "labeled",
        "layout": "edge_list",
        "vertices": list(lg.vertices),
        "edges": [{"source": k.source, "target": k.target, "token": t} for k, t in lg.edges.items()],
    })


def write_any_graph_json(g: Union[AnyGraph, LabeledGraph], kind: Union[RepresentationKind, str] = RepresentationKind.EDGE_LIST,
                         dense_cap: int = DEFAULT_DENSE_CAP) -> bytes:
    if isinstance(g, EmbeddedGraph):
        return write_graph_json(g, kind, dense_cap=dense_cap)
    if isinstance(g, WeightedGraph):
        return write_weighted_graph_json(g)
    if isinstance(g, LabeledGraph):
        return write_labeled_graph_json(g)
    return write_edge_graph_json(g)
