"""
DOT and TSV renderings of all graph kinds
"""

from __future__ import annotations

from enum import Enum
from typing import Mapping, Optional, Union

from ..core.errors import MissingLabel, UnsupportedLabelMode
from ..core.graphs import AnyGraph, EmbeddedGraph, WeightedGraph
from ..core.vectors import EdgeKey
from .labels import LabeledGraph


class LabelMode(str, Enum):
    NONE = "none"
    WEIGHT = "weight"
    TOKEN = "token"


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _kind_name(g: AnyGraph) -> str:
    if isinstance(g, EmbeddedGraph):
        return "embedded"
    if isinstance(g, WeightedGraph):
        return "weighted"
    return "edge"


def export_dot(
    g: AnyGraph,
    label_mode: Union[LabelMode, str] = LabelMode.NONE,
    tokens: Optional[Mapping[EdgeKey, str]] = None,
    name: str = "G",
) -> bytes:
    """
    Render a DOT digraph with sorted vertices and edges.

    weight labels need a weighted-graph (two decimals);
    token labels need an edge -> token map covering every edge.
    """
    label_mode = LabelMode(label_mode)
    if label_mode is LabelMode.WEIGHT and not isinstance(g, WeightedGraph):
        raise UnsupportedLabelMode(label_mode.value, _kind_name(g))
    if isinstance(tokens, LabeledGraph):
        tokens = tokens.edges

    lines = [f"digraph {_quote(name)} {{"]
    for vertex in g.vertices:
        lines.append(f"  {_quote(vertex)};")
    for key in sorted(g.edges):
        attrs = ""
        if label_mode is LabelMode.WEIGHT:
            attrs = f' [label="{g.edges[key]:.2f}"]'
        elif label_mode is LabelMode.TOKEN:
            token = tokens.get(key) if tokens else None
            if token is None:
                raise MissingLabel(key.source, key.target)
            attrs = f" [label={_quote(token)}]"
        lines.append(f"  {_quote(key.source)} -> {_quote(key.target)}{attrs};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def export_tsv(g: AnyGraph) -> bytes:
    """One edge per line: source, target, then the weight or the vector components"""
    lines = []
    for key in sorted(g.edges):
        cells = [key.source, key.target]
        if isinstance(g, WeightedGraph):
            cells.append(repr(g.edges[key]))
        elif isinstance(g, EmbeddedGraph):
            cells.extend(repr(x) for x in g.edges[key].tolist())
        lines.append("\t".join(cells))
    return "".join(line + "\n" for line in lines).encode("utf-8")
