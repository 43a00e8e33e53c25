"""
Command handlers composing the library into the translation, distance,
similarity and conversion workflows
"""

import argparse
import json
import logging
from enum import IntEnum
from pathlib import Path
from typing import Dict, List, Optional

from ..core.errors import SchemaError
from ..core.graphs import EmbeddedGraph, graph_stats, symmetrize
from ..core.vectors import EmbeddingVector
from ..embeddings.loader import load_word_vectors
from ..embeddings.store import EmbeddingStore, lookup, most_similar, vector_from_tokens
from ..helpers.utils import format_fixed, format_route, read_input, write_output
from ..metrics.comparison import edge_correspondence, graph_similarity, pairwise_similarity
from ..metrics.paths import distances_from, path_distance, route_distance
from ..storage.export import LabelMode, export_dot, export_tsv
from ..storage.json_io import (
    read_any_graph_json,
    read_graph_json,
    read_labeled_graph_json,
    read_weighted_graph_json,
    write_any_graph_json,
    write_edge_graph_json,
    write_graph_json,
    write_weighted_graph_json,
)
from ..storage.labels import LabeledGraph, embed_labeled_graph
from ..translate.translation import Metric, TranslationSpec, threshold, translate, translate_and_threshold
from .config import CliConfig

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    OK = 0
    IO_OR_SCHEMA = 1
    UNKNOWN_TOKEN = 2
    NO_PATH = 3
    NO_CORRESPONDENCE = 4
    USAGE = 64


def _emit(text: str) -> None:
    write_output("-", text.encode("utf-8"))


# =========================
# Shared loading
# =========================

class Session:
    """Per-invocation state: configuration and the lazily loaded model"""

    def __init__(self, config: CliConfig):
        self.config = config
        self._store: Optional[EmbeddingStore] = None

    @property
    def store(self) -> EmbeddingStore:
        if self._store is None:
            path = self.config.require_model()
            fmt = self.config.resolved_model_format()
            logger.info(f"📥 loading model {path} ({fmt.value})")
            with open(path, "rb") as stream:
                self._store, skipped = load_word_vectors(stream, fmt)
            if skipped:
                logger.warning(f"⚠️  model had {skipped} zero-norm rows")
        return self._store

    def embedded_graph(self, path: str) -> EmbeddedGraph:
        g = read_graph_json(read_input(path))
        return symmetrize(g) if self.config.symmetrize else g

    def target(self, args: argparse.Namespace) -> EmbeddingVector:
        """Target vector from --target-file, else from the --target token(s)"""
        if getattr(args, "target_file", None):
            return _read_target_file(args.target_file)
        tokens: List[str] = args.target or []
        if not tokens:
            raise SchemaError("a target is required: pass --target TOKEN or --target-file FILE", field=["target"])
        if len(tokens) == 1:
            return lookup(self.store, tokens[0])
        return vector_from_tokens(self.store, tokens)


def _read_target_file(path: str) -> EmbeddingVector:
    try:
        data = json.loads(read_input(path))
    except json.JSONDecodeError as e:
        raise SchemaError(e.msg, line=e.lineno) from None
    if isinstance(data, dict):
        data = data.get("vector")
    if not isinstance(data, list) or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in data):
        raise SchemaError("target file must hold a list of numbers", field=["vector"])
    return EmbeddingVector(data)


def _spec(session: Session, args: argparse.Namespace) -> TranslationSpec:
    return TranslationSpec(target=session.target(args), metric=Metric.parse(args.metric))


# =========================
# Commands
# =========================

def cmd_translate(session: Session, args: argparse.Namespace) -> int:
    g = session.embedded_graph(args.graph)
    w = translate(g, _spec(session, args))
    write_output(args.out, write_weighted_graph_json(w))
    logger.info(f"✅ translated {len(w.edges)} edges")
    return ExitCode.OK


def cmd_threshold(session: Session, args: argparse.Namespace) -> int:
    w = read_weighted_graph_json(read_input(args.graph))
    e = threshold(w, args.cutoff)
    write_output(args.out, write_edge_graph_json(e))
    logger.info(f"✅ kept {len(e.edges)} of {len(w.edges)} edges (weight > {args.cutoff})")
    return ExitCode.OK


def cmd_translate_threshold(session: Session, args: argparse.Namespace) -> int:
    g = session.embedded_graph(args.graph)
    e = translate_and_threshold(g, _spec(session, args), args.cutoff)
    write_output(args.out, write_edge_graph_json(e))
    return ExitCode.OK


def cmd_distance(session: Session, args: argparse.Namespace) -> int:
    g = session.embedded_graph(args.graph)
    target = session.target(args)
    direction = session.config.direction

    if args.to is None:
        table = distances_from(g, args.source, target, direction)
        _emit("".join(f"{v}\t{format_fixed(d, 4)}\n" for v, d in sorted(table.items())))
        return ExitCode.OK

    if args.via:
        result = route_distance(g, [args.source, *args.via, args.to], target, direction)
    else:
        result = path_distance(g, args.source, args.to, target, direction)
    _emit(f"{format_fixed(result.total_distance, 4)}\n{format_route(result.vertices)}\n")
    return ExitCode.OK


def cmd_similarity(session: Session, args: argparse.Namespace) -> int:
    graphs: Dict[str, EmbeddedGraph] = {}
    for path in [args.first, *args.others]:
        name = Path(path).stem if path != "-" else "stdin"
        while name in graphs:
            name += "'"
        graphs[name] = session.embedded_graph(path)

    if len(graphs) == 2:
        g1, g2 = graphs.values()
        report = edge_correspondence(g1, g2)
        similarity = graph_similarity(g1, g2)
        _emit(f"{format_fixed(similarity, 2)}\n{report.summary()}\n")
        return ExitCode.OK

    table = pairwise_similarity(graphs)
    lines = [
        f"{a}\t{b}\t{format_fixed(s, 2) if s is not None else 'NA'}"
        for (a, b), s in table.items()
    ]
    _emit("".join(line + "\n" for line in lines))
    if all(s is None for s in table.values()):
        return ExitCode.NO_CORRESPONDENCE
    return ExitCode.OK


def cmd_convert(session: Session, args: argparse.Namespace) -> int:
    g = session.embedded_graph(args.graph)
    write_output(args.out, write_graph_json(g, args.kind, dense_cap=session.config.dense_cap))
    return ExitCode.OK


def cmd_export(session: Session, args: argparse.Namespace) -> int:
    graph = read_any_graph_json(read_input(args.graph))
    if isinstance(graph, EmbeddedGraph) and session.config.symmetrize:
        graph = symmetrize(graph)
    fmt = session.config.output_format

    if fmt == "json":
        data = write_any_graph_json(graph, dense_cap=session.config.dense_cap)
    elif isinstance(graph, LabeledGraph):
        raise SchemaError("token-labeled graphs export as json only; embed them first", field=["kind"])
    elif fmt == "tsv":
        data = export_tsv(graph)
    else:
        tokens = read_labeled_graph_json(read_input(args.tokens)).edges if args.tokens else None
        data = export_dot(graph, LabelMode(args.label), tokens=tokens)
    write_output(args.out, data)
    return ExitCode.OK


def cmd_embed(session: Session, args: argparse.Namespace) -> int:
    lg = read_labeled_graph_json(read_input(args.graph))
    g = embed_labeled_graph(lg, session.store)
    write_output(args.out, write_graph_json(g, args.kind, dense_cap=session.config.dense_cap))
    return ExitCode.OK


def cmd_stats(session: Session, args: argparse.Namespace) -> int:
    graph = read_any_graph_json(read_input(args.graph))
    if isinstance(graph, LabeledGraph):
        n_v, n_e, dim = len(graph.vertices), len(graph.edges), None
    else:
        n_v, n_e, dim = graph_stats(graph)
    _emit(f"vertices\t{n_v}\nedges\t{n_e}\ndim\t{dim if dim is not None else '-'}\n")
    return ExitCode.OK


def cmd_nearest(session: Session, args: argparse.Namespace) -> int:
    target = session.target(args)
    ranked = most_similar(session.store, target, topn=args.topn)
    _emit("".join(f"{token}\t{format_fixed(score, 4)}\n" for token, score in ranked))
    return ExitCode.OK
