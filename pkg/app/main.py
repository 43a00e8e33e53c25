"""
embedgraph - embedded-graph toolkit
Command-line entry point: argument parsing, logging setup and exit codes
"""

import argparse
import logging
import sys
from typing import List, Optional, Sequence

from pydantic import ValidationError

from . import __version__
from .cli import commands
from .cli.commands import ExitCode, Session
from .cli.config import CliConfig
from .core.errors import (
    EmbeddedGraphError,
    ModelNotConfigured,
    NoCorrespondingEdges,
    NoPath,
    UnknownToken,
)
from .helpers.utils import STDIO
from .storage.representations import RepresentationKind

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class UsageArgumentParser(argparse.ArgumentParser):
    """Argument errors exit with the usage status instead of argparse's 2"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = UsageArgumentParser(add_help=False)
    common.add_argument("--model", dest="model_path", help="word-vector model file (default: $EMBEDGRAPH_MODEL)")
    common.add_argument("--model-format", choices=["auto", "text", "binary"], help="model file format (default: by extension)")
    common.add_argument("--direction", choices=["directed", "undirected"], help="edge traversal for distances")
    common.add_argument("--symmetrize", action="store_true", help="add reverse edges when loading embedded graphs")
    common.add_argument("--dense-cap", type=int, help="vertex limit for adjacency matrices (default: 4096)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    return common


def _target_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--target", nargs="+", metavar="TOKEN",
                       help="target word; several tokens are summed, '-token' subtracts")
    group.add_argument("--target-file", help="JSON file holding the raw target vector")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = UsageArgumentParser(prog="embedgraph", description="Embedded-graph translation, distances and similarity")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("translate", parents=[common], help="embedded graph -> weighted graph")
    p.add_argument("--graph", required=True)
    _target_options(p)
    p.add_argument("--metric", default="cos", choices=["cos", "dot", "cosine", "inner_product"])
    p.add_argument("--out", default=STDIO)
    p.set_defaults(handler=commands.cmd_translate)

    p = sub.add_parser("threshold", parents=[common], help="weighted graph -> edge graph (keep weight > cutoff)")
    p.add_argument("--graph", required=True)
    p.add_argument("--cutoff", type=float, required=True)
    p.add_argument("--out", default=STDIO)
    p.set_defaults(handler=commands.cmd_threshold)

    p = sub.add_parser("translate-threshold", parents=[common], help="translate then threshold in one step")
    p.add_argument("--graph", required=True)
    _target_options(p)
    p.add_argument("--metric", default="cos", choices=["cos", "dot", "cosine", "inner_product"])
    p.add_argument("--cutoff", type=float, required=True)
    p.add_argument("--out", default=STDIO)
    p.set_defaults(handler=commands.cmd_translate_threshold)

    p = sub.add_parser("distance", parents=[common], help="target-conditioned path distance")
    p.add_argument("--graph", required=True)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", help="destination vertex; omit for a distance table")
    p.add_argument("--via", nargs="+", help="evaluate this explicit route instead of the best one")
    _target_options(p)
    p.set_defaults(handler=commands.cmd_distance)

    p = sub.add_parser("similarity", parents=[common], help="mean cosine over corresponding edges")
    p.add_argument("first", metavar="GRAPH")
    p.add_argument("others", nargs="+", metavar="GRAPH", help="one more graph for a value, several for a table")
    p.set_defaults(handler=commands.cmd_similarity)

    kinds = [k.value for k in RepresentationKind]
    p = sub.add_parser("convert", parents=[common], help="rewrite an embedded graph in another layout")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", choices=kinds, default=RepresentationKind.EDGE_LIST.value)
    p.add_argument("--out", default=STDIO)
    p.set_defaults(handler=commands.cmd_convert)

    p = sub.add_parser("export", parents=[common], help="render any graph as json, dot or tsv")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", dest="output_format", choices=["json", "dot", "tsv"])
    p.add_argument("--label", choices=["none", "weight", "token"], default="none")
    p.add_argument("--tokens", help="token-labeled graph supplying edge labels")
    p.add_argument("--out", default=STDIO)
    p.set_defaults(handler=commands.cmd_export)

    p = sub.add_parser("embed", parents=[common], help="token-labeled graph -> embedded graph via the model")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", choices=kinds, default=RepresentationKind.EDGE_LIST.value)
    p.add_argument("--out", default=STDIO)
    p.set_defaults(handler=commands.cmd_embed)

    p = sub.add_parser("stats", parents=[common], help="vertex, edge and dimension counts")
    p.add_argument("--graph", required=True)
    p.set_defaults(handler=commands.cmd_stats)

    p = sub.add_parser("nearest", parents=[common], help="vocabulary words closest to a target")
    _target_options(p)
    p.add_argument("--topn", type=int, default=10)
    p.set_defaults(handler=commands.cmd_nearest)

    return parser


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def _fail(code: ExitCode, error: BaseException) -> int:
    print(f"error: {error}", file=sys.stderr)
    logger.debug(f"❌ {type(error).__name__}", exc_info=True)
    return int(code)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = CliConfig.from_args(args)
    except ValidationError as e:
        return _fail(ExitCode.USAGE, e)
    _configure_logging(config.log_level)
    logger.debug(f"🚀 {args.command} with {config}")

    try:
        return int(args.handler(Session(config), args))
    except UnknownToken as e:
        return _fail(ExitCode.UNKNOWN_TOKEN, e)
    except NoPath as e:
        return _fail(ExitCode.NO_PATH, e)
    except NoCorrespondingEdges as e:
        return _fail(ExitCode.NO_CORRESPONDENCE, e)
    except ModelNotConfigured as e:
        return _fail(ExitCode.USAGE, e)
    except (EmbeddedGraphError, OSError) as e:
        return _fail(ExitCode.IO_OR_SCHEMA, e)


def run(argv: Optional[List[str]] = None) -> None:
    sys.exit(main(argv))


if __name__ == "__main__":
    run()
