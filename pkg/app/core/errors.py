"""
Exception hierarchy for embedded-graph construction, loading and analysis
"""

from typing import Optional, Sequence


class EmbeddedGraphError(Exception):
    """Base class for every error raised by the library"""


# =========================
# Graph / vector validation
# =========================

class GraphValidationError(EmbeddedGraphError, ValueError):
    """A graph or vector violates a structural invariant"""


class InvalidVertex(GraphValidationError):
    def __init__(self, name: object):
        super().__init__(f"vertex name must be a non-empty string, got {name!r}")
        self.name = name


class DuplicateVertex(GraphValidationError):
    def __init__(self, name: str):
        super().__init__(f"duplicate vertex {name!r}")
        self.name = name


class DuplicateEdge(GraphValidationError):
    def __init__(self, source: str, target: str):
        super().__init__(f"duplicate edge {source!r} -> {target!r}")
        self.source = source
        self.target = target


class UnknownEndpoint(GraphValidationError):
    def __init__(self, source: str, target: str, missing: str):
        super().__init__(f"edge {source!r} -> {target!r} references unknown vertex {missing!r}")
        self.source = source
        self.target = target
        self.missing = missing


class DimensionMismatch(GraphValidationError):
    def __init__(self, expected: int, actual: int, where: str = ""):
        detail = f" ({where})" if where else ""
        super().__init__(f"dimension mismatch: expected {expected}, got {actual}{detail}")
        self.expected = expected
        self.actual = actual


class ZeroVector(GraphValidationError):
    def __init__(self, where: str = ""):
        detail = f" ({where})" if where else ""
        super().__init__(f"zero-norm vector rejected{detail}")


class NonFiniteComponent(GraphValidationError):
    def __init__(self, index: int, value: float):
        super().__init__(f"vector component [{index}] must be finite, got {value}")
        self.index = index
        self.value = value


class NonFiniteWeight(GraphValidationError):
    def __init__(self, source: str, target: str, value: float):
        super().__init__(f"weight of {source!r} -> {target!r} must be finite, got {value}")
        self.value = value


class UnspecifiedDimension(GraphValidationError):
    def __init__(self) -> None:
        super().__init__("dim must be given explicitly for a graph without edges")


class InvalidVectorReference(GraphValidationError):
    def __init__(self, vector_id: int, table_size: int):
        super().__init__(f"vector_id {vector_id} out of range for a table of {table_size} vectors")
        self.vector_id = vector_id


# =========================
# Word-vector model files
# =========================

class ModelFormatError(EmbeddedGraphError, ValueError):
    """A word-vector file is malformed"""


class MalformedHeader(ModelFormatError):
    def __init__(self, header: str):
        super().__init__(f"malformed header {header!r}, expected '<count> <dim>'")
        self.header = header


class TruncatedRecord(ModelFormatError):
    def __init__(self, record: int, detail: str):
        super().__init__(f"truncated record {record}: {detail}")
        self.record = record


class DuplicateToken(ModelFormatError):
    def __init__(self, token: str):
        super().__init__(f"duplicate token {token!r}")
        self.token = token


# =========================
# Lookups and analysis
# =========================

class UnknownToken(EmbeddedGraphError, LookupError):
    def __init__(self, token: str):
        super().__init__(f"token {token!r} is not in the model vocabulary")
        self.token = token

    def __str__(self) -> str:
        return self.args[0]


class UnknownVertex(EmbeddedGraphError, LookupError):
    def __init__(self, name: str):
        super().__init__(f"vertex {name!r} is not in the graph")
        self.name = name

    def __str__(self) -> str:
        return self.args[0]


class NoPath(EmbeddedGraphError):
    def __init__(self, source: str, target: str, direction: str):
        super().__init__(f"no {direction} path from {source!r} to {target!r}")
        self.source = source
        self.target = target


class NoCorrespondingEdges(EmbeddedGraphError):
    def __init__(self) -> None:
        super().__init__("graphs share no corresponding edges; similarity is undefined")


class TooLargeForDense(EmbeddedGraphError):
    def __init__(self, vertices: int, cap: int):
        super().__init__(f"{vertices} vertices exceed the dense adjacency cap of {cap}")
        self.vertices = vertices
        self.cap = cap


class MissingLabel(EmbeddedGraphError):
    def __init__(self, source: str, target: str):
        super().__init__(f"no token label for edge {source!r} -> {target!r}")


class UnsupportedLabelMode(EmbeddedGraphError, ValueError):
    def __init__(self, mode: str, graph_kind: str):
        super().__init__(f"label mode {mode!r} is not available for a {graph_kind} graph")


class SchemaError(EmbeddedGraphError, ValueError):
    """A graph document does not match the JSON schema"""

    def __init__(self, message: str, field: Optional[Sequence[object]] = None, line: Optional[int] = None):
        self.field = ".".join(str(part) for part in field) if field else None
        self.line = line
        prefix = []
        if line is not None:
            prefix.append(f"line {line}")
        if self.field:
            prefix.append(f"field '{self.field}'")
        super().__init__(f"{', '.join(prefix)}: {message}" if prefix else message)


class ModelNotConfigured(EmbeddedGraphError):
    def __init__(self) -> None:
        super().__init__("no word-vector model: pass --model or set EMBEDGRAPH_MODEL")
