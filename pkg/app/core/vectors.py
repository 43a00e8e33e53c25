"""
Edge keys and embedding vectors
"""

from __future__ import annotations

from typing import Iterable, Iterator, List, NamedTuple, Union

import numpy as np

from .errors import DimensionMismatch, NonFiniteComponent, ZeroVector

VertexId = str


class EdgeKey(NamedTuple):
    """Ordered (source, target) pair; sorts lexicographically"""
    source: VertexId
    target: VertexId

    def reversed(self) -> "EdgeKey":
        return EdgeKey(self.target, self.source)


class EmbeddingVector:
    """
    Immutable d-dimensional real vector labelling an edge.

    Components are held as a read-only float64 array; equality and hashing
    are bitwise so that vectors can key lookup tables.
    """

    __slots__ = ("_data", "_norm", "_unit")

    def __init__(self, components: Union["EmbeddingVector", Iterable[float], np.ndarray]):
        if isinstance(components, EmbeddingVector):
            data = components._data
        else:
            data = np.array(components, dtype=np.float64)
            if data.ndim != 1 or data.size == 0:
                raise DimensionMismatch(max(data.size, 1), data.size, "vector must be a non-empty 1-d sequence")
            bad = np.flatnonzero(~np.isfinite(data))
            if bad.size:
                raise NonFiniteComponent(int(bad[0]), float(data[bad[0]]))
            data.setflags(write=False)
        # scale by the largest magnitude so the norm neither overflows nor underflows
        scale = float(np.max(np.abs(data)))
        if scale == 0.0:
            raise ZeroVector()
        scaled = data / scale
        scaled_norm = float(np.linalg.norm(scaled))
        self._data = data
        self._norm = scale * scaled_norm
        self._unit = scaled / scaled_norm
        self._unit.setflags(write=False)

    @property
    def array(self) -> np.ndarray:
        """Read-only float64 view"""
        return self._data

    @property
    def dim(self) -> int:
        return int(self._data.size)

    @property
    def norm(self) -> float:
        return self._norm

    @property
    def unit(self) -> np.ndarray:
        """Read-only direction with unit length, finite even when norm overflows"""
        return self._unit

    def tolist(self) -> List[float]:
        return self._data.tolist()

    def scaled(self, factor: float) -> "EmbeddingVector":
        return EmbeddingVector(self._data * factor)

    def __len__(self) -> int:
        return self.dim

    def __iter__(self) -> Iterator[float]:
        return iter(self.tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddingVector):
            return NotImplemented
        return self._data.tobytes() == other._data.tobytes()

    def __hash__(self) -> int:
        return hash(self._data.tobytes())

    def __repr__(self) -> str:
        head = ", ".join(f"{x:.4g}" for x in self._data[:4])
        tail = ", ..." if self.dim > 4 else ""
        return f"EmbeddingVector(dim={self.dim}, [{head}{tail}])"


def as_vector(value: Union[EmbeddingVector, Iterable[float]]) -> EmbeddingVector:
    """Coerce a sequence of floats to an EmbeddingVector"""
    if isinstance(value, EmbeddingVector):
        return value
    return EmbeddingVector(value)


def check_dim(vector: EmbeddingVector, dim: int, where: str = "") -> None:
    if vector.dim != dim:
        raise DimensionMismatch(dim, vector.dim, where)
