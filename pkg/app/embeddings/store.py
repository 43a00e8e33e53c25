"""
Token -> vector lookup table backed by a single matrix
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

import numpy as np

from ..core.errors import DimensionMismatch, DuplicateToken, UnknownToken, ZeroVector
from ..core.vectors import EmbeddingVector

logger = logging.getLogger(__name__)

# rows per block when scanning the whole vocabulary
SCAN_BLOCK = 100_000


class EmbeddingStore:
    """
    Immutable vocabulary of word vectors.

    Vectors stay in the dtype they were loaded with (float32 for binary
    models) and are widened to float64 on lookup.
    """

    def __init__(self, tokens: Sequence[str], matrix: np.ndarray):
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != len(tokens) or matrix.shape[1] < 1:
            raise DimensionMismatch(len(tokens), matrix.shape[0] if matrix.ndim else 0, "store matrix rows")
        index: Dict[str, int] = {}
        for row, token in enumerate(tokens):
            if token in index:
                raise DuplicateToken(token)
            index[token] = row
        matrix.setflags(write=False)
        self._tokens: Tuple[str, ...] = tuple(tokens)
        self._index = index
        self._matrix = matrix

    @property
    def dim(self) -> int:
        return int(self._matrix.shape[1])

    @property
    def tokens(self) -> Tuple[str, ...]:
        return self._tokens

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def __len__(self) -> int:
        return len(self._tokens)

    def __contains__(self, token: object) -> bool:
        return token in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddingStore):
            return NotImplemented
        if self.dim != other.dim or set(self._tokens) != set(other._tokens):
            return False
        rows = [other._index[token] for token in self._tokens]
        mine = self._matrix.astype(np.float64)
        theirs = other._matrix[rows].astype(np.float64)
        return bool(np.array_equal(mine, theirs))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"EmbeddingStore(size={len(self)}, dim={self.dim})"


def build_store(table: Union[Mapping[str, Union[EmbeddingVector, Iterable[float]]], Iterable[Tuple[str, Iterable[float]]]]) -> EmbeddingStore:
    """Build a store from token -> vector pairs, validating every vector"""
    items = table.items() if isinstance(table, Mapping) else table
    tokens: List[str] = []
    rows: List[np.ndarray] = []
    dim = None
    for token, raw in items:
        vector = raw if isinstance(raw, EmbeddingVector) else EmbeddingVector(raw)
        if dim is None:
            dim = vector.dim
        elif vector.dim != dim:
            raise DimensionMismatch(dim, vector.dim, f"token {token!r}")
        tokens.append(token)
        rows.append(vector.array)
    if dim is None:
        raise DimensionMismatch(1, 0, "store needs at least one vector")
    return EmbeddingStore(tokens, np.vstack(rows))


def lookup(store: EmbeddingStore, token: str) -> EmbeddingVector:
    """The stored vector for token; case-sensitive, no normalisation"""
    row = store._index.get(token)
    if row is None:
        raise UnknownToken(token)
    return EmbeddingVector(store.matrix[row])


def vector_from_tokens(store: EmbeddingStore, tokens: Sequence[str]) -> EmbeddingVector:
    """
    Compose a target vector from several tokens.

    Tokens are summed; a leading '-' subtracts the token instead
    (e.g. ["king", "-man", "woman"]).
    """
    total = np.zeros(store.dim, dtype=np.float64)
    for raw in tokens:
        sign = -1.0 if raw.startswith("-") and len(raw) > 1 else 1.0
        token = raw[1:] if sign < 0 else raw
        total += sign * lookup(store, token).array
    if not np.any(total):
        raise ZeroVector(f"composition of {list(tokens)}")
    return EmbeddingVector(total)


def most_similar(store: EmbeddingStore, target: EmbeddingVector, topn: int = 10) -> List[Tuple[str, float]]:
    """Vocabulary tokens ranked by cosine to target, best first"""
    if target.dim != store.dim:
        raise DimensionMismatch(store.dim, target.dim, "most_similar target")
    if topn <= 0 or len(store) == 0:
        return []

    sims = np.empty(len(store), dtype=np.float64)
    for start in range(0, len(store), SCAN_BLOCK):
        block = store.matrix[start:start + SCAN_BLOCK].astype(np.float64)
        norms = np.linalg.norm(block, axis=1)
        sims[start:start + len(block)] = (block @ target.unit) / norms
    np.clip(sims, -1.0, 1.0, out=sims)

    topn = min(topn, len(sims))
    best = np.argpartition(-sims, topn - 1)[:topn]
    # stable order: similarity desc, then token
    ranked = sorted(best, key=lambda row: (-sims[row], store.tokens[row]))
    logger.debug(f"most_similar scanned {len(store)} tokens, returning {topn}")
    return [(store.tokens[row], float(sims[row])) for row in ranked]
