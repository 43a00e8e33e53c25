"""
Reader and writer for word2vec-style text and binary model files.

Both formats start with a "<count> <dim>" header line. Text records are a
token followed by dim space-separated decimals, one record per line. Binary
records are the token bytes, one 0x20 byte, then dim little-endian float32
values with no separator (a newline before a token is tolerated, as the word2vec C
tool writes one).
"""

from __future__ import annotations

import io
import logging
from enum import Enum
from typing import BinaryIO, List, Tuple, Union

import numpy as np

from ..core.errors import (
    DimensionMismatch,
    DuplicateToken,
    MalformedHeader,
    NonFiniteComponent,
    TruncatedRecord,
)
from .store import EmbeddingStore

logger = logging.getLogger(__name__)

BINARY_DTYPE = np.dtype("<f4")
BINARY_CHUNK_SIZE = 100 * 1024


class VectorFormat(str, Enum):
    TEXT = "text"
    BINARY = "binary"


Source = Union[bytes, BinaryIO]


def _as_stream(source: Source) -> BinaryIO:
    if isinstance(source, (bytes, bytearray)):
        return io.BytesIO(source)
    return source


def _read_header(stream: BinaryIO) -> Tuple[int, int]:
    raw = stream.readline()
    header = raw.decode("utf-8", errors="replace").strip()
    parts = header.split()
    try:
        count, dim = (int(x) for x in parts)
    except ValueError:
        raise MalformedHeader(header) from None
    if count < 0 or dim < 1:
        raise MalformedHeader(header)
    return count, dim


def _read_text(stream: BinaryIO, count: int, dim: int, unicode_errors: str) -> Tuple[List[str], np.ndarray]:
    tokens: List[str] = []
    matrix = np.empty((count, dim), dtype=np.float64)
    for record in range(count):
        line = stream.readline()
        if not line:
            raise TruncatedRecord(record, f"unexpected end of input after {record} of {count} records")
        try:
            text = line.rstrip(b" \t\r\n").decode("utf-8", errors=unicode_errors)
        except UnicodeDecodeError:
            raise TruncatedRecord(record, "token is not valid UTF-8") from None
        # fields are separated by ASCII spaces only; tokens may hold other whitespace
        parts = [part for part in text.split(" ") if part]
        if not parts:
            raise TruncatedRecord(record, "empty line")
        token, values = parts[0], parts[1:]
        if len(values) < dim:
            raise TruncatedRecord(record, f"token {token!r} has {len(values)} of {dim} components")
        if len(values) > dim:
            raise DimensionMismatch(dim, len(values), f"token {token!r}")
        try:
            matrix[record] = [float(x) for x in values]
        except ValueError:
            raise TruncatedRecord(record, f"token {token!r} has a non-numeric component") from None
        tokens.append(token)
    return tokens, matrix


def _read_binary(stream: BinaryIO, count: int, dim: int, unicode_errors: str,
                 chunk_size: int) -> Tuple[List[str], np.ndarray]:
    tokens: List[str] = []
    matrix = np.empty((count, dim), dtype=BINARY_DTYPE)
    bytes_per_vector = dim * BINARY_DTYPE.itemsize
    chunk = b""

    while len(tokens) < count:
        new_chunk = stream.read(chunk_size)
        chunk += new_chunk
        start = 0
        while len(tokens) < count:
            i_space = chunk.find(b" ", start)
            i_vector = i_space + 1
            if i_space == -1 or len(chunk) - i_vector < bytes_per_vector:
                break
            try:
                token = chunk[start:i_space].decode("utf-8", errors=unicode_errors).lstrip("\n")
            except UnicodeDecodeError:
                raise TruncatedRecord(len(tokens), "token is not valid UTF-8") from None
            matrix[len(tokens)] = np.frombuffer(chunk, dtype=BINARY_DTYPE, count=dim, offset=i_vector)
            tokens.append(token)
            start = i_vector + bytes_per_vector
        chunk = chunk[start:]
        if not new_chunk:
            break

    if len(tokens) != count:
        raise TruncatedRecord(len(tokens), f"unexpected end of input after {len(tokens)} of {count} records")
    return tokens, matrix


def load_word_vectors(
    source: Source,
    fmt: Union[VectorFormat, str] = VectorFormat.TEXT,
    unicode_errors: str = "strict",
    chunk_size: int = BINARY_CHUNK_SIZE,
) -> Tuple[EmbeddingStore, int]:
    """
    Load a word-vector model.

    Returns (store, skipped) where skipped counts zero-norm rows that were
    dropped from the store.
    """
    fmt = VectorFormat(fmt)
    stream = _as_stream(source)
    count, dim = _read_header(stream)
    logger.info(f"📥 loading {count} x {dim} {fmt.value} word vectors")

    if fmt is VectorFormat.BINARY:
        tokens, matrix = _read_binary(stream, count, dim, unicode_errors, chunk_size)
    else:
        tokens, matrix = _read_text(stream, count, dim, unicode_errors)

    seen = set()
    for token in tokens:
        if token in seen:
            raise DuplicateToken(token)
        seen.add(token)

    finite = np.isfinite(matrix).all(axis=1)
    if not finite.all():
        row = int(np.flatnonzero(~finite)[0])
        col = int(np.flatnonzero(~np.isfinite(matrix[row]))[0])
        raise NonFiniteComponent(col, float(matrix[row, col]))

    nonzero = matrix.any(axis=1)
    skipped = int(count - np.count_nonzero(nonzero))
    if skipped:
        logger.warning(f"⚠️  skipped {skipped} zero-norm rows")
        matrix = matrix[nonzero]
        tokens = [t for t, keep in zip(tokens, nonzero) if keep]

    store = EmbeddingStore(tokens, matrix)
    logger.info(f"✅ loaded {len(store)} x {dim} matrix")
    return store, skipped


def write_word_vectors(store: EmbeddingStore, fmt: Union[VectorFormat, str] = VectorFormat.TEXT) -> bytes:
    """
    Serialize a store in text or binary form.

    Text uses the shortest round-trip repr of each float64 component so a
    reload is exact; binary narrows components to float32.
    """
    fmt = VectorFormat(fmt)
    out = io.BytesIO()
    out.write(f"{len(store)} {store.dim}\n".encode("utf-8"))
    for token, row in zip(store.tokens, store.matrix):
        if fmt is VectorFormat.BINARY:
            out.write(token.encode("utf-8") + b" " + row.astype(BINARY_DTYPE).tobytes())
        else:
            values = " ".join(repr(float(x)) for x in row)
            out.write(f"{token} {values}\n".encode("utf-8"))
    return out.getvalue()
