"""
Vector similarity primitives shared by translation, distances and graph similarity
"""

import math

import numpy as np

from ..core.errors import DimensionMismatch
from ..core.vectors import EmbeddingVector


def cosine(a: EmbeddingVector, b: EmbeddingVector) -> float:
    """dot of the unit directions in double precision, clamped to [-1, 1]"""
    if a.dim != b.dim:
        raise DimensionMismatch(a.dim, b.dim, "cosine")
    value = float(np.dot(a.unit, b.unit))
    if not math.isfinite(value):
        raise FloatingPointError(f"cosine is not finite for {a!r} and {b!r}")
    return min(1.0, max(-1.0, value))


def inner_product(a: EmbeddingVector, b: EmbeddingVector) -> float:
    if a.dim != b.dim:
        raise DimensionMismatch(a.dim, b.dim, "inner product")
    return float(np.dot(a.array, b.array))
