"""
Pretrained word vectors and the cosine primitive
"""

from .similarity import cosine, inner_product
from .store import EmbeddingStore, build_store, lookup, most_similar, vector_from_tokens
from .loader import VectorFormat, load_word_vectors, write_word_vectors

__all__ = [
    'cosine',
    'inner_product',
    'EmbeddingStore',
    'build_store',
    'lookup',
    'most_similar',
    'vector_from_tokens',
    'VectorFormat',
    'load_word_vectors',
    'write_word_vectors',
]
