import math
from typing import List, Optional

from hypothesis import strategies as st

from app.core import EmbeddedGraph, EmbeddingVector, build_embedded_graph

VERTEX_ALPHABET = "abcxyz é-"


def components(dim: int) -> st.SearchStrategy[List[float]]:
    """dim finite floats whose norm is comfortably away from zero"""
    return st.lists(
        st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False),
        min_size=dim,
        max_size=dim,
    ).filter(lambda xs: math.sqrt(math.fsum(x * x for x in xs)) > 1e-3)


@st.composite
def vectors(draw, dim: Optional[int] = None, max_dim: int = 8) -> EmbeddingVector:
    if dim is None:
        dim = draw(st.integers(min_value=1, max_value=max_dim))
    return EmbeddingVector(draw(components(dim)))


@st.composite
def vector_pairs(draw, max_dim: int = 8):
    dim = draw(st.integers(min_value=1, max_value=max_dim))
    return draw(vectors(dim)), draw(vectors(dim))


@st.composite
def embedded_graphs(
    draw,
    min_vertices: int = 1,
    max_vertices: int = 8,
    max_edges: int = 20,
    max_dim: int = 8,
) -> EmbeddedGraph:
    """
    Random embedded-graphs; edges draw their vector either fresh or from a
    small shared pool so that bitwise-identical vectors show up regularly.
    """
    dim = draw(st.integers(min_value=1, max_value=max_dim))
    names = draw(st.lists(
        st.text(alphabet=VERTEX_ALPHABET, min_size=1, max_size=4),
        min_size=min_vertices,
        max_size=max_vertices,
        unique=True,
    ))
    n = len(names)
    pairs = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
        max_size=max_edges,
        unique=True,
    ))
    pool = draw(st.lists(components(dim), min_size=1, max_size=3))
    edges = []
    for i, j in pairs:
        if draw(st.booleans()):
            vector = draw(st.sampled_from(pool))
        else:
            vector = draw(components(dim))
        edges.append(((names[i], names[j]), vector))
    return build_embedded_graph(names, edges, dim=dim)


@st.composite
def graphs_with_target(draw, **kwargs):
    g = draw(embedded_graphs(**kwargs))
    return g, draw(vectors(g.dim))
