"""
embedgraph - directed graphs whose edges carry embedding vectors
"""

__version__ = "1.0.0"
