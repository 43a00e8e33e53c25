"""
Translation of embedded-graphs into weighted- and edge-graphs
"""

from .translation import (
    Metric,
    TranslationSpec,
    threshold,
    translate,
    translate_and_threshold,
    translate_many,
)

__all__ = [
    'Metric',
    'TranslationSpec',
    'threshold',
    'translate',
    'translate_and_threshold',
    'translate_many',
]
