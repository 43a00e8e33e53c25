"""
Utility functions used across the application
"""

import sys
from pathlib import Path
from typing import Sequence


STDIO = "-"


def format_fixed(value: float, places: int) -> str:
    """Fixed-point text, without a negative sign on zero"""
    text = f"{value:.{places}f}"
    if text.startswith("-") and float(text) == 0.0:
        return text[1:]
    return text


def format_route(vertices: Sequence[str]) -> str:
    """Vertex route as 'v1 -> v2 -> ...'"""
    return " -> ".join(vertices)


def read_input(path: str) -> bytes:
    """Read a whole file, or stdin when path is '-'"""
    if path == STDIO:
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def write_output(path: str, data: bytes) -> None:
    """Write bytes to a file, or UTF-8 text to stdout when path is '-'"""
    if path == STDIO:
        sys.stdout.write(data.decode("utf-8"))
        sys.stdout.flush()
        return
    Path(path).write_bytes(data)
