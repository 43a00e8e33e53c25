"""
Helper utilities shared by storage and the command line
"""

from .utils import STDIO, format_fixed, format_route, read_input, write_output

__all__ = ['STDIO', 'format_fixed', 'format_route', 'read_input', 'write_output']
