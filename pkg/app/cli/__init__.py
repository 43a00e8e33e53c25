"""
Command-line surface
"""

from .config import CliConfig
from .commands import ExitCode, Session

__all__ = ['CliConfig', 'ExitCode', 'Session']
