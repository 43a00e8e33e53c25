"""
Command-line configuration resolved from flags and environment
"""

from __future__ import annotations

import argparse
import logging
import os
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..core.errors import ModelNotConfigured
from ..embeddings.loader import VectorFormat
from ..metrics.paths import Direction
from ..storage.representations import DEFAULT_DENSE_CAP

logger = logging.getLogger(__name__)

MODEL_ENV = "EMBEDGRAPH_MODEL"
DENSE_CAP_ENV = "EMBEDGRAPH_DENSE_CAP"
LOG_LEVEL_ENV = "EMBEDGRAPH_LOG_LEVEL"


def _env_model_path() -> Optional[Path]:
    value = os.environ.get(MODEL_ENV)
    return Path(value) if value else None


def _env_dense_cap() -> int:
    value = os.environ.get(DENSE_CAP_ENV)
    if not value:
        return DEFAULT_DENSE_CAP
    try:
        return int(value)
    except ValueError:
        logger.warning(f"⚠️  ignoring {DENSE_CAP_ENV}={value!r}, using {DEFAULT_DENSE_CAP}")
        return DEFAULT_DENSE_CAP


def _env_log_level() -> str:
    return os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()


class CliConfig(BaseModel):
    model_config = ConfigDict(frozen=True, protected_namespaces=())

    model_path: Optional[Path] = Field(default_factory=_env_model_path)
    model_format: Literal["auto", "text", "binary"] = "auto"
    output_format: Literal["json", "dot", "tsv"] = "json"
    direction: Direction = Direction.DIRECTED
    symmetrize: bool = False
    dense_cap: int = Field(default_factory=_env_dense_cap, ge=1)
    log_level: str = Field(default_factory=_env_log_level)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        """Flags that were given override environment defaults"""
        values = {}
        for name in ("model_path", "model_format", "output_format", "direction", "dense_cap"):
            value = getattr(args, name, None)
            if value is not None:
                values[name] = value
        if getattr(args, "symmetrize", False):
            values["symmetrize"] = True
        verbose = getattr(args, "verbose", 0) or 0
        if verbose:
            values["log_level"] = "DEBUG" if verbose > 1 else "INFO"
        return cls(**values)

    def require_model(self) -> Path:
        if self.model_path is None:
            raise ModelNotConfigured()
        return self.model_path

    def resolved_model_format(self) -> VectorFormat:
        if self.model_format != "auto":
            return VectorFormat(self.model_format)
        path = self.require_model()
        return VectorFormat.BINARY if path.suffix == ".bin" else VectorFormat.TEXT
