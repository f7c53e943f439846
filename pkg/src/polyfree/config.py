from __future__ import annotations

import os
from dataclasses import dataclass

from .enumerate.coset import DEFAULT_MAX_COSETS

ENV_MAX_COSETS = "POLYFREE_MAX_COSETS"


@dataclass(frozen=True)
class Config:
    max_cosets: int = DEFAULT_MAX_COSETS
    low_index_bound: int = 6
    tietze_budget: int = 10_000
    output_path: str | None = None
    verbosity: int = 0

    def __post_init__(self):
        for name in ("max_cosets", "low_index_bound", "tietze_budget"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "Config":
        """Defaults, then the environment, then explicit non-None overrides."""
        values = {k: v for k, v in overrides.items() if v is not None}
        env = os.environ.get(ENV_MAX_COSETS)
        if env is not None and "max_cosets" not in values:
            try:
                values["max_cosets"] = int(env)
            except ValueError:
                raise ValueError(f"{ENV_MAX_COSETS} must be an integer, got {env!r}") from None
        return cls(**values)
