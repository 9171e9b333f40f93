"""Run configuration.  Flags take precedence over the environment."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .catalog import NODE_RULES
from .genus1 import DATA_ENV


@dataclass(frozen=True)
class RunConfig:
    max_n: int = 10          # series identities are checked up to this order
    stable_max_n: int = 4    # limited by the shipped genus-1 Betti table
    excess_max_n: int = 2
    node_rule: str = "product"
    data_dir: str | None = None

    def __post_init__(self):
        if self.node_rule not in NODE_RULES:
            raise ValueError(f"node_rule must be one of {NODE_RULES}")
        if min(self.max_n, self.stable_max_n, self.excess_max_n) < 0:
            raise ValueError("orders must be nonnegative")

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        base = cls(data_dir=os.environ.get(DATA_ENV))
        return replace(base, **{k: v for k, v in overrides.items() if v is not None})

    def apply(self) -> None:
        """Point the genus-1 table loader at data_dir."""
        if self.data_dir:
            os.environ[DATA_ENV] = self.data_dir
