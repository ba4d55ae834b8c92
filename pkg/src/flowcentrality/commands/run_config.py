from __future__ import annotations

import argparse
from pathlib import Path

from pydantic import BaseModel, Field

from ..config import FlowCentralityConfigurations


class RunConfig(BaseModel, frozen=True):
    """One invocation: CLI flags layered over the environment settings."""

    input: Path | None = None
    directed: bool = False
    out: Path | None = None
    workers: int = Field(default=1, ge=1)
    budget: int | None = Field(default=None, gt=0)
    seed: int = 0
    tolerance: float | None = Field(default=None, gt=0)
    k: int | None = Field(default=None, ge=1)
    k_max: int = Field(default=40, ge=1)
    max_len: int | None = Field(default=None, ge=1)
    subsets: Path | None = None
    exact: bool | None = None
    baselines: str = "degree"
    suite: str | None = None

    @classmethod
    def from_namespace(
        cls, namespace: argparse.Namespace, config: FlowCentralityConfigurations
    ) -> RunConfig:
        values = {
            key: value
            for key, value in vars(namespace).items()
            if key in cls.model_fields and value is not None
        }
        values.setdefault("workers", config.WORKERS)
        values.setdefault("seed", config.SEED)
        return cls(**values)

    def settings(self, config: FlowCentralityConfigurations) -> FlowCentralityConfigurations:
        update: dict[str, object] = {"WORKERS": self.workers, "SEED": self.seed}
        if self.budget is not None:
            update["HIKE_BUDGET"] = self.budget
            update["DISTRIBUTION_BUDGET"] = self.budget
        if self.tolerance is not None:
            update["MULTIPLICITY_TOLERANCE"] = self.tolerance
        return config.model_copy(update=update)
