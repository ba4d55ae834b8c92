from functools import lru_cache

from injector import Binder, singleton
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class FlowCentralityConfigurations(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="FLOWCENTRALITY_", env_file=".env", extra="ignore"
    )

    WORKERS: int = Field(default=1, ge=1)
    HIKE_BUDGET: int = Field(default=1_000_000, gt=0)
    DISTRIBUTION_BUDGET: int = Field(default=10_000_000, gt=0)
    MULTIPLICITY_TOLERANCE: float = Field(default=1e-8, gt=0)
    CENTRALITY_SLACK: float = Field(default=1e-9, ge=0)
    POWER_ITERATION_MAX_ITER: int = Field(default=10_000, gt=0)
    POWER_ITERATION_TOL: float = Field(default=1e-12, gt=0)
    ROOT_FALLBACK_MAX_N: int = Field(default=64, ge=0)
    EIGEN_CHARPOLY_MIN_N: int = Field(default=300, ge=1)
    CONDITION_WARNING_N: int = Field(default=500, ge=1)
    MAX_INCLUSION_EXCLUSION_PARTS: int = Field(default=20, ge=1)
    SEED: int = 0


@lru_cache
def default_config() -> FlowCentralityConfigurations:
    return FlowCentralityConfigurations()


def provide_config(binder: Binder):
    binder.bind(FlowCentralityConfigurations, to=default_config(), scope=singleton)
