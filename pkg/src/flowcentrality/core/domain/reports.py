from __future__ import annotations

import math
from enum import StrEnum

from pydantic import BaseModel, Field

from .graph import VertexSubset


class CentralityReport(BaseModel, frozen=True):
    subset: VertexSubset
    value: float = Field(description="Fraction of network flows intercepted")
    lambda_used: float

    @property
    def percent(self) -> float:
        return 100.0 * self.value


class GroupCentralityRow(BaseModel, frozen=True):
    subset: VertexSubset
    degree: int = Field(ge=0)
    degree_normalized: float = Field(ge=0)
    closeness_sum: float
    closeness_avg: float
    betweenness: float = Field(ge=0)

    @property
    def closeness_finite(self) -> bool:
        return math.isfinite(self.closeness_sum)


class DistributionRow(BaseModel, frozen=True):
    """One connected k-subset of a centrality distribution.

    The closeness and betweenness columns are only filled when every
    baseline was requested.
    """

    subset: VertexSubset
    value: float
    normalized: float
    degree: int = Field(ge=0)
    degree_normalized: float = Field(ge=0)
    closeness_sum: float | None = None
    closeness_avg: float | None = None
    betweenness: float | None = None


class VerificationStatus(StrEnum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"
    INFO = "INFO"
    DISCREPANCY = "DISCREPANCY"


class VerificationRow(BaseModel, frozen=True):
    suite: str
    graph: str
    subject: str
    ell: int | None = None
    expected: str = ""
    observed: str = ""
    ratio: float | None = None
    centrality: float | None = None
    status: VerificationStatus

    @property
    def failed(self) -> bool:
        return self.status is VerificationStatus.FAIL
