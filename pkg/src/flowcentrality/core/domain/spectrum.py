from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .series import PowerSeries


class Spectrum(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lam: float = Field(gt=0, description="Perron root, the dominant eigenvalue")
    multiplicity: int = Field(
        ge=1, description="Number of eigenvalues whose modulus equals lambda"
    )
    simple: bool = Field(description="Whether lambda itself is a simple eigenvalue")
    eta: float | None = Field(default=None)
    dominant_vector: np.ndarray | None = Field(default=None)
    char_poly: PowerSeries

    @property
    def scaling(self) -> float:
        """Growth constant of the hike counts: lambda ** multiplicity."""
        return self.lam**self.multiplicity
