from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from .cycle import SimpleCyclePrime
from .series import PowerSeries


class Hike(BaseModel, frozen=True):
    """A trace of simple cycles, held as its lexicographically least word.

    Letters are indices into the prime table the hike was built from; two
    adjacent letters commute exactly when their cycles are vertex-disjoint.
    """

    word: tuple[int, ...] = Field(default=())
    length: int = Field(default=0, ge=0)

    @property
    def omega(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    @classmethod
    def identity(cls) -> Hike:
        return cls()


class SieveErrorTerm(BaseModel, frozen=True):
    """Main and error term a self-avoiding hike d contributes to the sieve."""

    divisor: Hike
    mobius: int = Field(ge=-1, le=1)
    main: float = Field(description="m(d) = prob(d) * |H_l|")
    prob: float = Field(description="lambda ** -l(d)")
    residual: float = Field(description="r(d) = |H_{l - l(d)}| - m(d)")


class SieveDiagnostics(BaseModel):
    """One total length k of a walk-count asymptotic run.

    `count_sieved` is the Moebius sum over self-avoiding divisors and
    `predicted` the generating-function coefficient; both are exact.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int = Field(ge=0)
    ell: int
    count_sieved: int | Fraction
    predicted: int | Fraction
    prob_estimate: float
    f_value: float
    residual: float
    ratio_shifted: float | None = None
    ratio_unshifted: float | None = None
    supported: bool


class AsymptoticReport(BaseModel, frozen=True):
    gamma: SimpleCyclePrime
    centrality: float
    lam: float
    multiplicity: int
    f_limit: float | None = None
    rows: tuple[SieveDiagnostics, ...]
    final_error: float | None = None
    converged: bool


class MobiusIdentityReport(BaseModel, frozen=True):
    expected: PowerSeries
    observed: PowerSeries
    divisors: int = Field(ge=1, description="Self-avoiding hikes summed, identity included")

    @property
    def holds(self) -> bool:
        order = max(self.expected.order, self.observed.order)
        return all(self.expected[k] == self.observed[k] for k in range(order + 1))
