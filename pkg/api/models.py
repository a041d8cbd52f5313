import logging
from typing import Optional, Literal
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

logger = logging.getLogger(__name__)


class Family(str, Enum):
    COMBINED = "combined"
    DEFORMED_HYLLERAAS = "hylleraas"
    ECKART = "eckart"
    HULTHEN = "hulthen"
    ROSEN_MORSE = "rosen-morse"


class CentrifugalScheme(str, Enum):
    EXACT = "exact"
    GA = "ga"              # Greene-Aldrich, 4a^2 s/(1-s)^2
    IMPROVED = "improved"  # omega s/(1-s) + lambda s/(1-s)^2


class TableLayout(str, Enum):
    PAPER = "paper"  # (0,0) then l = 0..n-1 for n >= 1
    RECT = "rect"    # every l <= l_max for every n


class Verdict(str, Enum):
    CONFIRMED = "Confirmed"
    SPURIOUS = "Spurious"
    APPROXIMATION_ERROR = "ApproximationError"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class PotentialParams(BaseModel):
    """Well depths, Hylleraas shape parameters and screening of the combined potential."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    V0: float = 0.0
    V1: float = 0.0
    V2: float = 0.0
    a: float = 0.0
    b: float = 1.0
    alpha: float = Field(default=1.0, gt=0, description="Screening parameter (inverse length)")

    @field_validator("b")
    @classmethod
    def _b_nonzero(cls, v: float) -> float:
        if v == 0:
            raise ValueError("b must be non-zero")
        return v


class ApproximationParams(BaseModel):
    """Adjustable parameters of the improved centrifugal approximation."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    omega: float = 0.0
    lambda_adj: float = 0.0

    @model_validator(mode="after")
    def _warn_negative(self):
        if self.omega < 0 or self.lambda_adj < 0:
            logger.warning(
                f"Negative approximation parameter accepted (omega={self.omega}, lambda={self.lambda_adj})"
            )
        return self


class ProblemSpec(BaseModel):
    """Full radial problem apart from the quantum numbers (n, l, D)."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    potential: PotentialParams
    approx: ApproximationParams = Field(default_factory=ApproximationParams)
    mass: float = Field(default=1.0, gt=0)
    hbar: float = Field(default=1.0, gt=0)

    @property
    def kinetic_factor(self) -> float:
        """hbar^2 / (2 mu)."""
        return self.hbar ** 2 / (2.0 * self.mass)


class RunConfig(BaseModel):
    """Flat run configuration as read from a JSON object."""
    model_config = ConfigDict(extra="forbid", strict=True, allow_inf_nan=False, populate_by_name=True)

    V0: float = 0.0
    V1: float = 0.0
    V2: float = 0.0
    a: float = 0.0
    b: float = 1.0
    alpha: float = Field(default=1.0, gt=0)
    omega: float = 0.0
    lambda_adj: float = Field(default=0.0, alias="lambda")
    mass: float = Field(default=1.0, gt=0)
    hbar: float = Field(default=1.0, gt=0)

    # Run metadata
    output: Optional[str] = None
    format: Optional[Literal["csv", "json"]] = None

    @field_validator("b")
    @classmethod
    def _b_nonzero(cls, v: float) -> float:
        if v == 0:
            raise ValueError("b must be non-zero")
        return v

    def to_problem(self) -> ProblemSpec:
        return ProblemSpec(
            potential=PotentialParams(
                V0=self.V0, V1=self.V1, V2=self.V2, a=self.a, b=self.b, alpha=self.alpha,
            ),
            approx=ApproximationParams(omega=self.omega, lambda_adj=self.lambda_adj),
            mass=self.mass,
            hbar=self.hbar,
        )


class ComparisonReport(BaseModel):
    """Closed-form energy checked against the finite-difference oracle."""
    n: int
    l: int
    D: int
    scheme: CentrifugalScheme
    E_closed: Optional[float] = None
    E_oracle: Optional[float] = None  # None means NoBoundState
    delta: Optional[float] = None
    closed_physical: bool = False
    verdict: Verdict
    bound_states_found: int = 0
    threshold: float = 0.0
    grid_n: int
    r_max: float
    detail: Optional[str] = None

    @property
    def no_bound_state(self) -> bool:
        return self.E_oracle is None
