"""
Application settings and configuration.
"""
from pydantic_settings import BaseSettings
from pydantic import Field
from functools import lru_cache


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Logging
    log_level: str = Field(default="INFO", description="Root logging level")

    # Finite-difference oracle
    oracle_grid_n: int = Field(
        default=8000,
        description="Default number of subintervals of the oracle grid"
    )
    oracle_r_max_alpha: float = Field(
        default=40.0,
        description="Default oracle box size in units of 1/alpha"
    )
    bound_margin: float = Field(
        default=1e-9,
        description="Eigenvalues must lie this far below threshold to count as bound"
    )
    confirm_tolerance: float = Field(
        default=5e-4,
        description="Closed-form vs oracle tolerance, scaled by max(1, |E|)"
    )

    # Wavefunction
    quadrature_tolerance: float = Field(
        default=1e-10,
        description="Absolute error accepted from adaptive quadrature"
    )
    quadrature_decay: float = Field(
        default=60.0,
        description="Quadrature stops where U^2 has decayed by exp(-value)"
    )
    node_samples: int = Field(default=4000, description="Samples used by node counting")
    node_window_lo: float = Field(default=1e-3, description="Node window start, units of 1/alpha")
    node_window_hi: float = Field(default=40.0, description="Node window end, units of 1/alpha")
    residual_step: float = Field(default=1e-4, description="Central-difference step for ODE residuals")

    # Output
    csv_digits: int = Field(default=17, description="Significant digits written to CSV/JSON")

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
