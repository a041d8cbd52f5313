"""
Parametric Nikiforov-Uvarov engine.

Works on any equation of the form

    psi'' + (c1 - c2 s)/(s (1 - c3 s)) psi'
          + (-xi1 s^2 + xi2 s - xi3)/(s^2 (1 - c3 s)^2) psi = 0

and turns its six input coefficients into the derived constants c4..c13,
the two k branches, the quantization condition and the exponents of the
weight function / wavefunction prefactor.
"""
import math
from dataclasses import dataclass

from services.errors import NegativeRadicand, DegenerateC3


@dataclass(frozen=True)
class NUCoefficients:
    c1: float
    c2: float
    c3: float
    xi1: float
    xi2: float
    xi3: float

    def __post_init__(self):
        for name in ("c1", "c2", "c3", "xi1", "xi2", "xi3"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"NU coefficient {name} must be finite (got {value!r})")


@dataclass(frozen=True)
class NUDerived:
    c4: float
    c5: float
    c6: float
    c7: float
    c8: float
    c9: float


@dataclass(frozen=True)
class WaveFactors:
    c10: float  # weight exponent of s
    c11: float  # weight exponent of (1 - c3 s)
    c12: float  # prefactor exponent of s
    c13: float  # prefactor exponent of (1 - c3 s)


# Radicands that cancel to zero come back as tiny negatives after rounding.
_RADICAND_RTOL = 1e-12


def _sqrt(name: str, value: float, scale: float = 1.0) -> float:
    if value < 0:
        if value >= -_RADICAND_RTOL * max(1.0, scale):
            return 0.0
        raise NegativeRadicand(name, value)
    return math.sqrt(value)


def _sqrt_c8(coeffs: NUCoefficients, derived: NUDerived) -> float:
    return _sqrt("c8", derived.c8, derived.c4 ** 2 + abs(coeffs.xi3))


def _sqrt_c9(coeffs: NUCoefficients, derived: NUDerived) -> float:
    c3 = coeffs.c3
    scale = abs(c3 * derived.c7) + c3 ** 2 * abs(derived.c8) + abs(derived.c6)
    return _sqrt("c9", derived.c9, scale)


def derive_constants(coeffs: NUCoefficients) -> NUDerived:
    """c4..c9 from the six input coefficients."""
    c4 = (1.0 - coeffs.c1) / 2.0
    c5 = (coeffs.c2 - 2.0 * coeffs.c3) / 2.0
    c6 = c5 ** 2 + coeffs.xi1
    c7 = 2.0 * c4 * c5 - coeffs.xi2
    c8 = c4 ** 2 + coeffs.xi3
    c9 = coeffs.c3 * c7 + coeffs.c3 ** 2 * c8 + c6
    return NUDerived(c4=c4, c5=c5, c6=c6, c7=c7, c8=c8, c9=c9)


def k_branches(coeffs: NUCoefficients, derived: NUDerived) -> tuple[float, float]:
    """
    Values of k for which the quadratic under the radical of pi(s) is a
    perfect square. Returns (k_plus, k_minus), k_plus >= k_minus.
    """
    root = 2.0 * _sqrt("c8*c9", derived.c8 * derived.c9)
    centre = -(derived.c7 + 2.0 * coeffs.c3 * derived.c8)
    return centre + root, centre - root


def radical_polynomial(coeffs: NUCoefficients, derived: NUDerived, k: float) -> tuple[float, float, float]:
    """Coefficients (q2, q1, q0) of q2 s^2 + q1 s + q0 under the radical of pi(s)."""
    return derived.c6 - coeffs.c3 * k, derived.c7 + k, derived.c8


def discriminant(q2: float, q1: float, q0: float) -> float:
    return q1 * q1 - 4.0 * q2 * q0


def energy_condition_lhs(n: int, coeffs: NUCoefficients, derived: NUDerived, sqrt_c8_signed: float) -> float:
    """
    Left-hand side of the parametric energy equation.

    sqrt(c8) is taken from the caller with its sign; picking the branch is
    the caller's job. The result is affine in ``sqrt_c8_signed``.
    """
    sqrt_c9 = _sqrt_c9(coeffs, derived)
    c2, c3 = coeffs.c2, coeffs.c3
    return (
        (c2 - c3) * n
        + c3 * n * n
        - (2 * n + 1) * derived.c5
        + (2 * n + 1) * (sqrt_c9 + c3 * sqrt_c8_signed)
        + derived.c7
        + 2.0 * c3 * derived.c8
        + 2.0 * sqrt_c8_signed * sqrt_c9
    )


def tau_prime(coeffs: NUCoefficients, derived: NUDerived) -> float:
    """Slope of tau(s); negative slope is necessary for a bound state."""
    sqrt_c8 = _sqrt_c8(coeffs, derived)
    sqrt_c9 = _sqrt_c9(coeffs, derived)
    return -2.0 * coeffs.c3 - 2.0 * (sqrt_c9 + coeffs.c3 * sqrt_c8)


def wave_factors(coeffs: NUCoefficients, derived: NUDerived) -> WaveFactors:
    """Exponents of the weight function rho(s) and of the prefactor phi(s)."""
    if coeffs.c3 == 0:
        raise DegenerateC3()
    sqrt_c8 = _sqrt_c8(coeffs, derived)
    sqrt_c9 = _sqrt_c9(coeffs, derived)
    c3 = coeffs.c3
    return WaveFactors(
        c10=coeffs.c1 + 2.0 * derived.c4 + 2.0 * sqrt_c8,
        c11=1.0 - coeffs.c1 - 2.0 * derived.c4 + (2.0 / c3) * sqrt_c9,
        c12=derived.c4 + sqrt_c8,
        c13=-derived.c4 + (sqrt_c9 - derived.c5) / c3,
    )


def jacobi_parameters(factors: WaveFactors) -> tuple[float, float]:
    """
    (A, B) of the Jacobi polynomial P_n^(A,B)(1 - 2 c3 s).

    rho(s) = s^A (1 - c3 s)^B solves (sigma rho)' = tau rho, which puts the
    s exponent one below c10 while c11 is used as is.
    """
    return factors.c10 - 1.0, factors.c11
