"""
Potential Service - the combined Eckart / deformed Hylleraas potential,
its named special cases and the centrifugal term with its approximants.

Every function accepts a scalar radius or a numpy array and returns the
same shape. All exponential ratios go through expm1 so nothing cancels
catastrophically near the origin:

    s/(1-s)   = 1/expm1(2 alpha r)
    s/(1-s)^2 = q (1 + q),  q = s/(1-s)
"""
from typing import Union

import numpy as np

from api.models import (
    ApproximationParams,
    CentrifugalScheme,
    Family,
    PotentialParams,
    ProblemSpec,
)
from services.errors import NonPositiveRadius


Radius = Union[float, np.ndarray]


def as_radius(r: Radius) -> np.ndarray:
    arr = np.asarray(r, dtype=float)
    if arr.size and np.min(arr) <= 0:
        raise NonPositiveRadius(float(np.min(arr)))
    return arr


def match_shape(value: np.ndarray, r: Radius):
    return float(value) if np.ndim(r) == 0 else value


def screening_ratio(alpha: float, r: np.ndarray) -> np.ndarray:
    """q = s/(1 - s) with s = exp(-2 alpha r)."""
    with np.errstate(over="ignore"):
        return 1.0 / np.expm1(2.0 * alpha * r)


def _ratios(alpha: float, r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    q = screening_ratio(alpha, r)
    return q, q * (1.0 + q)


def excess_over_threshold(p: PotentialParams, r: Radius):
    """
    V(r) - a V0 / b = (V0/b)(a - 1) q - V1 q + V2 q (1 + q).

    Keeps its sign in the tail, where V(r) itself rounds onto the threshold.
    """
    arr = as_radius(r)
    q, q2 = _ratios(p.alpha, arr)
    value = (p.V0 / p.b) * (p.a - 1.0) * q - p.V1 * q + p.V2 * q2
    return match_shape(value, r)


def eval_combined(p: PotentialParams, r: Radius):
    """V(r) = (V0/b)(a - s)/(1 - s) - V1 s/(1 - s) + V2 s/(1 - s)^2."""
    # (a - s)/(1 - s) = a + (a - 1) q
    value = threshold(p) + np.asarray(excess_over_threshold(p, r))
    return match_shape(value, r)


def threshold(p: PotentialParams) -> float:
    """Continuum edge V(r -> inf) = a V0 / b."""
    return p.a * p.V0 / p.b


def family_params(family: Family, p: PotentialParams) -> PotentialParams:
    """
    Parameters of the combined potential that realise ``family``.

    Hulthen takes its strength from V1, Rosen-Morse from V0.
    """
    if family is Family.COMBINED:
        return p
    if family is Family.DEFORMED_HYLLERAAS:
        return p.model_copy(update={"V1": 0.0, "V2": 0.0})
    if family is Family.ECKART:
        return p.model_copy(update={"V0": 0.0})
    if family is Family.HULTHEN:
        return PotentialParams(V0=0.0, V1=p.V1, V2=0.0, a=0.0, b=1.0, alpha=p.alpha)
    if family is Family.ROSEN_MORSE:
        return PotentialParams(V0=p.V0, V1=0.0, V2=0.0, a=-1.0, b=1.0, alpha=p.alpha)
    raise ValueError(f"Unknown potential family: {family}")


def eval_family(family: Family, p: PotentialParams, r: Radius):
    return eval_combined(family_params(family, p), r)


# ======================== Centrifugal term ========================

def centrifugal_factor(l: int, D: int) -> float:
    """L = (D-1)(D-3)/4 + l(l+D-2); depends on (l, D) only through this."""
    if l < 0:
        raise ValueError(f"l must be >= 0 (got {l})")
    if D < 2:
        raise ValueError(f"D must be >= 2 (got {D})")
    return ((D - 1) * (D - 3)) / 4 + l * (l + D - 2)


def centrifugal_exact(l: int, D: int, mass: float, hbar: float, r: Radius):
    arr = as_radius(r)
    value = (hbar ** 2 / (2.0 * mass)) * centrifugal_factor(l, D) / arr ** 2
    return match_shape(value, r)


def approx_inverse_r2_improved(alpha: float, ap: ApproximationParams, r: Radius):
    """omega s/(1-s) + lambda s/(1-s)^2."""
    arr = as_radius(r)
    q, q2 = _ratios(alpha, arr)
    return match_shape(ap.omega * q + ap.lambda_adj * q2, r)


def approx_inverse_r2_ga(alpha: float, r: Radius):
    """
    Greene-Aldrich approximant 4 alpha^2 s/(1-s)^2.

    The factor 4 makes it exact as alpha r -> 0; it is the improved
    approximant with omega = 0, lambda = 4 alpha^2.
    """
    return approx_inverse_r2_improved(alpha, ga_params(alpha), r)


def ga_params(alpha: float) -> ApproximationParams:
    return ApproximationParams(omega=0.0, lambda_adj=4.0 * alpha ** 2)


def inverse_r2(scheme: CentrifugalScheme, alpha: float, ap: ApproximationParams, r: Radius):
    if scheme is CentrifugalScheme.EXACT:
        arr = as_radius(r)
        return match_shape(1.0 / arr ** 2, r)
    if scheme is CentrifugalScheme.GA:
        return approx_inverse_r2_ga(alpha, r)
    if scheme is CentrifugalScheme.IMPROVED:
        return approx_inverse_r2_improved(alpha, ap, r)
    raise ValueError(f"Unknown centrifugal scheme: {scheme}")


def effective_potential(
    p: PotentialParams,
    ap: ApproximationParams,
    l: int,
    D: int,
    mass: float,
    hbar: float,
    scheme: CentrifugalScheme,
    r: Radius,
):
    """V(r) + (hbar^2/2mu) L K(r), K = 1/r^2 or one of its approximants."""
    L = centrifugal_factor(l, D)
    arr = as_radius(r)
    value = np.asarray(eval_combined(p, arr))
    if L != 0:
        value = value + (hbar ** 2 / (2.0 * mass)) * L * np.asarray(inverse_r2(scheme, p.alpha, ap, arr))
    return match_shape(value, r)


def effective_potential_for(spec: ProblemSpec, l: int, D: int, scheme: CentrifugalScheme, r: Radius):
    return effective_potential(spec.potential, spec.approx, l, D, spec.mass, spec.hbar, scheme, r)
