"""
Wavefunction Service - radial wavefunctions of the closed-form states.

    U(r) = N s^mu (1 - s)^((1 + v)/2) P_n^(2mu, v)(1 - 2s),  s = exp(-2 alpha r)

The exponents and Jacobi parameters come out of the NU wave factors, so
the construction follows whatever the engine derives. N is found by
quadrature.
"""
import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np
from scipy import integrate

from api.models import ProblemSpec
from config import get_settings
from services import nu_parametric as nu
from services.errors import ParameterOutOfDomain, QuadratureFailure
from services.potential_service import (
    Radius,
    approx_inverse_r2_improved,
    as_radius,
    centrifugal_factor,
    eval_combined,
    match_shape,
)
from services.spectrum_service import BoundStateResult, bound_energy, nu_instance

logger = logging.getLogger(__name__)


def jacobi(n: int, A: float, B: float, x):
    """
    P_n^(A,B)(x) by the three-term recurrence in the degree.

    Accepts a scalar or array ``x``.
    """
    if n < 0:
        raise ValueError(f"degree must be >= 0 (got {n})")
    if not A > -1:
        raise ParameterOutOfDomain("A", A)
    if not B > -1:
        raise ParameterOutOfDomain("B", B)

    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return float(p_prev) if x.ndim == 0 else p_prev
    p_curr = (A + 1.0) + (A + B + 2.0) * (x - 1.0) / 2.0

    for k in range(2, n + 1):
        s = 2 * k + A + B
        a_k = 2 * k * (k + A + B) * (s - 2)
        b_k = (s - 1) * (s * (s - 2) * x + A * A - B * B)
        c_k = 2 * (k + A - 1) * (k + B - 1) * s
        p_prev, p_curr = p_curr, (b_k * p_curr - c_k * p_prev) / a_k

    return float(p_curr) if x.ndim == 0 else p_curr


@dataclass(frozen=True)
class RadialState:
    n: int
    l: int
    D: int
    mu_bar: float
    v: float
    energy: float
    physical: bool
    alpha: float
    jacobi_A: float
    jacobi_B: float
    s_exponent: float
    one_minus_s_exponent: float
    normalization: Optional[float] = None  # None until normalized

    @property
    def normalized(self) -> bool:
        return self.normalization is not None


def radial_state(spec: ProblemSpec, n: int, l: int, D: int, result: Optional[BoundStateResult] = None) -> RadialState:
    """Build the state (n, l, D); spurious states are built too but flagged."""
    result = result or bound_energy(spec, n, l, D)
    coeffs, derived = nu_instance(result.reduced)
    factors = nu.wave_factors(coeffs, derived)
    A, B = nu.jacobi_parameters(factors)
    if not A > -1:
        raise ParameterOutOfDomain("A", A)
    if not B > -1:
        raise ParameterOutOfDomain("B", B)
    if not result.physical:
        logger.warning(f"⚠️ Building wavefunction of spurious state (n={n}, l={l}, D={D}): {result.spurious_reason}")

    return RadialState(
        n=n, l=l, D=D,
        mu_bar=result.reduced.mu_bar,
        v=result.reduced.v,
        energy=result.energy,
        physical=result.physical,
        alpha=spec.potential.alpha,
        jacobi_A=A,
        jacobi_B=B,
        s_exponent=factors.c12,
        one_minus_s_exponent=factors.c13,
    )


def radial_u_unnormalized(spec: ProblemSpec, state: RadialState, r: Radius):
    arr = as_radius(r)
    two_ar = 2.0 * spec.potential.alpha * arr
    s = np.exp(-two_ar)
    one_minus_s = -np.expm1(-two_ar)
    value = (
        s ** state.s_exponent
        * one_minus_s ** state.one_minus_s_exponent
        * jacobi(state.n, state.jacobi_A, state.jacobi_B, 1.0 - 2.0 * s)
    )
    return match_shape(np.asarray(value), r)


def radial_u(spec: ProblemSpec, state: RadialState, r: Radius):
    """N U(r), or U(r) for a state that has not been normalized."""
    scale = state.normalization if state.normalized else 1.0
    return match_shape(scale * np.asarray(radial_u_unnormalized(spec, state, r)), r)


# ======================== Normalization ========================

def quadrature_upper(state: RadialState) -> float:
    """Radius where U^2 ~ exp(-4 alpha mu r) has decayed by quadrature_decay e-folds."""
    return get_settings().quadrature_decay / (4.0 * state.alpha * state.mu_bar)


def _breakpoints(state: RadialState, r_upper: float) -> list[float]:
    lo = min(1.0 / state.alpha, r_upper) * 1e-3
    return list(np.geomspace(lo, r_upper, 12)[:-1])


def normalization(spec: ProblemSpec, state: RadialState, u: Optional[Callable[[float], float]] = None) -> float:
    """
    N with integral_0^inf (N U)^2 dr = 1.

    ``u`` replaces the closed-form U(r) when given.
    """
    settings = get_settings()
    func = u or (lambda x: radial_u_unnormalized(spec, state, x))
    r_upper = quadrature_upper(state)

    value, abserr = integrate.quad(
        lambda x: func(x) ** 2 if x > 0 else 0.0,
        0.0,
        r_upper,
        points=_breakpoints(state, r_upper),
        epsabs=settings.quadrature_tolerance,
        epsrel=settings.quadrature_tolerance,
        limit=500,
    )
    if abserr > max(settings.quadrature_tolerance, settings.quadrature_tolerance * value) or value <= 0:
        raise QuadratureFailure(value, abserr, settings.quadrature_tolerance)

    logger.debug(f"∫U² = {value:.12e} (err {abserr:.1e}) on [0, {r_upper:.4g}]")
    return 1.0 / math.sqrt(value)


def normalize(spec: ProblemSpec, state: RadialState) -> RadialState:
    return replace(state, normalization=normalization(spec, state))


def quadrature_check(spec: ProblemSpec, state: RadialState, panels: int = 200, order: int = 16) -> float:
    """
    Integral of (N U)^2 by composite Gauss-Legendre on geometric panels.

    Independent of the adaptive routine used by ``normalization``; returns
    the integral itself, 1 for a normalized state.
    """
    r_upper = quadrature_upper(state)
    edges = np.concatenate(([0.0], np.geomspace(r_upper * 1e-7, r_upper, panels)))
    nodes, weights = np.polynomial.legendre.leggauss(order)

    lo, hi = edges[:-1, None], edges[1:, None]
    half = (hi - lo) / 2.0
    r = (lo + hi) / 2.0 + half * nodes[None, :]
    values = np.asarray(radial_u(spec, state, r.ravel())).reshape(r.shape) ** 2
    return float(np.sum(half * weights[None, :] * values))


# ======================== Checks ========================

def count_nodes(
    spec: ProblemSpec,
    state: RadialState,
    r_window: Optional[tuple[float, float]] = None,
    samples: Optional[int] = None,
) -> int:
    """Strict sign changes of U on a geometric grid; exact zeros are skipped."""
    settings = get_settings()
    samples = samples or settings.node_samples
    if samples < 1000:
        raise ValueError(f"samples must be >= 1000 (got {samples})")
    alpha = spec.potential.alpha
    lo, hi = r_window or (settings.node_window_lo / alpha, settings.node_window_hi / alpha)

    signs = np.sign(radial_u_unnormalized(spec, state, np.geomspace(lo, hi, samples)))
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def ode_residual(
    spec: ProblemSpec,
    state: RadialState,
    r_range: tuple[float, float] = (0.1, 15.0),
    h: Optional[float] = None,
    u: Optional[Callable[[np.ndarray], np.ndarray]] = None,
) -> float:
    """
    max |U'' + (2mu/hbar^2)(E - V)U - L K U| over the grid, relative to the
    larger of max|U''| and max|(2mu/hbar^2)(E - V)U|.

    K is the improved approximant the closed form was built with; the term
    drops out when L = 0.
    """
    h = h or get_settings().residual_step
    r = np.arange(r_range[0], r_range[1] + h / 2, h)
    func = u or (lambda x: np.asarray(radial_u_unnormalized(spec, state, x)))

    u0 = func(r)
    second = (func(r + h) - 2.0 * u0 + func(r - h)) / h ** 2
    k2 = 1.0 / spec.kinetic_factor
    potential_term = k2 * (state.energy - np.asarray(eval_combined(spec.potential, r))) * u0

    L = centrifugal_factor(state.l, state.D)
    if L != 0:
        centrifugal = L * np.asarray(approx_inverse_r2_improved(spec.potential.alpha, spec.approx, r)) * u0
    else:
        centrifugal = np.zeros_like(r)

    residual = np.abs(second + potential_term - centrifugal)
    scale = max(float(np.max(np.abs(second))), float(np.max(np.abs(potential_term))))
    if scale == 0:
        return 0.0
    return float(np.max(residual)) / scale
