"""
Spectrum Service - closed-form bound-state energies of the D-dimensional
radial problem.

The radial equation is mapped onto the parametric NU form with
s = exp(-2 alpha r), the centrifugal term replaced by the improved
approximant. Everything here is a pure function of its arguments.
"""
import math
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from api.models import Family, ProblemSpec, PotentialParams, TableLayout
from services import nu_parametric as nu
from services.errors import ComplexV, DegenerateState, SpectrumError
from services.potential_service import centrifugal_factor, ga_params, threshold

logger = logging.getLogger(__name__)

# |bracket| below this fraction of its cancelling terms counts as zero
_DEGENERATE_RTOL = 1e-12


@dataclass(frozen=True)
class ReducedCoefficients:
    gamma: float
    theta: float
    phi: float
    A: float
    B: float
    C: float
    sigma: float
    v: float
    mu_bar: float
    eps_sq: float
    L: float


@dataclass(frozen=True)
class BoundStateResult:
    n: int
    l: int
    D: int
    energy: float
    reduced: ReducedCoefficients
    signed_bracket: float
    physical: bool
    spurious_reason: Optional[str] = None


@dataclass(frozen=True)
class SpectrumRow:
    """One (n, l, D) cell of a spectrum table; ``error`` is set instead of ``result`` on failure."""
    n: int
    l: int
    D: int
    result: Optional[BoundStateResult] = None
    error: Optional[str] = None


def _check_quantum_numbers(n: int, l: int, D: int):
    if n < 0 or l < 0:
        raise ValueError(f"quantum numbers must be >= 0 (got n={n}, l={l})")
    if D < 2:
        raise ValueError(f"D must be >= 2 (got {D})")


def _reduce(spec: ProblemSpec, n: int, l: int, D: int) -> tuple[ReducedCoefficients, float, float]:
    _check_quantum_numbers(n, l, D)
    p = spec.potential
    mu, hbar, alpha = spec.mass, spec.hbar, p.alpha
    L = centrifugal_factor(l, D)
    four_alpha2 = 4.0 * alpha ** 2

    gamma = mu * p.V0 / (2.0 * hbar ** 2 * alpha ** 2 * p.b)
    theta = (2.0 * mu * p.V1 / hbar ** 2 - spec.approx.omega * L) / four_alpha2
    phi = (2.0 * mu * p.V2 / hbar ** 2 + spec.approx.lambda_adj * L) / four_alpha2
    if phi < -0.25:
        raise ComplexV(phi)

    v = math.sqrt(1.0 + 4.0 * phi)
    sigma = (1.0 + v) / 2.0
    numerator = (1.0 - p.a) * gamma + theta - phi - (n * n + (2 * n + 1) * sigma)
    bracket = numerator / (2.0 * (n + sigma))
    # magnitude of the terms that cancel in the numerator
    terms = abs((1.0 - p.a) * gamma) + abs(theta) + abs(phi) + n * n + (2 * n + 1) * sigma
    scale = terms / (2.0 * (n + sigma))
    mu_bar = abs(bracket)

    reduced = ReducedCoefficients(
        gamma=gamma,
        theta=theta,
        phi=phi,
        A=gamma + theta,
        B=(p.a + 1.0) * gamma + theta - phi,
        C=gamma * p.a,
        sigma=sigma,
        v=v,
        mu_bar=mu_bar,
        eps_sq=mu_bar ** 2 - gamma * p.a,
        L=L,
    )
    return reduced, bracket, scale


def reduce(spec: ProblemSpec, n: int, l: int, D: int) -> ReducedCoefficients:
    """Dimensionless coefficients of the transformed radial equation."""
    return _reduce(spec, n, l, D)[0]


def nu_instance(reduced: ReducedCoefficients) -> tuple[nu.NUCoefficients, nu.NUDerived]:
    """The reduced radial equation written as a parametric NU problem."""
    eps = reduced.eps_sq
    coeffs = nu.NUCoefficients(
        c1=1.0, c2=1.0, c3=1.0,
        xi1=eps + reduced.A,
        xi2=reduced.B + 2.0 * eps,
        xi3=reduced.C + eps,
    )
    return coeffs, nu.derive_constants(coeffs)


def bound_energy(spec: ProblemSpec, n: int, l: int, D: int) -> BoundStateResult:
    """
    E = -(2 hbar^2 alpha^2 / mu) * bracket^2 + a V0 / b.

    The energy is returned for either sign of the bracket; only a positive
    bracket gives a normalizable state and sets ``physical``.
    """
    reduced, bracket, scale = _reduce(spec, n, l, D)
    if abs(bracket) <= _DEGENERATE_RTOL * scale:
        raise DegenerateState(n, l, D)

    alpha = spec.potential.alpha
    energy = -(2.0 * spec.hbar ** 2 * alpha ** 2 / spec.mass) * bracket ** 2 + threshold(spec.potential)

    physical = bracket > 0
    reason = None
    if not physical:
        reason = (
            f"signed bracket {bracket:.6g} < 0: the prefactor s^mu grows as r -> inf "
            "on this branch, energy is a squaring artifact"
        )
    else:
        coeffs, derived = nu_instance(reduced)
        slope = nu.tau_prime(coeffs, derived)
        if slope >= 0:
            physical = False
            reason = f"tau'(s) = {slope:.6g} is not negative"
            logger.warning(f"State (n={n}, l={l}, D={D}): {reason}")

    return BoundStateResult(
        n=n, l=l, D=D,
        energy=energy,
        reduced=reduced,
        signed_bracket=bracket,
        physical=physical,
        spurious_reason=reason,
    )


# ======================== Special cases ========================

def hulthen_energy(V: float, alpha: float, mass: float, hbar: float, n: int, l: int) -> float:
    N = n + l + 1
    bracket = mass * V / (4.0 * hbar ** 2 * alpha ** 2 * N) - N / 2.0
    return -(2.0 * hbar ** 2 * alpha ** 2 / mass) * bracket ** 2


def rosen_morse_energy(V: float, alpha: float, mass: float, hbar: float, n: int, l: int) -> float:
    N = n + l + 1
    bracket = mass * V / (2.0 * hbar ** 2 * alpha ** 2 * N) - N / 2.0
    return -(2.0 * hbar ** 2 * alpha ** 2 / mass) * bracket ** 2 - V


def family_problem(family: Family, V: float, alpha: float, mass: float = 1.0, hbar: float = 1.0) -> ProblemSpec:
    """
    Problem whose closed form reduces to the Hulthen or Rosen-Morse formula
    (D = 3, omega = 0, lambda = 4 alpha^2).
    """
    if family is Family.HULTHEN:
        potential = PotentialParams(V0=0.0, V1=V, V2=0.0, a=0.0, b=1.0, alpha=alpha)
    elif family is Family.ROSEN_MORSE:
        potential = PotentialParams(V0=V, V1=0.0, V2=0.0, a=-1.0, b=1.0, alpha=alpha)
    else:
        raise ValueError(f"No closed special case for family {family.value}")
    return ProblemSpec(potential=potential, approx=ga_params(alpha), mass=mass, hbar=hbar)


# ======================== Tables ========================

def quantum_numbers(n_max: int, layout: TableLayout, l_max: Optional[int] = None) -> list[tuple[int, int]]:
    """(n, l) pairs in table order."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0 (got {n_max})")
    pairs = []
    for n in range(n_max + 1):
        if layout is TableLayout.PAPER:
            ls = range(1) if n == 0 else range(n)
        else:
            ls = range((n_max if l_max is None else l_max) + 1)
        pairs.extend((n, l) for l in ls)
    return pairs


def spectrum_table(
    spec: ProblemSpec,
    n_max: int,
    layout: TableLayout = TableLayout.RECT,
    dims: Sequence[int] = (3,),
    l_max: Optional[int] = None,
) -> list[SpectrumRow]:
    """Bound energies ordered by (n, l, D); per-state failures become error rows."""
    rows: list[SpectrumRow] = []
    for n, l in quantum_numbers(n_max, layout, l_max):
        for D in dims:
            try:
                rows.append(SpectrumRow(n=n, l=l, D=D, result=bound_energy(spec, n, l, D)))
            except SpectrumError as e:
                logger.debug(f"State (n={n}, l={l}, D={D}) has no closed form: {e}")
                rows.append(SpectrumRow(n=n, l=l, D=D, error=f"{type(e).__name__}: {e}"))

    physical = sum(1 for row in rows if row.result and row.result.physical)
    logger.info(f"📊 Spectrum table: {len(rows)} states, {physical} physical")
    return rows
