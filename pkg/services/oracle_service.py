"""
Oracle Service - finite-difference eigensolver for the radial equation.

The radial Hamiltonian -(hbar^2/2mu) U'' + V_eff U is discretized with
3-point central differences and Dirichlet ends. Eigenvalues come from
Sturm-sequence counts plus bisection, so only the handful of states below
threshold is ever computed.
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from api.models import CentrifugalScheme, ComparisonReport, ProblemSpec, Verdict
from config import get_settings
from services.errors import SpectrumError
from services.potential_service import effective_potential_for, threshold
from services.spectrum_service import bound_energy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid on [r_lo, r_max] with N subintervals; the N-1 interior nodes carry U."""
    r_max: float
    N: int
    r_lo: float = 0.0

    def __post_init__(self):
        if self.N < 2:
            raise ValueError(f"grid needs at least 2 subintervals (got {self.N})")
        if not self.r_lo < self.r_max:
            raise ValueError(f"r_lo ({self.r_lo}) must be below r_max ({self.r_max})")
        if self.r_lo < 0:
            raise ValueError(f"r_lo must be >= 0 (got {self.r_lo})")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_lo) / self.N

    @property
    def r_min(self) -> float:
        """First interior node."""
        return self.r_lo + self.h

    def nodes(self) -> np.ndarray:
        return self.r_lo + self.h * np.arange(1, self.N)

    def refined(self, factor: int = 2) -> "GridSpec":
        return GridSpec(r_max=self.r_max, N=self.N * factor, r_lo=self.r_lo)


@dataclass(frozen=True)
class TridiagonalOperator:
    diag: np.ndarray
    off: np.ndarray
    grid: GridSpec

    @property
    def size(self) -> int:
        return len(self.diag)

    def gershgorin_bounds(self) -> tuple[float, float]:
        radius = np.zeros(self.size)
        radius[:-1] += np.abs(self.off)
        radius[1:] += np.abs(self.off)
        return float(np.min(self.diag - radius)), float(np.max(self.diag + radius))


def default_grid(spec: ProblemSpec) -> GridSpec:
    settings = get_settings()
    return GridSpec(r_max=settings.oracle_r_max_alpha / spec.potential.alpha, N=settings.oracle_grid_n)


def discretize(
    spec: ProblemSpec,
    l: int,
    D: int,
    scheme: CentrifugalScheme = CentrifugalScheme.EXACT,
    grid: Optional[GridSpec] = None,
) -> TridiagonalOperator:
    grid = grid or default_grid(spec)
    h2 = grid.h ** 2
    r = grid.nodes()

    kinetic = spec.kinetic_factor / h2
    diag = 2.0 * kinetic + np.asarray(effective_potential_for(spec, l, D, scheme, r))
    off = np.full(grid.N - 2, -kinetic)
    return TridiagonalOperator(diag=np.asarray(diag, dtype=float), off=off, grid=grid)


# ======================== Sturm sequence ========================

def count_below(T: TridiagonalOperator, x: float) -> int:
    """Number of eigenvalues of T strictly below x (LDL^T pivot signs)."""
    diag = T.diag.tolist()
    off_sq = (T.off ** 2).tolist()
    pivmin = np.finfo(float).tiny * max(off_sq, default=1.0)

    count = 0
    d = diag[0] - x
    if abs(d) < pivmin:
        d = -pivmin
    if d < 0:
        count += 1
    for i in range(1, len(diag)):
        d = diag[i] - x - off_sq[i - 1] / d
        if abs(d) < pivmin:
            d = -pivmin
        if d < 0:
            count += 1
    return count


def eigenvalue(T: TridiagonalOperator, index: int, bounds: Optional[tuple[float, float]] = None) -> float:
    """The index-th eigenvalue (0 = lowest), bisected to machine resolution."""
    if not 0 <= index < T.size:
        raise ValueError(f"eigenvalue index {index} out of range for dimension {T.size}")
    lo, hi = bounds or T.gershgorin_bounds()
    eps = np.finfo(float).eps

    while hi - lo > max(1e-13, 4.0 * eps * max(abs(lo), abs(hi))):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if count_below(T, mid) > index:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def lowest_eigenvalues(T: TridiagonalOperator, k: int) -> list[float]:
    if not 0 < k <= T.size:
        raise ValueError(f"k must be in 1..{T.size} (got {k})")
    bounds = T.gershgorin_bounds()
    return [eigenvalue(T, i, bounds) for i in range(k)]


def bound_state_count(
    spec: ProblemSpec,
    l: int,
    D: int,
    scheme: CentrifugalScheme = CentrifugalScheme.EXACT,
    grid: Optional[GridSpec] = None,
) -> int:
    """Eigenvalues strictly below threshold - bound_margin."""
    T = discretize(spec, l, D, scheme, grid)
    return count_below(T, threshold(spec.potential) - get_settings().bound_margin)


# ======================== Validation ========================

def compare(
    spec: ProblemSpec,
    n: int,
    l: int,
    D: int,
    scheme: CentrifugalScheme = CentrifugalScheme.EXACT,
    grid: Optional[GridSpec] = None,
) -> ComparisonReport:
    """Check the closed-form energy of (n, l, D) against the oracle."""
    settings = get_settings()
    grid = grid or default_grid(spec)
    edge = threshold(spec.potential)

    E_closed: Optional[float] = None
    closed_physical = False
    detail = None
    try:
        result = bound_energy(spec, n, l, D)
        E_closed, closed_physical = result.energy, result.physical
        detail = result.spurious_reason
        decay_length = 1.0 / (2.0 * spec.potential.alpha * result.reduced.mu_bar)
        if grid.r_max < 10.0 * decay_length:
            logger.warning(
                f"⚠️ Oracle box r_max={grid.r_max:.4g} is short for decay length {decay_length:.4g}"
            )
    except SpectrumError as e:
        detail = f"{type(e).__name__}: {e}"

    T = discretize(spec, l, D, scheme, grid)
    found = count_below(T, edge - settings.bound_margin)
    E_oracle = eigenvalue(T, n) if found > n else None

    delta = E_closed - E_oracle if E_closed is not None and E_oracle is not None else None
    if E_oracle is None:
        verdict = Verdict.SPURIOUS
        detail = f"oracle finds {found} bound state(s) below {edge:.6g}" + (f"; {detail}" if detail else "")
    elif not closed_physical:
        verdict = Verdict.SPURIOUS
    elif abs(delta) <= settings.confirm_tolerance * max(1.0, abs(E_closed)):
        verdict = Verdict.CONFIRMED
    else:
        verdict = Verdict.APPROXIMATION_ERROR

    logger.info(
        f"🔎 (n={n}, l={l}, D={D}, {scheme.value}): closed={E_closed} oracle={E_oracle} → {verdict.value}"
    )
    return ComparisonReport(
        n=n, l=l, D=D,
        scheme=scheme,
        E_closed=E_closed,
        E_oracle=E_oracle,
        delta=delta,
        closed_physical=closed_physical,
        verdict=verdict,
        bound_states_found=found,
        threshold=edge,
        grid_n=grid.N,
        r_max=grid.r_max,
        detail=detail,
    )


@dataclass(frozen=True)
class RichardsonResult:
    energies: tuple[float, float, float]  # on N, 2N, 4N
    extrapolated: float
    ratio: Optional[float]  # error halving ratio, 4 for second order


def richardson(
    spec: ProblemSpec,
    n: int,
    l: int,
    D: int,
    scheme: CentrifugalScheme = CentrifugalScheme.EXACT,
    grid: Optional[GridSpec] = None,
) -> RichardsonResult:
    """(4 E(4N) - E(2N)) / 3 and the observed convergence ratio."""
    grid = grid or default_grid(spec)
    energies = []
    for g in (grid, grid.refined(2), grid.refined(4)):
        T = discretize(spec, l, D, scheme, g)
        energies.append(eigenvalue(T, n))

    coarse, fine, finest = energies
    step_fine = fine - finest
    ratio = (coarse - fine) / step_fine if step_fine != 0 else None
    return RichardsonResult(
        energies=(coarse, fine, finest),
        extrapolated=(4.0 * finest - fine) / 3.0,
        ratio=ratio,
    )
