"""
Command handlers behind the CLI.

Each handler takes a validated RunConfig plus its own options, writes its
result through StorageService and returns the process exit code.
"""
import logging
from typing import Optional, Sequence

import numpy as np

from api.models import (
    CentrifugalScheme,
    Family,
    OutputFormat,
    RunConfig,
    TableLayout,
    Verdict,
)
from services.errors import SpectrumError
from services.oracle_service import GridSpec, compare, default_grid
from services.potential_service import effective_potential_for, eval_family
from services.reference_tables import get_table
from services.spectrum_service import spectrum_table
from services.storage_service import StorageService
from services.wavefunction_service import normalize, radial_state, radial_u

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NO_STATE = 2
EXIT_SPURIOUS = 3

SPECTRUM_COLUMNS = ["n", "l", "D", "energy", "physical", "mu_bar", "error"]
DIFF_COLUMNS = ["paper_energy", "delta"]


def sample_radii(r_min: float, r_max: float, samples: int) -> np.ndarray:
    if r_min <= 0:
        raise ValueError(f"r_min must be > 0 (got {r_min})")
    if samples < 1:
        raise ValueError(f"samples must be >= 1 (got {samples})")
    if samples > 1 and r_max <= r_min:
        raise ValueError(f"r_max ({r_max}) must exceed r_min ({r_min})")
    return np.linspace(r_min, r_max, samples)


def cmd_spectrum(
    config: RunConfig,
    n_max: int,
    layout: TableLayout = TableLayout.RECT,
    dims: Sequence[int] = (3,),
    l_max: Optional[int] = None,
    physical_only: bool = False,
    diff_paper: Optional[int] = None,
    output: Optional[str] = None,
    fmt: OutputFormat = OutputFormat.CSV,
    storage: Optional[StorageService] = None,
) -> int:
    storage = storage or StorageService()
    rows = spectrum_table(config.to_problem(), n_max, layout, dims, l_max)
    reference = get_table(diff_paper) if diff_paper else None
    if reference and not reference.reproducible:
        logger.warning(
            f"⚠️ Table {reference.table_id} does not follow from the closed form with its caption parameters; "
            "deltas are informational"
        )

    records = []
    for row in rows:
        result = row.result
        if physical_only and (result is None or not result.physical):
            continue
        record = {
            "n": row.n,
            "l": row.l,
            "D": row.D,
            "energy": result.energy if result else None,
            "physical": result.physical if result else False,
            "mu_bar": result.reduced.mu_bar if result else None,
            "error": row.error or (result.spurious_reason if result and not result.physical else None),
        }
        if reference:
            paper = reference.energy(row.n, row.l, row.D)
            record["paper_energy"] = paper
            record["delta"] = result.energy - paper if result and paper is not None else None
        records.append(record)

    columns = SPECTRUM_COLUMNS + (DIFF_COLUMNS if reference else [])
    storage.write_rows(records, columns, output, fmt)
    return EXIT_OK


def cmd_potential(
    config: RunConfig,
    family: Family,
    r_min: float,
    r_max: float,
    samples: int,
    output: Optional[str] = None,
    fmt: OutputFormat = OutputFormat.CSV,
    storage: Optional[StorageService] = None,
) -> int:
    storage = storage or StorageService()
    r = sample_radii(r_min, r_max, samples)
    values = np.asarray(eval_family(family, config.to_problem().potential, r))
    records = [{"r": float(x), "value": float(v)} for x, v in zip(r, values)]
    storage.write_rows(records, ["r", "value"], output, fmt)
    return EXIT_OK


def cmd_effective(
    config: RunConfig,
    l: int,
    D: int,
    schemes: Sequence[CentrifugalScheme],
    r_min: float,
    r_max: float,
    samples: int,
    output: Optional[str] = None,
    fmt: OutputFormat = OutputFormat.CSV,
    storage: Optional[StorageService] = None,
) -> int:
    """One column per centrifugal scheme."""
    storage = storage or StorageService()
    spec = config.to_problem()
    r = sample_radii(r_min, r_max, samples)
    columns = {scheme.value: np.asarray(effective_potential_for(spec, l, D, scheme, r)) for scheme in schemes}

    records = []
    for i, x in enumerate(r):
        record = {"r": float(x)}
        record.update({name: float(values[i]) for name, values in columns.items()})
        records.append(record)
    storage.write_rows(records, ["r"] + list(columns), output, fmt)
    return EXIT_OK


def cmd_wavefunction(
    config: RunConfig,
    n: int,
    l: int,
    D: int,
    r_min: float,
    r_max: float,
    samples: int,
    normalized: bool = False,
    allow_spurious: bool = False,
    output: Optional[str] = None,
    fmt: OutputFormat = OutputFormat.CSV,
    storage: Optional[StorageService] = None,
) -> int:
    """U(r) samples; exit 2 when there is no bound state unless ``allow_spurious`` asks for the other branch."""
    storage = storage or StorageService()
    spec = config.to_problem()
    r = sample_radii(r_min, r_max, samples)
    try:
        state = radial_state(spec, n, l, D)
        if not state.physical and not allow_spurious:
            logger.error(
                f"❌ State (n={n}, l={l}, D={D}) is not normalizable on the physical branch, "
                "pass --allow-spurious to sample it"
            )
            return EXIT_NO_STATE
        if normalized:
            state = normalize(spec, state)
    except SpectrumError as e:
        logger.error(f"❌ No bound state (n={n}, l={l}, D={D}): {e}")
        return EXIT_NO_STATE

    values = np.asarray(radial_u(spec, state, r))
    records = [{"r": float(x), "U": float(u)} for x, u in zip(r, values)]
    storage.write_rows(records, ["r", "U"], output, fmt)
    return EXIT_OK


def cmd_validate(
    config: RunConfig,
    n: int,
    l: int,
    D: int,
    scheme: CentrifugalScheme = CentrifugalScheme.EXACT,
    grid_n: Optional[int] = None,
    r_max: Optional[float] = None,
    output: Optional[str] = None,
    storage: Optional[StorageService] = None,
) -> int:
    """JSON comparison report; exit 3 when the closed-form state is spurious."""
    storage = storage or StorageService()
    spec = config.to_problem()
    base = default_grid(spec)
    grid = GridSpec(r_max=r_max or base.r_max, N=grid_n or base.N)

    report = compare(spec, n, l, D, scheme, grid)
    storage.write_document(report.model_dump(mode="json"), output)

    if report.verdict is Verdict.SPURIOUS:
        logger.warning(f"⚠️ Spurious: {report.detail}")
        return EXIT_SPURIOUS
    if report.verdict is Verdict.APPROXIMATION_ERROR:
        logger.info(f"Approximation error delta = {report.delta:.6g}")
    return EXIT_OK
