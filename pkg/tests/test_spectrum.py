#!/usr/bin/env python3
"""
Test Script: Closed-form spectrum

Reproduces the published table for the combined potential and checks the
Eckart, Hulthen and Rosen-Morse limits, the physicality flag and the
failure modes.

Usage:
    python tests/test_spectrum.py
"""
import math
import sys
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from tests.test_utils import run_module, setup_test_logging
from api.models import ApproximationParams, Family, PotentialParams, ProblemSpec, TableLayout
from services import nu_parametric as nu
from services.errors import ComplexV, DegenerateState
from services.potential_service import threshold
from services.reference_tables import DIMS, get_table
from services.spectrum_service import (
    bound_energy,
    family_problem,
    hulthen_energy,
    nu_instance,
    quantum_numbers,
    reduce,
    rosen_morse_energy,
    spectrum_table,
)

logger = setup_test_logging("test_spectrum")


def eckart_spec() -> ProblemSpec:
    return ProblemSpec(
        potential=PotentialParams(V0=0.0, V1=4.0, V2=0.5, alpha=0.5),
        approx=ApproximationParams(omega=0.0, lambda_adj=1.0),
    )


def test_table1_reproduced():
    table = get_table(1)
    spec = table.problem()
    cells = 0
    for (n, l), row in table.cells.items():
        for D, published in zip(DIMS, row):
            result = bound_energy(spec, n, l, D)
            assert abs(result.energy - published) <= 1e-5, (n, l, D, result.energy, published)
            assert not result.physical, (n, l, D)
            cells += 1
    assert cells == 48


def test_table1_reduced_values():
    red = reduce(get_table(1).problem(), 0, 0, 3)
    assert math.isclose(red.gamma, 0.01, rel_tol=1e-14)
    assert math.isclose(red.theta, 0.005, rel_tol=1e-14)
    assert math.isclose(red.phi, 0.25, rel_tol=1e-14)
    assert math.isclose(red.v, math.sqrt(2.0), rel_tol=1e-14)
    assert math.isclose(red.A, red.gamma + red.theta, rel_tol=1e-14)
    assert math.isclose(red.C, 0.02, rel_tol=1e-14)


def test_eckart_physical_state():
    result = bound_energy(eckart_spec(), 0, 0, 3)
    red = result.reduced
    sigma = (1.0 + math.sqrt(5.0)) / 2.0
    bracket = (7.0 - sigma) / (2.0 * sigma)

    assert red.gamma == 0.0 and red.theta == 8.0 and red.phi == 1.0
    assert math.isclose(red.sigma, sigma, rel_tol=1e-14)
    assert math.isclose(result.signed_bracket, bracket, rel_tol=1e-13)
    assert math.isclose(result.signed_bracket, 1.6631203, abs_tol=5e-6)
    assert math.isclose(result.energy, -0.5 * bracket ** 2, rel_tol=1e-13)
    assert math.isclose(result.energy, -1.3829837, abs_tol=5e-6)
    assert result.physical and result.spurious_reason is None


def test_spurious_branch():
    spec = ProblemSpec(potential=PotentialParams(V0=1.0, a=2.0, b=1.0, alpha=1.0))
    result = bound_energy(spec, 0, 0, 3)
    assert math.isclose(result.signed_bracket, -0.75, rel_tol=1e-14)
    assert math.isclose(result.reduced.mu_bar, 0.75, rel_tol=1e-14)
    assert math.isclose(result.reduced.eps_sq, -0.4375, rel_tol=1e-14)
    assert math.isclose(result.energy, -2.0 * 0.5625 + 2.0, rel_tol=1e-14)
    assert not result.physical and result.spurious_reason


def test_energy_consistency():
    """E + (2 hbar^2 alpha^2 / mu) mu^2 - a V0 / b = 0."""
    for spec in (eckart_spec(), get_table(1).problem(), family_problem(Family.HULTHEN, 2.0, 0.3)):
        for n, l in [(0, 0), (1, 0), (2, 1), (3, 2)]:
            for D in (2, 3, 5):
                result = bound_energy(spec, n, l, D)
                p = spec.potential
                residual = (
                    result.energy
                    + 2.0 * spec.hbar ** 2 * p.alpha ** 2 / spec.mass * result.reduced.mu_bar ** 2
                    - p.a * p.V0 / p.b
                )
                assert abs(residual) <= 1e-10 * max(1.0, abs(result.energy)), (n, l, D, residual)


def test_degenerate_state():
    spec = ProblemSpec(potential=PotentialParams(V1=0.5, alpha=0.5), approx=ApproximationParams(lambda_adj=1.0))
    try:
        bound_energy(spec, 0, 0, 3)
    except DegenerateState as e:
        assert (e.n, e.l, e.D) == (0, 0, 3)
        return
    raise AssertionError("zero decay exponent accepted")


def test_complex_v():
    spec = ProblemSpec(potential=PotentialParams(V2=-1.0, alpha=1.0))
    try:
        bound_energy(spec, 0, 0, 3)
    except ComplexV as e:
        assert e.phi < -0.25
        return
    raise AssertionError("phi < -1/4 accepted")


def test_invalid_quantum_numbers():
    for n, l, D in [(-1, 0, 3), (0, -1, 3), (0, 0, 1)]:
        try:
            bound_energy(eckart_spec(), n, l, D)
        except ValueError:
            continue
        raise AssertionError(f"({n}, {l}, {D}) accepted")


FAMILY_GRID = [(V, alpha) for V in (0.5, 1.0, 2.0) for alpha in (0.1, 0.5, 1.0)]


def _check_family(family: Family, formula, degenerate_at) -> int:
    """Compare every (n <= 5, l <= 4) state with its closed formula; returns the degenerate count."""
    degenerate = 0
    for V, alpha in FAMILY_GRID:
        spec = family_problem(family, V, alpha)
        for n in range(6):
            for l in range(5):
                expected = formula(V, alpha, 1.0, 1.0, n, l)
                try:
                    general = bound_energy(spec, n, l, 3).energy
                except DegenerateState:
                    assert math.isclose(V, degenerate_at(alpha, n + l + 1), rel_tol=1e-12), (V, alpha, n, l)
                    assert abs(expected - threshold(spec.potential)) <= 1e-12, (V, alpha, n, l, expected)
                    degenerate += 1
                    continue
                assert math.isclose(general, expected, rel_tol=1e-10, abs_tol=1e-14), (V, alpha, n, l)
    return degenerate


def test_hulthen_limit():
    assert math.isclose(hulthen_energy(1.0, 0.5, 1.0, 1.0, 0, 0), -0.125, rel_tol=1e-14)
    degenerate = _check_family(Family.HULTHEN, hulthen_energy, lambda alpha, N: 2.0 * alpha ** 2 * N ** 2)
    assert degenerate == 10, degenerate


def test_rosen_morse_limit():
    assert math.isclose(rosen_morse_energy(1.0, 0.5, 1.0, 1.0, 0, 0), -2.125, rel_tol=1e-14)
    degenerate = _check_family(Family.ROSEN_MORSE, rosen_morse_energy, lambda alpha, N: alpha ** 2 * N ** 2)
    assert degenerate == 4, degenerate


def test_two_dimensional_states():
    """In D dimensions the Hulthen limit shifts l to l + (D - 3)/2."""
    spec = family_problem(Family.HULTHEN, 2.0, 0.3)
    ground = bound_energy(spec, 0, 0, 2)
    assert ground.reduced.L == -0.25 and ground.reduced.phi == -0.25
    assert ground.reduced.v == 0.0 and ground.reduced.sigma == 0.5
    assert ground.physical
    coeffs, derived = nu_instance(ground.reduced)
    assert nu.tau_prime(coeffs, derived) < 0

    for D in (2, 3, 4, 5):
        for n in range(4):
            for l in range(3):
                expected = hulthen_energy(2.0, 0.3, 1.0, 1.0, n, l + (D - 3) / 2.0)
                general = bound_energy(spec, n, l, D).energy
                assert math.isclose(general, expected, rel_tol=1e-10, abs_tol=1e-14), (n, l, D)


def test_interdimensional_degeneracy():
    spec = get_table(1).problem()
    for n in range(6):
        for l in range(5):
            for D in range(3, 9):
                higher_l = bound_energy(spec, n, l + 1, D).energy
                higher_D = bound_energy(spec, n, l, D + 2).energy
                assert math.isclose(higher_l, higher_D, rel_tol=1e-12), (n, l, D)


def test_table2_not_reproduced():
    table = get_table(2)
    energy = bound_energy(table.problem(), 0, 0, 3).energy
    assert math.isclose(energy, -12.71376, abs_tol=1e-4), energy
    assert abs(energy - table.energy(0, 0, 3)) > 100.0
    assert get_table(3).energy(0, 0, 3) is None


def test_quantum_numbers():
    published = quantum_numbers(5, TableLayout.PAPER)
    assert published == list(get_table(1).cells)
    assert quantum_numbers(0, TableLayout.RECT) == [(0, 0)]
    assert quantum_numbers(2, TableLayout.RECT, l_max=1) == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]


def test_spectrum_table():
    rows = spectrum_table(get_table(1).problem(), 5, TableLayout.PAPER, DIMS)
    assert len(rows) == 48
    assert [(r.n, r.l, r.D) for r in rows] == sorted((r.n, r.l, r.D) for r in rows)

    single = spectrum_table(eckart_spec(), 0)
    assert len(single) == 1 and single[0].result.physical

    degenerate = ProblemSpec(potential=PotentialParams(V1=0.5, alpha=0.5), approx=ApproximationParams(lambda_adj=1.0))
    rows = spectrum_table(degenerate, 1, TableLayout.RECT, (3,), l_max=0)
    assert rows[0].result is None and rows[0].error.startswith("DegenerateState")
    assert rows[1].result is not None


def run_all_tests():
    return run_module("📊 Spectrum Tests", [
        ("Table 1 reproduced", test_table1_reproduced),
        ("Table 1 reduced coefficients", test_table1_reduced_values),
        ("Eckart physical state", test_eckart_physical_state),
        ("Spurious branch", test_spurious_branch),
        ("Energy consistency", test_energy_consistency),
        ("Degenerate state", test_degenerate_state),
        ("Imaginary v", test_complex_v),
        ("Invalid quantum numbers", test_invalid_quantum_numbers),
        ("Hulthen limit", test_hulthen_limit),
        ("Rosen-Morse limit", test_rosen_morse_limit),
        ("Two-dimensional states", test_two_dimensional_states),
        ("Interdimensional degeneracy", test_interdimensional_degeneracy),
        ("Table 2 not reproduced", test_table2_not_reproduced),
        ("Quantum number layouts", test_quantum_numbers),
        ("Spectrum table", test_spectrum_table),
    ])


if __name__ == "__main__":
    results = run_all_tests()
    sys.exit(0 if all(r.status.name == "SUCCESS" for r in results) else 1)
