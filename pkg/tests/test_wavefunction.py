#!/usr/bin/env python3
"""
Test Script: Radial wavefunctions

Jacobi polynomials against scipy, the closed-form U(r), its normalization
checked by an independent quadrature, node counts and the residual of the
radial equation.

Usage:
    python tests/test_wavefunction.py
"""
import math
import sys
from pathlib import Path

import numpy as np
from scipy import special

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from tests.test_utils import run_module, setup_test_logging
from api.models import ApproximationParams, Family, PotentialParams, ProblemSpec
from services.errors import DegenerateState, ParameterOutOfDomain
from services.spectrum_service import family_problem
from services.wavefunction_service import (
    count_nodes,
    jacobi,
    normalization,
    normalize,
    ode_residual,
    quadrature_check,
    radial_state,
    radial_u,
    radial_u_unnormalized,
)

logger = setup_test_logging("test_wavefunction")


def eckart_spec() -> ProblemSpec:
    return ProblemSpec(
        potential=PotentialParams(V0=0.0, V1=4.0, V2=0.5, alpha=0.5),
        approx=ApproximationParams(omega=0.0, lambda_adj=1.0),
    )


def test_jacobi_matches_scipy():
    rng = np.random.default_rng(5)
    x = np.linspace(-1.0, 1.0, 41)
    for _ in range(40):
        A, B = rng.uniform(-0.9, 5.0, size=2)
        for n in (0, 1, 2, 5, 12, 20):
            ours = jacobi(n, A, B, x)
            ref = special.eval_jacobi(n, A, B, x)
            scale = max(1.0, float(np.max(np.abs(ref))))
            assert np.max(np.abs(ours - ref)) <= 1e-10 * scale, (n, A, B)


def test_jacobi_low_degree():
    assert jacobi(0, 0.3, 1.2, 0.4) == 1.0
    A, B, x = 0.7, 2.1, -0.35
    assert math.isclose(jacobi(1, A, B, x), (A + 1) + (A + B + 2) * (x - 1) / 2, rel_tol=1e-15)
    for n in range(11):
        at_one = math.exp(special.gammaln(n + A + 1) - special.gammaln(n + 1) - special.gammaln(A + 1))
        assert math.isclose(jacobi(n, A, B, 1.0), at_one, rel_tol=1e-10), n


def test_jacobi_symmetry():
    rng = np.random.default_rng(9)
    x = np.linspace(-1.0, 1.0, 33)
    for _ in range(30):
        A, B = rng.uniform(-0.9, 5.0, size=2)
        for n in range(21):
            left = jacobi(n, A, B, -x)
            right = (-1) ** n * jacobi(n, B, A, x)
            scale = max(1.0, float(np.max(np.abs(right))))
            assert np.max(np.abs(left - right)) <= 1e-12 * scale, (n, A, B)


def test_jacobi_domain():
    for A, B in [(-1.0, 0.0), (0.0, -1.5)]:
        try:
            jacobi(3, A, B, 0.2)
        except ParameterOutOfDomain:
            continue
        raise AssertionError(f"({A}, {B}) accepted")


def test_radial_state():
    spec = eckart_spec()
    state = radial_state(spec, 0, 0, 3)
    assert state.physical and not state.normalized
    assert math.isclose(state.jacobi_A, 2.0 * state.mu_bar, rel_tol=1e-13)
    assert math.isclose(state.jacobi_B, math.sqrt(5.0), rel_tol=1e-13)
    assert math.isclose(state.s_exponent, state.mu_bar, rel_tol=1e-13)
    assert math.isclose(state.one_minus_s_exponent, (1.0 + state.v) / 2.0, rel_tol=1e-13)


def test_radial_u_closed_form():
    spec = eckart_spec()
    state = radial_state(spec, 0, 0, 3)
    s = math.exp(-1.0)
    expected = s ** state.mu_bar * (1.0 - s) ** ((1.0 + math.sqrt(5.0)) / 2.0)
    assert math.isclose(radial_u_unnormalized(spec, state, 1.0), expected, rel_tol=1e-12)
    assert math.isclose(expected, 0.09024, abs_tol=5e-5)

    excited = radial_state(spec, 1, 0, 3)
    r = np.array([0.3, 1.0, 4.0])
    s = np.exp(-r)
    direct = (
        s ** excited.mu_bar
        * (1.0 - s) ** ((1.0 + excited.v) / 2.0)
        * special.eval_jacobi(1, 2.0 * excited.mu_bar, excited.v, 1.0 - 2.0 * s)
    )
    assert np.allclose(radial_u_unnormalized(spec, excited, r), direct, rtol=1e-12)


def test_boundary_behaviour():
    spec = eckart_spec()
    for n in (0, 1):
        state = radial_state(spec, n, 0, 3)
        alpha = spec.potential.alpha
        assert abs(radial_u_unnormalized(spec, state, 1e-6 / alpha)) < 1e-8
        assert abs(radial_u_unnormalized(spec, state, 60.0 / alpha)) < 1e-10


def test_normalization():
    spec = eckart_spec()
    for n in (0, 1):
        state = normalize(spec, radial_state(spec, n, 0, 3))
        assert state.normalized and state.normalization > 0
        assert abs(quadrature_check(spec, state) - 1.0) <= 1e-8, n
        assert abs(quadrature_check(spec, state, panels=400) - 1.0) <= 1e-8, n


def test_normalization_linearity():
    spec = eckart_spec()
    state = radial_state(spec, 0, 0, 3)
    single = normalization(spec, state)
    double = normalization(spec, state, u=lambda r: 2.0 * radial_u_unnormalized(spec, state, r))
    assert math.isclose(double, single / 2.0, rel_tol=1e-9)


def test_radial_u_normalized_scaling():
    spec = eckart_spec()
    raw = radial_state(spec, 0, 0, 3)
    state = normalize(spec, raw)
    r = np.linspace(0.5, 6.0, 12)
    assert np.allclose(radial_u(spec, state, r), state.normalization * radial_u(spec, raw, r), rtol=1e-14)


def test_node_counts():
    spec = family_problem(Family.HULTHEN, 1.0, 0.1)
    for n in range(6):
        state = radial_state(spec, n, 0, 3)
        assert state.physical, n
        assert count_nodes(spec, state) == n, n


def test_spurious_state_nodes():
    spec = eckart_spec()
    state = radial_state(spec, 2, 0, 3)
    assert not state.physical
    assert count_nodes(spec, state) == 2


def test_node_samples_minimum():
    spec = eckart_spec()
    try:
        count_nodes(spec, radial_state(spec, 0, 0, 3), samples=999)
    except ValueError:
        return
    raise AssertionError("samples < 1000 accepted")


def test_ode_residual():
    spec = eckart_spec()
    assert ode_residual(spec, radial_state(spec, 0, 0, 3)) <= 1e-5
    assert ode_residual(spec, radial_state(spec, 0, 1, 3)) <= 1e-5

    hulthen = family_problem(Family.HULTHEN, 1.0, 0.5)
    assert ode_residual(hulthen, radial_state(hulthen, 0, 0, 3)) <= 1e-5

    assert ode_residual(spec, radial_state(spec, 0, 0, 3), u=np.zeros_like) == 0.0


def test_ode_residual_all_physical_states():
    problems = [eckart_spec()]
    for family in (Family.HULTHEN, Family.ROSEN_MORSE):
        problems.extend(family_problem(family, V, alpha) for V in (0.5, 1.0, 2.0) for alpha in (0.1, 0.5, 1.0))

    checked = 0
    for spec in problems:
        for n in range(6):
            for l in range(5):
                try:
                    state = radial_state(spec, n, l, 3)
                except DegenerateState:
                    continue
                if not state.physical:
                    continue
                residual = ode_residual(spec, state)
                assert residual <= 1e-5, (spec.potential, n, l, residual)
                checked += 1
    assert checked > 100, checked


def test_ode_residual_spurious():
    spec = eckart_spec()
    assert ode_residual(spec, radial_state(spec, 2, 0, 3)) > 1e-3


def run_all_tests():
    return run_module("🌊 Wavefunction Tests", [
        ("Jacobi vs scipy", test_jacobi_matches_scipy),
        ("Jacobi low degree", test_jacobi_low_degree),
        ("Jacobi symmetry", test_jacobi_symmetry),
        ("Jacobi domain", test_jacobi_domain),
        ("Radial state", test_radial_state),
        ("Closed-form U(r)", test_radial_u_closed_form),
        ("Boundary behaviour", test_boundary_behaviour),
        ("Normalization", test_normalization),
        ("Normalization linearity", test_normalization_linearity),
        ("Normalized scaling", test_radial_u_normalized_scaling),
        ("Node counts", test_node_counts),
        ("Spurious state nodes", test_spurious_state_nodes),
        ("Node sample minimum", test_node_samples_minimum),
        ("ODE residual", test_ode_residual),
        ("ODE residual of every physical state", test_ode_residual_all_physical_states),
        ("ODE residual of spurious state", test_ode_residual_spurious),
    ])


if __name__ == "__main__":
    results = run_all_tests()
    sys.exit(0 if all(r.status.name == "SUCCESS" for r in results) else 1)
