import math

import numpy as np
import pytest

import sandcoh


def projector(psi):
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def classical_renyi(p, q, alpha):
    # Commuting states reduce the sandwiched divergence to the classical one.
    return math.log(np.sum(p**alpha * q ** (1 - alpha))) / (alpha - 1)


def test_pure_closed_form_matches_optimizer():
    psi = np.array([math.sqrt(0.8), math.sqrt(0.2)])
    assert sandcoh.c_s1_pure(psi, 0.5) == pytest.approx(0.2, abs=1e-12)
    r = sandcoh.c_s1(projector(psi), 0.5)
    assert r.converged
    assert r.value == pytest.approx(0.2, abs=1e-6)
    assert r.method == "optimizer"


def test_maximally_coherent_qubit_at_alpha_two():
    plus = np.array([1, 1]) / math.sqrt(2)
    assert sandcoh.c_s_pure(plus, 2.0) == pytest.approx(math.sqrt(2) - 1, abs=1e-12)
    assert sandcoh.c_s(projector(plus), 2.0).value == pytest.approx(math.sqrt(2) - 1, abs=1e-6)


def test_mirror_matches_grid_oracle():
    rho = sandcoh.random_density(2, 2, 11)
    mirror = sandcoh.c_s1(rho, 0.75).value
    grid = sandcoh.c_s1(rho, 0.75, oracle="grid", grid_resolution=10000)
    assert grid.method == "grid-oracle"
    assert mirror == pytest.approx(grid.value, abs=1e-4)


def test_qubit_geometric_closed_form():
    rho = sandcoh.random_density(2, 2, 5)
    expected = (1 - math.sqrt(1 - 4 * abs(rho[0, 1]) ** 2)) / 2
    assert sandcoh.geometric_coherence(rho).value == pytest.approx(expected, abs=1e-6)


def test_sandwiched_renyi_commuting_case():
    p = np.array([0.5, 0.5])
    q = np.array([0.9, 0.1])
    value = sandcoh.sandwiched_renyi(np.diag(p), np.diag(q), 0.7)
    assert value == pytest.approx(classical_renyi(p, q, 0.7), abs=1e-10)


def test_random_density_is_a_state():
    rho = sandcoh.random_density(3, 2, 7)
    assert np.allclose(rho, rho.conj().T)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    assert np.linalg.matrix_rank(rho, tol=1e-10) == 2
    assert sum(sandcoh.dephase(rho)) == pytest.approx(1.0, abs=1e-12)


def test_holder_check():
    h = sandcoh.holder_check([1.0, 1.0], [1.0, 1.0], 0.5)
    assert (h.lhs, h.rhs, h.equality) == (pytest.approx(2.0), pytest.approx(2.0), True)
    assert sandcoh.holder_check([1.0, 2.0], [2.0, 1.0], 2.0).regime_satisfied


def test_axiom_harness_and_negative_control():
    good = sandcoh.check_axiom("C2", "s1", alpha=0.75, d=2, trials=20, seed=3)
    assert good.passed and good.trials == 20
    bad = sandcoh.check_axiom("C1", "broken", d=2, trials=20, seed=3)
    assert not bad.passed


def test_linearization_counterexample():
    violation, p2, witness = sandcoh.linearization_counterexample("square", "s1", 0.5, 3)
    assert violation == pytest.approx(0.0625, abs=1e-6)
    assert p2 == pytest.approx(0.5)
    assert witness.shape == (3, 3)


def test_invalid_input_raises():
    with pytest.raises(sandcoh.SandcohError, match="NotPSD|NotDensityMatrix"):
        sandcoh.c_s1(np.diag([1.5, -0.5]), 0.5)
    with pytest.raises(ValueError):
        sandcoh.c_s1(np.eye(2) / 2, 1.5)


def test_state_file_round_trip(tmp_path):
    rho = sandcoh.random_density(3, 3, 9)
    path = str(tmp_path / "rho.json")
    sandcoh.save_state(path, rho)
    assert np.allclose(sandcoh.load_state(path), rho, atol=1e-15)
