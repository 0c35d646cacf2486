"""Hamiltonian assembly and the closed-form eigensystem."""

import numpy as np
import pytest

from diamondspin import (
    ClusterParams,
    analytic_eigensystem,
    build_hamiltonian,
    commutator_norms,
    eigen_residuals,
)
from diamondspin.hamiltonian import SPIN_X, SPIN_Y, SPIN_Z, site_operator
from diamondspin.hilbert import basis_tuple

from support import bit_rule_hamiltonian, random_params

WORKED_EXAMPLE = ClusterParams(J=1.0, Jz=2.0, J0=0.5, h=0.3, hp=0.1)


def test_spin_operators():
    for op in (SPIN_X, SPIN_Y, SPIN_Z):
        assert np.allclose(op, op.conj().T)
        assert np.allclose(op @ op, 0.25 * np.eye(2))
    assert np.allclose(SPIN_X @ SPIN_Y - SPIN_Y @ SPIN_X, 1j * SPIN_Z)


def test_site_operator_embeds_at_the_right_slot():
    for site in range(4):
        sz = site_operator(SPIN_Z, site)
        diag = np.real(np.diag(sz))
        for i in range(16):
            assert diag[i] == basis_tuple(i)[site].sz


def test_matrix_matches_bit_rule():
    rng = np.random.default_rng(10)
    worst = 0.0
    for _ in range(50):
        p = random_params(rng)
        ham = build_hamiltonian(p)
        worst = max(worst, float(np.max(np.abs(ham.total
                                               - bit_rule_hamiltonian(p)))))
        assert np.allclose(ham.central + ham.side + ham.coupling, ham.total)
    assert worst < 1e-13


def test_matrix_real_symmetric_traceless():
    rng = np.random.default_rng(11)
    for _ in range(20):
        h = build_hamiltonian(random_params(rng)).total
        assert np.max(np.abs(h.imag)) == 0.0
        assert np.allclose(h, h.T)
        assert abs(np.trace(h)) < 1e-12


def test_off_diagonal_is_half_j():
    h = build_hamiltonian(WORKED_EXAMPLE).total
    assert h[1, 2] == pytest.approx(0.5)  # |uuud> <-> |uudu>
    assert h[13, 14] == pytest.approx(0.5)


def test_worked_energy_example():
    pairs = analytic_eigensystem(WORKED_EXAMPLE)
    # side pair up-up, central pair up-up: E = h + Jz/4 + hp + J0
    assert pairs[0].energy == pytest.approx(1.4, abs=1e-12)
    assert pairs[0].label == "|uu>12 |uu>ab"


def test_zero_params_zero_spectrum():
    pairs = analytic_eigensystem(ClusterParams())
    assert all(p.energy == 0.0 for p in pairs)
    assert np.max(np.abs(build_hamiltonian(ClusterParams()).total)) == 0.0


def test_eigensystem_ordering_and_labels():
    pairs = analytic_eigensystem(WORKED_EXAMPLE)
    assert len(pairs) == 16
    labels = [p.label for p in pairs]
    assert labels[0].startswith("|uu>12")
    assert labels[15] == "|dd>12 |dd>ab"
    assert sum("sqrt2" in l for l in labels) == 8  # triplet-0 and singlet rows


def test_eigenvectors_orthonormal():
    pairs = analytic_eigensystem(WORKED_EXAMPLE)
    v = np.column_stack([p.state for p in pairs])
    assert np.max(np.abs(v.conj().T @ v - np.eye(16))) < 1e-14


def test_eigen_residuals_random():
    rng = np.random.default_rng(12)
    worst = 0.0
    for _ in range(100):
        worst = max(worst, float(np.max(eigen_residuals(random_params(rng)))))
    assert worst < 1e-12


def test_commutators_vanish():
    rng = np.random.default_rng(13)
    worst = 0.0
    for _ in range(100):
        worst = max(worst, *commutator_norms(random_params(rng)))
    assert worst < 1e-13


def test_spectrum_matches_numeric_diagonalization():
    rng = np.random.default_rng(14)
    worst = 0.0
    for _ in range(100):
        p = random_params(rng)
        analytic = np.sort([e.energy for e in analytic_eigensystem(p)])
        numeric = np.linalg.eigvalsh(build_hamiltonian(p).total)
        worst = max(worst, float(np.max(np.abs(analytic - numeric))))
    assert worst < 1e-10


def test_degenerate_shell_projectors():
    # With h = hp = J0 = 0 the spectrum collapses to four highly
    # degenerate shells; eigenvectors are then only defined up to a
    # rotation within each shell, so compare shell projectors instead.
    p = ClusterParams(J=1.2, Jz=0.4)
    pairs = analytic_eigensystem(p)
    evals, vecs = np.linalg.eigh(build_hamiltonian(p).total)
    shells = np.unique(np.round(evals, 9))
    assert len(shells) < 16
    for energy in shells:
        analytic = [ep.state for ep in pairs if abs(ep.energy - energy) < 1e-9]
        numeric = vecs[:, np.abs(evals - energy) < 1e-9]
        assert len(analytic) == numeric.shape[1]
        pa = sum(np.outer(s, s.conj()) for s in analytic)
        pn = numeric @ numeric.conj().T
        assert np.max(np.abs(pa - pn)) < 1e-10


def test_params_reject_non_finite():
    with pytest.raises(ValueError, match="finite"):
        ClusterParams(J=float("nan"))
    with pytest.raises(ValueError, match="finite"):
        ClusterParams(hp=float("inf"))
