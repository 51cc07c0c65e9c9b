import numpy as np
import pytest

from qcoherence.errors import DimensionMismatch, NonHermitianInput, NonUnitVector
from qcoherence.linalg import (
    Basis,
    RngStream,
    computational_basis,
    hermitian_eigensystem,
    is_unitary,
    max_abs,
    rotate_basis,
    sample_haar_unitaries,
    sample_haar_unitary,
)
from oracles import charpoly_eigenvalues

SEED = 20240817


def test_eigensystem_identity():
    w, v = hermitian_eigensystem(np.eye(3))
    assert np.allclose(w, [1.0, 1.0, 1.0], atol=1e-14)
    assert is_unitary(v)


def test_eigensystem_pauli_x():
    sx = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    w, v = hermitian_eigensystem(sx)
    assert np.allclose(w, [-1.0, 1.0], atol=1e-14)
    # eigenvectors match |-> and |+> up to phase
    minus = np.array([1.0, -1.0]) / np.sqrt(2.0)
    plus = np.array([1.0, 1.0]) / np.sqrt(2.0)
    assert abs(abs(np.vdot(minus, v[:, 0])) - 1.0) < 1e-12
    assert abs(abs(np.vdot(plus, v[:, 1])) - 1.0) < 1e-12


def test_eigensystem_matches_charpoly_oracle():
    rng = RngStream(SEED, 0)
    g = rng.complex_normal((5, 5))
    h = (g + g.conj().T) / 2.0
    w, _ = hermitian_eigensystem(h)
    assert np.max(np.abs(w - charpoly_eigenvalues(h))) < 1e-8


def test_eigensystem_round_trip_sweep():
    rng = RngStream(SEED, 1)
    for i in range(1000):
        d = 2 + i % 7
        g = rng.complex_normal((d, d))
        h = (g + g.conj().T) / 2.0
        w, v = hermitian_eigensystem(h)
        assert np.all(np.diff(w) >= 0.0)
        assert max_abs(v @ np.diag(w) @ v.conj().T - h) <= 1e-10
        assert max_abs(v.conj().T @ v - np.eye(d)) <= 1e-10
        assert abs(w.sum() - h.trace().real) <= 1e-10
        assert abs((w * w).sum() - (h @ h).trace().real) <= 1e-10


def test_eigensystem_rejects_non_hermitian():
    with pytest.raises(NonHermitianInput):
        hermitian_eigensystem(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(NonHermitianInput):
        hermitian_eigensystem(np.ones((2, 3)))


def test_haar_d1_is_phase():
    u = sample_haar_unitary(1, RngStream(SEED, 2))
    assert u.shape == (1, 1)
    assert abs(abs(u[0, 0]) - 1.0) < 1e-12


def test_haar_unitary_within_tolerance():
    rng = RngStream(SEED, 3)
    for d in (2, 3, 5, 8):
        u = sample_haar_unitary(d, rng)
        assert is_unitary(u)


def test_haar_first_moment_d2():
    # E|U_00|^2 = 1/d for the invariant measure
    u = sample_haar_unitaries(2, 100000, RngStream(SEED, 4))
    m = np.abs(u[:, 0, 0]) ** 2
    se = m.std(ddof=1) / np.sqrt(m.size)
    assert abs(m.mean() - 0.5) <= 4.0 * se


def test_haar_mean_classical_purity_pure_d3():
    # basis-averaged classical purity of a pure state: (1+1)/(1+3) = 1/2
    u = sample_haar_unitaries(3, 100000, RngStream(SEED, 5))
    rho = np.zeros((3, 3), dtype=complex)
    rho[0, 0] = 1.0
    p = np.einsum("nia,ij,nja->na", u.conj(), rho, u).real
    cp = (p * p).sum(axis=1)
    se = cp.std(ddof=1) / np.sqrt(cp.size)
    assert abs(cp.mean() - 0.5) <= 4.0 * se


def test_haar_left_invariance():
    # fixed pre-rotation must not change the classical-purity statistic
    w = np.array([[1, 1, 1], [1, np.exp(2j * np.pi / 3), np.exp(4j * np.pi / 3)],
                  [1, np.exp(4j * np.pi / 3), np.exp(2j * np.pi / 3)]]) / np.sqrt(3.0)
    rho = np.diag([0.6, 0.3, 0.1]).astype(complex)

    def mean_purity(u):
        p = np.einsum("nia,ij,nja->na", u.conj(), rho, u).real
        cp = (p * p).sum(axis=1)
        return cp.mean(), cp.std(ddof=1) / np.sqrt(cp.size)

    u = sample_haar_unitaries(3, 50000, RngStream(SEED, 6))
    m1, se1 = mean_purity(u)
    u2 = w @ sample_haar_unitaries(3, 50000, RngStream(SEED, 7))
    m2, se2 = mean_purity(u2)
    assert abs(m1 - m2) <= 4.0 * np.hypot(se1, se2)


def test_rng_streams_reproducible_and_distinct():
    a = RngStream(11, 3).complex_normal(8)
    b = RngStream(11, 3).complex_normal(8)
    c = RngStream(11, 4).complex_normal(8)
    assert np.array_equal(a, b)
    assert not np.allclose(a, c)


def test_rotate_basis_identity():
    basis = computational_basis(3)
    rotated = rotate_basis(basis, np.eye(3))
    assert max_abs(rotated.vectors - basis.vectors) == 0.0


def test_rotate_basis_hadamard():
    h = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)
    rotated = rotate_basis(computational_basis(2), h)
    assert np.allclose(rotated.ket(0), h[:, 0])
    assert np.allclose(rotated.ket(1), h[:, 1])


def test_rotate_basis_preserves_orthonormality():
    rng = RngStream(SEED, 8)
    basis = Basis(sample_haar_unitary(4, rng))
    u = sample_haar_unitary(4, rng)
    rotated = rotate_basis(basis, u)
    gram = rotated.vectors.conj().T @ rotated.vectors
    assert max_abs(gram - np.eye(4)) <= 1e-10


def test_rotate_basis_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        rotate_basis(computational_basis(2), np.eye(3))


def test_basis_rejects_non_orthonormal():
    with pytest.raises(NonUnitVector):
        Basis(np.ones((2, 2)))
