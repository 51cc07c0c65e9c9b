"""Density operators: construction, purity, entropy, random sampling."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    BlochNormExceeded,
    InvalidDimension,
    InvalidEpsilon,
    InvalidRank,
    NonHermitianInput,
    NonUnitVector,
    NotQubit,
)
from .linalg import RngStream, hermitian_eigensystem, is_hermitian, max_abs

TRACE_TOL = 1e-12
POSITIVITY_TOL = 1e-10

SIGMA1 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA2 = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA3 = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULI = (SIGMA1, SIGMA2, SIGMA3)


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Unit-trace positive Hermitian matrix. Build via :meth:`from_matrix`."""

    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def spectrum(self) -> np.ndarray:
        """Eigenvalues in ascending order (may carry O(1e-15) negative slack)."""
        w, _ = hermitian_eigensystem(self.matrix)
        w.setflags(write=False)
        return w

    @classmethod
    def from_matrix(cls, m, positivity_tol: float = POSITIVITY_TOL) -> "DensityOperator":
        m = np.asarray(m, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise NonHermitianInput("density matrix must be square")
        if not is_hermitian(m):
            raise NonHermitianInput("density matrix is not Hermitian within 1e-12")
        trace = m.trace()
        if abs(trace - 1.0) > TRACE_TOL:
            raise ValueError(f"trace must be 1, got {trace}")
        m = (m + m.conj().T) / 2.0
        m.setflags(write=False)
        rho = cls(m)
        if rho.spectrum[0] < -positivity_tol:
            raise ValueError(
                f"matrix is not positive semidefinite (min eigenvalue {rho.spectrum[0]:.3e})"
            )
        return rho


def epsilon_state(d: int, epsilon: float, b: np.ndarray) -> DensityOperator:
    """Mixture (1-eps)|b><b| + eps/(d-1) (I - |b><b|).

    Interpolates from the pure state |b><b| (eps=0) to the maximally mixed
    state (eps=1-1/d); eigenvalues are 1-eps once and eps/(d-1) with
    multiplicity d-1.
    """
    if d < 2:
        raise InvalidDimension("epsilon family needs d >= 2")
    if not 0.0 <= epsilon <= 1.0:
        raise InvalidEpsilon(f"epsilon must lie in [0, 1], got {epsilon}")
    b = np.asarray(b, dtype=complex).ravel()
    if b.shape != (d,):
        raise NonUnitVector(f"b must be a vector of dimension {d}")
    if abs(np.linalg.norm(b) - 1.0) > 1e-12:
        raise NonUnitVector("b must be normalized within 1e-12")
    proj = np.outer(b, b.conj())
    m = (1.0 - epsilon) * proj + epsilon / (d - 1) * (np.eye(d) - proj)
    return DensityOperator.from_matrix(m)


def from_bloch(r) -> DensityOperator:
    """Qubit state (I + r . sigma) / 2 for a Bloch vector with |r| <= 1."""
    r = np.asarray(r, dtype=float).ravel()
    if r.shape != (3,):
        raise BlochNormExceeded("Bloch vector must have three real components")
    if r @ r > 1.0 + 1e-12:
        raise BlochNormExceeded(f"Bloch vector norm {np.linalg.norm(r):.6f} exceeds 1")
    m = 0.5 * (np.eye(2, dtype=complex) + r[0] * SIGMA1 + r[1] * SIGMA2 + r[2] * SIGMA3)
    return DensityOperator.from_matrix(m)


def bloch_vector(rho: DensityOperator) -> np.ndarray:
    """Components Tr(rho sigma_k) of a qubit state."""
    if rho.dim != 2:
        raise NotQubit("Bloch vector defined for d=2 only")
    return np.array([(rho.matrix @ s).trace().real for s in PAULI])


def quantum_purity(rho: DensityOperator) -> float:
    """Tr(rho^2), between 1/d and 1."""
    return float(np.sum(np.abs(rho.matrix) ** 2))


def shannon_entropy_nats(p: np.ndarray) -> float:
    """Shannon entropy of a probability vector in nats, with 0 log 0 = 0."""
    p = np.clip(np.asarray(p, dtype=float), 0.0, None)
    pos = p[p > 0.0]
    return float(-np.sum(pos * np.log(pos))) + 0.0  # +0.0 canonicalizes -0.0


def von_neumann_entropy(rho: DensityOperator, log_base: float = 2.0) -> float:
    """Spectral entropy -sum(lam log lam) in the requested log base.

    Eigenvalues inside the numerical positivity slack [-1e-10, 0) are
    clipped to zero before taking logs.
    """
    if log_base <= 1.0:
        raise ValueError("log_base must exceed 1")
    return shannon_entropy_nats(rho.spectrum) / math.log(log_base)


def sample_random_density(d: int, rank: int, rng: RngStream) -> DensityOperator:
    """Random state G G^dagger / Tr(G G^dagger) for a d x rank Ginibre G."""
    if not 1 <= rank <= d:
        raise InvalidRank(f"rank must lie in [1, {d}], got {rank}")
    g = rng.complex_normal((d, rank))
    m = g @ g.conj().T
    m /= m.trace().real
    return DensityOperator.from_matrix(m)


def random_bloch_vector(rng: RngStream, pure: bool = False) -> np.ndarray:
    """Uniform random Bloch vector (on the sphere when pure, in the ball otherwise)."""
    u = rng.uniform(3)
    costheta = 2.0 * u[0] - 1.0
    sintheta = math.sqrt(max(0.0, 1.0 - costheta * costheta))
    phi = 2.0 * math.pi * u[1]
    radius = 1.0 if pure else u[2] ** (1.0 / 3.0)
    return radius * np.array(
        [sintheta * math.cos(phi), sintheta * math.sin(phi), costheta]
    )


def max_eigenvalue(rho: DensityOperator) -> float:
    return float(rho.spectrum[-1])
