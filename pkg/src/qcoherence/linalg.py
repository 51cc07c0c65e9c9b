"""Complex-matrix kernel: Hermitian eigensolver, Haar-random unitaries, basis rotation.

Everything in this module is dimension-agnostic plumbing for small dense
matrices (d up to a few dozen). All randomness flows through :class:`RngStream`
so that results are reproducible from a single 64-bit master seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    NonHermitianInput,
    NonUnitVector,
)

HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-10
JACOBI_OFF_THRESHOLD = 1e-14
JACOBI_MAX_SWEEPS = 100


def max_abs(a) -> float:
    """Largest entrywise modulus of an array (0 for empty arrays)."""
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return max_abs(m - m.conj().T) <= tol


def is_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return max_abs(u.conj().T @ u - np.eye(u.shape[0])) <= tol


@dataclass(frozen=True)
class RngStream:
    """Deterministic random stream addressed by (master_seed, stream_index).

    Equal (seed, index) pairs always produce identical sequences; distinct
    indices are derived from the master seed through independent spawn keys,
    so parallel consumers can each own an index without correlations.
    """

    master_seed: int
    stream_index: int = 0

    def __post_init__(self):
        if self.stream_index < 0:
            raise ValueError("stream_index must be non-negative")
        seq = np.random.SeedSequence(self.master_seed, spawn_key=(self.stream_index,))
        object.__setattr__(self, "_generator", np.random.Generator(np.random.PCG64(seq)))

    def uniform(self, shape=()) -> np.ndarray:
        """Uniform samples on [0, 1)."""
        return self._generator.random(shape)

    def complex_normal(self, shape=()) -> np.ndarray:
        """Standard complex Gaussians (unit-variance real and imaginary parts).

        Generated with the Box-Muller transform from the uniform stream, so
        the byte-level sequence depends only on (master_seed, stream_index).
        """
        u1 = self._generator.random(shape)
        u2 = self._generator.random(shape)
        radius = np.sqrt(-2.0 * np.log1p(-u1))
        return radius * np.exp(2j * np.pi * u2)

    def spawn(self, index: int) -> "RngStream":
        """Stream with the same master seed and a different index."""
        return RngStream(self.master_seed, index)


@dataclass(frozen=True, eq=False)
class Basis:
    """Orthonormal basis stored as a unitary matrix whose columns are the kets."""

    vectors: np.ndarray
    label: str = ""

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex)
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise DimensionMismatch("basis matrix must be square")
        if not is_unitary(v):
            raise NonUnitVector("basis columns are not orthonormal within 1e-10")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    def ket(self, k: int) -> np.ndarray:
        """k-th basis vector."""
        return self.vectors[:, k]


def computational_basis(d: int) -> Basis:
    return Basis(np.eye(d, dtype=complex), label="computational")


def _offdiag_norm(a: np.ndarray) -> float:
    x = a.copy()
    np.fill_diagonal(x, 0.0)
    return float(np.linalg.norm(x))


def hermitian_eigensystem(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Diagonalize a Hermitian matrix with cyclic complex Jacobi rotations.

    Returns (eigenvalues ascending, eigenvector columns v) such that
    m = v @ diag(w) @ v.conj().T up to ~1e-10 entrywise.

    Raises NonHermitianInput when the input violates the 1e-12 Hermiticity
    tolerance, and ConvergenceFailure if the off-diagonal norm has not
    dropped below threshold after 100 sweeps (never observed for d <= 64).
    """
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonHermitianInput("expected a square matrix")
    if not is_hermitian(a):
        raise NonHermitianInput("matrix is not Hermitian within 1e-12")
    d = a.shape[0]
    a = (a + a.conj().T) / 2.0
    v = np.eye(d, dtype=complex)
    if d == 1:
        return np.array([a[0, 0].real]), v

    threshold = JACOBI_OFF_THRESHOLD * max(1.0, float(np.linalg.norm(a)))
    converged = False
    for _ in range(JACOBI_MAX_SWEEPS):
        if _offdiag_norm(a) <= threshold:
            converged = True
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                mag = abs(a[p, q])
                if mag <= threshold / (d * d):
                    continue
                phase = a[p, q] / mag
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                if tau == 0.0:
                    t = 1.0
                else:
                    # smaller root of t^2 - 2*tau*t - 1 = 0, for stability
                    t = -np.sign(tau) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # plane rotation R: R[p,p]=c, R[p,q]=-s, R[q,p]=s*conj(phase),
                # R[q,q]=c*conj(phase); a <- R^dagger a R, v <- v R
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp + s * np.conj(phase) * cq
                a[:, q] = -s * cp + c * np.conj(phase) * cq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp + s * phase * rq
                a[q, :] = -s * rp + c * phase * rq
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp + s * np.conj(phase) * vq
                v[:, q] = -s * vp + c * np.conj(phase) * vq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    if not converged and _offdiag_norm(a) > threshold:
        raise ConvergenceFailure(
            f"off-diagonal norm {_offdiag_norm(a):.3e} above threshold after "
            f"{JACOBI_MAX_SWEEPS} sweeps"
        )
    w = a.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def sample_haar_unitaries(d: int, count: int, rng: RngStream) -> np.ndarray:
    """Stack of `count` independent Haar-distributed d x d unitaries.

    Construction: complex Ginibre matrix, QR orthonormalization, then each
    column is multiplied by the phase of the matching diagonal entry of R.
    The phase fix makes the QR factorization unique (R with positive
    diagonal), which is what makes the distribution exactly Haar rather
    than merely unitary.
    """
    if d < 1:
        raise DimensionMismatch("dimension must be positive")
    g = rng.complex_normal((count, d, d))
    q, r = np.linalg.qr(g)
    diag = np.diagonal(r, axis1=-2, axis2=-1).copy()
    mag = np.abs(diag)
    mag[mag == 0.0] = 1.0
    q = q * (diag / mag)[:, None, :]
    return q


def sample_haar_unitary(d: int, rng: RngStream) -> np.ndarray:
    """One Haar-distributed d x d unitary."""
    return sample_haar_unitaries(d, 1, rng)[0]


def rotate_basis(basis: Basis, u: np.ndarray) -> Basis:
    """Basis whose kets are u applied to the input basis kets."""
    u = np.asarray(u, dtype=complex)
    if u.shape != basis.vectors.shape:
        raise DimensionMismatch(
            f"unitary shape {u.shape} does not match basis dimension {basis.dim}"
        )
    return Basis(u @ basis.vectors, label=basis.label)
