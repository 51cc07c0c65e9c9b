"""Complete sets of mutually unbiased bases for prime dimensions.

For odd prime d the d+1 bases are the computational basis plus the d
quadratic-phase bases with components omega^(m j^2 + k j)/sqrt(d); the
quadratic Gauss sum gives all cross-basis overlaps modulus 1/sqrt(d).
That construction degenerates at d=2, where the eigenbases of the three
Pauli matrices are used instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InconsistentStatistics,
    MalformedDistribution,
    NonPrimeDimension,
)
from .linalg import Basis, hermitian_eigensystem
from .states import DensityOperator

UNBIASED_TOL = 1e-10
RECONSTRUCTION_POSITIVITY_TOL = 1e-8


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True, eq=False)
class MubSet:
    """Ordered collection of d+1 pairwise mutually unbiased bases."""

    dim: int
    bases: tuple[Basis, ...]

    def __post_init__(self):
        if len(self.bases) != self.dim + 1:
            raise DimensionMismatch(
                f"a complete set for d={self.dim} needs {self.dim + 1} bases"
            )
        for b in self.bases:
            if b.dim != self.dim:
                raise DimensionMismatch("all bases must share the set dimension")
        for i in range(len(self.bases)):
            for j in range(i + 1, len(self.bases)):
                dev = unbiasedness_deviation(self.bases[i], self.bases[j])
                if dev > UNBIASED_TOL:
                    raise ValueError(
                        f"bases {i} and {j} are not unbiased (deviation {dev:.3e})"
                    )


def build_complete_mub(d: int) -> MubSet:
    """Complete set of d+1 mutually unbiased bases for prime d."""
    if not is_prime(d):
        raise NonPrimeDimension(
            f"complete MUB construction implemented for prime d only, got {d}"
        )
    if d == 2:
        s = 1.0 / math.sqrt(2.0)
        bases = (
            Basis(np.eye(2, dtype=complex), label="sigma3"),
            Basis(np.array([[s, s], [s, -s]], dtype=complex), label="sigma1"),
            Basis(np.array([[s, s], [1j * s, -1j * s]], dtype=complex), label="sigma2"),
        )
        return MubSet(2, bases)

    roots = np.exp(2j * np.pi * np.arange(d) / d)
    j = np.arange(d)
    bases = [Basis(np.eye(d, dtype=complex), label="computational")]
    for m in range(1, d + 1):
        # exponent of the d-th root of unity for row j, column k
        expo = (m * j[:, None] ** 2 + j[:, None] * j[None, :]) % d
        bases.append(Basis(roots[expo] / math.sqrt(d), label=f"quadratic-{m}"))
    return MubSet(d, tuple(bases))


def unbiasedness_deviation(a: Basis, b: Basis) -> float:
    """max over column pairs of | |<a|b>|^2 - 1/d |."""
    if a.dim != b.dim:
        raise DimensionMismatch("bases have different dimensions")
    overlaps = np.abs(a.vectors.conj().T @ b.vectors) ** 2
    return float(np.max(np.abs(overlaps - 1.0 / a.dim)))


def basis_probabilities(rho: DensityOperator, basis: Basis) -> np.ndarray:
    """Outcome probabilities <a|rho|a> of a projective measurement in `basis`."""
    if rho.dim != basis.dim:
        raise DimensionMismatch("state and basis dimensions differ")
    v = basis.vectors
    p = np.einsum("ia,ij,ja->a", v.conj(), rho.matrix, v).real
    return np.clip(p, 0.0, None)


def diagonal_part(rho: DensityOperator, basis: Basis) -> DensityOperator:
    """Dephased state sum_a |a><a| <a|rho|a>."""
    p = basis_probabilities(rho, basis)
    v = basis.vectors
    m = (v * p) @ v.conj().T
    m = (m + m.conj().T) / 2.0
    return DensityOperator.from_matrix(m)


def ivanovic_reconstruct(mubs: MubSet, probabilities) -> DensityOperator:
    """State rebuilt from measurement distributions over a complete MUB set.

    The reconstruction is sum_j rho(A_j) - I. Each row of `probabilities`
    must be a distribution; if the rows did not come from one common state
    the result can fail positivity, which raises InconsistentStatistics.
    """
    p = np.asarray(probabilities, dtype=float)
    d = mubs.dim
    if p.shape != (d + 1, d):
        raise MalformedDistribution(
            f"expected a {(d + 1, d)} probability array, got {p.shape}"
        )
    if p.min() < -1e-12:
        raise MalformedDistribution(f"negative probability {p.min():.3e}")
    sums = p.sum(axis=1)
    if np.max(np.abs(sums - 1.0)) > 1e-10:
        raise MalformedDistribution("each row must sum to 1 within 1e-10")

    m = -np.eye(d, dtype=complex)
    for row, basis in zip(p, mubs.bases):
        v = basis.vectors
        m += (v * np.clip(row, 0.0, None)) @ v.conj().T
    m = (m + m.conj().T) / 2.0
    w, _ = hermitian_eigensystem(m)
    if w[0] < -RECONSTRUCTION_POSITIVITY_TOL:
        raise InconsistentStatistics(
            f"reconstruction has eigenvalue {w[0]:.3e}; statistics are unphysical"
        )
    return DensityOperator.from_matrix(m, positivity_tol=RECONSTRUCTION_POSITIVITY_TOL)
