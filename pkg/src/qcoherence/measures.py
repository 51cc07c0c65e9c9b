"""Coherence and entropy quantities of a state relative to a basis.

All entropic quantities are computed internally in nats and converted to
the caller's log base once at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidDimension,
    InvalidSpectrum,
    NonUnitVector,
    NotQubit,
)
from .linalg import Basis
from .mub import basis_probabilities
from .states import (
    DensityOperator,
    bloch_vector,
    quantum_purity,
    shannon_entropy_nats,
    von_neumann_entropy,
)

# Eigenvalues closer than this are treated as one degenerate cluster.
CLUSTER_TOL = 1e-8
# Below these inter-cluster gaps the divided-difference table is evaluated
# in extended precision to avoid difference-quotient cancellation.
MP_GAP_SIMPLE = 1e-4
MP_GAP_CONFLUENT = 5e-2
MP_BASE_DPS = 30
MP_MAX_DPS = 600


def _log_factor(log_base: float) -> float:
    if log_base <= 1.0:
        raise ValueError("log_base must exceed 1")
    return math.log(log_base)


def _rho_in_basis(rho: DensityOperator, basis: Basis) -> np.ndarray:
    if rho.dim != basis.dim:
        raise DimensionMismatch("state and basis dimensions differ")
    v = basis.vectors
    return v.conj().T @ rho.matrix @ v


def coherence_l1(rho: DensityOperator, basis: Basis) -> float:
    """Sum of moduli of the off-diagonal matrix elements in `basis`."""
    m = np.abs(_rho_in_basis(rho, basis))
    np.fill_diagonal(m, 0.0)
    return float(m.sum())


def coherence_l2(rho: DensityOperator, basis: Basis) -> float:
    """Square root of the summed squared off-diagonal moduli in `basis`.

    Equal to sqrt(quantum purity - classical purity) up to rounding.
    """
    m = np.abs(_rho_in_basis(rho, basis))
    np.fill_diagonal(m, 0.0)
    return math.sqrt(float((m * m).sum()))


def classical_purity(rho: DensityOperator, basis: Basis) -> float:
    """Sum of squared outcome probabilities in `basis`; lies in [1/d, 1]."""
    p = basis_probabilities(rho, basis)
    return float(p @ p)


def basis_entropy(rho: DensityOperator, basis: Basis, log_base: float = 2.0) -> float:
    """Shannon entropy of the outcome distribution in `basis`."""
    return shannon_entropy_nats(basis_probabilities(rho, basis)) / _log_factor(log_base)


def coherence_relent(rho: DensityOperator, basis: Basis, log_base: float = 2.0) -> float:
    """Basis entropy minus von Neumann entropy (relative entropy of coherence)."""
    h = shannon_entropy_nats(basis_probabilities(rho, basis))
    s = shannon_entropy_nats(rho.spectrum)
    return (h - s) / _log_factor(log_base)


def coherence_radius_l1(rho: DensityOperator) -> float:
    """sqrt(d (d-1) [d P(rho) - 1]); maximal for pure states, 0 at I/d."""
    d = rho.dim
    return math.sqrt(d * (d - 1) * max(d * quantum_purity(rho) - 1.0, 0.0))


def coherence_radius_l2(rho: DensityOperator) -> float:
    """sqrt(d P(rho) - 1); equals radius_l1 / sqrt(d (d-1))."""
    return math.sqrt(max(rho.dim * quantum_purity(rho) - 1.0, 0.0))


def mub_constant(d: int, log_base: float = 2.0) -> float:
    """The constant (1/2 + 1/3 + ... + 1/d) log e in the requested base."""
    if d < 2:
        raise InvalidDimension("constant defined for d >= 2")
    return sum(1.0 / k for k in range(2, d + 1)) / _log_factor(log_base)


def qubit_rms_error(rho: DensityOperator, axis) -> float:
    """Mean square error 1 - (r . axis)^2 of the +-1 observable along `axis`."""
    if rho.dim != 2:
        raise NotQubit("observable error defined for qubits only")
    axis = np.asarray(axis, dtype=float).ravel()
    if axis.shape != (3,) or abs(np.linalg.norm(axis) - 1.0) > 1e-12:
        raise NonUnitVector("axis must be a unit 3-vector")
    r = bloch_vector(rho)
    return 1.0 - float(r @ axis) ** 2


# ---------------------------------------------------------------------------
# Subentropy
# ---------------------------------------------------------------------------
#
# For distinct eigenvalues the subentropy is
#     Q = -sum_i lam_i^k log(lam_i) / prod_{j != i} (lam_i - lam_j),
# which is exactly the (k-1)-th order Newton divided difference of
# f(x) = -x^k log x over the eigenvalue nodes. Repeated (clustered) nodes
# are handled confluently: a node repeated m times contributes derivative
# entries f^(j)(x)/j! for j < m, which is the g -> 0 limit of the distinct
# formula. Zero eigenvalues drop out exactly (all their derivative entries
# up to the relevant order vanish), with k reduced to the positive count.


def _cluster(lam: np.ndarray) -> tuple[list[float], list[int]]:
    """Group ascending eigenvalues into clusters of width <= CLUSTER_TOL."""
    nodes: list[float] = []
    mults: list[int] = []
    group = [lam[0]]
    for x in lam[1:]:
        if x - group[-1] <= CLUSTER_TOL:
            group.append(x)
        else:
            nodes.append(float(np.mean(group)))
            mults.append(len(group))
            group = [x]
    nodes.append(float(np.mean(group)))
    mults.append(len(group))
    return nodes, mults


def _falling(k: int, j: int) -> float:
    out = 1.0
    for t in range(j):
        out *= k - t
    return out


def _dd_table_float(nodes: list[float], mults: list[int], k: int) -> float:
    z = np.repeat(nodes, mults)
    n = z.size
    lnz = {x: math.log(x) for x in nodes}
    harm = [0.0] * (k + 1)
    for t in range(1, k + 1):
        harm[t] = harm[t - 1] + 1.0 / t

    def fderiv(x: float, j: int) -> float:
        # j-th derivative of -x^k log x, divided by j!
        val = -_falling(k, j) * x ** (k - j) * (lnz[x] + harm[k] - harm[k - j])
        return val / math.factorial(j)

    col = [-(x**k) * lnz[x] for x in z]
    for j in range(1, n):
        nxt = []
        for i in range(n - j):
            if z[i + j] == z[i]:
                nxt.append(fderiv(z[i], j))
            else:
                nxt.append((col[i + 1] - col[i]) / (z[i + j] - z[i]))
        col = nxt
    return col[0]


def _dd_table_mp(nodes: list[float], mults: list[int], k: int, dps: int) -> float:
    with mpmath.workdps(dps):
        z = []
        for x, m in zip(nodes, mults):
            z.extend([mpmath.mpf(x)] * m)
        n = len(z)
        lnz = {x: mpmath.log(mpmath.mpf(x)) for x in nodes}
        harm = [mpmath.mpf(0)] * (k + 1)
        for t in range(1, k + 1):
            harm[t] = harm[t - 1] + mpmath.mpf(1) / t

        def fderiv(x, j):
            ff = mpmath.mpf(1)
            for t in range(j):
                ff *= k - t
            val = -ff * x ** (k - j) * (lnz[float(x)] + harm[k] - harm[k - j])
            return val / mpmath.factorial(j)

        col = [-(x**k) * lnz[float(x)] for x in z]
        for j in range(1, n):
            nxt = []
            for i in range(n - j):
                if z[i + j] == z[i]:
                    nxt.append(fderiv(z[i], j))
                else:
                    nxt.append((col[i + 1] - col[i]) / (z[i + j] - z[i]))
            col = nxt
        return float(col[0])


def subentropy(eigenvalues, log_base: float = 2.0) -> float:
    """Subentropy of a spectrum, robust to degenerate eigenvalues.

    Accepts any probability spectrum (non-negative within -1e-10, summing
    to 1 within 1e-10). Eigenvalues closer than 1e-8 are merged into one
    confluent node; near-degenerate gaps switch the divided-difference
    table to extended precision. The result lies in [0, S] up to ~1e-9.
    """
    lam = np.asarray(eigenvalues, dtype=float).ravel()
    if lam.size == 0:
        raise InvalidSpectrum("empty spectrum")
    if lam.min() < -1e-10:
        raise InvalidSpectrum(f"negative eigenvalue {lam.min():.3e}")
    if abs(lam.sum() - 1.0) > 1e-10:
        raise InvalidSpectrum(f"eigenvalues sum to {lam.sum()}, expected 1")
    lam = lam[lam > 0.0]
    k = int(lam.size)
    if k == 1:
        return 0.0
    lam = np.sort(lam)
    nodes, mults = _cluster(lam)
    if len(nodes) == 1:
        gaps = []
    else:
        gaps = [nodes[i + 1] - nodes[i] for i in range(len(nodes) - 1)]
    min_gap = min(gaps) if gaps else math.inf
    use_mp = min_gap < MP_GAP_SIMPLE or (max(mults) > 1 and min_gap < MP_GAP_CONFLUENT)
    if use_mp:
        # worst-case digit loss is about n digits per decade of gap
        lost = max(0, math.ceil(-math.log10(min_gap)))
        dps = min(MP_BASE_DPS + k * lost, MP_MAX_DPS)
        q_nats = _dd_table_mp(nodes, mults, k, dps)
    else:
        q_nats = _dd_table_float(nodes, mults, k)
    return q_nats / _log_factor(log_base)


def state_subentropy(rho: DensityOperator, log_base: float = 2.0) -> float:
    """Subentropy of a state's spectrum (clipping positivity slack to zero)."""
    return subentropy(np.clip(rho.spectrum, 0.0, None), log_base)


@dataclass(frozen=True)
class CoherenceReport:
    """All scalar coherence quantities of one (state, basis) pair."""

    c1: float
    c2: float
    c_rel: float
    classical_purity: float
    basis_entropy: float
    log_base: float


def coherence_report(
    rho: DensityOperator, basis: Basis, log_base: float = 2.0
) -> CoherenceReport:
    return CoherenceReport(
        c1=coherence_l1(rho, basis),
        c2=coherence_l2(rho, basis),
        c_rel=coherence_relent(rho, basis, log_base),
        classical_purity=classical_purity(rho, basis),
        basis_entropy=basis_entropy(rho, basis, log_base),
        log_base=log_base,
    )


__all__ = [
    "CoherenceReport",
    "basis_entropy",
    "classical_purity",
    "coherence_l1",
    "coherence_l2",
    "coherence_radius_l1",
    "coherence_radius_l2",
    "coherence_relent",
    "coherence_report",
    "mub_constant",
    "qubit_rms_error",
    "state_subentropy",
    "subentropy",
    "von_neumann_entropy",
]
