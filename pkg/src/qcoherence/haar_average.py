"""Monte Carlo averages of coherence quantities over Haar-random bases.

Sampling is organized in fixed-size batches; batch b draws from the
stream (master_seed, b) and batches are reduced in index order, so a
given (seed, n) pair reproduces results bit for bit and batches may be
evaluated concurrently without changing the outcome.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import TooFewSamples
from .linalg import RngStream, sample_haar_unitaries
from .measures import mub_constant, state_subentropy
from .states import DensityOperator, quantum_purity, shannon_entropy_nats

BATCH_SIZE = 4096
MIN_SAMPLES = 100

MEASURES = ("l1", "l2", "relent")


@dataclass(frozen=True)
class EstimateResult:
    """Monte Carlo estimate with its standard error."""

    mean: float
    std_error: float
    n_samples: int
    master_seed: int

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "std_error": self.std_error,
            "n_samples": self.n_samples,
            "master_seed": self.master_seed,
        }


def _batch_probabilities(u: np.ndarray, rho_mat: np.ndarray) -> np.ndarray:
    """Outcome probabilities p[n, a] = <u_a|rho|u_a> for a stack of unitaries."""
    p = np.einsum("nia,ij,nja->na", u.conj(), rho_mat, u).real
    return np.clip(p, 0.0, None)


def _batch_rotated(u: np.ndarray, rho_mat: np.ndarray) -> np.ndarray:
    """rho written in each rotated basis: m[n] = u[n]^dagger rho u[n]."""
    return np.einsum("nia,ij,njb->nab", u.conj(), rho_mat, u)


def _batch_entropy_nats(p: np.ndarray) -> np.ndarray:
    terms = np.where(p > 0.0, -p * np.log(np.where(p > 0.0, p, 1.0)), 0.0)
    return terms.sum(axis=1)


def _offdiag_abs_sums(u: np.ndarray, rho_mat: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-sample sums of |off-diagonal| and |off-diagonal|^2.

    The diagonal is zeroed before summing (rather than subtracted after)
    so nearly diagonal samples do not lose precision to cancellation.
    """
    m = np.abs(_batch_rotated(u, rho_mat))
    idx = np.arange(m.shape[1])
    m[:, idx, idx] = 0.0
    l1 = m.sum(axis=(1, 2))
    l2sq = (m * m).sum(axis=(1, 2))
    return l1, l2sq


def _sample_statistic(
    rho: DensityOperator,
    n: int,
    seed: int,
    kernel: Callable[[np.ndarray], np.ndarray],
) -> tuple[float, float]:
    """Mean and standard error of a per-unitary statistic over n Haar samples."""
    if n < MIN_SAMPLES:
        raise TooFewSamples(f"need at least {MIN_SAMPLES} samples, got {n}")
    d = rho.dim
    total = 0.0
    total_sq = 0.0
    shift = None
    done = 0
    batch_index = 0
    while done < n:
        count = min(BATCH_SIZE, n - done)
        u = sample_haar_unitaries(d, count, RngStream(seed, batch_index))
        values = kernel(u)
        if shift is None:
            # shifted variance: exact zero spread for constant statistics
            shift = float(values[0])
        total += float(values.sum())
        centered = values - shift
        total_sq += float((centered * centered).sum())
        done += count
        batch_index += 1
    mean = total / n
    variance = max(total_sq / n - (mean - shift) ** 2, 0.0) * n / (n - 1)
    return mean, math.sqrt(variance / n)


def _coherence_kernel(
    measure: str, rho: DensityOperator, log_base: float, squared: bool
) -> Callable[[np.ndarray], np.ndarray]:
    if measure not in MEASURES:
        raise ValueError(f"measure must be one of {MEASURES}, got {measure!r}")
    rho_mat = rho.matrix
    if measure == "relent":
        s_nats = shannon_entropy_nats(rho.spectrum)
        lb = math.log(log_base)

        def kernel(u):
            c = (_batch_entropy_nats(_batch_probabilities(u, rho_mat)) - s_nats) / lb
            return c * c if squared else c

    elif measure == "l1":

        def kernel(u):
            c = _offdiag_abs_sums(u, rho_mat)[0]
            return c * c if squared else c

    else:  # l2

        def kernel(u):
            csq = _offdiag_abs_sums(u, rho_mat)[1]
            return csq if squared else np.sqrt(csq)

    return kernel


def mean_coherence(
    measure: str,
    rho: DensityOperator,
    n: int,
    seed: int,
    log_base: float = 2.0,
) -> EstimateResult:
    """Sample mean of the chosen coherence over n Haar-rotated bases."""
    kernel = _coherence_kernel(measure, rho, log_base, squared=False)
    mean, se = _sample_statistic(rho, n, seed, kernel)
    return EstimateResult(mean, se, n, seed)


def rms_coherence(
    measure: str,
    rho: DensityOperator,
    n: int,
    seed: int,
    log_base: float = 2.0,
) -> EstimateResult:
    """Root mean square coherence, with the delta-method standard error."""
    kernel = _coherence_kernel(measure, rho, log_base, squared=True)
    mean_sq, se_sq = _sample_statistic(rho, n, seed, kernel)
    rms = math.sqrt(max(mean_sq, 0.0))
    se = 0.0 if mean_sq < 1e-12 else se_sq / (2.0 * rms)
    return EstimateResult(rms, se, n, seed)


def mean_classical_purity(rho: DensityOperator, n: int, seed: int) -> EstimateResult:
    """Estimates the basis-averaged classical purity; target (1 + P) / (1 + d)."""
    rho_mat = rho.matrix

    def kernel(u):
        p = _batch_probabilities(u, rho_mat)
        return (p * p).sum(axis=1)

    mean, se = _sample_statistic(rho, n, seed, kernel)
    return EstimateResult(mean, se, n, seed)


def mean_basis_entropy(
    rho: DensityOperator, n: int, seed: int, log_base: float = 2.0
) -> EstimateResult:
    """Estimates the basis-averaged outcome entropy; target Q + C_d."""
    rho_mat = rho.matrix
    lb = math.log(log_base)

    def kernel(u):
        return _batch_entropy_nats(_batch_probabilities(u, rho_mat)) / lb

    mean, se = _sample_statistic(rho, n, seed, kernel)
    return EstimateResult(mean, se, n, seed)


def mean_relent_closed_form(rho: DensityOperator, log_base: float = 2.0) -> float:
    """Exact basis average of the relative entropy of coherence: C_d - (S - Q)."""
    from .states import von_neumann_entropy

    cd = mub_constant(rho.dim, log_base)
    s = von_neumann_entropy(rho, log_base)
    q = state_subentropy(rho, log_base)
    return cd - (s - q)


def closed_form_targets(rho: DensityOperator, log_base: float = 2.0) -> dict:
    """Closed-form comparison values for the three averaged measures."""
    from .measures import coherence_radius_l1, coherence_radius_l2

    d = rho.dim
    return {
        "rms_c1_upper": coherence_radius_l1(rho) / math.sqrt(d + 1),
        "rms_c2": coherence_radius_l2(rho) / math.sqrt(d + 1),
        "mean_crel": mean_relent_closed_form(rho, log_base),
    }
