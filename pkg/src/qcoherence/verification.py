"""Named check suites behind the `verify` command.

Every check draws its randomness from a stream keyed by (seed, crc32 of the
check name), so adding or reordering checks never shifts another check's
random numbers, and repeated runs print byte-identical reports.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass

import numpy as np

from .bounds import (
    NEEDS_BASIS,
    NEEDS_MUBSET,
    RelationId,
    applicable_relations,
    evaluate_relation,
    subentropy_bound_table,
    symmetric_binary_entropy_nats,
)
from .haar_average import (
    mean_basis_entropy,
    mean_classical_purity,
    mean_coherence,
    mean_relent_closed_form,
    rms_coherence,
)
from .linalg import (
    Basis,
    RngStream,
    hermitian_eigensystem,
    max_abs,
    rotate_basis,
    sample_haar_unitary,
)
from .measures import (
    classical_purity,
    coherence_l1,
    coherence_l2,
    coherence_radius_l1,
    coherence_radius_l2,
    coherence_relent,
    mub_constant,
    qubit_rms_error,
    state_subentropy,
    subentropy,
)
from .mub import MubSet, build_complete_mub, diagonal_part, is_prime, ivanovic_reconstruct
from .mub import basis_probabilities
from .states import (
    DensityOperator,
    bloch_vector,
    epsilon_state,
    from_bloch,
    quantum_purity,
    random_bloch_vector,
    sample_random_density,
    von_neumann_entropy,
)

DEFAULT_DIMS = (2, 3, 5, 7, 11)
SCOPES = ("all", "qubit", "mub", "subentropy", "average")


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # PASS | FAIL | SKIP
    detail: str

    @property
    def failed(self) -> bool:
        return self.status == "FAIL"


def _stream(seed: int, name: str) -> RngStream:
    return RngStream(seed, zlib.crc32(name.encode()) & 0x7FFFFFFF)


def _check(name: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(name, "PASS" if ok else "FAIL", detail)


def _skip(name: str, why: str) -> CheckResult:
    return CheckResult(name, "SKIP", why)


def _random_basis(d: int, rng: RngStream) -> Basis:
    return Basis(sample_haar_unitary(d, rng), label="haar")


def _random_states(d: int, count: int, rng: RngStream) -> list[DensityOperator]:
    return [sample_random_density(d, d, rng) for _ in range(count)]


# ---------------------------------------------------------------------------
# linalg suite (runs under scope "all")
# ---------------------------------------------------------------------------


def linalg_checks(seed: int) -> list[CheckResult]:
    out = []

    rng = _stream(seed, "eig_round_trip")
    worst_rec = worst_tr = worst_tr2 = worst_unit = 0.0
    for i in range(1000):
        d = 2 + i % 7
        g = rng.complex_normal((d, d))
        h = (g + g.conj().T) / 2.0
        w, v = hermitian_eigensystem(h)
        worst_rec = max(worst_rec, max_abs(v @ np.diag(w) @ v.conj().T - h))
        worst_unit = max(worst_unit, max_abs(v.conj().T @ v - np.eye(d)))
        worst_tr = max(worst_tr, abs(w.sum() - h.trace().real))
        worst_tr2 = max(worst_tr2, abs((w * w).sum() - (h @ h).trace().real))
    out.append(
        _check(
            "eig_round_trip",
            worst_rec <= 1e-10 and worst_unit <= 1e-10,
            f"max_recon={worst_rec:.3e} max_unitarity={worst_unit:.3e} tol=1e-10",
        )
    )
    out.append(
        _check(
            "eig_trace_identities",
            worst_tr <= 1e-10 and worst_tr2 <= 1e-10,
            f"max_trace_dev={worst_tr:.3e} max_trace_sq_dev={worst_tr2:.3e} tol=1e-10",
        )
    )

    rng = _stream(seed, "haar_unitarity")
    worst = 0.0
    for d in (1, 2, 3, 5, 8):
        for _ in range(50):
            u = sample_haar_unitary(d, rng)
            worst = max(worst, max_abs(u.conj().T @ u - np.eye(d)))
    out.append(_check("haar_unitarity", worst <= 1e-10, f"max_dev={worst:.3e} tol=1e-10"))

    # Haar invariance: mean classical purity with and without a fixed
    # pre-rotation must agree statistically.
    d = 3
    rho = sample_random_density(d, d, _stream(seed, "haar_invariance_state"))
    n = 20000
    plain = mean_classical_purity(rho, n, seed + 7)
    w = build_complete_mub(3).bases[1].vectors  # fixed unitary
    rho_rot = DensityOperator.from_matrix(w @ rho.matrix @ w.conj().T)
    rotated = mean_classical_purity(rho_rot, n, seed + 8)
    se = math.hypot(plain.std_error, rotated.std_error)
    z = abs(plain.mean - rotated.mean) / se
    out.append(
        _check("haar_invariance_prerotation", z <= 4.0, f"z={z:.2f} limit=4.00")
    )
    return out


# ---------------------------------------------------------------------------
# qubit suite
# ---------------------------------------------------------------------------


def qubit_checks(seed: int) -> list[CheckResult]:
    out = []
    paulis = build_complete_mub(2)
    axes = (np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]))

    rng = _stream(seed, "qubit_sweep")
    worst_sum = worst_cert = worst_c1 = 0.0
    for _ in range(500):
        r = random_bloch_vector(rng)
        rho = from_bloch(r)
        csq = [coherence_l1(rho, b) ** 2 for b in paulis.bases]
        worst_sum = max(worst_sum, abs(sum(csq) - 2.0 * float(r @ r)))
        # basis order is (sigma3, sigma1, sigma2)
        for basis, axis in zip(paulis.bases, axes):
            delta_sq = qubit_rms_error(rho, axis)
            c1 = coherence_l1(rho, basis)
            worst_cert = max(worst_cert, abs(delta_sq - (c1 * c1 + 1.0 - float(r @ r))))
        worst_c1 = max(worst_c1, abs(csq[0] - (float(r @ r) - r[2] ** 2)))
    out.append(_check("qubit_sum_rule", worst_sum <= 1e-8, f"max_dev={worst_sum:.3e} tol=1e-08"))
    out.append(
        _check("qubit_certainty", worst_cert <= 1e-8, f"max_dev={worst_cert:.3e} tol=1e-08")
    )
    out.append(
        _check(
            "qubit_c1_sigma3_identity", worst_c1 <= 1e-10, f"max_dev={worst_c1:.3e} tol=1e-10"
        )
    )

    worst_sr2 = worst_ent2 = 0.0
    for i in range(6):
        p = 0.5 + 0.1 * i
        x = math.sqrt((2.0 * p - 1.0) / 3.0)
        rho = from_bloch(np.array([x, x, x]))
        sr2 = evaluate_relation(RelationId.CERTAINTY_SR2, rho, paulis)
        ent2 = evaluate_relation(RelationId.ENT_COMP_QUBIT, rho, paulis)
        worst_sr2 = max(worst_sr2, abs(sr2.slack))
        worst_ent2 = max(worst_ent2, abs(ent2.slack))
    out.append(
        _check("sr2_saturation", worst_sr2 <= 1e-8, f"max_slack={worst_sr2:.3e} tol=1e-08")
    )
    out.append(
        _check("ent2_saturation", worst_ent2 <= 1e-8, f"max_slack={worst_ent2:.3e} tol=1e-08")
    )

    h = symmetric_binary_entropy_nats
    grid = np.linspace(-1.0, 1.0, 41)
    hv = np.array([h(x) for x in grid])
    concave = all(
        hv[i + 1] >= (hv[i] + hv[i + 2]) / 2.0 - 1e-12 for i in range(len(grid) - 2)
    )
    sane = (
        abs(h(0.0) - math.log(2.0)) <= 1e-12
        and h(1.0) <= 1e-12
        and h(-1.0) <= 1e-12
        and max(abs(h(x) - h(-x)) for x in grid) <= 1e-12
        and concave
    )
    out.append(_check("h_function_sanity", sane, "h(0)=log2 h(+-1)=0 symmetric concave"))

    rng = _stream(seed, "bloch_round_trip")
    worst = 0.0
    for _ in range(200):
        r = random_bloch_vector(rng)
        worst = max(worst, max_abs(bloch_vector(from_bloch(r)) - r))
    out.append(_check("bloch_round_trip", worst <= 1e-12, f"max_dev={worst:.3e} tol=1e-12"))
    return out


# ---------------------------------------------------------------------------
# MUB suite, per dimension
# ---------------------------------------------------------------------------


def mub_checks(d: int, seed: int) -> list[CheckResult]:
    if not is_prime(d):
        why = f"d={d} is not prime"
        return [
            _skip(f"mub_unbiasedness_d{d}", why),
            _skip(f"mub_purity_identity_d{d}", why),
            _skip(f"mub_cross_coherence_d{d}", why),
            _skip(f"tomography_round_trip_d{d}", why),
            _skip(f"comp_l2_identity_d{d}", why),
            _skip(f"comp_l1_inequality_d{d}", why),
            _skip(f"comp_l1_saturation_d{d}", why),
            _skip(f"singh_saturation_d{d}", why),
        ]
    out = []
    mubs = build_complete_mub(d)

    worst = 0.0
    for i in range(d + 1):
        for j in range(i + 1, d + 1):
            from .mub import unbiasedness_deviation

            worst = max(worst, unbiasedness_deviation(mubs.bases[i], mubs.bases[j]))
    out.append(
        _check(f"mub_unbiasedness_d{d}", worst <= 1e-10, f"max_dev={worst:.3e} tol=1e-10")
    )

    states = _random_states(d, 100, _stream(seed, f"mub_states_d{d}"))
    worst_pure = worst_l2 = 0.0
    comp_ok = True
    worst_comp_slack = math.inf
    for rho in states:
        p = quantum_purity(rho)
        total = sum(classical_purity(rho, b) for b in mubs.bases)
        worst_pure = max(worst_pure, abs(total - (1.0 + p)))
        l2 = sum(coherence_l2(rho, b) ** 2 for b in mubs.bases)
        worst_l2 = max(worst_l2, abs(l2 - (d * p - 1.0)))
        slack = d * (d - 1) * (d * p - 1.0) - sum(
            coherence_l1(rho, b) ** 2 for b in mubs.bases
        )
        comp_ok = comp_ok and slack >= -1e-9
        worst_comp_slack = min(worst_comp_slack, slack)
    out.append(
        _check(
            f"mub_purity_identity_d{d}", worst_pure <= 1e-10, f"max_dev={worst_pure:.3e} tol=1e-10"
        )
    )
    out.append(
        _check(f"comp_l2_identity_d{d}", worst_l2 <= 1e-10, f"max_dev={worst_l2:.3e} tol=1e-10")
    )
    out.append(
        _check(
            f"comp_l1_inequality_d{d}", comp_ok, f"min_slack={worst_comp_slack:.3e} tol=-1e-09"
        )
    )

    worst = 0.0
    for i, a in enumerate(mubs.bases):
        for j, b in enumerate(mubs.bases):
            if i == j:
                continue
            for k in range(d):
                ket = b.ket(k)
                rho = DensityOperator.from_matrix(np.outer(ket, ket.conj()))
                worst = max(worst, abs(coherence_l1(rho, a) - (d - 1)))
    out.append(
        _check(f"mub_cross_coherence_d{d}", worst <= 1e-9, f"max_dev={worst:.3e} tol=1e-09")
    )

    worst = 0.0
    for rho in _random_states(d, 50, _stream(seed, f"tomography_d{d}")):
        probs = np.array([basis_probabilities(rho, b) for b in mubs.bases])
        rebuilt = ivanovic_reconstruct(mubs, probs)
        worst = max(worst, max_abs(rebuilt.matrix - rho.matrix))
    out.append(
        _check(
            f"tomography_round_trip_d{d}", worst <= 1e-10, f"max_err={worst:.3e} tol=1e-10"
        )
    )

    eps_grid = np.linspace(0.0, 1.0 - 1.0 / d, 11)
    worst_comp = 0.0
    worst_singh = 0.0
    for basis in mubs.bases:
        for k in range(d):
            ket = basis.ket(k)
            for eps in eps_grid:
                rho = epsilon_state(d, float(eps), ket)
                rep = evaluate_relation(RelationId.COMP_L1, rho, mubs)
                worst_comp = max(worst_comp, abs(rep.slack))
    # SINGH saturation needs |b> unbiased to the measured basis
    meas = mubs.bases[0]
    for source in mubs.bases[1:]:
        for eps in eps_grid:
            rho = epsilon_state(d, float(eps), source.ket(0))
            rep = evaluate_relation(RelationId.SINGH, rho, meas)
            worst_singh = max(worst_singh, abs(rep.slack))
    out.append(
        _check(
            f"comp_l1_saturation_d{d}", worst_comp <= 1e-8, f"max_slack={worst_comp:.3e} tol=1e-08"
        )
    )
    out.append(
        _check(
            f"singh_saturation_d{d}", worst_singh <= 1e-8, f"max_slack={worst_singh:.3e} tol=1e-08"
        )
    )
    return out


# ---------------------------------------------------------------------------
# subentropy suite
# ---------------------------------------------------------------------------


def subentropy_checks(seed: int) -> list[CheckResult]:
    out = []

    worst_pure = worst_mixed = 0.0
    for d in range(2, 12):
        spec_pure = np.zeros(d)
        spec_pure[0] = 1.0
        worst_pure = max(worst_pure, abs(subentropy(spec_pure, 2.0)))
        got = subentropy(np.full(d, 1.0 / d), 2.0)
        want = math.log2(d) - mub_constant(d, 2.0)
        worst_mixed = max(worst_mixed, abs(got - want))
    out.append(
        _check("subentropy_pure_zero", worst_pure <= 1e-10, f"max_dev={worst_pure:.3e} tol=1e-10")
    )
    out.append(
        _check(
            "subentropy_maximally_mixed",
            worst_mixed <= 1e-10,
            f"max_dev={worst_mixed:.3e} tol=1e-10",
        )
    )

    rng = _stream(seed, "subentropy_states")
    worst_low = -math.inf
    worst_bound = -math.inf
    ok = True
    for i in range(200):
        d = 2 + i % 7
        rho = sample_random_density(d, d, rng)
        q = state_subentropy(rho, 2.0)
        s = von_neumann_entropy(rho, 2.0)
        ok = ok and q >= -1e-9 and q <= s + 1e-9
        worst_low = max(worst_low, -q, q - s)
        _, table = subentropy_bound_table(rho, 2.0)
        for _, bound in table:
            worst_bound = max(worst_bound, q - bound)
    out.append(
        _check("subentropy_between_zero_and_s", ok, f"max_violation={worst_low:.3e} tol=1e-09")
    )
    out.append(
        _check(
            "subentropy_bounds_hold",
            worst_bound <= 1e-9,
            f"max_excess={worst_bound:.3e} tol=1e-09",
        )
    )

    rng = _stream(seed, "subentropy_unitary")
    worst = 0.0
    for i in range(50):
        d = 2 + i % 7
        rho = sample_random_density(d, d, rng)
        u = sample_haar_unitary(d, rng)
        rotated = DensityOperator.from_matrix(u @ rho.matrix @ u.conj().T)
        worst = max(
            worst, abs(state_subentropy(rotated, 2.0) - state_subentropy(rho, 2.0))
        )
    out.append(
        _check("subentropy_unitary_invariance", worst <= 1e-10, f"max_dev={worst:.3e} tol=1e-10")
    )

    base_spec = [0.5, 0.2, 0.2, 0.1]
    q0 = subentropy(base_spec, 2.0)
    diffs = []
    for g in (1e-5, 1e-6, 1e-7):
        diffs.append(abs(subentropy([0.5, 0.2 + g, 0.2, 0.1 - g], 2.0) - q0))
    monotone = diffs[0] > diffs[1] > diffs[2]
    out.append(
        _check(
            "subentropy_continuity",
            monotone,
            f"diffs={diffs[0]:.3e},{diffs[1]:.3e},{diffs[2]:.3e} monotone={monotone}",
        )
    )

    worst = 0.0
    for d in (2, 3, 5, 7, 11):
        for eps in np.linspace(0.0, 1.0 - 1.0 / d, 9):
            lam1 = 1.0 - eps
            lam2 = eps / (d - 1)
            spec = np.array([lam1] + [lam2] * (d - 1))
            rho = epsilon_state(d, float(eps), np.eye(d)[:, 0])
            worst = max(worst, abs(subentropy(spec, 2.0) - state_subentropy(rho, 2.0)))
    out.append(
        _check(
            "subentropy_epsilon_family_consistency",
            worst <= 1e-10,
            f"max_dev={worst:.3e} tol=1e-10",
        )
    )
    return out


# ---------------------------------------------------------------------------
# Haar-average suite
# ---------------------------------------------------------------------------


def _zline(label: str, mean: float, se: float, target: float) -> tuple[bool, str]:
    if se == 0.0:
        ok = abs(mean - target) <= 1e-12
        return ok, f"{label}={mean:.6g} target={target:.6g} se=0"
    z = (mean - target) / se
    return abs(z) <= 4.0, f"{label}={mean:.6g} target={target:.6g} z={z:+.2f}"


def average_checks(seed: int, n: int) -> list[CheckResult]:
    out = []
    pure_qubit = from_bloch(np.array([0.0, 0.0, 1.0]))

    maxmix = DensityOperator.from_matrix(np.eye(5) / 5.0)
    worst = 0.0
    for measure in ("l1", "l2", "relent"):
        est = mean_coherence(measure, maxmix, max(200, min(n, 2000)), seed)
        worst = max(worst, abs(est.mean), est.std_error)
    out.append(
        _check(
            "average_maximally_mixed_zero", worst <= 1e-12, f"max_dev={worst:.3e} tol=1e-12"
        )
    )

    est = mean_classical_purity(pure_qubit, n, seed)
    ok, detail = _zline("mean", est.mean, est.std_error, 2.0 / 3.0)
    out.append(_check("mean_classical_purity_pure_qubit", ok, detail))

    est = mean_basis_entropy(pure_qubit, n, seed, 2.0)
    ok, detail = _zline("mean", est.mean, est.std_error, mub_constant(2, 2.0))
    out.append(_check("mean_basis_entropy_pure_qubit", ok, detail))

    est = rms_coherence("l2", pure_qubit, n, seed)
    ok, detail = _zline("rms", est.mean, est.std_error, 1.0 / math.sqrt(3.0))
    out.append(_check("rms_c2_pure_qubit", ok, detail))

    ok_all = True
    details = []
    for d in (2, 3, 4, 5):
        rho = sample_random_density(d, d, _stream(seed, f"avg_state_d{d}"))
        r1 = coherence_radius_l1(rho) / math.sqrt(d + 1.0)
        r2 = coherence_radius_l2(rho) / math.sqrt(d + 1.0)
        m1 = mean_coherence("l1", rho, n, seed)
        s1 = rms_coherence("l1", rho, n, seed)
        s2 = rms_coherence("l2", rho, n, seed)
        ok_rms1 = s1.mean <= r1 + 4.0 * s1.std_error
        ok_mean1 = m1.mean <= s1.mean + 4.0 * math.hypot(m1.std_error, s1.std_error)
        z2 = 0.0 if s2.std_error == 0 else (s2.mean - r2) / s2.std_error
        ok_all = ok_all and ok_rms1 and ok_mean1 and abs(z2) <= 4.0
        details.append(f"d{d}:z2={z2:+.2f}")
    out.append(_check("average_radius_bounds", ok_all, " ".join(details) + " limit=4.00"))

    worst = 0.0
    for d in (2, 3, 5, 7, 11):
        mubs = build_complete_mub(d)
        rho = sample_random_density(d, d, _stream(seed, f"avg_mub_d{d}"))
        avg = sum(classical_purity(rho, b) for b in mubs.bases) / (d + 1.0)
        target = (1.0 + quantum_purity(rho)) / (1.0 + d)
        worst = max(worst, abs(avg - target))
    out.append(
        _check("mub_average_equivalence", worst <= 1e-10, f"max_dev={worst:.3e} tol=1e-10")
    )

    ok_all = True
    details = []
    for d in (2, 3, 4):
        rho = sample_random_density(d, d, _stream(seed, f"avg_crel_d{d}"))
        est = mean_coherence("relent", rho, n, seed, 2.0)
        target = mean_relent_closed_form(rho, 2.0)
        ok, _ = _zline("mean", est.mean, est.std_error, target)
        z = 0.0 if est.std_error == 0 else (est.mean - target) / est.std_error
        ok_all = ok_all and ok
        details.append(f"d{d}:z={z:+.2f}")
    out.append(_check("mean_crel_closed_form", ok_all, " ".join(details) + " limit=4.00"))

    ok_all = True
    worst = -math.inf
    for measure in ("l1", "l2", "relent"):
        rho = sample_random_density(3, 3, _stream(seed, "avg_meanrms"))
        m = mean_coherence(measure, rho, n, seed)
        r = rms_coherence(measure, rho, n, seed)
        gap = m.mean - r.mean - 4.0 * math.hypot(m.std_error, r.std_error)
        worst = max(worst, gap)
        ok_all = ok_all and gap <= 0.0
    out.append(_check("mean_le_rms", ok_all, f"max_excess={worst:.3e} limit=0"))

    a = mean_basis_entropy(pure_qubit, max(200, min(n, 2000)), seed, 2.0)
    b = mean_basis_entropy(pure_qubit, max(200, min(n, 2000)), seed, 2.0)
    same = a == b
    out.append(_check("estimator_determinism", same, f"identical={same}"))

    worst = -math.inf
    rng = _stream(seed, "avg_bound_states")
    for d in (2, 3, 4, 5):
        rho = sample_random_density(d, d, rng)
        excess = mean_relent_closed_form(rho, 2.0) - (
            math.log2(d) - von_neumann_entropy(rho, 2.0)
        )
        worst = max(worst, excess)
    out.append(
        _check("mean_crel_below_trivial_bound", worst <= 1e-9, f"max_excess={worst:.3e}")
    )
    return out


# ---------------------------------------------------------------------------
# full relation soundness sweep (scope "all")
# ---------------------------------------------------------------------------


def relation_soundness_checks(d: int, seed: int, count: int = 1000) -> list[CheckResult]:
    rng = _stream(seed, f"soundness_d{d}")
    mubs = None
    rotated = []
    if is_prime(d):
        mubs = build_complete_mub(d)
        for _ in range(3):
            u = sample_haar_unitary(d, rng)
            rotated.append(MubSet(d, tuple(rotate_basis(b, u) for b in mubs.bases)))
    ineq_violation = -math.inf
    eq_dev = 0.0
    checked = 0
    for i in range(count):
        rho = sample_random_density(d, d, rng)
        basis = _random_basis(d, rng)
        mub_ctx = rotated[i % 3] if rotated else None
        for rid in applicable_relations(d, has_basis=True, has_mubs=mub_ctx is not None):
            ctx = basis if rid in NEEDS_BASIS else (mub_ctx if rid in NEEDS_MUBSET else None)
            rep = evaluate_relation(rid, rho, ctx)
            checked += 1
            if rep.kind == "=":
                eq_dev = max(eq_dev, abs(rep.slack))
            else:
                ineq_violation = max(ineq_violation, -rep.slack)
    name = f"relation_soundness_d{d}"
    ok = ineq_violation <= 1e-9 and eq_dev <= 1e-8
    detail = (
        f"relations={checked} max_ineq_violation={ineq_violation:.3e} "
        f"max_eq_dev={eq_dev:.3e}"
    )
    results = [_check(name, ok, detail)]
    if not is_prime(d):
        results.append(_skip(f"relation_soundness_mub_d{d}", f"d={d} is not prime"))
    return results


def convexity_checks(seed: int) -> list[CheckResult]:
    rng = _stream(seed, "convexity")
    worst = {"l1": -math.inf, "l2": -math.inf, "relent": -math.inf}
    for i in range(500):
        d = (2, 3, 5)[i % 3]
        basis = _random_basis(d, rng)
        rho1 = sample_random_density(d, d, rng)
        rho2 = sample_random_density(d, d, rng)
        lam = float(rng.uniform())
        mix = DensityOperator.from_matrix(
            lam * rho1.matrix + (1.0 - lam) * rho2.matrix
        )
        for name, fn in (
            ("l1", coherence_l1),
            ("l2", coherence_l2),
            ("relent", lambda r, b: coherence_relent(r, b, 2.0)),
        ):
            excess = fn(mix, basis) - (lam * fn(rho1, basis) + (1.0 - lam) * fn(rho2, basis))
            worst[name] = max(worst[name], excess)
    ok = all(v <= 1e-10 for v in worst.values())
    detail = " ".join(f"{k}={v:.3e}" for k, v in worst.items()) + " tol=1e-10"
    return [_check("coherence_convexity", ok, detail)]


def diagonality_checks(seed: int) -> list[CheckResult]:
    rng = _stream(seed, "diagonality")
    ok = True
    worst_zero = 0.0
    for i in range(200):
        d = 2 + i % 5
        basis = _random_basis(d, rng)
        # state diagonal in the basis: all three measures must vanish
        p = rng.uniform(d) + 0.05
        p /= p.sum()
        diag = DensityOperator.from_matrix((basis.vectors * p) @ basis.vectors.conj().T)
        vals = (
            coherence_l1(diag, basis),
            coherence_l2(diag, basis),
            coherence_relent(diag, basis, 2.0),
        )
        worst_zero = max(worst_zero, max(abs(v) for v in vals))
        dephased = diagonal_part(diag, basis)
        worst_zero = max(worst_zero, max_abs(dephased.matrix - diag.matrix))
        # generic state: measures must be positive and the dephased state differs
        rho = sample_random_density(d, d, rng)
        off = max_abs(diagonal_part(rho, basis).matrix - rho.matrix)
        if off > 1e-6:
            ok = ok and coherence_l1(rho, basis) > 1e-8 and coherence_l2(rho, basis) > 1e-8
    ok = ok and worst_zero <= 1e-10
    return [
        _check(
            "coherence_vanishes_iff_diagonal", ok, f"max_at_diagonal={worst_zero:.3e} tol=1e-10"
        )
    ]


def run_suite(scope: str, dims, seed: int, n: int) -> list[CheckResult]:
    """All checks for a scope; dims restricts the dimension sweep."""
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    dims = tuple(dims)
    results: list[CheckResult] = []
    if scope in ("all", "qubit"):
        if 2 in dims or scope == "qubit":
            results.extend(qubit_checks(seed))
        else:
            results.append(_skip("qubit_suite", f"d={dims} does not include 2"))
    if scope in ("all", "mub"):
        for d in dims:
            results.extend(mub_checks(d, seed))
    if scope in ("all", "subentropy"):
        results.extend(subentropy_checks(seed))
    if scope in ("all", "average"):
        results.extend(average_checks(seed, n))
    if scope == "all":
        results.extend(linalg_checks(seed))
        results.extend(convexity_checks(seed))
        results.extend(diagonality_checks(seed))
        for d in dims:
            results.extend(relation_soundness_checks(d, seed))
    return results
