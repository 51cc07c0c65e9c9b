"""Acceptance suite: one test per release criterion, at its stated tolerance.

Each test prints a single PASS/FAIL line (visible with pytest -s) and then
asserts, so the suite doubles as a human-readable report.
"""

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from qcoherence.bounds import RelationId, evaluate_relation
from qcoherence.cli import fig1_csv
from qcoherence.haar_average import (
    mean_basis_entropy,
    mean_classical_purity,
    mean_coherence,
    mean_relent_closed_form,
    rms_coherence,
)
from qcoherence.linalg import RngStream, max_abs, sample_haar_unitary
from qcoherence.measures import (
    classical_purity,
    coherence_l1,
    coherence_l2,
    mub_constant,
    qubit_rms_error,
    state_subentropy,
    subentropy,
)
from qcoherence.mub import basis_probabilities, build_complete_mub, ivanovic_reconstruct
from qcoherence.states import (
    DensityOperator,
    epsilon_state,
    from_bloch,
    quantum_purity,
    random_bloch_vector,
    sample_random_density,
    von_neumann_entropy,
)
from oracles import subentropy_perturbation_oracle

SEED = 42
PRIME_DIMS = (2, 3, 5, 7, 11)


def _report(name: str, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="module")
def bloch_sweep():
    rng = RngStream(SEED, 1)
    return [random_bloch_vector(rng) for _ in range(500)]


@pytest.fixture(scope="module")
def random_states():
    rng = RngStream(SEED, 2)
    return {d: [sample_random_density(d, d, rng) for _ in range(100)] for d in PRIME_DIMS}


@pytest.fixture(scope="module")
def mub_sets():
    return {d: build_complete_mub(d) for d in PRIME_DIMS}


def test_criterion_01_qubit_sum_rule(bloch_sweep, mub_sets):
    t0 = time.perf_counter()
    paulis = mub_sets[2]
    worst = 0.0
    for r in bloch_sweep:
        rho = from_bloch(r)
        total = sum(coherence_l1(rho, b) ** 2 for b in paulis.bases)
        worst = max(worst, abs(total - 2.0 * float(r @ r)))
    elapsed = time.perf_counter() - t0
    _report(
        "qubit-sum-rule",
        worst <= 1e-8 and elapsed < 1.0,
        f"max dev {worst:.3e} (tol 1e-08), {elapsed:.2f}s (< 1s)",
    )


def test_criterion_02_coherence_uncertainty_identity(bloch_sweep, mub_sets):
    axes = (np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]))
    worst = 0.0
    for r in bloch_sweep:
        rho = from_bloch(r)
        for basis, axis in zip(mub_sets[2].bases, axes):
            delta_sq = qubit_rms_error(rho, axis)
            c1 = coherence_l1(rho, basis)
            worst = max(worst, abs(delta_sq - (c1 * c1 + 1.0 - float(r @ r))))
    _report("coherence-uncertainty-identity", worst <= 1e-8, f"max dev {worst:.3e} (tol 1e-08)")


def test_criterion_03_mub_purity_identity(random_states, mub_sets):
    t0 = time.perf_counter()
    worst = 0.0
    for d in PRIME_DIMS:
        for rho in random_states[d]:
            total = sum(classical_purity(rho, b) for b in mub_sets[d].bases)
            worst = max(worst, abs(total - (1.0 + quantum_purity(rho))))
    elapsed = time.perf_counter() - t0
    _report(
        "mub-purity-identity",
        worst <= 1e-10 and elapsed < 5.0,
        f"max dev {worst:.3e} (tol 1e-10), {elapsed:.2f}s (< 5s)",
    )


def test_criterion_04_l1_complementarity(random_states, mub_sets):
    min_slack = math.inf
    for d in PRIME_DIMS:
        for rho in random_states[d]:
            rep = evaluate_relation(RelationId.COMP_L1, rho, mub_sets[d])
            min_slack = min(min_slack, rep.slack)
    holds = min_slack >= -1e-9

    worst_sat = 0.0
    for d in PRIME_DIMS:
        mubs = mub_sets[d]
        for basis in mubs.bases:
            for k in range(d):
                ket = basis.ket(k)
                for eps in np.linspace(0.0, 1.0 - 1.0 / d, 11):
                    rho = epsilon_state(d, float(eps), ket)
                    rep = evaluate_relation(RelationId.COMP_L1, rho, mubs)
                    worst_sat = max(worst_sat, abs(rep.slack))
    _report(
        "l1-complementarity",
        holds and worst_sat <= 1e-8,
        f"min slack {min_slack:.3e}, max saturation slack {worst_sat:.3e} (tol 1e-08)",
    )


def test_criterion_05_l2_complementarity_identity(random_states, mub_sets):
    worst = 0.0
    for d in PRIME_DIMS:
        for rho in random_states[d]:
            total = sum(coherence_l2(rho, b) ** 2 for b in mub_sets[d].bases)
            worst = max(worst, abs(total - (d * quantum_purity(rho) - 1.0)))
    _report("l2-complementarity-identity", worst <= 1e-10, f"max dev {worst:.3e} (tol 1e-10)")


def test_criterion_06_tomography(mub_sets):
    rng = RngStream(SEED, 3)
    worst = 0.0
    for d in PRIME_DIMS:
        mubs = mub_sets[d]
        for _ in range(50):
            rho = sample_random_density(d, d, rng)
            probs = np.array([basis_probabilities(rho, b) for b in mubs.bases])
            rebuilt = ivanovic_reconstruct(mubs, probs)
            worst = max(worst, max_abs(rebuilt.matrix - rho.matrix))
    _report("tomography-round-trip", worst <= 1e-10, f"max error {worst:.3e} (tol 1e-10)")


def test_criterion_07_entropic_relations(random_states, mub_sets):
    min_slack = math.inf
    for d in PRIME_DIMS:
        mubs = mub_sets[d]
        for rho in random_states[d]:
            if d == 2:
                ids = (RelationId.CERTAINTY_SR2, RelationId.ENT_COMP_QUBIT)
            else:
                ids = (RelationId.CERTAINTY_SRD, RelationId.ENT_COMP_D)
            for rid in ids:
                min_slack = min(min_slack, evaluate_relation(rid, rho, mubs).slack)
    holds = min_slack >= -1e-9

    worst_sat = 0.0
    for p in np.arange(0.5, 1.0001, 0.1):
        p = min(float(p), 1.0)
        x = math.sqrt((2.0 * p - 1.0) / 3.0)
        rho = from_bloch([x, x, x])
        for rid in (RelationId.CERTAINTY_SR2, RelationId.ENT_COMP_QUBIT):
            worst_sat = max(worst_sat, abs(evaluate_relation(rid, rho, mub_sets[2]).slack))
    _report(
        "entropic-relations",
        holds and worst_sat <= 1e-8,
        f"min slack {min_slack:.3e}, max saturation slack {worst_sat:.3e} (tol 1e-08)",
    )


def test_criterion_08_subentropy(random_states):
    worst_exact = 0.0
    for d in range(2, 12):
        pure = np.zeros(d)
        pure[0] = 1.0
        worst_exact = max(worst_exact, abs(subentropy(pure, 2.0)))
        got = subentropy(np.full(d, 1.0 / d), 2.0)
        want = math.log2(d) - mub_constant(d, 2.0)
        worst_exact = max(worst_exact, abs(got - want))
    ok_a = worst_exact <= 1e-10

    worst_oracle = 0.0
    d = 11
    for eps in np.linspace(0.0, 1.0 - 1.0 / d, 11):
        lam = np.array([1.0 - eps] + [eps / (d - 1)] * (d - 1))
        worst_oracle = max(
            worst_oracle, abs(subentropy(lam, 2.0) - subentropy_perturbation_oracle(lam, 2.0))
        )
    ok_b = worst_oracle <= 1e-6

    worst_range = -math.inf
    for d in PRIME_DIMS:
        for rho in random_states[d]:
            q = state_subentropy(rho, 2.0)
            s = von_neumann_entropy(rho, 2.0)
            worst_range = max(worst_range, -q, q - s)
    ok_c = worst_range <= 1e-9

    rng = RngStream(SEED, 4)
    worst_unitary = 0.0
    for d in PRIME_DIMS:
        for rho in random_states[d][:20]:
            u = sample_haar_unitary(d, rng)
            rotated = DensityOperator.from_matrix(u @ rho.matrix @ u.conj().T)
            worst_unitary = max(
                worst_unitary, abs(state_subentropy(rotated, 2.0) - state_subentropy(rho, 2.0))
            )
    ok_d = worst_unitary <= 1e-10

    _report(
        "subentropy",
        ok_a and ok_b and ok_c and ok_d,
        f"exact {worst_exact:.3e} (1e-10), oracle {worst_oracle:.3e} (1e-06), "
        f"range {worst_range:.3e} (1e-09), unitary {worst_unitary:.3e} (1e-10)",
    )


def test_criterion_09_fig1_reproduction():
    t0 = time.perf_counter()
    problems = []
    for d in (2, 11):
        text = fig1_csv(d, 101, 2.0)
        lines = text.strip().split("\n")
        assert lines[0] == "epsilon,Q_exact,bound_qupper,bound_ht,bound_jrw,bound_ddj"
        rows = [[float(x) for x in line.split(",")] for line in lines[1:]]
        assert len(rows) == 101
        for eps, q, qupper, ht, jrw, ddj in rows:
            for bound in (qupper, ht, jrw, ddj):
                if bound < q - 1e-9:
                    problems.append(f"d={d} eps={eps}: bound below Q")
            if qupper > jrw + 1e-12:
                problems.append(f"d={d} eps={eps}: qupper above jrw")
            if d == 2 and abs(qupper - ht) > 1e-9:
                problems.append(f"d=2 eps={eps}: qupper != ht")
        first = rows[0]
        if first[1] != 0.0 or first[5] != 0.0:
            problems.append(f"d={d}: pure endpoint not exact")
        last = rows[-1]
        for idx in (2, 3, 4):  # qupper, ht, jrw coincide with Q at the mixed end
            if abs(last[idx] - last[1]) > 1e-9:
                problems.append(f"d={d}: endpoint coincidence broken (col {idx})")
    elapsed = time.perf_counter() - t0
    _report(
        "fig1-reproduction",
        not problems and elapsed < 10.0,
        f"{len(problems)} violations, {elapsed:.2f}s (< 10s)"
        + (f"; first: {problems[0]}" if problems else ""),
    )


def test_criterion_10_haar_identities():
    t0 = time.perf_counter()
    n = 100000
    pure = from_bloch([0.0, 0.0, 1.0])
    zs = []

    est = mean_classical_purity(pure, n, SEED)
    zs.append(("purity", (est.mean - 2.0 / 3.0) / est.std_error))

    est = mean_basis_entropy(pure, n, SEED, 2.0)
    zs.append(("entropy", (est.mean - mub_constant(2, 2.0)) / est.std_error))

    est = rms_coherence("l2", pure, n, SEED)
    zs.append(("rms-c2", (est.mean - 1.0 / math.sqrt(3.0)) / est.std_error))

    rng = RngStream(SEED, 5)
    for d in (2, 3, 4):
        for k in range(5):
            rho = sample_random_density(d, d, rng)
            est = mean_coherence("relent", rho, n, SEED, 2.0)
            target = mean_relent_closed_form(rho, 2.0)
            zs.append((f"crel-d{d}-{k}", (est.mean - target) / est.std_error))

    elapsed = time.perf_counter() - t0
    worst = max(abs(z) for _, z in zs)
    _report(
        "haar-identities",
        worst <= 4.0 and elapsed < 60.0,
        f"max |z| {worst:.2f} over {len(zs)} targets (limit 4), {elapsed:.1f}s (< 60s)",
    )


def test_criterion_11_verify_determinism():
    cmd = [sys.executable, "-m", "qcoherence.cli", "verify", "--scope", "all", "--seed", "42"]
    first = subprocess.run(cmd, capture_output=True, timeout=600)
    second = subprocess.run(cmd, capture_output=True, timeout=600)
    same = first.stdout == second.stdout and first.returncode == second.returncode == 0
    _report(
        "verify-determinism",
        same,
        f"exit codes ({first.returncode}, {second.returncode}), "
        f"byte-identical={first.stdout == second.stdout} ({len(first.stdout)} bytes)",
    )
