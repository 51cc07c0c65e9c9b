"""Catalog of coherence identities and inequalities, evaluated with slack.

Each relation produces a RelationReport with left and right sides in the
caller's log base, the slack rhs - lhs, and a verdict at the catalog
tolerances (1e-8 for equalities, 1e-9 for inequality slack).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidDimension, NotApplicable
from .linalg import Basis
from .measures import (
    classical_purity,
    coherence_l1,
    coherence_l2,
    mub_constant,
    qubit_rms_error,
    subentropy,
)
from .mub import MubSet, basis_probabilities, build_complete_mub, is_prime
from .states import (
    DensityOperator,
    bloch_vector,
    quantum_purity,
    shannon_entropy_nats,
)

EQUALITY_TOL = 1e-8
INEQUALITY_TOL = 1e-9


class RelationId(Enum):
    C1_MAX = "C1_MAX"
    QUBIT_SUM_RULE = "QUBIT_SUM_RULE"
    QUBIT_CERTAINTY = "QUBIT_CERTAINTY"
    PURITY_DIFF = "PURITY_DIFF"
    SINGH = "SINGH"
    MUB_PURITY_ID = "MUB_PURITY_ID"
    COMP_L1 = "COMP_L1"
    COMP_L2_ID = "COMP_L2_ID"
    CREL_TRIVIAL = "CREL_TRIVIAL"
    CERTAINTY_SRD = "CERTAINTY_SRD"
    CERTAINTY_SR2 = "CERTAINTY_SR2"
    ENT_COMP_D = "ENT_COMP_D"
    ENT_COMP_QUBIT = "ENT_COMP_QUBIT"
    Q_JRW = "Q_JRW"
    Q_DDJ = "Q_DDJ"
    Q_UPPER_MUB = "Q_UPPER_MUB"
    Q_HT = "Q_HT"
    HARREMOES_ENTROPY = "HARREMOES_ENTROPY"


# Context requirements: which ids need a Basis, which need a MubSet, and
# dimension restrictions (qubit-only, d >= 3, prime d).
NEEDS_BASIS = frozenset(
    {
        RelationId.C1_MAX,
        RelationId.PURITY_DIFF,
        RelationId.SINGH,
        RelationId.CREL_TRIVIAL,
        RelationId.HARREMOES_ENTROPY,
    }
)
NEEDS_MUBSET = frozenset(
    {
        RelationId.MUB_PURITY_ID,
        RelationId.COMP_L1,
        RelationId.COMP_L2_ID,
        RelationId.CERTAINTY_SRD,
        RelationId.CERTAINTY_SR2,
        RelationId.ENT_COMP_D,
        RelationId.ENT_COMP_QUBIT,
    }
)
QUBIT_ONLY = frozenset(
    {
        RelationId.QUBIT_SUM_RULE,
        RelationId.QUBIT_CERTAINTY,
        RelationId.CERTAINTY_SR2,
        RelationId.ENT_COMP_QUBIT,
    }
)
MIN_D3 = frozenset({RelationId.CERTAINTY_SRD, RelationId.ENT_COMP_D})
SPECTRUM_ONLY = frozenset(
    {RelationId.Q_JRW, RelationId.Q_DDJ, RelationId.Q_UPPER_MUB, RelationId.Q_HT}
)


@dataclass(frozen=True)
class RelationReport:
    id: RelationId
    lhs: float
    rhs: float
    kind: str  # "<=" or "="
    slack: float
    satisfied: bool
    tol: float

    def to_dict(self) -> dict:
        return {
            "id": self.id.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "kind": self.kind,
            "slack": self.slack,
            "satisfied": self.satisfied,
            "tol": self.tol,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RelationReport":
        return cls(
            id=RelationId(d["id"]),
            lhs=d["lhs"],
            rhs=d["rhs"],
            kind=d["kind"],
            slack=d["slack"],
            satisfied=d["satisfied"],
            tol=d["tol"],
        )


def tau_lower(d: int) -> float:
    """Purity-entropy coefficient: exact 1/ln 4 at d=2, the analytic lower
    bound 1 - 1/(1 + ln d) for d >= 3."""
    if d < 2:
        raise InvalidDimension("tau defined for d >= 2")
    if d == 2:
        return 1.0 / math.log(4.0)
    return 1.0 - 1.0 / (1.0 + math.log(d))


def symmetric_binary_entropy_nats(x: float) -> float:
    """h(x) = H((1+x)/2, (1-x)/2) in nats, for x in [-1, 1]."""
    p = np.array([(1.0 + x) / 2.0, (1.0 - x) / 2.0])
    return shannon_entropy_nats(p)


def srd_qubit_limit(rho: DensityOperator, log_base: float = 2.0) -> float:
    """d -> 2 limit of the d-dimensional certainty bound: 3 log 2 - (P - 1/2) log e.

    Diagnostic only; the qubit verdict uses CERTAINTY_SR2, which is tighter.
    """
    p = quantum_purity(rho)
    return (3.0 * math.log(2.0) - (p - 0.5)) / math.log(log_base)


def _entropy_sum_nats(rho: DensityOperator, mubs: MubSet) -> float:
    return sum(
        shannon_entropy_nats(basis_probabilities(rho, b)) for b in mubs.bases
    )


def _srd_penalty_nats(d: int, p: float) -> float:
    return (d - 1) * (d * p - 1.0) / (d * (d - 2)) * math.log(d - 1)


def _qupper_rhs_nats(d: int, p: float) -> float:
    cd = mub_constant(d, math.e)
    if d == 2:
        # continuous d -> 2 limit; identical to the tau_2 form of Q_HT
        return math.log(2.0) - cd - (2.0 * p - 1.0) / 6.0
    return (
        math.log(d)
        - cd
        - (d - 1) * (d * p - 1.0) / (d * (d + 1) * (d - 2)) * math.log(d - 1)
    )


def _ht_rhs_nats(d: int, p: float) -> float:
    cd = mub_constant(d, math.e)
    return math.log(d) - cd - tau_lower(d) * (d * p - 1.0) / (d * d - 1.0) * math.log(d)


def _check_context(rid: RelationId, rho: DensityOperator, context):
    d = rho.dim
    if rid in QUBIT_ONLY and d != 2:
        raise NotApplicable(f"{rid.value} requires a qubit state, got d={d}")
    if rid in MIN_D3 and d < 3:
        raise NotApplicable(f"{rid.value} requires d >= 3")
    if rid is RelationId.Q_UPPER_MUB and not is_prime(d):
        raise NotApplicable(f"{rid.value} requires prime d, got d={d}")
    if rid in NEEDS_BASIS:
        if not isinstance(context, Basis):
            raise NotApplicable(f"{rid.value} needs a Basis context")
        if context.dim != d:
            raise NotApplicable("basis dimension does not match the state")
    if rid in NEEDS_MUBSET:
        if not isinstance(context, MubSet):
            raise NotApplicable(f"{rid.value} needs a MubSet context")
        if context.dim != d:
            raise NotApplicable("MUB set dimension does not match the state")


def evaluate_relation(
    rid: RelationId,
    rho: DensityOperator,
    context: Basis | MubSet | None = None,
    log_base: float = 2.0,
) -> RelationReport:
    """Evaluate one catalogued relation on a state (plus basis/MUB context)."""
    _check_context(rid, rho, context)
    d = rho.dim
    p = quantum_purity(rho)
    lb = math.log(log_base)
    kind = "<="

    if rid is RelationId.C1_MAX:
        lhs, rhs = coherence_l1(rho, context), float(d - 1)
    elif rid is RelationId.QUBIT_SUM_RULE:
        kind = "="
        paulis = build_complete_mub(2).bases
        r = bloch_vector(rho)
        # set order is (sigma3, sigma1, sigma2); the sum is order-independent
        lhs = sum(coherence_l1(rho, b) ** 2 for b in paulis)
        rhs = 2.0 * float(r @ r)
    elif rid is RelationId.QUBIT_CERTAINTY:
        kind = "="
        basis = context if isinstance(context, Basis) else build_complete_mub(2).bases[0]
        if basis.dim != 2:
            raise NotApplicable("basis dimension does not match the state")
        a0 = basis.ket(0)
        z = a0[0].conjugate() * a0[1]
        # Bloch direction of the first basis ket
        axis = np.array([2.0 * z.real, 2.0 * z.imag, abs(a0[0]) ** 2 - abs(a0[1]) ** 2])
        axis /= np.linalg.norm(axis)
        r = bloch_vector(rho)
        lhs = qubit_rms_error(rho, axis)
        rhs = coherence_l1(rho, basis) ** 2 + 1.0 - float(r @ r)
    elif rid is RelationId.PURITY_DIFF:
        lhs = coherence_l1(rho, context)
        rhs = math.sqrt(d * (d - 1) * max(p - classical_purity(rho, context), 0.0))
    elif rid is RelationId.SINGH:
        lhs = coherence_l1(rho, context) ** 2
        rhs = (d - 1) * (d * p - 1.0)
    elif rid is RelationId.MUB_PURITY_ID:
        kind = "="
        lhs = sum(classical_purity(rho, b) for b in context.bases)
        rhs = 1.0 + p
    elif rid is RelationId.COMP_L1:
        lhs = sum(coherence_l1(rho, b) ** 2 for b in context.bases)
        rhs = d * (d - 1) * (d * p - 1.0)
    elif rid is RelationId.COMP_L2_ID:
        kind = "="
        lhs = sum(coherence_l2(rho, b) ** 2 for b in context.bases)
        rhs = d * p - 1.0
    elif rid is RelationId.CREL_TRIVIAL:
        s = shannon_entropy_nats(rho.spectrum)
        h = shannon_entropy_nats(basis_probabilities(rho, context))
        lhs, rhs = (h - s) / lb, (math.log(d) - s) / lb
    elif rid is RelationId.CERTAINTY_SRD:
        lhs = _entropy_sum_nats(rho, context) / lb
        rhs = ((d + 1) * math.log(d) - _srd_penalty_nats(d, p)) / lb
    elif rid is RelationId.CERTAINTY_SR2:
        x = math.sqrt(max(2.0 * p - 1.0, 0.0) / 3.0)
        lhs = _entropy_sum_nats(rho, context) / lb
        rhs = 3.0 * symmetric_binary_entropy_nats(x) / lb
    elif rid is RelationId.ENT_COMP_D:
        s = shannon_entropy_nats(rho.spectrum)
        lhs = (_entropy_sum_nats(rho, context) - (d + 1) * s) / lb
        rhs = ((d + 1) * (math.log(d) - s) - _srd_penalty_nats(d, p)) / lb
    elif rid is RelationId.ENT_COMP_QUBIT:
        s = shannon_entropy_nats(rho.spectrum)
        x = math.sqrt(max(2.0 * p - 1.0, 0.0) / 3.0)
        lhs = (_entropy_sum_nats(rho, context) - 3.0 * s) / lb
        rhs = 3.0 * (symmetric_binary_entropy_nats(x) - s) / lb
    elif rid is RelationId.Q_JRW:
        lhs = subentropy(np.clip(rho.spectrum, 0.0, None), log_base)
        rhs = (math.log(d) - mub_constant(d, math.e)) / lb
    elif rid is RelationId.Q_DDJ:
        lhs = subentropy(np.clip(rho.spectrum, 0.0, None), log_base)
        rhs = -math.log(float(rho.spectrum[-1])) / lb
    elif rid is RelationId.Q_UPPER_MUB:
        lhs = subentropy(np.clip(rho.spectrum, 0.0, None), log_base)
        rhs = _qupper_rhs_nats(d, p) / lb
    elif rid is RelationId.Q_HT:
        lhs = subentropy(np.clip(rho.spectrum, 0.0, None), log_base)
        rhs = _ht_rhs_nats(d, p) / lb
    elif rid is RelationId.HARREMOES_ENTROPY:
        pa = classical_purity(rho, context)
        lhs = shannon_entropy_nats(basis_probabilities(rho, context)) / lb
        rhs = (1.0 - tau_lower(d) * (d * pa - 1.0) / (d - 1)) * math.log(d) / lb
    else:  # pragma: no cover
        raise NotApplicable(f"unknown relation {rid}")

    lhs, rhs = float(lhs), float(rhs)
    slack = rhs - lhs
    if kind == "=":
        tol = EQUALITY_TOL
        satisfied = abs(slack) <= tol
    else:
        tol = INEQUALITY_TOL
        satisfied = slack >= -tol
    return RelationReport(rid, lhs, rhs, kind, slack, satisfied, tol)


def subentropy_bound_table(
    rho: DensityOperator, log_base: float = 2.0
) -> tuple[float, list[tuple[RelationId, float]]]:
    """Exact subentropy plus every applicable upper bound on it.

    Returns (q_exact, [(relation id, bound value), ...]); the prime-only
    MUB-average bound is omitted for non-prime d.
    """
    d = rho.dim
    p = quantum_purity(rho)
    lb = math.log(log_base)
    q = subentropy(np.clip(rho.spectrum, 0.0, None), log_base)
    table = [
        (RelationId.Q_JRW, (math.log(d) - mub_constant(d, math.e)) / lb),
        (RelationId.Q_DDJ, -math.log(float(rho.spectrum[-1])) / lb),
    ]
    if is_prime(d):
        table.append((RelationId.Q_UPPER_MUB, _qupper_rhs_nats(d, p) / lb))
    table.append((RelationId.Q_HT, _ht_rhs_nats(d, p) / lb))
    return q, table


def applicable_relations(
    d: int, *, has_basis: bool, has_mubs: bool
) -> list[RelationId]:
    """Relation ids evaluable for a d-dimensional state with the given contexts."""
    out = []
    for rid in RelationId:
        if rid in QUBIT_ONLY and d != 2:
            continue
        if rid in MIN_D3 and d < 3:
            continue
        if rid is RelationId.Q_UPPER_MUB and not is_prime(d):
            continue
        if rid in NEEDS_BASIS and not has_basis:
            continue
        if rid in NEEDS_MUBSET and not has_mubs:
            continue
        out.append(rid)
    return out
