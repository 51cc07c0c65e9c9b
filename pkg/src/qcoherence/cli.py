"""Command-line interface: verify, fig1, coherence, bounds, average.

Exit codes: 0 success, 1 check/IO failure, 2 usage error. All output is
deterministic given the seed; JSON objects are flat with snake_case keys.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .bounds import (
    NEEDS_BASIS,
    NEEDS_MUBSET,
    applicable_relations,
    evaluate_relation,
    subentropy_bound_table,
)
from .errors import CoherenceError
from .haar_average import closed_form_targets, mean_coherence, rms_coherence
from .linalg import Basis, RngStream, computational_basis, sample_haar_unitary
from .measures import (
    coherence_radius_l1,
    coherence_radius_l2,
    coherence_report,
    state_subentropy,
)
from .mub import build_complete_mub, is_prime
from .states import (
    DensityOperator,
    epsilon_state,
    from_bloch,
    quantum_purity,
    sample_random_density,
    von_neumann_entropy,
)
from .verification import DEFAULT_DIMS, SCOPES, run_suite

LOG_BASES = {"2": 2.0, "e": math.e, "10": 10.0}


@dataclass(frozen=True)
class StateSpec:
    """Parsed textual state description `kind:args`."""

    kind: str
    d: int = 0
    epsilon: float | None = None
    bloch: tuple[float, float, float] | None = None
    seed: int | None = None
    basis_index: int | None = None

    @classmethod
    def parse(cls, text: str) -> "StateSpec":
        kind, _, rest = text.partition(":")
        args = [a for a in rest.split(",") if a != ""] if rest else []
        try:
            if kind == "epsilon":
                if len(args) not in (2, 3):
                    raise ValueError("epsilon:<d>,<eps>[,<basis_index>]")
                idx = int(args[2]) if len(args) == 3 else None
                return cls("epsilon", d=int(args[0]), epsilon=float(args[1]), basis_index=idx)
            if kind == "bloch":
                if len(args) != 3:
                    raise ValueError("bloch:<r1>,<r2>,<r3>")
                return cls("bloch", d=2, bloch=tuple(float(a) for a in args))
            if kind == "maximally-mixed":
                if len(args) != 1:
                    raise ValueError("maximally-mixed:<d>")
                return cls("maximally-mixed", d=int(args[0]))
            if kind == "random":
                if len(args) not in (1, 2):
                    raise ValueError("random:<d>[,<seed>]")
                seed = int(args[1]) if len(args) == 2 else None
                return cls("random", d=int(args[0]), seed=seed)
        except ValueError as exc:
            raise ValueError(f"malformed state spec {text!r}: {exc}") from exc
        raise ValueError(
            f"unknown state kind {kind!r}; expected epsilon, bloch, maximally-mixed or random"
        )

    def realize(self, default_seed: int) -> DensityOperator:
        if self.kind == "epsilon":
            idx = self.basis_index or 0
            if idx == 0:
                b = np.zeros(self.d, dtype=complex)
                b[0] = 1.0
            else:
                mubs = build_complete_mub(self.d)
                if not 0 <= idx <= self.d:
                    raise ValueError(f"basis_index must lie in [0, {self.d}]")
                b = mubs.bases[idx].ket(0)
            return epsilon_state(self.d, self.epsilon, b)
        if self.kind == "bloch":
            return from_bloch(np.array(self.bloch))
        if self.kind == "maximally-mixed":
            if self.d < 1:
                raise ValueError("dimension must be positive")
            return DensityOperator.from_matrix(np.eye(self.d) / self.d)
        seed = self.seed if self.seed is not None else default_seed
        return sample_random_density(self.d, self.d, RngStream(seed, 0))


def _parse_basis(text: str, d: int, seed: int) -> Basis:
    if text == "computational":
        return computational_basis(d)
    if text == "random":
        return Basis(sample_haar_unitary(d, RngStream(seed, 1)), label="haar")
    if text.startswith("mub:"):
        j = int(text[4:])
        mubs = build_complete_mub(d)
        if not 0 <= j <= d:
            raise ValueError(f"MUB index must lie in [0, {d}]")
        return mubs.bases[j]
    raise ValueError(f"unknown basis spec {text!r}; expected computational, mub:<j> or random")


def _fmt12(x: float) -> str:
    if x == 0.0:
        x = 0.0  # canonicalize -0.0
    return f"{x:.12g}"


def fig1_rows(d: int, points: int, log_base: float) -> list[tuple[float, ...]]:
    """(epsilon, exact subentropy, four upper bounds) on a uniform grid."""
    e0 = np.zeros(d, dtype=complex)
    e0[0] = 1.0
    rows = []
    for eps in np.linspace(0.0, 1.0 - 1.0 / d, points):
        rho = epsilon_state(d, float(eps), e0)
        q, table = subentropy_bound_table(rho, log_base)
        by_id = {rid.value: val for rid, val in table}
        rows.append(
            (
                float(eps),
                q,
                by_id["Q_UPPER_MUB"],
                by_id["Q_HT"],
                by_id["Q_JRW"],
                by_id["Q_DDJ"],
            )
        )
    return rows


FIG1_HEADER = "epsilon,Q_exact,bound_qupper,bound_ht,bound_jrw,bound_ddj"


def fig1_csv(d: int, points: int, log_base: float) -> str:
    lines = [FIG1_HEADER]
    for row in fig1_rows(d, points, log_base):
        lines.append(",".join(_fmt12(x) for x in row))
    return "\n".join(lines) + "\n"


def _write_out(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _emit_json(obj, out: str) -> None:
    _write_out(json.dumps(obj, indent=2) + "\n", out)


def cmd_verify(args) -> int:
    dims = (args.d,) if args.d else DEFAULT_DIMS
    results = run_suite(args.scope, dims, args.seed, args.n)
    lines = [f"{r.status} {r.name} {r.detail}" for r in results]
    failed = sum(r.failed for r in results)
    lines.append(
        f"{'FAILED' if failed else 'OK'} checks={len(results)} failures={failed} "
        f"seed={args.seed}"
    )
    _write_out("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def cmd_fig1(args) -> int:
    if args.points < 2:
        raise ValueError("points must be >= 2")
    if not is_prime(args.d):
        raise ValueError(f"d must be prime, got {args.d}")
    try:
        _write_out(fig1_csv(args.d, args.points, args.log_base), args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_coherence(args) -> int:
    spec = StateSpec.parse(args.state)
    rho = spec.realize(args.seed)
    basis = _parse_basis(args.basis, rho.dim, args.seed)
    rep = coherence_report(rho, basis, args.log_base)
    payload = {
        "dim": rho.dim,
        "log_base": args.log_base,
        "c1": rep.c1,
        "c2": rep.c2,
        "c_rel": rep.c_rel,
        "classical_purity": rep.classical_purity,
        "basis_entropy": rep.basis_entropy,
        "purity": quantum_purity(rho),
        "von_neumann_entropy": von_neumann_entropy(rho, args.log_base),
        "subentropy": state_subentropy(rho, args.log_base),
        "radius_l1": coherence_radius_l1(rho),
        "radius_l2": coherence_radius_l2(rho),
    }
    _emit_json(payload, args.out)
    return 0


def cmd_bounds(args) -> int:
    spec = StateSpec.parse(args.state)
    rho = spec.realize(args.seed)
    d = rho.dim
    basis = computational_basis(d)
    mubs = build_complete_mub(d) if is_prime(d) else None
    reports = []
    for rid in applicable_relations(d, has_basis=True, has_mubs=mubs is not None):
        ctx = basis if rid in NEEDS_BASIS else (mubs if rid in NEEDS_MUBSET else None)
        reports.append(evaluate_relation(rid, rho, ctx, args.log_base).to_dict())
    _emit_json(reports, args.out)
    return 0


def cmd_average(args) -> int:
    spec = StateSpec.parse(args.state)
    rho = spec.realize(args.seed)
    mean = mean_coherence(args.measure, rho, args.n, args.seed, args.log_base)
    rms = rms_coherence(args.measure, rho, args.n, args.seed, args.log_base)
    targets = closed_form_targets(rho, args.log_base)
    z_mean = None
    z_rms = None
    if args.measure == "relent" and mean.std_error > 0:
        z_mean = (mean.mean - targets["mean_crel"]) / mean.std_error
    if args.measure == "l2" and rms.std_error > 0:
        z_rms = (rms.mean - targets["rms_c2"]) / rms.std_error
    payload = {
        "measure": args.measure,
        "dim": rho.dim,
        "log_base": args.log_base,
        "n_samples": mean.n_samples,
        "master_seed": mean.master_seed,
        "mean": mean.mean,
        "mean_std_error": mean.std_error,
        "rms": rms.mean,
        "rms_std_error": rms.std_error,
        "target_rms_c1_upper": targets["rms_c1_upper"],
        "target_rms_c2": targets["rms_c2"],
        "target_mean_crel": targets["mean_crel"],
        "z_mean": z_mean,
        "z_rms": z_rms,
    }
    _emit_json(payload, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcoherence",
        description="Coherence measures, MUB relations, subentropy bounds and Haar averages.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=42, help="master random seed")
        p.add_argument("--n", type=int, default=20000, help="Monte Carlo sample count")
        p.add_argument(
            "--log-base",
            dest="log_base",
            choices=sorted(LOG_BASES),
            default="2",
            help="log base for entropic quantities",
        )
        p.add_argument("--out", default="-", help="output path (default stdout)")

    p = sub.add_parser("verify", help="run the named check suites")
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.add_argument("--d", type=int, default=None, help="restrict to one dimension")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("fig1", help="CSV of exact subentropy and its bounds vs epsilon")
    p.add_argument("--d", type=int, required=True, help="prime dimension")
    p.add_argument("--points", type=int, default=101, help="grid points on [0, 1-1/d]")
    common(p)
    p.set_defaults(fn=cmd_fig1)

    p = sub.add_parser("coherence", help="coherence report for a state and basis")
    p.add_argument("--state", required=True, help="epsilon:d,eps[,j] | bloch:x,y,z | maximally-mixed:d | random:d[,seed]")
    p.add_argument("--basis", default="computational", help="computational | mub:<j> | random")
    common(p)
    p.set_defaults(fn=cmd_coherence)

    p = sub.add_parser("bounds", help="evaluate every applicable relation on a state")
    p.add_argument("--state", required=True)
    common(p)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("average", help="Monte Carlo basis averages of a coherence measure")
    p.add_argument("--state", required=True)
    p.add_argument("--measure", choices=("l1", "l2", "relent"), default="relent")
    common(p)
    p.set_defaults(fn=cmd_average)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "log_base"):
        args.log_base = LOG_BASES[args.log_base]
    try:
        return args.fn(args)
    except (CoherenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
