"""Render subentropy-vs-epsilon charts from a fig1 CSV.

The CSV schema is `epsilon,Q_exact,bound_qupper,bound_ht,bound_jrw,bound_ddj`.
This tool never recomputes any physics: it validates the rows and plots the
columns. Exit codes: 0 rendered, 1 row invariant violated, 2 malformed input.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

EXPECTED_HEADER = ["epsilon", "Q_exact", "bound_qupper", "bound_ht", "bound_jrw", "bound_ddj"]
BOUND_MARGIN = 1e-9

UNITS = {2.0: "bits", math.e: "nats", 10.0: "dits"}
LOG_BASES = {"2": 2.0, "e": math.e, "10": 10.0}


class MalformedCsv(ValueError):
    """Header, shape, or number parsing problem (exit 2)."""


class RowInvariantViolation(ValueError):
    """A bound column dips below the exact value, or epsilon decreases (exit 1)."""


@dataclass(frozen=True)
class Fig1Row:
    epsilon: float
    q_exact: float
    bound_qupper: float
    bound_ht: float
    bound_jrw: float
    bound_ddj: float


def load_rows(path: str) -> list[Fig1Row]:
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise MalformedCsv("empty file") from None
            if header != EXPECTED_HEADER:
                raise MalformedCsv(f"unexpected header {header!r}")
            rows = []
            for lineno, record in enumerate(reader, start=2):
                if len(record) != len(EXPECTED_HEADER):
                    raise MalformedCsv(f"line {lineno}: expected 6 fields, got {len(record)}")
                try:
                    rows.append(Fig1Row(*(float(x) for x in record)))
                except ValueError as exc:
                    raise MalformedCsv(f"line {lineno}: {exc}") from None
    except OSError as exc:
        raise MalformedCsv(str(exc)) from None
    if not rows:
        raise MalformedCsv("no data rows")
    return rows


def validate_rows(rows: list[Fig1Row]) -> None:
    previous = -math.inf
    for i, row in enumerate(rows, start=2):
        if row.epsilon < previous:
            raise RowInvariantViolation(f"line {i}: epsilon decreases")
        previous = row.epsilon
        for name in ("bound_qupper", "bound_ht", "bound_jrw", "bound_ddj"):
            if getattr(row, name) < row.q_exact - BOUND_MARGIN:
                raise RowInvariantViolation(
                    f"line {i}: {name}={getattr(row, name)!r} below Q_exact={row.q_exact!r}"
                )


def render_figure(rows: list[Fig1Row], title: str = "", log_base: float = 2.0):
    """Figure with the exact curve and its four upper bounds, styled apart."""
    eps = [r.epsilon for r in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(eps, [r.q_exact for r in rows], color="black", linestyle="-", linewidth=1.8,
            label="exact subentropy")
    ax.plot(eps, [r.bound_qupper for r in rows], color="green", linestyle="-.",
            label="MUB-average bound")
    ax.plot(eps, [r.bound_ht for r in rows], color="blue", linestyle="--",
            label="purity-entropy bound")
    ax.plot(eps, [r.bound_jrw for r in rows], color="red", linestyle="-",
            label="log(d) - C_d")
    ax.plot(eps, [r.bound_ddj for r in rows], color="purple", linestyle=":",
            label="-log(max eigenvalue)")
    unit = UNITS.get(log_base, f"log base {log_base:g}")
    ax.set_xlabel(r"$\epsilon$")
    ax.set_ylabel(f"entropy [{unit}]")
    if title:
        ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    return fig


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render",
        description="Plot a fig1 CSV (exact subentropy plus four upper bounds).",
    )
    parser.add_argument("csv_path", help="input CSV")
    parser.add_argument("out_path", help="output image (.png or .svg)")
    parser.add_argument("--title", default="", help="figure title")
    parser.add_argument(
        "--log-base",
        dest="log_base",
        choices=sorted(LOG_BASES),
        default="2",
        help="entropy unit used in the axis label (must match the CSV's base)",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rows = load_rows(args.csv_path)
    except MalformedCsv as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        validate_rows(rows)
    except RowInvariantViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    fig = render_figure(rows, title=args.title, log_base=LOG_BASES[args.log_base])
    try:
        fig.savefig(args.out_path)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        plt.close(fig)
    return 0


if __name__ == "__main__":
    sys.exit(main())
