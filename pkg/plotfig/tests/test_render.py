from pathlib import Path

import numpy as np
import pytest

from plotfig import (
    EXPECTED_HEADER,
    MalformedCsv,
    RowInvariantViolation,
    load_rows,
    main,
    render_figure,
    validate_rows,
)


def _tamper_bound_below_q(csv_path: str, tmp_path: Path) -> str:
    """Copy the CSV with one interior bound pushed below the exact value."""
    lines = Path(csv_path).read_text().strip().split("\n")
    fields = lines[len(lines) // 2].split(",")
    fields[2] = str(float(fields[1]) - 0.05)  # bound_qupper below Q_exact
    lines[len(lines) // 2] = ",".join(fields)
    out = tmp_path / "tampered.csv"
    out.write_text("\n".join(lines) + "\n")
    return str(out)


def test_render_d2_produces_image_with_five_curves(csv_d2, tmp_path):
    out = tmp_path / "d2.png"
    assert main([csv_d2, str(out)]) == 0
    assert out.exists() and out.stat().st_size > 0
    fig = render_figure(load_rows(csv_d2))
    assert len(fig.axes[0].lines) == 5


def test_render_d11_svg(csv_d11, tmp_path):
    out = tmp_path / "d11.svg"
    assert main([csv_d11, str(out), "--title", "bounds, d=11"]) == 0
    text = out.read_text()
    assert text.lstrip().startswith("<?xml")
    assert "bounds, d=11" in text


def test_d2_mub_and_purity_bounds_overlap(csv_d2):
    rows = load_rows(csv_d2)
    dev = max(abs(r.bound_qupper - r.bound_ht) for r in rows)
    assert dev <= 1e-9


def test_d11_exact_curve_is_lowest_everywhere(csv_d11):
    rows = load_rows(csv_d11)
    validate_rows(rows)
    for r in rows:
        assert r.q_exact <= min(r.bound_qupper, r.bound_ht, r.bound_jrw, r.bound_ddj) + 1e-9


def test_tampered_bound_fails_with_exit_1(csv_d11, tmp_path):
    bad = _tamper_bound_below_q(csv_d11, tmp_path)
    out = tmp_path / "bad.png"
    assert main([bad, str(out)]) == 1
    assert not out.exists()


def test_decreasing_epsilon_fails_with_exit_1(csv_d2, tmp_path):
    lines = Path(csv_d2).read_text().strip().split("\n")
    lines[1], lines[2] = lines[2], lines[1]
    bad = tmp_path / "decreasing.csv"
    bad.write_text("\n".join(lines) + "\n")
    assert main([str(bad), str(tmp_path / "x.png")]) == 1


def test_empty_body_fails_with_exit_2(tmp_path):
    bad = tmp_path / "empty.csv"
    bad.write_text(",".join(EXPECTED_HEADER) + "\n")
    assert main([str(bad), str(tmp_path / "x.png")]) == 2


def test_wrong_header_fails_with_exit_2(tmp_path):
    bad = tmp_path / "header.csv"
    bad.write_text("a,b,c,d,e,f\n0,0,0,0,0,0\n")
    assert main([str(bad), str(tmp_path / "x.png")]) == 2


def test_non_numeric_field_fails_with_exit_2(csv_d2, tmp_path):
    lines = Path(csv_d2).read_text().strip().split("\n")
    lines[1] = lines[1].replace(lines[1].split(",")[1], "oops", 1)
    bad = tmp_path / "nonnum.csv"
    bad.write_text("\n".join(lines) + "\n")
    assert main([str(bad), str(tmp_path / "x.png")]) == 2


def test_missing_file_fails_with_exit_2(tmp_path):
    assert main([str(tmp_path / "nope.csv"), str(tmp_path / "x.png")]) == 2


def test_loader_errors_are_typed(tmp_path):
    with pytest.raises(MalformedCsv):
        load_rows(str(tmp_path / "missing.csv"))


def test_validate_raises_on_bound_violation(csv_d2, tmp_path):
    bad = _tamper_bound_below_q(csv_d2, tmp_path)
    with pytest.raises(RowInvariantViolation):
        validate_rows(load_rows(bad))


def test_curve_data_is_byte_stable(csv_d11):
    rows = load_rows(csv_d11)
    fig1 = render_figure(rows)
    fig2 = render_figure(rows)
    for a, b in zip(fig1.axes[0].lines, fig2.axes[0].lines):
        assert np.array_equal(a.get_xdata(), b.get_xdata())
        assert np.array_equal(a.get_ydata(), b.get_ydata())


def test_axis_labels_carry_units(csv_d2):
    fig = render_figure(load_rows(csv_d2), log_base=2.0)
    assert "bits" in fig.axes[0].get_ylabel()
    assert fig.axes[0].get_xlabel() != ""


def test_console_script_end_to_end(csv_d2, csv_d11, tmp_path):
    import shutil
    import subprocess
    import sys

    exe = shutil.which("render")
    if exe is None:
        pytest.skip("render entry point not on PATH")
    for name, csv_path in (("d2", csv_d2), ("d11", csv_d11)):
        out = tmp_path / f"{name}.png"
        proc = subprocess.run([exe, csv_path, str(out)], capture_output=True, timeout=120)
        assert proc.returncode == 0
        assert out.stat().st_size > 0
    bad = _tamper_bound_below_q(csv_d11, tmp_path)
    proc = subprocess.run(
        [exe, bad, str(tmp_path / "bad.png")], capture_output=True, timeout=120
    )
    assert proc.returncode == 1
