import subprocess
import sys

import pytest


def _fig1_csv(tmp_path_factory, d: int) -> str:
    """Produce a fig1 CSV through the generator CLI (the only upstream interface)."""
    out = tmp_path_factory.mktemp("csv") / f"fig1_d{d}.csv"
    cmd = [
        sys.executable, "-m", "qcoherence.cli", "fig1",
        "--d", str(d), "--points", "41", "--out", str(out),
    ]
    proc = subprocess.run(cmd, capture_output=True, text=True, timeout=300)
    if proc.returncode != 0:
        pytest.fail(f"fig1 generator failed: {proc.stderr}")
    return str(out)


@pytest.fixture(scope="session")
def csv_d2(tmp_path_factory):
    return _fig1_csv(tmp_path_factory, 2)


@pytest.fixture(scope="session")
def csv_d11(tmp_path_factory):
    return _fig1_csv(tmp_path_factory, 11)
