"""Command-line behavior: formats, round-trips, exit codes, determinism."""

import json
import math
import os
import subprocess
import sys

import numpy as np
import pytest

from entropyne import grid_from_json_dict
from entropyne.cli import main

QUBIT_ARGS = ["qubit-grid", "--p-norm", "0.5", "--h-norm", "3.7416573867739413",
              "--theta", "0:3.14159:9", "--temp", "0.5:5:7"]


def run_cli(args, **kwargs):
    return subprocess.run([sys.executable, "-m", "entropyne.cli", *args],
                          capture_output=True, **kwargs)


def write_matrix(path, m):
    with open(path, "w") as fh:
        fh.write(f"{m.shape[0]}\n")
        for row in m:
            fh.write(" ".join(f"{z.real:.17g}{z.imag:+.17g}j" for z in row) + "\n")


def test_qubit_grid_csv_format(tmp_path, capsys):
    out = tmp_path / "grid.csv"
    assert main(QUBIT_ARGS + ["--output", str(out)]) == 0
    text = out.read_text()
    assert text.endswith("\n")
    lines = text.splitlines()
    meta = [ln for ln in lines if ln.startswith("# ")]
    assert any(ln.startswith("# p_norm=") for ln in meta)
    assert any(ln.startswith("# tool_version=") for ln in meta)
    header_idx = len(meta)
    assert lines[header_idx] == "theta,T,delta"
    assert len(lines) == header_idx + 1 + 9 * 7
    first = lines[header_idx + 1].split(",")
    assert float(first[2]) >= 0.0  # parses with '.' decimals, no locale formats


def test_json_round_trip(tmp_path):
    out = tmp_path / "grid.json"
    assert main(QUBIT_ARGS + ["--format", "json", "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    grid = grid_from_json_dict(data)
    assert grid.cells.shape == (9, 7)
    assert json.loads(json.dumps(data)) == data
    assert data["metadata"]["subcommand"] == "qubit-grid"


def test_amplifier_grid_markers_and_nulls(tmp_path):
    out = tmp_path / "amp.json"
    assert main(["amplifier-grid", "--temp", "0.5:5:6", "--nbar", "0.5:4:5",
                 "--format", "json", "--output", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["marker_name"] == "argmin"
    markers = np.array(data["markers"]).reshape(6, 5)
    assert (markers.sum(axis=0) == 1).all()


def test_gaussian_z_output(capsys):
    assert main(["gaussian-z", "--omega1", "0.5", "--omega3", "0.5",
                 "--beta", "1", "--oracle", "300"]) == 0
    out = capsys.readouterr().out
    z_line = [ln for ln in out.splitlines() if ln.startswith("Z=")][0]
    exact = math.exp(-0.5) / (1.0 - math.exp(-1.0))
    assert abs(float(z_line.split("=")[1]) - exact) <= 1e-12
    rel = [ln for ln in out.splitlines() if ln.startswith("oracle_rel_diff=")][0]
    assert float(rel.split("=")[1]) <= 1e-8


def test_tsallis_q_value(tmp_path, capsys):
    rho = tmp_path / "rho.txt"
    sigma = tmp_path / "sigma.txt"
    write_matrix(rho, np.diag([0.7, 0.3]).astype(complex))
    write_matrix(sigma, np.diag([0.5, 0.5]).astype(complex))
    assert main(["tsallis", "--rho-file", str(rho), "--sigma-file", str(sigma),
                 "--q", "2"]) == 0
    out = capsys.readouterr().out
    assert abs(float(out.splitlines()[0].split("=")[1]) - 0.16) <= 1e-12


def test_tsallis_support_mismatch_reports_inf(tmp_path, capsys):
    rho = tmp_path / "rho.txt"
    sigma = tmp_path / "sigma.txt"
    write_matrix(rho, np.diag([1.0, 0.0]).astype(complex))
    write_matrix(sigma, np.diag([0.0, 1.0]).astype(complex))
    assert main(["tsallis", "--rho-file", str(rho), "--sigma-file", str(sigma),
                 "--q", "2"]) == 0
    out = capsys.readouterr().out
    assert "S_q=inf" in out
    assert "support" in out


def test_tsallis_series_slope(tmp_path, capsys):
    from entropyne import random_density_matrix

    rho = tmp_path / "rho.txt"
    sigma = tmp_path / "sigma.txt"
    write_matrix(rho, random_density_matrix(3, 7))
    write_matrix(sigma, random_density_matrix(3, 8))
    assert main(["tsallis", "--rho-file", str(rho), "--sigma-file", str(sigma),
                 "--delta-series"]) == 0
    out = capsys.readouterr().out
    slope = [ln for ln in out.splitlines() if ln.startswith("residual_slope=")][0]
    assert abs(float(slope.split("=")[1]) - 3.0) <= 0.3


def test_usage_errors_exit_2():
    assert main(["qubit-grid", "--p-norm", "0.5"]) == 2  # missing required flags
    assert main(QUBIT_ARGS[:-2] + ["--temp", "-1:1:5"]) == 2  # mixed-sign T
    assert main(["tsallis", "--rho-file", "/nonexistent", "--sigma-file",
                 "/nonexistent", "--q", "2"]) == 2


def test_domain_errors_exit_3():
    # omega1*omega3 < Re(omega2)^2: no convergent partition function.
    assert main(["gaussian-z", "--omega1", "0.5", "--omega3", "0.5",
                 "--omega2-re", "0.6", "--beta", "1"]) == 3
    assert main(["gaussian-z", "--omega1", "0.5", "--omega3", "0.5",
                 "--beta", "-1"]) == 3


def test_verify_quick_passes(capsys):
    assert main(["verify", "--quick"]) == 0
    out = capsys.readouterr().out
    lines = [ln for ln in out.splitlines() if ln.startswith("family=")]
    assert len(lines) >= 10
    assert all("status=PASS" in ln for ln in lines)


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_thread_count_determinism(fmt, tmp_path):
    outputs = []
    for threads in ("1", "8"):
        res = run_cli(QUBIT_ARGS + ["--format", fmt, "--threads", threads],
                      check=True)
        outputs.append(res.stdout)
    assert outputs[0] == outputs[1]


def test_threads_env_fallback():
    env = dict(os.environ, ENTROPYNE_THREADS="4")
    res = run_cli(QUBIT_ARGS, env=env, check=True)
    base = run_cli(QUBIT_ARGS, check=True)
    assert res.stdout == base.stdout
