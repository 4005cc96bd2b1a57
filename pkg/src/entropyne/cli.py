"""Command-line front end.

Subcommands:
    qubit-grid      distance over a (theta, T) grid for a qubit
    amplifier-grid  distance over a (T, nbar) grid for the parametric amplifier
    gaussian-z      closed-form partition function of a quadratic Hamiltonian
    tsallis         deformed relative entropy / series report for two matrix files
    verify          run the oracle verification families

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 numeric
domain error.  Output is deterministic for fixed inputs, seed and any
thread count (cells are assembled by index, never by completion order).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__, _kernels, fock, gaussian, verify
from ._backend import backend_name
from .amplifier import AmplifierConfig, amplifier_delta_surface
from .errors import DomainError, EntropyneError
from .grids import DeltaGrid, fmt, parse_grid_spec  # noqa: F401 (DeltaGrid re-exported for callers)
from .qubit import BlochHamiltonian, qubit_delta_grid

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def _default_threads() -> int:
    return int(os.environ.get("ENTROPYNE_THREADS", "1"))


def _parallel_rows(compute_block, n_rows: int, threads: int) -> np.ndarray:
    """Evaluate row blocks concurrently, assembling by block index."""
    if threads <= 1 or n_rows < 2:
        return compute_block(0, n_rows)
    bounds = np.linspace(0, n_rows, min(threads, n_rows) + 1).astype(int)
    blocks = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda ab: compute_block(*ab), blocks))
    return np.vstack(parts)


def _write_output(grid: DeltaGrid, args) -> None:
    text = grid.to_csv_text() if args.format == "csv" else grid.to_json_text()
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)


def _grid_common_metadata(args, extra: dict) -> dict:
    meta = {
        "tool_version": __version__,
        "backend": backend_name(),
        "seed": args.seed,
        "subcommand": args.subcommand,
    }
    meta.update(extra)
    return meta


def cmd_qubit_grid(args) -> int:
    theta_spec = parse_grid_spec(args.theta)
    temp_spec = parse_grid_spec(args.temp)
    temps = temp_spec.values()
    if np.any(temps == 0.0) or (temps.min() < 0.0 < temps.max()):
        raise UsageError("temperature range must be sign-homogeneous and exclude 0")
    ham = BlochHamiltonian(h0=args.h0, h=np.array([0.0, 0.0, args.h_norm]))
    grid = qubit_delta_grid(args.p_norm, ham, theta_spec, temp_spec)
    if args.threads > 1:
        thetas = grid.axis1_values

        def block(lo: int, hi: int) -> np.ndarray:
            return _kernels.qubit_delta_cells(args.p_norm, args.h0, args.h_norm,
                                              thetas[lo:hi], temps)

        grid.cells = _parallel_rows(block, len(thetas), args.threads)
    grid.metadata = _grid_common_metadata(args, {
        "p_norm": fmt(args.p_norm), "h_norm": fmt(args.h_norm),
        "h0": fmt(args.h0),
        "theta": str(theta_spec), "temp": str(temp_spec),
    })
    _write_output(grid, args)
    return EXIT_OK


def cmd_amplifier_grid(args) -> int:
    cfg = AmplifierConfig(omega0=args.omega0, omega=args.omega, k=args.k,
                          t=args.t, omega_t=args.omega_t)
    temp_spec = parse_grid_spec(args.temp)
    nbar_spec = parse_grid_spec(args.nbar)
    surface = amplifier_delta_surface(cfg, temp_spec, nbar_spec)
    if args.threads > 1:
        from .amplifier import amplifier_hamiltonian

        h = amplifier_hamiltonian(cfg)
        temps = surface.axis1_values
        nbars = surface.axis2_values

        def block(lo: int, hi: int) -> np.ndarray:
            return _kernels.amplifier_delta_cells(
                temps[lo:hi], nbars, h.omega0, h.omega1, h.omega2.real,
                h.omega2.imag, h.omega3)

        surface.cells = _parallel_rows(block, len(temps), args.threads)
    surface.metadata = _grid_common_metadata(args, {
        "omega0": fmt(args.omega0), "omega": fmt(args.omega), "k": fmt(args.k),
        "t": fmt(args.t), "omega_t": fmt(args.omega_t),
        "temp": str(temp_spec), "nbar": str(nbar_spec),
    })
    _write_output(surface, args)
    return EXIT_OK


def cmd_gaussian_z(args) -> int:
    h = gaussian.QuadraticHamiltonian(
        omega0=args.omega0, omega1=args.omega1,
        omega2=complex(args.omega2_re, args.omega2_im), omega3=args.omega3,
    )
    log_z = gaussian.log_partition_function(h, args.beta)
    print(f"Z={fmt(math.exp(log_z))}")
    print(f"lnZ={fmt(log_z)}")
    if args.oracle:
        brute = fock.stable_partition(h, args.beta, n_cap=args.oracle)
        rel = abs(math.exp(log_z) - brute) / brute
        print(f"oracle_Z={fmt(brute)}")
        print(f"oracle_rel_diff={fmt(rel)}")
    return EXIT_OK


def _read_matrix(path: str) -> np.ndarray:
    with open(path) as fh:
        tokens = fh.read().split("\n")
    dim = int(tokens[0].strip())
    rows = []
    for line in tokens[1:]:
        if line.strip():
            rows.append([complex(tok) for tok in line.split()])
    m = np.array(rows, dtype=complex)
    if m.shape != (dim, dim):
        raise UsageError(f"{path}: expected {dim}x{dim} entries, got {m.shape}")
    return m


def cmd_tsallis(args) -> int:
    from . import entropy

    rho = _read_matrix(args.rho_file)
    sigma = _read_matrix(args.sigma_file)
    if args.q is not None:
        value = entropy.tsallis_relative_entropy(rho, sigma, args.q)
        print(f"S_q={fmt(value) if math.isfinite(value) else 'inf'}")
        if not math.isfinite(value):
            print("# support(rho) is not contained in support(sigma)")
        return EXIT_OK

    series = entropy.tsallis_series(rho, sigma)
    print(f"order0={fmt(series.order0)}")
    print(f"order1={fmt(series.order1)}")
    print(f"order2={fmt(series.order2)}")
    deltas = [float(tok) for tok in args.delta_series.split(",")]
    for d in deltas:
        direct = entropy.tsallis_relative_entropy(rho, sigma, 1.0 + d)
        print(f"delta={fmt(d)} S={fmt(direct)} series={fmt(series.evaluate(d))}")
    if len(deltas) >= 2:
        resid = [abs(entropy.tsallis_relative_entropy(rho, sigma, 1.0 + d)
                     - series.evaluate(d)) for d in deltas]
        slope, _ = np.polyfit(np.log(deltas), np.log(resid), 1)
        print(f"residual_slope={fmt(float(slope))}")
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_verification(seed=args.seed, quick=args.quick)
    failed = False
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"family={res.name} status={status} {res.measured}")
        failed |= not res.passed
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entropyne",
        description="Thermodynamic distance of quantum states from thermal equilibrium",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--output", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--threads", type=int, default=_default_threads())
        p.add_argument("--seed", type=int, default=0,
                       help="echoed into metadata; grids are deterministic")

    p = sub.add_parser("qubit-grid", help="distance over a (theta, T) qubit grid")
    p.add_argument("--p-norm", type=float, required=True)
    p.add_argument("--h-norm", type=float, required=True)
    p.add_argument("--h0", type=float, default=0.0)
    p.add_argument("--theta", required=True, help="start:stop:count (inclusive)")
    p.add_argument("--temp", required=True, help="start:stop:count (inclusive)")
    add_common(p)
    p.set_defaults(func=cmd_qubit_grid)

    p = sub.add_parser("amplifier-grid",
                       help="distance over a (T, nbar) amplifier grid")
    p.add_argument("--omega0", type=float, default=1.0)
    p.add_argument("--omega", type=float, default=3.0)
    p.add_argument("--k", type=float, default=0.1)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--omega-t", type=float, default=1.0)
    p.add_argument("--temp", default="0.2:10:100", help="start:stop:count, T > 0")
    p.add_argument("--nbar", default="0.2:10:100", help="start:stop:count")
    add_common(p)
    p.set_defaults(func=cmd_amplifier_grid)

    p = sub.add_parser("gaussian-z", help="closed-form quadratic partition function")
    p.add_argument("--omega0", type=float, default=1.0)
    p.add_argument("--omega1", type=float, required=True)
    p.add_argument("--omega2-re", type=float, default=0.0)
    p.add_argument("--omega2-im", type=float, default=0.0)
    p.add_argument("--omega3", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--oracle", type=int, default=0,
                   help="cross-check against the truncated trace up to this basis size")
    p.set_defaults(func=cmd_gaussian_z)

    p = sub.add_parser("tsallis", help="deformed relative entropy of two matrix files")
    p.add_argument("--rho-file", required=True)
    p.add_argument("--sigma-file", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--q", type=float, default=None)
    group.add_argument("--delta-series", nargs="?", default=None,
                       const="0.1,0.031622776601683794,0.01,0.0031622776601683794",
                       help="comma-separated delta list for the series report")
    p.set_defaults(func=cmd_tsallis)

    p = sub.add_parser("verify", help="run oracle verification families")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--quick", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, EntropyneError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
