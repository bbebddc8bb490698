"""
Command-line front end.

    impregnate run   --config FILE [--key value ...] [--dump-grid] [--svg]
    impregnate check --config FILE [--key value ...]

Exit status: 0 balance PASS with all levels converged, 1 balance FAIL,
2 non-convergence, 3 filesystem error, 4 bad configuration.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

import numpy as np

from .balance import BalanceSeries, verify_balance
from .config import KEYS, RunConfig, load_config
from .exceptions import ConfigError, ConvergenceError
from .front import ConstantPcFront
from .solver import ModelParams, RunResult, SolverConfig, run
from .svg import render_svg

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_NONCONVERGED, EXIT_IO, EXIT_CONFIG = 0, 1, 2, 3, 4


def _g(x: float) -> str:
    return f"{x:.17g}"


def fraction_label(frac: float) -> str:
    return f"{frac:g}"


def profile_level(result: RunResult, frac: float) -> int:
    """Time level whose front position is closest to ``frac * rho_e``."""
    faces = result.grid.faces
    return int(np.argmin(np.abs(faces[1:] - frac * faces[-1]))) + 1


def solve(cfg: RunConfig) -> tuple[ConstantPcFront, ModelParams, RunResult]:
    front = ConstantPcFront(cfg.sigma)
    params = ModelParams(cfg.eta, cfg.d, cfg.kplus, cfg.kminus, cfg.u0)
    result = run(front, params, cfg.n, SolverConfig(cfg.tol, cfg.max_iters), cfg.axis_scale)
    return front, params, result


def write_grid_csv(path: Path, result: RunResult) -> None:
    g = result.grid
    lines = ["i,tau,rho_face,rho_mid,volume"]
    for i in range(1, g.n + 1):
        lines.append(f"{i},{_g(g.times[i])},{_g(g.faces[i])},{_g(g.midpoints[i - 1])},{_g(g.volumes[i - 1])}")
    path.write_text("\n".join(lines) + "\n")


def write_balance_csv(path: Path, series: BalanceSeries) -> None:
    lines = ["tau,m1,m2,rel_diff"]
    for row in zip(series.tau, series.m1, series.m2, series.rel_diff):
        lines.append(",".join(_g(v) for v in row))
    path.write_text("\n".join(lines) + "\n")


def write_profiles(directory: Path, result: RunResult, fractions) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for frac in fractions:
        layer = result.layers[profile_level(result, frac) - 1]
        mids = result.grid.midpoints[: layer.level]
        lines = ["rho_mid,u,theta"]
        lines += [f"{_g(r)},{_g(u)},{_g(t)}" for r, u, t in zip(mids, layer.u, layer.theta)]
        path = directory / f"profile_{fraction_label(frac)}.csv"
        path.write_text("\n".join(lines) + "\n")
        written.append(path)
    return written


def _summary(cfg: RunConfig, status: str, extra: dict[str, object]) -> str:
    lines = [f"status = {status}"]
    lines += [f"{key} = {getattr(cfg, key)}" for key in KEYS]
    lines += [f"{key} = {value}" for key, value in extra.items()]
    return "\n".join(lines) + "\n"


def execute(cfg: RunConfig, dump_grid: bool = True, svg: bool = False) -> int:
    """Run one configuration and write its artifacts under ``cfg.output_dir``."""
    out = Path(cfg.output_dir)
    t0 = time.perf_counter()
    try:
        out.mkdir(parents=True, exist_ok=True)
        try:
            front, params, result = solve(cfg)
        except ConvergenceError as exc:
            logger.error("%s", exc)
            (out / "summary.txt").write_text(_summary(cfg, "NONCONVERGED", {
                "failed_level": exc.level,
                "last_residual": _g(exc.residual),
                "wall_time_s": f"{time.perf_counter() - t0:.3f}",
            }))
            return EXIT_NONCONVERGED

        series = verify_balance(result.layers, result.grid, front, params, cfg.balance_threshold)
        if dump_grid:
            write_grid_csv(out / "grid.csv", result)
        write_balance_csv(out / "balance.csv", series)
        write_profiles(out / "profiles", result, cfg.profile_fractions)
        if svg:
            render_svg(out)
        (out / "summary.txt").write_text(_summary(cfg, series.status, {
            "path_length": _g(result.grid.path_length),
            "tau_e": _g(front.tau_e),
            "max_rel_diff": _g(series.max_rel_diff),
            "total_iterations": result.total_iterations,
            "max_iterations_per_level": max(layer.iterations_used for layer in result.layers),
            "wall_time_s": f"{time.perf_counter() - t0:.3f}",
        }))
    except OSError as exc:
        print(f"impregnate: filesystem error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if series.passed else EXIT_FAIL


def _split_overrides(extra: list[str]) -> dict[str, str]:
    overrides: dict[str, str] = {}
    it = iter(extra)
    for token in it:
        if not token.startswith("--"):
            raise ConfigError(f"unexpected argument {token!r}")
        key = token[2:]
        if "=" in key:
            key, value = key.split("=", 1)
        else:
            try:
                value = next(it)
            except StopIteration:
                raise ConfigError(f"missing value for {token}") from None
        overrides[key] = value
    return overrides


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="impregnate",
        description="Solve the pellet impregnation equations on a moving-front grid.",
        epilog=f"Any config key can be overridden with --key value. Keys: {', '.join(KEYS)}",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="solve and write CSV/SVG artifacts", allow_abbrev=False)
    p_run.add_argument("--config", type=Path, default=None, help="key = value config file")
    p_run.add_argument("--dump-grid", action="store_true", help="write grid.csv")
    p_run.add_argument("--svg", action="store_true", help="write balance.svg and profiles.svg")
    p_check = sub.add_parser("check", help="solve and report only the balance test result",
                             allow_abbrev=False)
    p_check.add_argument("--config", type=Path, default=None, help="key = value config file")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    try:
        cfg = load_config(args.config, _split_overrides(extra))
    except ConfigError as exc:
        print(f"impregnate: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"impregnate: cannot read config: {exc}", file=sys.stderr)
        return EXIT_IO

    if args.command == "run":
        status = execute(cfg, dump_grid=args.dump_grid, svg=args.svg)
        print({EXIT_OK: "PASS", EXIT_FAIL: "FAIL", EXIT_NONCONVERGED: "NONCONVERGED"}.get(status, "ERROR"))
        return status

    try:
        front, params, result = solve(cfg)
    except ConvergenceError as exc:
        print(f"NONCONVERGED ({exc})")
        return EXIT_NONCONVERGED
    series = verify_balance(result.layers, result.grid, front, params, cfg.balance_threshold)
    print(f"{series.status} max_rel_diff={series.max_rel_diff:.3e}")
    return EXIT_OK if series.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
