"""Command-line front end.

Subcommands: sieve (build/cache divisor tables), selberg (integral grid to
CSV/JSON), verify (run the verification matrix, JSON records), fit
(exponent fit over a grid, JSON). All output is deterministic: fixed
column order, floats printed with 17 significant digits, records emitted
in config order.

Exit codes: 0 all good, 1 a hard verification invariant failed,
2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import arith_core, asymptotics
from .selberg import CSV_HEADER, MEAN_MODES, METHODS, integral_pair
from .verification import VerifyConfig, run_verification

CACHE_ENV = "SELBERG_LAB_CACHE"
DEFAULT_CACHE = ".selberg-cache"


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    n_list: list[int]
    h_list: list[int] | None
    theta: float | None
    k: int
    mean_mode: str
    method: str
    hmax: int
    grid_m: int
    threads: int
    out_format: str
    out_path: str | None
    cache_dir: Path
    delta: float
    eta: float
    inject: list[float] | None

    def cells(self) -> list[tuple[int, int]]:
        """The (N, H) grid, in config order."""
        out = []
        for N in self.n_list:
            if N < 1:
                raise ConfigError(f"N must be >= 1, got {N}")
            if self.theta is not None:
                hs = [int(N**self.theta)]
            else:
                hs = self.h_list
            for H in hs:
                if not 1 <= H <= N**0.49:
                    raise ConfigError(f"H={H} outside [1, N^0.49] at N={N}")
                out.append((N, H))
        return out


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="selberg-lab",
        description="Selberg-integral laboratory for the three-divisor function",
    )
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("sieve", "sieve and cache divisor tables for each N window"),
        ("selberg", "compute J and J~ on the (N, H) grid"),
        ("verify", "run the verification matrix"),
        ("fit", "fit the modified-integral exponent on the grid"),
    ):
        q = sub.add_parser(name, help=help_)
        q.add_argument("--n", action="append", type=int, help="window size N (repeatable)")
        q.add_argument("--h", action="append", type=int, help="interval length H (repeatable)")
        q.add_argument("--theta", type=float, help="derive H = floor(N^theta), theta in (0, 0.49]")
        q.add_argument("--k", type=int, default=3, help="divisor order (default 3)")
        q.add_argument("--mean", choices=MEAN_MODES, default="residue", help="subtracted mean convention")
        q.add_argument("--method", choices=METHODS, default="sliding", help="integral evaluation method")
        q.add_argument("--hmax", type=int, default=64, help="max shift for correlation checks")
        q.add_argument("--grid", type=int, default=1 << 16, help="grid points for scans/quadrature")
        q.add_argument("--threads", type=int, default=1, help="accepted for compatibility; execution is deterministic")
        q.add_argument("--out", help="output path (default stdout)")
        q.add_argument("--format", choices=("csv", "json"), default=None, help="output format")
        q.add_argument("--cache-dir", help=f"table cache directory (or ${CACHE_ENV})")
        if name == "fit":
            q.add_argument("--delta", type=float, default=0.1, help="admissible band parameter")
            q.add_argument("--eta", type=float, default=0.1, help="minimum growth exponent, H >= N^eta")
            q.add_argument("--inject", action="append", type=float,
                           help="supply J~ directly for each grid cell (synthetic mode)")
    return p


def _config_from_args(args) -> RunConfig:
    if args.theta is not None:
        if args.h:
            raise ConfigError("--theta and --h are mutually exclusive")
        if not 0.0 < args.theta <= 0.49:
            raise ConfigError("theta must lie in (0, 0.49]")
    if args.k < 2:
        raise ConfigError("k must be >= 2")
    if args.threads < 1:
        raise ConfigError("threads must be >= 1")
    cache = args.cache_dir or os.environ.get(CACHE_ENV) or DEFAULT_CACHE
    default_fmt = "csv" if args.command == "selberg" else "json"
    return RunConfig(
        n_list=args.n or [],
        h_list=args.h,
        theta=args.theta,
        k=args.k,
        mean_mode=args.mean,
        method=args.method,
        hmax=args.hmax,
        grid_m=args.grid,
        threads=args.threads,
        out_format=args.format or default_fmt,
        out_path=args.out,
        cache_dir=Path(cache),
        delta=getattr(args, "delta", 0.1),
        eta=getattr(args, "eta", 0.1),
        inject=getattr(args, "inject", None),
    )


def _require_grid(cfg: RunConfig) -> list[tuple[int, int]]:
    if not cfg.n_list:
        raise ConfigError("at least one --n is required")
    if cfg.theta is None and not cfg.h_list:
        raise ConfigError("provide --h or --theta")
    return cfg.cells()


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out_path:
        Path(cfg.out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _cache_path(cfg: RunConfig, N: int, H: int) -> Path:
    return cfg.cache_dir / f"d{cfg.k}_N{N}_H{H}.bin"


def _table_matches(table, N: int, H: int, k: int) -> bool:
    return table.lo == max(N - H + 1, 1) and table.hi == 2 * N + H and table.k == k


def _get_table(cfg: RunConfig, N: int, H: int):
    path = _cache_path(cfg, N, H)
    if path.is_file():
        table = arith_core.load_table(path)
        if _table_matches(table, N, H, cfg.k):
            return table
    return arith_core.sieve_dk(max(N - H + 1, 1), 2 * N + H, cfg.k)


def cmd_sieve(cfg: RunConfig) -> int:
    cells = _require_grid(cfg)
    cfg.cache_dir.mkdir(parents=True, exist_ok=True)
    lines = []
    for N, H in cells:
        path = _cache_path(cfg, N, H)
        status = "cache hit"
        if path.is_file():
            table = arith_core.load_table(path)
            if not _table_matches(table, N, H, cfg.k):
                status = "rewritten"
        else:
            status = "written"
        if status != "cache hit":
            table = arith_core.sieve_dk(max(N - H + 1, 1), 2 * N + H, cfg.k)
            arith_core.save_table(table, path)
        entries = 2 * N + H - max(N - H + 1, 1) + 1
        lines.append(
            f"sieve k={cfg.k} N={N} H={H} entries={entries} path={path} [{status}]"
        )
    _emit(cfg, "".join(line + "\n" for line in lines))
    return 0


def cmd_selberg(cfg: RunConfig) -> int:
    cells = _require_grid(cfg)
    poly = arith_core.residue_polynomial(cfg.k)
    rows = []
    for N, H in cells:
        if H > N // 4:
            raise ConfigError(f"H={H} too large for N={N} (need H <= N/4)")
        table = _get_table(cfg, N, H)
        f = arith_core.balanced_sequence(table, poly, N, H)
        rows.append(integral_pair(f, N, H, poly, cfg.method, cfg.mean_mode))
    if cfg.out_format == "csv":
        text = CSV_HEADER + "\n" + "".join(r.csv_row() + "\n" for r in rows)
    else:
        text = "".join(
            json.dumps(
                {
                    "N": r.N,
                    "H": r.H,
                    "J": r.J,
                    "J_tilde": r.J_tilde,
                    "ratio_J": r.ratio_J,
                    "ratio_J_tilde": r.ratio_J_tilde,
                    "lower_ratio": r.lower_ratio,
                    "method": r.method,
                    "mean_mode": r.mean_mode,
                },
                sort_keys=True,
            )
            + "\n"
            for r in rows
        )
    _emit(cfg, text)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    vcfg = VerifyConfig(
        N=cfg.n_list[0] if cfg.n_list else 10_000,
        h_list=tuple(cfg.h_list) if cfg.h_list else (10, 20),
        hmax=cfg.hmax,
        grid_m=cfg.grid_m,
        k=cfg.k,
    )
    records, failures = run_verification(vcfg)
    text = "".join(json.dumps(r.to_record(), sort_keys=True) + "\n" for r in records)
    _emit(cfg, text)
    return 1 if failures else 0


def cmd_fit(cfg: RunConfig) -> int:
    cells = _require_grid(cfg)
    if cfg.inject is not None:
        if len(cfg.inject) != len(cells):
            raise ConfigError(
                f"--inject count {len(cfg.inject)} does not match {len(cells)} grid cells"
            )
        samples = [(N, H, jt) for (N, H), jt in zip(cells, cfg.inject)]
    else:
        poly = arith_core.residue_polynomial(cfg.k)
        samples = []
        for N, H in cells:
            table = _get_table(cfg, N, H)
            f = arith_core.balanced_sequence(table, poly, N, H)
            rep = integral_pair(f, N, H, poly, cfg.method, cfg.mean_mode)
            samples.append((N, H, rep.J_tilde))
    try:
        fit = asymptotics.fit_exponent(samples, delta=cfg.delta, eta=cfg.eta)
    except ValueError as e:
        raise ConfigError(str(e))
    _emit(cfg, json.dumps(fit.to_record(), sort_keys=True) + "\n")
    return 0


_COMMANDS = {"sieve": cmd_sieve, "selberg": cmd_selberg, "verify": cmd_verify, "fit": cmd_fit}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[args.command](cfg)
    except (ConfigError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
