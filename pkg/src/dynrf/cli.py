"""Command line entry: ``single``, ``sweep-density`` and ``sweep-antennas``.

Exit status is 0 on success, 2 on a configuration error and 3 on an I/O
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import replace

from .config import ConfigError, RunConfig, load_config
from .montecarlo import AggregateRow, derive_trial_seed, run_trial, sweep_antennas, sweep_density

DENSITY_COLUMNS = ("scheme", "lambda", "M", "B", "trials", "infeasible",
                   "mean_E_abs_J", "ci95_E_abs_J", "mean_E_net_J", "ci95_E_net_J")
ANTENNA_COLUMNS = ("scheme", "M", "B_opt", "lambda", "trials", "infeasible",
                   "mean_E_abs_J", "ci95_E_abs_J", "mean_E_net_J", "ci95_E_net_J")
SINGLE_COLUMNS = ("scheme", "M", "B", "lambda", "N", "feasible",
                  "E_abs_J", "E_phase_J", "E_meter_J", "E_net_J")

EXIT_OK, EXIT_CONFIG, EXIT_IO = 0, 2, 3


def fmt(x) -> str:
    """Nine significant digits; blank for missing values."""
    if x is None:
        return ""
    return format(float(x), ".9g")


def fmt_bits(row_scheme: str, B) -> str:
    if B is None:
        return "inf" if row_scheme == "GA_inf" else ""
    return str(B)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def density_csv(rows: list[AggregateRow]) -> str:
    return _csv_text(DENSITY_COLUMNS, [
        (r.scheme, fmt(r.density), r.M, fmt_bits(r.scheme, r.B_used), r.trials, r.infeasible_count,
         fmt(r.mean_E_abs), fmt(r.ci95_E_abs), fmt(r.mean_E_net), fmt(r.ci95_E_net))
        for r in rows
    ])


def antenna_csv(rows: list[AggregateRow]) -> str:
    return _csv_text(ANTENNA_COLUMNS, [
        (r.scheme, r.M, fmt_bits(r.scheme, r.B_used), fmt(r.density), r.trials, r.infeasible_count,
         fmt(r.mean_E_abs), fmt(r.ci95_E_abs), fmt(r.mean_E_net), fmt(r.ci95_E_net))
        for r in rows
    ])


def cmd_single(config: RunConfig) -> tuple[str, str]:
    """One paired trial at ``config.density``; returns (report, csv)."""
    params = config.params
    seed = derive_trial_seed(config.master_seed, 0, 0)
    results = run_trial(params, config.density, config.schemes, seed)
    lines = [f"single trial: M={params.M} B={params.B} lambda={fmt(config.density)} seed={config.master_seed}"]
    rows = []
    for r in results:
        if r.feasible:
            lines.append(f"  {r.scheme:<7} B={fmt_bits(r.scheme, r.B_used):>3} N={r.N:<5} "
                         f"E_abs={r.E_abs:.6g} J  E_phase={r.E_phase:.6g} J  "
                         f"E_meter={r.E_meter:.6g} J  E_net={r.E_net:.6g} J")
        else:
            lines.append(f"  {r.scheme:<7} B={fmt_bits(r.scheme, r.B_used):>3} N={r.N:<5} infeasible (N dt > T)")
        rows.append((r.scheme, params.M, fmt_bits(r.scheme, r.B_used), fmt(config.density), r.N, int(r.feasible),
                     *(fmt(v) if r.feasible else "" for v in (r.E_abs, r.E_phase, r.E_meter, r.E_net))))
    return "\n".join(lines) + "\n", _csv_text(SINGLE_COLUMNS, rows)


def cmd_sweep_density(config: RunConfig) -> str:
    return density_csv(sweep_density(config.sweep_spec("density")))


def cmd_sweep_antennas(config: RunConfig) -> str:
    return antenna_csv(sweep_antennas(config.sweep_spec("antennas")))


def _write(text: str, path: str):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dynrf", description="Dynamic RF combining energy-harvesting simulator")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("single", "one paired trial with the full per-scheme ledger"),
                            ("sweep-density", "mean energies versus transmitter density"),
                            ("sweep-antennas", "mean energies and optimum resolution versus antenna count")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="key = value configuration file")
        p.add_argument("--seed", type=int, help="master seed (overrides the config)")
        p.add_argument("--out", help="CSV output path (default: stdout)")
        p.add_argument("--trials", type=int, help="trials per sweep point")
        p.add_argument("--workers", type=int, help="worker processes")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config) if args.config else RunConfig()
        overrides = {}
        if args.seed is not None:
            if not 0 <= args.seed < 2**64:
                raise ConfigError(f"--seed {args.seed} out of range [0, 2**64)")
            overrides["master_seed"] = args.seed
        if args.trials is not None:
            if args.trials < 1:
                raise ConfigError("--trials must be >= 1")
            overrides["trials"] = args.trials
        if args.workers is not None:
            if args.workers < 1:
                raise ConfigError("--workers must be >= 1")
            overrides["workers"] = args.workers
        if args.out is not None:
            overrides["out"] = args.out
        config = replace(config, **overrides)
        config.params  # surface cross-field errors before running
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return EXIT_IO

    try:
        if args.command == "single":
            report, table = cmd_single(config)
            if config.out:
                sys.stdout.write(report)
                _write(table, config.out)
            else:
                sys.stdout.write(report + "\n" + table)
        elif args.command == "sweep-density":
            _write(cmd_sweep_density(config), config.out)
        else:
            _write(cmd_sweep_antennas(config), config.out)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
