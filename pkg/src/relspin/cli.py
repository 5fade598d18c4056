"""Command-line front end.

Exit codes: 0 success, 1 a --check found violations, 2 bad configuration,
3 I/O failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from pathlib import Path

from . import linalg
from .bell import single_particle_oracle, single_particle_report
from .errors import ConfigError, RelspinError
from .kinematics import (
    LIMIT_BETA,
    asymptotic_half_angle,
    boost_from_speed,
    particle_from_gamma,
    wigner_angle,
    wigner_angle_oracle,
)
from .scan import ScanConfig, check_rows, consistency_report, emit, run_scan

log = logging.getLogger("relspin")

OUTPUT_DIR_ENV = "RELSPIN_OUTPUT_DIR"

EXIT_OK, EXIT_CHECK, EXIT_CONFIG, EXIT_IO = 0, 1, 2, 3


def _range(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected lo:hi:n, got {text!r}")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: {exc}") from None
    return lo, hi, n


def _destination(args, default_name: str) -> str | None:
    if args.output:
        return args.output
    directory = os.environ.get(OUTPUT_DIR_ENV)
    if directory:
        return str(Path(directory) / default_name)
    return None  # stdout


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _kinematics(args):
    beta = LIMIT_BETA if args.limit else args.beta
    return boost_from_speed(beta), particle_from_gamma(args.gamma)


def cmd_wigner_angle(args) -> int:
    boost, particle = _kinematics(args)
    omega = wigner_angle(boost, particle)
    _print_json(
        {
            "beta": boost.beta,
            "limit_probe": args.limit,
            "gamma": particle.gamma,
            "omega_rad": omega,
            "omega_oracle_rad": wigner_angle_oracle(boost, particle),
            "sin_half_omega": math.sin(0.5 * omega),
            "asymptotic_sin_half_omega": asymptotic_half_angle(particle),
        }
    )
    return EXIT_OK


def cmd_single(args) -> int:
    boost, particle = _kinematics(args)
    closed = single_particle_report(boost, particle)
    dense = single_particle_oracle(boost, particle)
    payload = {
        "beta": boost.beta,
        "limit_probe": args.limit,
        "gamma": particle.gamma,
        "omega_rad": wigner_angle(boost, particle),
        "units": "hbar",
        "closed_form": vars(closed),
        "oracle": vars(dense),
    }
    _print_json(payload)
    if args.check:
        worst = max(abs(getattr(closed, k) - getattr(dense, k)) for k in vars(closed))
        if worst > linalg.get_tolerance():
            log.error("closed form and oracle differ by %.3e", worst)
            return EXIT_CHECK
    return EXIT_OK


def _config_from(args) -> ScanConfig:
    kwargs = {}
    if args.beta_range:
        kwargs.update(zip(("beta_min", "beta_max", "beta_steps"), args.beta_range))
    if args.gamma_range and args.beta1_range:
        raise ConfigError("give either --gamma-range or --beta1-range, not both")
    if args.gamma_range:
        kwargs.update(zip(("gamma_min", "gamma_max", "gamma_steps"), args.gamma_range))
    if args.beta1_range:
        kwargs.update(zip(("gamma_min", "gamma_max", "gamma_steps"), args.beta1_range))
        kwargs["energy_axis"] = "beta1"
    quad = args.quadruple or ["standard"]
    mode, rest = quad[0], quad[1:]
    if mode == "custom":
        try:
            kwargs["custom_quadruple"] = tuple(float(v) for v in rest)
        except ValueError as exc:
            raise ConfigError(f"custom quadruple: {exc}") from None
    elif rest:
        raise ConfigError(f"quadruple {mode!r} takes no numbers")
    config = ScanConfig(
        family=args.family,
        scenario=args.scenario,
        quadruple=mode,
        output_format=args.format,
        output_path=args.output,
        limit=args.limit,
        **kwargs,
    )
    config.validate()
    return config


def cmd_scan(args) -> int:
    config = _config_from(args)
    rows = run_scan(config)
    name = f"scan-{config.scenario}-{config.family}.{config.output_format}"
    emit(rows, config.output_format, _destination(args, name))
    if args.check:
        problems = check_rows(rows)
        for p in problems[:20]:
            log.error("%s", p)
        if problems:
            log.error("%d invariant violation(s)", len(problems))
            return EXIT_CHECK
    return EXIT_OK


def cmd_report(args) -> int:
    config = _config_from(args)
    report = consistency_report(config)
    emit(report, config.output_format, _destination(args, f"report.{config.output_format}"))
    for e in report.entries:
        log.info(
            "%-30s %-8s max=%.3e %s",
            e.name,
            e.expectation,
            e.max_abs_deviation,
            "ok" if e.passed else "FAILED",
        )
    if args.check and not report.passed:
        return EXIT_CHECK
    return EXIT_OK


def _add_grid_options(p: argparse.ArgumentParser, *, scan: bool) -> None:
    p.add_argument("--scenario", choices=["single", "bell-phi", "bell-psi"], default="bell-phi")
    p.add_argument("--family", choices=["pauli", "czachor"], default="pauli")
    p.add_argument(
        "--quadruple",
        nargs="+",
        metavar="MODE",
        help="standard | as-printed | custom AX AY AZ A'X A'Y A'Z BX BY BZ B'X B'Y B'Z",
    )
    p.add_argument("--beta-range", type=_range, metavar="LO:HI:N")
    p.add_argument("--gamma-range", type=_range, metavar="LO:HI:N")
    p.add_argument("--beta1-range", type=_range, metavar="LO:HI:N",
                   help="particle lab speed axis instead of gamma")
    p.add_argument("--format", choices=["csv", "json"], default="csv" if scan else "json")
    p.add_argument("--output", metavar="PATH", help="file to write; '-' for stdout")
    p.add_argument("--check", action="store_true")
    p.add_argument("--limit", action="store_true", help=f"evaluate only at beta = {LIMIT_BETA!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relspin", description="Relativistic spin-1/2 states, spin operators and CHSH values."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, helptext in (
        ("wigner-angle", cmd_wigner_angle, "Wigner angle and its 4x4 cross-check"),
        ("single", cmd_single, "single-particle spin expectations, closed form vs oracle"),
    ):
        p = sub.add_parser(name, help=helptext, parents=[common])
        p.add_argument("--beta", type=float, default=0.0)
        p.add_argument("--gamma", type=float, required=True)
        p.add_argument("--limit", action="store_true", help=f"use beta = {LIMIT_BETA!r}")
        if name == "single":
            p.add_argument("--check", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("scan", help="sweep the (beta, gamma) grid", parents=[common])
    _add_grid_options(p, scan=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser(
        "report", help="audit every closed form against dense evaluation", parents=[common]
    )
    _add_grid_options(p, scan=False)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="relspin: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (ConfigError, RelspinError, ValueError) as exc:
        print(f"relspin: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BrokenPipeError:
        # reader went away (e.g. piped into head); not our failure
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK
    except OSError as exc:
        print(f"relspin: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
