#!/usr/bin/env python3
"""
L-system toolkit - transfer/impedance functions, c-entropy and couplings
of canonical L-systems on C^n.

Machine-readable output (JSON / CSV) goes to stdout, status lines to stderr.

Usage:
    python lsystem_cli.py model --kind d --lambda0 "1+1i" --out d.json
    python lsystem_cli.py eval d.json --z "0+2i" --what impedance
    python lsystem_cli.py entropy d.json
    python lsystem_cli.py couple left.json right.json --out coupled.json
    python lsystem_cli.py surface --kind d --out surface_d.csv
    python lsystem_cli.py verify --seed 42 --cases 100
    python lsystem_cli.py example --n 2

Exit codes: 0 ok, 1 regression mismatch, 2 input/validation error,
3 spectral singularity.
"""

import os
import sys
import argparse
from contextlib import contextmanager
from typing import Optional

from dotenv import load_dotenv

from config import (
    DEFAULT_CASES,
    DEFAULT_SEED,
    SURFACE_STEP,
    SURFACE_X_RANGE,
    SURFACE_Y_RANGE,
)
from coupling import couple
from entropy import entropy_report, entropy_surface
from errors import LSystemError, NumericalBreakdown, PoleHit, SingularMatrix, SpectrumHit
from lsystem import impedance, load_lsystem, save_lsystem, system_to_json, transfer
from models import ModelSpec, build_model, parse_complex
from report_formatter import (
    create_entropy_payload,
    create_eval_payload,
    create_example_summary,
    create_verify_summary,
    dumps,
    format_status,
    write_example_csv,
    write_surface_csv,
)
from verify_suites import run_example, run_suites

# Load environment variables from .env file
load_dotenv()

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_SPECTRAL = 3

SPECTRAL_ERRORS = (SpectrumHit, PoleHit, NumericalBreakdown, SingularMatrix)


def log(message: str) -> None:
    print(message, file=sys.stderr)


def exit_code_for(error: LSystemError) -> int:
    if isinstance(error, SPECTRAL_ERRORS):
        return EXIT_SPECTRAL
    return EXIT_INPUT


def complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        log(f"⚠️ Ignoring non-integer {name}={raw!r}, using {default}")
        return default


@contextmanager
def output_stream(path: Optional[str]):
    """Yield an open file for path, or stdout when path is None."""
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", newline="") as f:
        yield f


def cmd_model(args) -> int:
    spec = ModelSpec(args.kind, lambda0=args.lambda0, lam=args.lam, mu=args.mu)
    system = build_model(spec)
    log(f"✅ Built {args.kind} model: n={system.n}, m={system.m}, imbalance {system.imbalance():.3e}")

    if args.out:
        save_lsystem(system, args.out)
        log(f"✅ Saved system to {args.out}")
    else:
        print(dumps(system_to_json(system)))
    return EXIT_OK


def cmd_eval(args) -> int:
    system = load_lsystem(args.system)
    evaluate = transfer if args.what == "transfer" else impedance
    print(dumps(create_eval_payload(args.z, args.what, evaluate(system, args.z))))
    return EXIT_OK


def cmd_entropy(args) -> int:
    report = entropy_report(load_lsystem(args.system))
    print(dumps(create_entropy_payload(report)))
    log(f"✅ {report.regime}: S={report.entropy}, coefficient={report.coefficient:.6f}")
    return EXIT_OK


def cmd_couple(args) -> int:
    result = couple(load_lsystem(args.left), load_lsystem(args.right))
    provenance = [args.left, args.right]
    log(f"✅ Coupled {args.left} . {args.right}: n={result.coupled.n}, m={result.coupled.m}")

    if args.out:
        save_lsystem(result.coupled, args.out, provenance)
        log(f"✅ Saved coupled system to {args.out}")
    else:
        print(dumps(system_to_json(result.coupled, provenance)))
    return EXIT_OK


def cmd_surface(args) -> int:
    grid = entropy_surface(
        args.kind,
        x_range=(args.x_min, args.x_max),
        y_range=(args.y_min, args.y_max),
        step=args.step,
    )
    with output_stream(args.out) as stream:
        write_surface_csv(grid, stream)
    log(f"✅ Surface {args.kind}: {len(grid.x_axis)} x {len(grid.y_axis)} cells")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.cases < 1:
        log(f"❌ --cases must be positive, got {args.cases}")
        return EXIT_INPUT

    results = []
    for result in run_suites(args.seed, args.cases):
        log(f"{format_status(result.passed)} {result.name}: {result.cases} cases, max residual {result.max_residual:.3e}")
        results.append(result)

    summary = create_verify_summary(args.seed, args.cases, results)
    print(dumps(summary))
    if summary["passed"]:
        log("✅ All suites passed")
        return EXIT_OK

    log("❌ Verification failed")
    return EXIT_MISMATCH


def cmd_example(args) -> int:
    rows, entropies, coefficients = run_example(args.n)
    write_example_csv(rows, sys.stdout)

    failed = [row.label for row in rows if not row.passed]
    log(create_example_summary(entropies, coefficients))
    if failed:
        log(f"❌ Example {args.n}: {len(failed)} of {len(rows)} values differ: {', '.join(failed[:5])}")
        return EXIT_MISMATCH

    log(f"✅ Example {args.n}: all {len(rows)} values match")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="L-system toolkit - transfer functions, c-entropy and couplings")
    commands = parser.add_subparsers(dest="command", required=True)

    model = commands.add_parser("model", help="Build a model L-system")
    model.add_argument("--kind", choices=["d", "m", "a", "general"], required=True)
    model.add_argument("--lambda0", type=complex_arg, help="Eigenvalue parameter for d/m/a models, e.g. 1+1i")
    model.add_argument("--lam", type=complex_arg, help="First eigenvalue of a general model")
    model.add_argument("--mu", type=complex_arg, help="Second eigenvalue of a general model")
    model.add_argument("--out", help="Output JSON path (default: stdout)")
    model.set_defaults(handler=cmd_model)

    evaluate = commands.add_parser("eval", help="Evaluate W(z) or V(z)")
    evaluate.add_argument("system", help="L-system JSON file")
    evaluate.add_argument("--z", type=complex_arg, required=True)
    evaluate.add_argument("--what", choices=["transfer", "impedance"], default="transfer")
    evaluate.set_defaults(handler=cmd_eval)

    entropy = commands.add_parser("entropy", help="c-Entropy report")
    entropy.add_argument("system", help="L-system JSON file")
    entropy.set_defaults(handler=cmd_entropy)

    coupling = commands.add_parser("couple", help="Couple two L-systems, left factor first")
    coupling.add_argument("left")
    coupling.add_argument("right")
    coupling.add_argument("--out", help="Output JSON path (default: stdout)")
    coupling.set_defaults(handler=cmd_couple)

    surface = commands.add_parser("surface", help="Entropy surface CSV over lambda0 = x + y i")
    surface.add_argument("--kind", choices=["d", "a"], required=True)
    surface.add_argument("--x-min", type=float, default=SURFACE_X_RANGE[0])
    surface.add_argument("--x-max", type=float, default=SURFACE_X_RANGE[1])
    surface.add_argument("--y-min", type=float, default=SURFACE_Y_RANGE[0])
    surface.add_argument("--y-max", type=float, default=SURFACE_Y_RANGE[1])
    surface.add_argument("--step", type=float, default=SURFACE_STEP)
    surface.add_argument("--out", help="Output CSV path (default: stdout)")
    surface.set_defaults(handler=cmd_surface)

    verify = commands.add_parser("verify", help="Run the randomized property suites")
    verify.add_argument("--seed", type=int, default=env_int("LSYSTEM_SEED", DEFAULT_SEED))
    verify.add_argument("--cases", type=positive_int, default=env_int("LSYSTEM_CASES", DEFAULT_CASES))
    verify.set_defaults(handler=cmd_verify)

    example = commands.add_parser("example", help="Reproduce a worked example")
    example.add_argument("--n", type=int, choices=[1, 2], required=True)
    example.set_defaults(handler=cmd_example)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except LSystemError as e:
        log(f"❌ {type(e).__name__}: {e}")
        return exit_code_for(e)
    except OSError as e:
        log(f"❌ {e}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
