"""Command-line entry point: run scenarios and emit plot-ready tables.

Exit status is 0 on success, 2 for configuration problems (bad document,
bad flags), 1 for runtime failures. Configuration problems print a single
machine-readable JSON line on stderr. Unless --quiet is given, the effective
configuration (after flag overrides) is echoed as a JSON line on stderr so
archived outputs can be traced back to their exact inputs; data streams on
stdout stay clean either way.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ._kernels import backend_name
from .errors import ParseError, QlmError, ValidationError
from .evolve import INTEGRATORS
from .scenario import (
    Scenario,
    emit_records,
    load_packaged_scenario,
    packaged_scenario_names,
    parse_scenario,
    run_scenario,
    with_overrides,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlm",
        description="Simulate lattice stock-market scenarios and emit "
                    "price/ownership distribution tables.",
    )
    parser.add_argument("--config", metavar="PATH",
                        help="scenario file, or the name of a packaged scenario "
                             f"({', '.join(packaged_scenario_names())})")
    parser.add_argument("--batch", metavar="DIR",
                        help="run every *.toml scenario in DIR")
    parser.add_argument("--output", metavar="PATH",
                        help="output file (with --config; default stdout) or "
                             "output directory (with --batch; default .)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--integrator", choices=INTEGRATORS,
                        help="override the scenario's integrator")
    parser.add_argument("--dt", type=float, help="override the scenario's time step")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress the effective-config echo")
    return parser


def _error_line(exc: Exception) -> None:
    print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
          file=sys.stderr)


def _load_scenario(config: str) -> Scenario:
    path = Path(config)
    if path.exists():
        return parse_scenario(path.read_text(encoding="utf-8"))
    if path.suffix == "" and path.name == config:
        return load_packaged_scenario(config)
    raise ValidationError(f"config file not found: {config}")


def _echo(scenario: Scenario, fmt: str, output: str | None, quiet: bool) -> None:
    if quiet:
        return
    effective = scenario.as_dict()
    effective["format"] = fmt
    effective["output"] = output if output is not None else "-"
    effective["backend"] = backend_name()
    print(json.dumps(effective), file=sys.stderr)


def _run_single(args) -> int:
    scenario = with_overrides(_load_scenario(args.config),
                              integrator=args.integrator, dt=args.dt)
    _echo(scenario, args.format, args.output, args.quiet)
    records, _ = run_scenario(scenario)
    if args.output is None:
        emit_records(records, args.format, sys.stdout)
    else:
        emit_records(records, args.format, args.output)
    return 0


def _run_batch(args) -> int:
    directory = Path(args.batch)
    if not directory.is_dir():
        raise ValidationError(f"batch directory not found: {args.batch}")
    out_dir = Path(args.output) if args.output is not None else Path(".")
    out_dir.mkdir(parents=True, exist_ok=True)
    files = sorted(directory.glob("*.toml"))
    if not files:
        raise ValidationError(f"no *.toml scenarios in {args.batch}")
    for file in files:
        scenario = with_overrides(parse_scenario(file.read_text(encoding="utf-8")),
                                  integrator=args.integrator, dt=args.dt)
        destination = out_dir / f"{file.stem}.{args.format}"
        _echo(scenario, args.format, str(destination), args.quiet)
        records, _ = run_scenario(scenario)
        emit_records(records, args.format, destination)
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if (args.config is None) == (args.batch is None):
        _error_line(ValidationError("exactly one of --config or --batch is required"))
        return 2
    try:
        return _run_batch(args) if args.batch else _run_single(args)
    except (ParseError, ValidationError) as exc:
        _error_line(exc)
        return 2
    except (QlmError, OSError) as exc:
        _error_line(exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
