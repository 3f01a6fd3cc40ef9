# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Command line interface: ``tvcbf run | verify | validate-cbf``.

Exit codes: 0 for a clean run, 1 for unusable input, 2 when a hard constraint
or a barrier jump check fails, 3 when a step needed a fallback or the controller
failed at run time.
"""
import argparse
import logging
import sys
from typing import List, Optional

import numpy as np

from tvcbf._exceptions import (
    ConfigError,
    NumericError,
    QPInfeasibleError,
    StateOutsideSafeSetError,
)
from tvcbf.cbf import check_all_jumps
from tvcbf.sim._config import load_config
from tvcbf.sim._run import run
from tvcbf.sim._trace import export_trace, read_trace
from tvcbf.sim._verify import summarize, verify_hard_constraints
from tvcbf.traffic import build_traffic_cbf
from tvcbf.vehicle import LongitudinalMuModel

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["main"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2
EXIT_INFEASIBLE = 3

_MODES = {"constrained": "constrained_input", "unconstrained": "unconstrained_input"}


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="tvcbf",
        description="Regulated adaptive cruise control with time-varying barriers.",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="logging level (default: WARNING)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="simulate a scenario")
    run_p.add_argument("config", help="scenario file, or name of a bundled scenario")
    run_p.add_argument("--out", help="write the trace to this CSV file")
    run_p.add_argument("--mode", choices=sorted(_MODES), help="override the mode")

    verify_p = sub.add_parser("verify", help="audit a trace against a scenario")
    verify_p.add_argument("trace", help="CSV trace written by 'run'")
    verify_p.add_argument("config", help="scenario the trace was produced with")

    validate_p = sub.add_parser(
        "validate-cbf", help="check the jump conditions of the traffic barrier"
    )
    validate_p.add_argument("config", help="scenario file or bundled scenario name")
    validate_p.add_argument(
        "--samples", type=int, default=21, help="grid points per state axis"
    )
    return parser.parse_args(argv)


def _report(report, summary) -> int:
    print(f"steps:              {summary.n_steps}")
    print(f"min h1:             {report.min_h1:.6f}")
    print(f"max V_f - V_max:    {report.max_speed_excess:.6f}")
    print(f"min h3:             {report.min_h3:.6f}")
    print(f"red-light crossings {len(report.red_light_violations)}")
    print(f"infeasible steps:   {report.infeasible_steps}")
    for label, count in summary.active_counts.items():
        print(f"active {label:<12}{count}")
    if report.infeasible_steps:
        return EXIT_INFEASIBLE
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _run(args) -> int:
    config = load_config(args.config)
    if args.mode:
        config = config.clone().set_params(mode=_MODES[args.mode])
    trace = run(config)
    if args.out:
        export_trace(trace, args.out)
        logger.info("wrote %d records to %s", len(trace), args.out)
    if not trace:
        print("empty trace")
        return EXIT_OK
    return _report(verify_hard_constraints(trace, config), summarize(trace))


def _verify(args) -> int:
    config = load_config(args.config)
    trace = read_trace(args.trace)
    if not trace:
        print("empty trace")
        return EXIT_OK
    return _report(verify_hard_constraints(trace, config), summarize(trace))


def _validate_cbf(args) -> int:
    config = load_config(args.config)
    signals = config.signal_timings()
    if not signals:
        print("scenario has no signals")
        return EXIT_OK
    params = config.vehicle_params
    shape = config.traffic_params()
    model = LongitudinalMuModel(vehicle=params)
    speeds = np.linspace(0.0, params.v_max, args.samples)
    all_valid = True
    for degree, tol, dynamics in ((1, 1e-6, None), (2, [1e-6, 1e-3], model)):
        cbf = build_traffic_cbf(signals, shape, horizon=config.horizon, degree=degree)
        for i, position in enumerate(cbf.positions):
            lower = cbf.positions[i - 1] if i > 0 else position - shape.default_spacing
            xs = np.linspace(lower, position, args.samples)
            grid = np.array(
                [[x, v, x + params.s0, v, 0.0] for x in xs for v in speeds]
            )
            for report in check_all_jumps(
                cbf.region_cbf(i), grid, tol=tol, dynamics=dynamics
            ):
                all_valid &= report.valid
                margins = ", ".join(f"{m:.6g}" for m in report.worst_margin)
                print(
                    f"degree {degree} signal {i} t={report.boundary_time:8.2f} "
                    f"{'valid' if report.valid else 'INVALID'} margins [{margins}]"
                )
    return EXIT_OK if all_valid else EXIT_VIOLATION


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line interface and return its exit code."""
    args = _parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    commands = {"run": _run, "verify": _verify, "validate-cbf": _validate_cbf}
    try:
        return commands[args.command](args)
    except (StateOutsideSafeSetError, QPInfeasibleError, NumericError) as exc:
        print(f"controller failure: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ConfigError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
