# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Closed-loop simulation of the regulated ACC."""
import logging
from typing import List

from tvcbf._exceptions import NumericError, PastLastSignalError
from tvcbf.sim._config import ScenarioConfig
from tvcbf.sim._trace import TraceRecord
from tvcbf.traffic import next_signal_index
from tvcbf.vehicle import step

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["run"]

logger = logging.getLogger(__name__)


def run(config: ScenarioConfig) -> List[TraceRecord]:
    """Simulate ``config`` and return one record per control step.

    At ``t_k = k dt`` the loop reads the signal broadcast, filters the nominal
    input, records the step and advances ego and lead with one RK4 step under a
    zero-order hold. The integral state is frozen on steps where the filter
    overrides the nominal input. The run stops at the horizon, or early when the
    ego passes the last stop line.

    Parameters
    ----------
    config : ScenarioConfig

    Returns
    -------
    list of TraceRecord

    Raises
    ------
    NumericError
        If the state becomes non-finite; ``step`` holds the step index.

    Examples
    --------
    >>> from tvcbf.sim import ScenarioConfig, run
    >>> trace = run(ScenarioConfig(horizon=1.0))
    >>> len(trace), trace[-1].x_f, trace[-1].u == trace[-1].u_nom
    (100, 0.0, True)
    """
    ctrl = config.safety_filter()
    signals = config.signal_timings()
    positions = [float(sig.position) for sig in signals]
    params = config.vehicle_params
    lead = config.lead_profile
    state = config.initial_state
    dt = config.dt

    logger.info(
        "running %d steps of %.3g s in %s mode with %d signals",
        config.n_steps,
        dt,
        config.mode,
        len(signals),
    )
    trace = []
    for k in range(config.n_steps):
        t = k * dt
        _, lead_accel = lead.velocity(t)
        try:
            if signals:
                i = next_signal_index(positions, state.x_f)
                light = signals[i].state(t)
            else:
                i, light = -1, None
            out = ctrl.assemble_and_filter(state, t, lead_accel=lead_accel)
            h1, h2, h3 = ctrl.barrier_values(state, t)
        except PastLastSignalError:
            logger.warning(
                "t=%.2f: ego at %.1f passed the last stop line, stopping the run",
                t,
                state.x_f,
            )
            break

        trace.append(
            TraceRecord(
                t=t,
                x_f=state.x_f,
                v_f=state.v_f,
                x_l=state.x_l,
                v_l=state.v_l,
                u=out.u,
                mu=out.mu,
                u_nom=out.u_nom,
                h1=h1,
                h2=h2,
                h3=h3,
                signal_index=i,
                signal_state=light,
                active=out.active,
                qp_infeasible=out.infeasible,
            )
        )
        try:
            state = step(
                params,
                state,
                out.u,
                lead_accel,
                dt,
                integrate_error=not out.overridden,
            )
        except NumericError as exc:
            raise NumericError(str(exc), step=k) from exc

    n_infeasible = sum(r.qp_infeasible for r in trace)
    if n_infeasible:
        logger.warning("%d steps used a fallback", n_infeasible)
    logger.info("finished after %d steps", len(trace))
    return trace
