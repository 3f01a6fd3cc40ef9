# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Audits of a trace against the hard constraints and summary statistics."""
import logging
import math
from collections import Counter
from typing import Dict, List, NamedTuple, Sequence, Tuple

from tvcbf._exceptions import HorizonError
from tvcbf.sim._config import ScenarioConfig
from tvcbf.sim._trace import TraceRecord
from tvcbf.traffic import SignalState

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "BrakingEvent",
    "HardConstraintReport",
    "RedLightViolation",
    "TraceSummary",
    "preemptive_braking_events",
    "summarize",
    "verify_hard_constraints",
]

logger = logging.getLogger(__name__)


class RedLightViolation(NamedTuple):
    """Crossing of a stop line while its signal is red."""

    step: int
    t: float
    signal_index: int
    x_f: float


class HardConstraintReport(NamedTuple):
    """Margins of the three hard constraints over a trace.

    Attributes
    ----------
    min_h1 : float
        Smallest spacing error δ.
    max_speed_excess : float
        Largest ``V_f - V_max``.
    min_h3 : float
        Smallest traffic barrier value, NaN without signals.
    red_light_violations : tuple of RedLightViolation
    infeasible_steps : int
        Number of steps that used a fallback.
    tol : float
        Tolerance of :attr:`ok`.
    """

    min_h1: float
    max_speed_excess: float
    min_h3: float
    red_light_violations: Tuple[RedLightViolation, ...]
    infeasible_steps: int
    tol: float

    @property
    def ok(self) -> bool:
        """Whether all margins hold up to ``tol`` and no red light was crossed."""
        h3_ok = math.isnan(self.min_h3) or self.min_h3 >= -self.tol
        return (
            self.min_h1 >= -self.tol
            and self.max_speed_excess <= self.tol
            and h3_ok
            and not self.red_light_violations
        )


def _is_red(sig, t):
    try:
        return sig.state(t) is SignalState.RED
    except HorizonError:
        return False


def verify_hard_constraints(
    trace: Sequence[TraceRecord], config: ScenarioConfig, tol: float = 1e-3
) -> HardConstraintReport:
    """Check a trace against the spacing, speed and red-light constraints.

    The red-light audit works on the positions alone: a violation is a pair of
    consecutive records with ``x_prev <= p_i < x_next`` while signal ``i`` is red
    at the later time.

    Parameters
    ----------
    trace : sequence of TraceRecord
        Non-empty trace.
    config : ScenarioConfig
        Scenario the trace was produced with.
    tol : float, default=1e-3
        Tolerance of the margins.

    Returns
    -------
    HardConstraintReport

    Raises
    ------
    ValueError
        If ``trace`` is empty.
    """
    if len(trace) == 0:
        raise ValueError("verify_hard_constraints needs a non-empty trace")
    v_max = config.vehicle_params.v_max
    signals = config.signal_timings()

    violations = []
    for k in range(1, len(trace)):
        prev, cur = trace[k - 1], trace[k]
        for i, sig in enumerate(signals):
            if prev.x_f <= sig.position < cur.x_f and _is_red(sig, cur.t):
                violations.append(RedLightViolation(k, cur.t, i, cur.x_f))
                logger.warning(
                    "t=%.2f: crossed stop line %d at %.1f m on red",
                    cur.t,
                    i,
                    sig.position,
                )

    h3 = [r.h3 for r in trace if not math.isnan(r.h3)]
    return HardConstraintReport(
        min_h1=min(r.h1 for r in trace),
        max_speed_excess=max(r.v_f for r in trace) - v_max,
        min_h3=min(h3) if h3 else math.nan,
        red_light_violations=tuple(violations),
        infeasible_steps=sum(r.qp_infeasible for r in trace),
        tol=tol,
    )


class BrakingEvent(NamedTuple):
    """Approach of the ego to a stop line while its signal is red.

    Attributes
    ----------
    signal_index : int
    t_enter : float
        First time of the approach: signal red and stop line within reach.
    t_slowest : float
        Time of the lowest ego speed during the approach.
    v_slowest : float
        That lowest speed, in m/s.
    gap : float
        Distance to the stop line at ``t_slowest``, in m.
    decel_duration : float
        Length of the strictly decreasing speed run ending at ``t_slowest``,
        in s.
    min_mu : float
        Smallest synthetic input over that run.
    would_cross : bool
        Whether the ego, holding its entry speed, would have reached the stop
        line before the approach ended.
    """

    signal_index: int
    t_enter: float
    t_slowest: float
    v_slowest: float
    gap: float
    decel_duration: float
    min_mu: float
    would_cross: bool


def _red_approaches(trace, positions, max_gap):
    """Yield (first, last) index pairs of contiguous red approaches."""
    first = None
    for k, r in enumerate(trace):
        inside = (
            r.signal_index >= 0
            and r.signal_state is SignalState.RED
            and positions[r.signal_index] - r.x_f <= max_gap
        )
        switched = first is not None and r.signal_index != trace[first].signal_index
        if inside and switched:
            yield first, k - 1
            first = k
        elif inside and first is None:
            first = k
        elif not inside and first is not None:
            yield first, k - 1
            first = None
    if first is not None:
        yield first, len(trace) - 1


def preemptive_braking_events(
    trace: Sequence[TraceRecord],
    config: ScenarioConfig,
    max_gap: float = 50.0,
) -> List[BrakingEvent]:
    """Return one event per approach to a red stop line.

    An approach is a run of consecutive records in which the next signal is
    red and its stop line lies at most ``max_gap`` ahead. Each event reports
    how long the speed had been strictly decreasing when the ego was slowest.

    Parameters
    ----------
    trace : sequence of TraceRecord
    config : ScenarioConfig
        Scenario the trace was produced with.
    max_gap : float, default=50.0
        Reach of an approach, in m.

    Returns
    -------
    list of BrakingEvent
    """
    positions = [sig.position for sig in config.signal_timings()]
    events = []
    for first, last in _red_approaches(trace, positions, max_gap):
        window = trace[first : last + 1]
        k = first + min(range(len(window)), key=lambda j: window[j].v_f)
        start = k
        while start > 0 and trace[start - 1].v_f > trace[start].v_f:
            start -= 1
        entry = trace[first]
        p = positions[entry.signal_index]
        duration = trace[last].t - entry.t
        events.append(
            BrakingEvent(
                signal_index=entry.signal_index,
                t_enter=entry.t,
                t_slowest=trace[k].t,
                v_slowest=trace[k].v_f,
                gap=p - trace[k].x_f,
                decel_duration=trace[k].t - trace[start].t,
                min_mu=min(r.mu for r in trace[start : k + 1]),
                would_cross=entry.v_f * duration >= p - entry.x_f,
            )
        )
        logger.debug("red approach %s", events[-1])
    return events


class TraceSummary(NamedTuple):
    """Counts and extremes of a trace."""

    n_steps: int
    active_counts: Dict[str, int]
    infeasible_steps: int
    max_v_f: float
    min_h1: float
    min_h3: float


def summarize(trace: Sequence[TraceRecord]) -> TraceSummary:
    """Count active constraint labels and infeasible steps of a trace.

    Examples
    --------
    >>> from tvcbf.sim import ScenarioConfig, run, summarize
    >>> summary = summarize(run(ScenarioConfig(horizon=1.0)))
    >>> summary.n_steps, summary.infeasible_steps
    (100, 0)
    """
    counts = Counter(str(label) for r in trace for label in r.active)
    h3 = [r.h3 for r in trace if not math.isnan(r.h3)]
    return TraceSummary(
        n_steps=len(trace),
        active_counts=dict(sorted(counts.items())),
        infeasible_steps=sum(r.qp_infeasible for r in trace),
        max_v_f=max((r.v_f for r in trace), default=math.nan),
        min_h1=min((r.h1 for r in trace), default=math.nan),
        min_h3=min(h3) if h3 else math.nan,
    )
