# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Safety filter: nominal PID input minimally corrected to satisfy every barrier."""
import logging
import math
from typing import List, NamedTuple, Optional, Tuple

from skbase.base import BaseObject

from tvcbf._exceptions import ConstructionError
from tvcbf.cbf import LinearClassK
from tvcbf.control._constraints import (
    h1_constraint,
    h2_constraint,
    h3_constraint_deg1,
    h3_constraint_deg2,
)
from tvcbf.control._gains import PolePlacementGain, pole_placement_gain, select_lambdas
from tvcbf.control._pid import PIDGains, nominal_mu
from tvcbf.qp import (
    ConstraintLabel,
    FeasibleInterval,
    MuConstraint,
    project,
    reduce_constraints,
)
from tvcbf.traffic import TrafficCBFParams, build_traffic_cbf
from tvcbf.utils import check_positive
from tvcbf.vehicle import (
    LongitudinalMuModel,
    VehicleParams,
    VehicleState,
    friction_force,
    mu_to_force,
)

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["MODES", "FilterDiagnostics", "SafetyFilter"]

logger = logging.getLogger(__name__)

MODES = ("unconstrained_input", "constrained_input")

# slack at or below this counts as an active constraint
ACTIVE_TOL = 1e-9

# distance to spare, in m, for the stop fallback to be chosen
STOP_MARGIN = 0.1


class FilterDiagnostics(NamedTuple):
    """Result of one safety filter step.

    Attributes
    ----------
    u, mu : float
        Applied force (N) and synthetic input (m/s²).
    u_nom, mu_nom : float
        Nominal force and synthetic input.
    active : tuple of ConstraintLabel
        Constraints holding with equality (or violated) at ``mu``.
    infeasible : bool
        Whether the feasible interval was empty and the fallback was applied.
    overridden : bool
        Whether the filter changed the nominal input.
    constraints : tuple of MuConstraint
        The constraint set of this step, box excluded.
    interval : FeasibleInterval
        Feasible interval of μ, box included.
    fallback : str or None
        Fallback in force: ``"stop"`` or ``"go"`` on infeasible steps, and
        ``"stop"`` on every step of an approach committed to stopping.
    """

    u: float
    mu: float
    u_nom: float
    mu_nom: float
    active: Tuple[ConstraintLabel, ...]
    infeasible: bool
    overridden: bool
    constraints: Tuple[MuConstraint, ...]
    interval: FeasibleInterval
    fallback: Optional[str] = None


class SafetyFilter(BaseObject):
    """Regulated ACC controller: PID law filtered by the hard-constraint barriers.

    In ``"unconstrained_input"`` mode the constraints are the basic H1, H2 and
    the relative degree 2 traffic barrier with pole-placement rates; μ is
    unbounded. In ``"constrained_input"`` mode H1 carries the stopping distance,
    the traffic barrier has relative degree 1, and
    ``mu ∈ [-a_min, a_max - F_r / m]`` so that ``u ∈ [-a_min m, a_max m]``.

    The QP ``min |μ - μ_nom|²`` is solved exactly by clamping. An empty feasible
    set flags the step and applies a fallback:

    * ``"stop"``, full braking ``mu = -a_min``, when H1, H2 and the box alone
      are infeasible, or when the ego can still stop before its stop line;
    * ``"go"``, the largest μ H1, H2 and the box admit, when only the traffic
      barrier is violated and the braking distance ``V_f² / (2 a_min)`` reaches
      past the stop line, so the ego clears the line instead of braking onto
      it after the light turned red.

    The choice is kept while the ego approaches the same stop line in the same
    signal cycle. A stop commitment also caps μ on the feasible steps of that
    approach by the deceleration that stops at the point full braking would
    have reached, so the ego halts before the line.

    Parameters
    ----------
    vehicle : VehicleParams, optional
        Defaults to ``VehicleParams()``.
    gains : PIDGains, optional
        Defaults to ``PIDGains()``.
    signals : tuple of SignalTiming, optional
        Traffic signals ordered by position; None or empty drops H3.
    traffic : TrafficCBFParams, optional
        Barrier shape; defaults to S0 and γ of ``vehicle`` with τ = 6.
    mode : str, default="constrained_input"
        One of ``"unconstrained_input"``, ``"constrained_input"``.
    lambda_min : float, default=0.1
        Floor of the relative degree 2 class-K rates.
    alpha_h3 : float or None, default=None
        Slope of the class-K function of the relative degree 1 traffic
        barrier; None uses τ.
    horizon : float, default=300.0
        Horizon the signal timing must cover, in s.

    Attributes
    ----------
    lambdas_ : tuple of float or None
        Rates (λ1, λ2) in use by the relative degree 2 barrier.
    gain_ : PolePlacementGain or None
        Gain derived from ``lambdas_``.
    region_ : int or None
        Region index at the last step.
    cycle_ : int or None
        Active piece index of that region at the last step.
    overridden_ : bool
        Whether the last step changed the nominal input.
    fallback_ : str or None
        Fallback chosen for the current approach.
    stop_at_ : float or None
        Position the ego is committed to stop at, with ``fallback_ == "stop"``.
    approach_ : tuple of int or None
        Region and signal cycle of the relative degree 1 barrier at the last
        step; a change clears ``fallback_``.

    Examples
    --------
    >>> from tvcbf.control import SafetyFilter
    >>> from tvcbf.vehicle import VehicleState
    >>> ctrl = SafetyFilter()
    >>> out = ctrl.assemble_and_filter(VehicleState(0.0, 0.0, 4.5, 0.0), 0.0)
    >>> out.u == out.u_nom, out.infeasible
    (True, False)
    """

    _tags = {"object_type": "safety_filter"}

    def __init__(
        self,
        vehicle=None,
        gains=None,
        signals=None,
        traffic=None,
        mode="constrained_input",
        lambda_min=0.1,
        alpha_h3=None,
        horizon=300.0,
    ):
        self.vehicle = vehicle
        self.gains = gains
        self.signals = signals
        self.traffic = traffic
        self.mode = mode
        self.lambda_min = lambda_min
        self.alpha_h3 = alpha_h3
        self.horizon = horizon
        super().__init__()

        if mode not in MODES:
            raise ConstructionError(f"mode must be one of {MODES}, found {mode!r}")
        check_positive(lambda_min, name="lambda_min", error=ConstructionError)

        self._vehicle = VehicleParams() if vehicle is None else vehicle
        self._gains = PIDGains() if gains is None else gains
        self._shape = (
            TrafficCBFParams.from_vehicle(self._vehicle) if traffic is None else traffic
        )
        slope = self._shape.tau if alpha_h3 is None else alpha_h3
        self._alpha_h3 = LinearClassK(
            check_positive(slope, name="alpha_h3", error=ConstructionError)
        )
        self._mu_model = LongitudinalMuModel(vehicle=self._vehicle)
        if signals:
            self._cbf_deg1 = build_traffic_cbf(
                list(signals), self._shape, horizon=horizon, degree=1
            )
            self._cbf_deg2 = build_traffic_cbf(
                list(signals), self._shape, horizon=horizon, degree=2
            )
        else:
            self._cbf_deg1 = self._cbf_deg2 = None

        self.lambdas_ = None
        self.gain_ = None
        self.region_ = None
        self.cycle_ = None
        self.overridden_ = False
        self.fallback_ = None
        self.stop_at_ = None
        self.approach_ = None

    @property
    def has_signals(self) -> bool:
        """Whether a traffic signal constraint is enforced."""
        return self._cbf_deg1 is not None

    def traffic_cbf(self, degree: int):
        """Return the traffic barrier of relative degree ``degree``, or None."""
        return self._cbf_deg1 if degree == 1 else self._cbf_deg2

    def input_box(self, state: VehicleState) -> Tuple[float, float]:
        """Return the admissible μ interval ``(-a_min, a_max - F_r / m)``."""
        p = self._vehicle
        return (-p.a_min, p.a_max - friction_force(p, state.v_f) / p.mass)

    def barrier_values(
        self, state: VehicleState, t: float, mode: Optional[str] = None
    ) -> Tuple[float, float, float]:
        """Return ``(δ, V_max - V_f, h₃)`` at ``(t, state)``.

        h₃ is the traffic barrier the mode enforces: relative degree 1 in
        ``"constrained_input"`` mode, relative degree 2 otherwise; NaN without
        signals.
        """
        p = self._vehicle
        h3 = math.nan
        if self.has_signals:
            degree = 1 if (mode or self.mode) == "constrained_input" else 2
            piece = self.traffic_cbf(degree).active_piece(t, state.x_f)
            h3 = piece.barrier_terms(t, state.x_f, state.v_f)[0]
        return state.spacing_error(p), p.v_max - state.v_f, h3

    def integral_rate(self, state: VehicleState, overridden: bool) -> float:
        """Return ė: the spacing error, or zero while the filter overrides."""
        return 0.0 if overridden else state.spacing_error(self._vehicle)

    def _update_rates(self, state: VehicleState, t: float) -> PolePlacementGain:
        cbf = self._cbf_deg2
        region = cbf.region_index(state.x_f)
        cycle = cbf.region_cbf(region).active_piece(t)
        if (region, cycle) != (self.region_, self.cycle_) or self.gain_ is None:
            if region != self.region_:
                logger.debug("t=%.2f: entering signal region %d", t, region)
            piece = cbf.region_cbf(region).pieces[cycle]
            self.lambdas_ = select_lambdas(
                state,
                t,
                piece,
                self.lambda_min,
                self._mu_model,
                decay_rate=self._shape.tau,
            )
            self.gain_ = pole_placement_gain(*self.lambdas_)
            self.region_, self.cycle_ = region, cycle
        return self.gain_

    def _track_approach(self, state: VehicleState, t: float) -> None:
        cbf = self._cbf_deg1
        region = cbf.region_index(state.x_f)
        approach = (region, cbf.region_cbf(region).active_piece(t))
        if approach != self.approach_:
            if self.fallback_ is not None:
                logger.debug("t=%.2f: fallback %s released", t, self.fallback_)
            self.approach_ = approach
            self.fallback_ = self.stop_at_ = None

    def _stop_mu(self, state: VehicleState) -> float:
        """Deceleration that halts the ego at ``stop_at_``, within the box."""
        a_min = self._vehicle.a_min
        if state.v_f <= 0.0:
            return 0.0
        room = self.stop_at_ - state.x_f
        if room <= 0.0:
            return -a_min
        return max(-a_min, -state.v_f * state.v_f / (2.0 * room))

    def _fallback(self, state, t, constraints, box) -> Tuple[str, float]:
        p = self._vehicle
        relaxed = reduce_constraints(
            [c for c in constraints if c.label is not ConstraintLabel.H3], box=box
        )
        if relaxed.empty or not math.isfinite(relaxed.hi):
            return "stop", -p.a_min
        if self.fallback_ is None:
            cbf = self._cbf_deg1
            line = cbf.positions[cbf.region_index(state.x_f)]
            braking = state.v_f * state.v_f / (2.0 * p.a_min)
            if line - state.x_f >= braking + STOP_MARGIN:
                self.fallback_ = "stop"
                self.stop_at_ = state.x_f + braking
            else:
                self.fallback_ = "go"
            logger.info(
                "t=%.2f: %.1f m before the line at %.2f m/s, fallback %s",
                t,
                line - state.x_f,
                state.v_f,
                self.fallback_,
            )
        if self.fallback_ == "stop":
            return "stop", -p.a_min
        return "go", relaxed.hi

    def constraint_set(
        self,
        state: VehicleState,
        t: float,
        lead_accel: float = 0.0,
        mode: Optional[str] = None,
    ) -> List[MuConstraint]:
        """Return the H1, H2 and (with signals) H3 constraints of the mode."""
        mode = mode or self.mode
        p = self._vehicle
        if mode == "constrained_input":
            constraints = [
                h1_constraint(state, p, True, lead_accel),
                h2_constraint(state, p),
            ]
            if self.has_signals:
                constraints.append(
                    h3_constraint_deg1(state, t, self._cbf_deg1, self._alpha_h3)
                )
        else:
            constraints = [h1_constraint(state, p), h2_constraint(state, p)]
            if self.has_signals:
                gain = self._update_rates(state, t)
                constraints.append(h3_constraint_deg2(state, t, self._cbf_deg2, gain))
        return constraints

    def assemble_and_filter(
        self,
        state: VehicleState,
        t: float,
        lead_accel: float = 0.0,
        mode: Optional[str] = None,
    ) -> FilterDiagnostics:
        """Return the filtered force and a diagnostic record for one step.

        Parameters
        ----------
        state : VehicleState
        t : float
            Current time, in s.
        lead_accel : float, default=0.0
            Measured lead acceleration, used by the stopping-distance H1.
        mode : str, optional
            Overrides the filter mode for this call.

        Returns
        -------
        FilterDiagnostics

        Raises
        ------
        DomainError
            If no traffic barrier piece is active, e.g. beyond the last stop line.
        StateOutsideSafeSetError
            If the relative degree 2 rates cannot be chosen.
        """
        mode = mode or self.mode
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, found {mode!r}")
        p = self._vehicle
        mu_nom = nominal_mu(state, self._gains, p)
        u_nom = mu_to_force(p, state.v_f, mu_nom)

        if self.has_signals:
            self._track_approach(state, t)
        constraints = self.constraint_set(state, t, lead_accel, mode)
        box = self.input_box(state) if mode == "constrained_input" else None
        interval = reduce_constraints(constraints, box=box)

        infeasible = interval.empty
        fallback = None
        if infeasible:
            fallback, mu = self._fallback(state, t, constraints, box)
            logger.warning(
                "t=%.2f: empty feasible set %s, fallback %s", t, interval, fallback
            )
        else:
            mu = project(mu_nom, interval)
            if self.fallback_ == "stop":
                fallback = "stop"
                mu = min(mu, self._stop_mu(state))

        overridden = infeasible or mu != mu_nom
        u = mu_to_force(p, state.v_f, mu) if overridden else u_nom
        if not overridden:
            mu = mu_nom

        active = [c.label for c in constraints if c.slack(mu) <= ACTIVE_TOL]
        if box is not None:
            if mu <= box[0] + ACTIVE_TOL:
                active.append(ConstraintLabel.INPUT_LO)
            if mu >= box[1] - ACTIVE_TOL:
                active.append(ConstraintLabel.INPUT_HI)

        self.overridden_ = overridden
        return FilterDiagnostics(
            u=u,
            mu=mu,
            u_nom=u_nom,
            mu_nom=mu_nom,
            active=tuple(active),
            infeasible=infeasible,
            overridden=overridden,
            constraints=tuple(constraints),
            interval=interval,
            fallback=fallback,
        )

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the safety filter.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        from tvcbf.traffic import SignalTiming

        signals = (
            SignalTiming.from_offset(1000.0, offset=0.0, horizon=100.0),
            SignalTiming.from_offset(2000.0, offset=7.0, horizon=100.0),
        )
        params1 = {}
        params2 = {"signals": signals, "horizon": 100.0}
        params3 = {
            "signals": signals,
            "horizon": 100.0,
            "mode": "unconstrained_input",
            "gains": PIDGains(k3=0.0),
            "lambda_min": 0.5,
        }
        return [params1, params2, params3]
