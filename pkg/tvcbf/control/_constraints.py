# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Safe-input constraints of the three hard constraints, in the synthetic input μ.

Each generator returns a :class:`~tvcbf.qp.MuConstraint` ``a * mu <= b``:

* H1, spacing ``δ = X_r - h V_f - S0`` with α(r) = r, optionally augmented by
  the distance needed to cancel the relative speed at full braking;
* H2, speed limit ``V_max - V_f`` with α(r) = r;
* H3, the traffic signal barrier, either with relative degree 2 and a
  pole-placement gain, or with relative degree 1 through the stopping headway.
"""
from typing import List, Optional

from tvcbf.cbf import BaseClassK
from tvcbf.control._gains import PolePlacementGain
from tvcbf.qp import ConstraintLabel, MuConstraint
from tvcbf.traffic import TrafficCBF
from tvcbf.vehicle import VehicleParams, VehicleState

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "h1_constraint",
    "h2_constraint",
    "h3_constraint_deg1",
    "h3_constraint_deg2",
]


def h1_constraint(
    state: VehicleState,
    params: VehicleParams,
    with_stopping_distance: bool = False,
    lead_accel: float = 0.0,
) -> MuConstraint:
    """Safe-following constraint.

    Without stopping distance ``h mu <= V_r + δ``. With it the barrier is
    ``δ - V_r² / (2 a_min)`` and the constraint reads
    ``(h - V_r / a_min) mu <= δ - V_r² / (2 a_min) + V_r - V_r a_l / a_min``.

    Parameters
    ----------
    state : VehicleState
    params : VehicleParams
    with_stopping_distance : bool, default=False
        Whether to use the augmented barrier.
    lead_accel : float, default=0.0
        Measured lead acceleration a_l, used by the augmented barrier only.

    Returns
    -------
    MuConstraint
        Labelled H1. The coefficient is negative when ``V_r > h a_min``.

    Examples
    --------
    >>> from tvcbf.control import h1_constraint
    >>> from tvcbf.vehicle import VehicleParams, VehicleState
    >>> state = VehicleState(x_f=0.0, v_f=10.0, x_l=30.0, v_l=5.0)
    >>> c = h1_constraint(state, VehicleParams(), with_stopping_distance=True)
    >>> round(c.a, 4)
    2.6755
    """
    v_r = state.relative_speed
    delta = state.spacing_error(params)
    if not with_stopping_distance:
        return MuConstraint(a=params.headway, b=v_r + delta, label=ConstraintLabel.H1)
    a_min = params.a_min
    barrier = delta - v_r * v_r / (2.0 * a_min)
    return MuConstraint(
        a=params.headway - v_r / a_min,
        b=barrier + v_r - v_r * lead_accel / a_min,
        label=ConstraintLabel.H1,
    )


def h2_constraint(state: VehicleState, params: VehicleParams) -> MuConstraint:
    """Speed-limit constraint ``mu <= V_max - V_f``.

    Examples
    --------
    >>> from tvcbf.control import h2_constraint
    >>> from tvcbf.vehicle import VehicleParams, VehicleState
    >>> h2_constraint(VehicleState(0.0, 0.0, 10.0, 0.0), VehicleParams()).b
    16.67
    """
    return MuConstraint(a=1.0, b=params.v_max - state.v_f, label=ConstraintLabel.H2)


def _check_degree(traffic_cbf: TrafficCBF, degree: int):
    if traffic_cbf.degree != degree:
        raise ValueError(
            f"expected a relative degree {degree} traffic barrier, "
            f"found degree {traffic_cbf.degree}"
        )


def h3_constraint_deg2(
    state: VehicleState,
    t: float,
    traffic_cbf: TrafficCBF,
    gain: PolePlacementGain,
) -> MuConstraint:
    """Traffic signal constraint of the relative degree 2 barrier.

    ``mu <= ḧ_t + k_p h₃ + k_d (ḣ_t - V_f)`` where h_t is the moving bound of the
    active piece and ``(k_p, k_d)`` places the poles of the barrier cascade.

    Raises
    ------
    DomainError
        If no piece is active at ``(t, X_f)``; ``PastLastSignalError`` beyond the
        last stop line.
    """
    _check_degree(traffic_cbf, 2)
    piece = traffic_cbf.active_piece(t, state.x_f)
    h, terms = piece.barrier_terms(t, state.x_f, state.v_f)
    return MuConstraint(
        a=1.0,
        b=terms.second + gain.k_p * h + gain.k_d * (terms.first - state.v_f),
        label=ConstraintLabel.H3,
    )


def h3_constraint_deg1(
    state: VehicleState,
    t: float,
    traffic_cbf: TrafficCBF,
    alpha: Optional[BaseClassK] = None,
) -> MuConstraint:
    """Traffic signal constraint of the relative degree 1 barrier.

    With ``h̄₃ = h_t + p_i - X_f - γ V_f`` the constraint is
    ``γ mu <= α(h̄₃) + ḣ_t - V_f``; γ is the speed weight of the barrier.

    Parameters
    ----------
    state : VehicleState
    t : float
    traffic_cbf : TrafficCBF
        Barrier built with ``degree=1``.
    alpha : BaseClassK, optional
        Class-K function applied to h̄₃, default α(r) = r.

    Raises
    ------
    DomainError
        If no piece is active at ``(t, X_f)``.
    """
    _check_degree(traffic_cbf, 1)
    piece = traffic_cbf.active_piece(t, state.x_f)
    h, terms = piece.barrier_terms(t, state.x_f, state.v_f)
    decay = h if alpha is None else alpha(h)
    return MuConstraint(
        a=float(piece.gamma),
        b=decay + terms.first - state.v_f,
        label=ConstraintLabel.H3,
    )
