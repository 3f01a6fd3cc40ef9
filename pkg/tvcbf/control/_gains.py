# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Class-K rates of the relative degree 2 traffic barrier and their gains."""
import logging
from typing import List, NamedTuple, Optional, Tuple

from tvcbf._exceptions import StateOutsideSafeSetError
from tvcbf.cbf import BaseCBFPiece, BaseControlAffineSystem
from tvcbf.utils import check_positive

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["PolePlacementGain", "pole_placement_gain", "select_lambdas"]

logger = logging.getLogger(__name__)


class PolePlacementGain(NamedTuple):
    """State feedback gain K_α = (k_p, k_d) on (h, ḣ) of the barrier cascade."""

    k_p: float
    k_d: float


def pole_placement_gain(lambda1: float, lambda2: float) -> PolePlacementGain:
    """Return the gain placing the cascade poles at ``-lambda1`` and ``-lambda2``.

    The cascade is a double integrator in h, so the closed loop has the
    characteristic polynomial ``(s + λ1)(s + λ2) = s² + (λ1 + λ2) s + λ1 λ2``.

    Parameters
    ----------
    lambda1, lambda2 : float
        Positive class-K rates.

    Returns
    -------
    PolePlacementGain

    Raises
    ------
    ValueError
        If a rate is not positive.

    Examples
    --------
    >>> from tvcbf.control import pole_placement_gain
    >>> pole_placement_gain(2.0, 3.0)
    PolePlacementGain(k_p=6.0, k_d=5.0)
    """
    check_positive(lambda1, name="lambda1")
    check_positive(lambda2, name="lambda2")
    return PolePlacementGain(k_p=lambda1 * lambda2, k_d=lambda1 + lambda2)


def select_lambdas(
    x0,
    t0: float,
    piece: BaseCBFPiece,
    lambda_min: float = 0.1,
    dynamics: Optional[BaseControlAffineSystem] = None,
    decay_rate: float = 0.0,
) -> Tuple[float, float]:
    """Choose the class-K rates of a relative degree 2 piece at its activation.

    With β₀ = h(t₀, x₀), the total derivative ḣ = ∂h/∂t + ∇h·f and
    β₁ = ḣ + λ1 β₀ at ``(t₀, x₀)``:

    * ``λ1 = max(lambda_min, decay_rate, -ḣ / β₀ + lambda_min)``
    * ``λ2 = max(lambda_min, -∂²h/∂t² / β₁)``

    The λ1 rule gives ``β₁ >= lambda_min β₀ > 0``, also when the piece becomes
    active in the middle of a transition.

    Parameters
    ----------
    x0 : array-like
        State at activation, e.g. a ``VehicleState``.
    t0 : float
        Activation time, a green onset or the time the region changed.
    piece : BaseCBFPiece
        Relative degree 2 piece active at ``t0``.
    lambda_min : float, default=0.1
        Positive floor of both rates and margin of the λ1 bound.
    dynamics : BaseControlAffineSystem, optional
        Drift used for ḣ; defaults to the car-following model.
    decay_rate : float, default=0.0
        Largest relative decay ``-ḣ_t / h_t`` of the moving bound of the piece,
        τ for the sigmoid bound. With λ1 at least this rate, ``ḣ + λ1 h >= 0``
        stays reachable at standstill through the whole transition.

    Returns
    -------
    (float, float)
        ``(λ1, λ2)``.

    Raises
    ------
    StateOutsideSafeSetError
        If β₀ is not positive at activation.

    Examples
    --------
    >>> from tvcbf.cbf import AffineTimeCBFPiece, DoubleIntegrator
    >>> from tvcbf.control import select_lambdas
    >>> piece = AffineTimeCBFPiece(slope=-100.0, intercept=1000.0, rel_degree=2)
    >>> lam = select_lambdas([0.0, -10.0], 0.0, piece, 0.05, DoubleIntegrator())
    >>> round(lam[0], 6), lam[1]
    (0.14, 0.05)
    >>> select_lambdas([0.0, 0.0], 0.0, piece, 0.05, DoubleIntegrator(), 6.0)[0]
    6.0
    """
    check_positive(lambda_min, name="lambda_min")
    if dynamics is None:
        from tvcbf.vehicle import LongitudinalMuModel

        dynamics = LongitudinalMuModel()
    beta0 = piece.evaluate(t0, x0)
    if beta0 <= 0.0:
        raise StateOutsideSafeSetError(
            f"barrier value {beta0} at t={t0} is not positive, the state lies "
            "outside the safe set at activation"
        )
    h_t = piece.time_derivative(t0, x0, 1)
    h_dot = h_t + float(piece.state_gradient(t0, x0) @ dynamics.drift(t0, x0))
    lambda1 = max(lambda_min, decay_rate, -h_dot / beta0 + lambda_min)

    beta1 = h_dot + lambda1 * beta0
    h_tt = piece.time_derivative(t0, x0, 2)
    lambda2 = max(lambda_min, -h_tt / beta1)
    logger.debug("t=%.2f: lambda1=%.6g, lambda2=%.6g", t0, lambda1, lambda2)
    return lambda1, lambda2
