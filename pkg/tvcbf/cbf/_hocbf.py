# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""β-cascades and safe-input constraints of time-varying high order barriers.

For a piece h of relative degree m along ẋ = f(t, x) + g(t, x) μ the cascade is

    β₀ = h,    βₖ = β̇ₖ₋₁ + αₖ(βₖ₋₁),

where β̇ is the total time derivative along the drift. The barrier condition
βₘ ≥ 0 is affine in μ and is returned as ``a * mu <= b``.
"""
from typing import List, Sequence

import numpy as np

from tvcbf._exceptions import DegenerateConstraintError
from tvcbf.cbf._class_k import BaseClassK, LinearClassK
from tvcbf.cbf._piece import BaseCBFPiece
from tvcbf.qp import MuConstraint

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["beta_cascade", "hocbf_mu_constraint"]

# input coefficients below this magnitude are treated as zero
_DEGENERATE_TOL = 1e-12


def _resolve_alphas(piece: BaseCBFPiece, alphas) -> List[BaseClassK]:
    if alphas is None:
        return [LinearClassK() for _ in range(piece.rel_degree)]
    alphas = list(alphas)
    if len(alphas) < piece.rel_degree:
        raise ValueError(
            f"piece has relative degree {piece.rel_degree} but only "
            f"{len(alphas)} class-K functions were given"
        )
    return alphas


def _first_order_terms(piece, alphas, t, x, dynamics):
    """Return β₀, β₁ and the pieces needed to differentiate β₁ once more."""
    h = piece._evaluate(t, x)
    h_t = piece._time_derivative(t, x, 1)
    grad = piece._state_gradient(t, x)
    f = dynamics.drift(t, x)
    beta1 = h_t + grad @ f + alphas[0](h)
    return h, h_t, grad, f, beta1


def beta_cascade(
    piece: BaseCBFPiece,
    alphas: Sequence[BaseClassK],
    t: float,
    x,
    dynamics,
) -> List[float]:
    """Return β₀, …, βₘ₋₁ of ``piece`` at ``(t, x)``.

    Parameters
    ----------
    piece : BaseCBFPiece
        Piece with relative degree m; ``t`` must lie in its interval.
    alphas : sequence of BaseClassK or None
        Class-K functions α₁, …; None means α(r) = r.
    t : float
        Time in seconds.
    x : array-like
        State vector.
    dynamics : BaseControlAffineSystem
        System along which total derivatives are taken.

    Returns
    -------
    list of float
        ``[β₀]`` for m = 1, ``[β₀, β₁]`` for m = 2. β₀ equals
        ``piece.evaluate(t, x)`` exactly.

    Raises
    ------
    DomainError
        If ``t`` is outside the piece interval.

    Examples
    --------
    >>> from tvcbf.cbf import AffineTimeCBFPiece, SingleIntegrator, beta_cascade
    >>> piece = AffineTimeCBFPiece(slope=100.0, t_start=0.0, t_end=1.0)
    >>> beta_cascade(piece, None, 0.0, [0.0], SingleIntegrator())
    [0.0]
    """
    beta0 = piece.evaluate(t, x)
    if piece.rel_degree == 1:
        return [beta0]
    x = np.asarray(x, dtype=float)
    alphas = _resolve_alphas(piece, alphas)
    _, _, _, _, beta1 = _first_order_terms(piece, alphas, t, x, dynamics)
    return [beta0, float(beta1)]


def hocbf_mu_constraint(
    piece: BaseCBFPiece,
    alphas: Sequence[BaseClassK],
    t: float,
    x,
    dynamics,
) -> MuConstraint:
    """Return the barrier condition of ``piece`` as ``a * mu <= b``.

    For relative degree 1 the condition ḣ + α₁(h) ≥ 0 gives
    ``-(∇h·g) mu <= ∂h/∂t + ∇h·f + α₁(h)``. For relative degree 2 the
    condition β̇₁ + α₂(β₁) ≥ 0 is expanded with the chain rule, using the
    piece's mixed and second derivatives and the drift Jacobian.

    Parameters
    ----------
    piece : BaseCBFPiece
        Piece with relative degree 1 or 2.
    alphas : sequence of BaseClassK or None
        Class-K functions α₁, …; None means α(r) = r.
    t : float
        Time in seconds, inside the piece interval.
    x : array-like
        State vector.
    dynamics : BaseControlAffineSystem
        Control-affine system with scalar input μ.

    Returns
    -------
    MuConstraint

    Raises
    ------
    DomainError
        If ``t`` is outside the piece interval.
    DegenerateConstraintError
        If the barrier depends on the state but the input coefficient of its
        m-th derivative vanishes, i.e. the relative degree is violated at x.

    Examples
    --------
    >>> from tvcbf.cbf import AffineTimeCBFPiece, SingleIntegrator
    >>> from tvcbf.cbf import hocbf_mu_constraint
    >>> piece = AffineTimeCBFPiece(slope=100.0, t_start=0.0, t_end=1.0)
    >>> hocbf_mu_constraint(piece, None, 0.5, [20.0], SingleIntegrator())
    MuConstraint(a=1.0, b=130.0, label=None)
    """
    piece._check_time(t)
    x = np.asarray(x, dtype=float)
    alphas = _resolve_alphas(piece, alphas)
    g = dynamics.input_gain(t, x)

    if piece.rel_degree == 1:
        h = piece._evaluate(t, x)
        grad = piece._state_gradient(t, x)
        f = dynamics.drift(t, x)
        lg = float(grad @ g)
        b = piece._time_derivative(t, x, 1) + float(grad @ f) + alphas[0](h)
        _check_input_coefficient(lg, grad, piece, t)
        return MuConstraint(a=-lg, b=float(b))

    h, h_t, grad, f, beta1 = _first_order_terms(piece, alphas, t, x, dynamics)
    d_alpha1 = alphas[0].derivative(h)
    grad_t = piece._time_state_gradient(t, x)
    hess = piece._state_hessian(t, x)
    jac = dynamics.drift_jacobian(t, x)
    f_t = dynamics.drift_time_derivative(t, x)

    beta1_t = (
        piece._time_derivative(t, x, 2) + grad_t @ f + grad @ f_t + d_alpha1 * h_t
    )
    beta1_grad = grad_t + hess @ f + jac.T @ grad + d_alpha1 * grad
    lg = float(beta1_grad @ g)
    b = beta1_t + beta1_grad @ f + alphas[1](beta1)
    _check_input_coefficient(lg, grad, piece, t)
    return MuConstraint(a=-lg, b=float(b))


def _check_input_coefficient(lg, grad, piece, t):
    if abs(lg) <= _DEGENERATE_TOL and np.any(grad != 0.0):
        raise DegenerateConstraintError(
            f"input coefficient of {type(piece).__name__} vanishes at t={t}; "
            f"relative degree {piece.rel_degree} is violated at this state"
        )
