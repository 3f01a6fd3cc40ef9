# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Numerical check that safe sets nest across the jumps of a piecewise barrier."""
import logging
from typing import List, NamedTuple, Sequence, Tuple, Union

import numpy as np

from tvcbf.cbf._piecewise import PiecewiseTVCBF

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["JumpValidityReport", "check_all_jumps", "check_jump_validity"]

logger = logging.getLogger(__name__)


class JumpValidityReport(NamedTuple):
    """Outcome of :func:`check_jump_validity` at one boundary.

    Attributes
    ----------
    valid : bool
        Whether every derivative order passed on every sample.
    worst_margin : tuple of float
        Per derivative order k, the minimum over samples of
        dᵏh_new(t⁺) - dᵏh_old(t⁻).
    boundary_index : int
        Index of the boundary, i.e. of the outgoing piece.
    boundary_time : float
        Switching instant.
    worst_sample : tuple of int
        Per order, index of the sample attaining the worst margin.
    """

    valid: bool
    worst_margin: Tuple[float, ...]
    boundary_index: int
    boundary_time: float
    worst_sample: Tuple[int, ...]


def _one_sided(piece, t, x, order, dynamics):
    # closed forms of the piece evaluated at t; no check of the interval so
    # that the outgoing piece can be read at its (excluded) end point
    if order == 0:
        return piece._evaluate(t, x)
    value = piece._time_derivative(t, x, order)
    if dynamics is not None and order == 1:
        value += piece._state_gradient(t, x) @ dynamics.drift(t, x)
    return value


def check_jump_validity(
    cbf: PiecewiseTVCBF,
    boundary_index: int,
    state_samples,
    tol: Union[float, Sequence[float]] = 1e-6,
    dynamics=None,
) -> JumpValidityReport:
    """Check that the incoming piece dominates the outgoing one at a boundary.

    At boundary ``t_k`` between pieces ``k`` and ``k + 1`` the condition is

        dʲ/dtʲ h_{k+1}(t_k⁺, x) >= dʲ/dtʲ h_k(t_k⁻, x) - tol    for j < m

    on every sampled state x. Both sides are computed from the closed forms of
    the pieces; nothing is differentiated across the jump.

    Parameters
    ----------
    cbf : PiecewiseTVCBF
        Piecewise barrier with relative degree m.
    boundary_index : int
        Zero-based index k of the boundary between pieces k and k + 1.
    state_samples : array-like, shape (n_samples, n_states)
        States drawn from the admissible box.
    tol : float or sequence of float, default=1e-6
        Tolerance, either shared or one per derivative order.
    dynamics : BaseControlAffineSystem, optional
        If given, first derivatives are total derivatives along the drift;
        otherwise partial time derivatives are compared.

    Returns
    -------
    JumpValidityReport

    Raises
    ------
    ValueError
        If ``state_samples`` is empty or ``boundary_index`` is not internal.

    Examples
    --------
    >>> from tvcbf.cbf import AffineTimeCBFPiece, PiecewiseTVCBF
    >>> from tvcbf.cbf import check_jump_validity
    >>> cbf = PiecewiseTVCBF(
    ...     pieces=[
    ...         AffineTimeCBFPiece(slope=200.0, t_start=0.0, t_end=1.0),
    ...         AffineTimeCBFPiece(slope=100.0, t_start=1.0, t_end=2.0),
    ...     ]
    ... )
    >>> report = check_jump_validity(cbf, 0, [[0.0], [5.0]])
    >>> report.valid, report.worst_margin
    (False, (-100.0,))
    """
    samples = np.atleast_2d(np.asarray(state_samples, dtype=float))
    if samples.size == 0:
        raise ValueError("state_samples must contain at least one state")
    n_boundaries = len(cbf.pieces) - 1
    if not 0 <= boundary_index < n_boundaries:
        raise ValueError(
            f"boundary_index must lie in [0, {n_boundaries}), found {boundary_index}"
        )
    m = cbf.rel_degree
    tols = np.broadcast_to(np.asarray(tol, dtype=float), (m,))

    old = cbf.pieces[boundary_index]
    new = cbf.pieces[boundary_index + 1]
    t_b = new.t_start

    margins = np.empty((m, len(samples)))
    for i, x in enumerate(samples):
        for k in range(m):
            margins[k, i] = _one_sided(new, t_b, x, k, dynamics) - _one_sided(
                old, t_b, x, k, dynamics
            )

    worst = margins.min(axis=1)
    valid = bool(np.all(worst >= -tols))
    report = JumpValidityReport(
        valid=valid,
        worst_margin=tuple(float(w) for w in worst),
        boundary_index=boundary_index,
        boundary_time=float(t_b),
        worst_sample=tuple(int(i) for i in margins.argmin(axis=1)),
    )
    if not valid:
        logger.warning(
            "jump condition fails at t=%s: worst margins %s", t_b, report.worst_margin
        )
    return report


def check_all_jumps(
    cbf: PiecewiseTVCBF,
    state_samples,
    tol: Union[float, Sequence[float]] = 1e-6,
    dynamics=None,
) -> List[JumpValidityReport]:
    """Run :func:`check_jump_validity` at every internal boundary of ``cbf``."""
    return [
        check_jump_validity(cbf, k, state_samples, tol=tol, dynamics=dynamics)
        for k in range(len(cbf.pieces) - 1)
    ]

