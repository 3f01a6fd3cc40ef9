# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Reduction of scalar linear constraints to an interval, and projection onto it."""
from __future__ import annotations

import math
from typing import Iterable, List, NamedTuple, Optional, Tuple

from tvcbf._exceptions import QPInfeasibleError
from tvcbf.qp._constraint import MuConstraint

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["FeasibleInterval", "project", "reduce_constraints"]

# a == 0 constraints with b in [-ZERO_COEF_TOL, 0) count as satisfied
ZERO_COEF_TOL = 1e-12


class FeasibleInterval(NamedTuple):
    """Closed interval ``[lo, hi]`` of admissible μ, empty iff ``lo > hi``.

    Examples
    --------
    >>> from tvcbf.qp import FeasibleInterval
    >>> FeasibleInterval(-1.0, 2.0).empty
    False
    >>> FeasibleInterval(1.0, 0.0).empty
    True
    """

    lo: float = -math.inf
    hi: float = math.inf

    @property
    def empty(self) -> bool:
        """Whether the interval contains no point."""
        return self.lo > self.hi

    def contains(self, mu: float, tol: float = 0.0) -> bool:
        """Return whether ``lo - tol <= mu <= hi + tol``."""
        return self.lo - tol <= mu <= self.hi + tol

    def intersect(self, other: "FeasibleInterval") -> "FeasibleInterval":
        """Return the intersection with another interval."""
        return FeasibleInterval(max(self.lo, other.lo), min(self.hi, other.hi))


_EMPTY = FeasibleInterval(math.inf, -math.inf)


def reduce_constraints(
    constraints: Iterable[MuConstraint],
    box: Optional[Tuple[float, float]] = None,
    tol: float = ZERO_COEF_TOL,
) -> FeasibleInterval:
    """Intersect the half-lines ``a * mu <= b`` with an optional box.

    Parameters
    ----------
    constraints : iterable of MuConstraint
        Constraints with finite coefficients.
    box : tuple of two floats, or None, default=None
        Bounds ``(mu_min, mu_max)``; None means μ is unbounded.
    tol : float, default=1e-12
        Constraints with ``a == 0`` and ``-tol <= b < 0`` are treated as
        satisfied, absorbing floating point noise.

    Returns
    -------
    FeasibleInterval
        The feasible set; an empty interval is returned, not raised.

    Examples
    --------
    >>> from tvcbf.qp import MuConstraint, reduce_constraints
    >>> reduce_constraints([MuConstraint(1.0, 3.0), MuConstraint(2.0, 4.0)])
    FeasibleInterval(lo=-inf, hi=2.0)
    >>> reduce_constraints([MuConstraint(-1.0, -1.0), MuConstraint(1.0, 0.0)]).empty
    True
    >>> reduce_constraints([MuConstraint(0.0, -1.0)]).empty
    True
    >>> reduce_constraints([MuConstraint(1.0, 5.0)], box=(-3.0, 2.0))
    FeasibleInterval(lo=-3.0, hi=2.0)
    """
    lo, hi = (-math.inf, math.inf) if box is None else (float(box[0]), float(box[1]))
    for constraint in constraints:
        a, b = constraint.a, constraint.b
        if a > 0:
            hi = min(hi, b / a)
        elif a < 0:
            lo = max(lo, b / a)
        elif b < -tol:
            return _EMPTY
    return FeasibleInterval(lo, hi)


def project(u_nom_mu: float, interval: FeasibleInterval) -> float:
    """Return the point of ``interval`` closest to ``u_nom_mu``.

    This is the exact minimiser of ``|mu - u_nom_mu|**2`` over the interval.

    Parameters
    ----------
    u_nom_mu : float
        Nominal synthetic input.
    interval : FeasibleInterval
        Output of :func:`reduce_constraints`.

    Returns
    -------
    float

    Raises
    ------
    QPInfeasibleError
        If the interval is empty.

    Examples
    --------
    >>> from tvcbf.qp import FeasibleInterval, project
    >>> project(0.5, FeasibleInterval(-1.0, 1.0))
    0.5
    >>> project(3.0, FeasibleInterval(-1.0, 1.0))
    1.0
    """
    if interval.empty:
        raise QPInfeasibleError(
            f"feasible interval [{interval.lo}, {interval.hi}] is empty"
        )
    return min(max(u_nom_mu, interval.lo), interval.hi)
