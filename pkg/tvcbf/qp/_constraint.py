# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Linear inequality on the synthetic input μ."""
from enum import Enum
from typing import List, NamedTuple, Optional

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["ConstraintLabel", "MuConstraint"]


class ConstraintLabel(str, Enum):
    """Origin of a constraint in the safety filter."""

    H1 = "H1"
    H2 = "H2"
    H3 = "H3"
    INPUT_LO = "InputLo"
    INPUT_HI = "InputHi"

    def __str__(self) -> str:
        return self.value


class MuConstraint(NamedTuple):
    """One linear inequality ``a * mu <= b``.

    Parameters
    ----------
    a : float
        Coefficient of μ. May be negative, in which case the constraint is a
        lower bound ``mu >= b / a``.
    b : float
        Right-hand side, in m/s².
    label : ConstraintLabel or None, default=None
        Where the constraint comes from; None for constraints built outside the
        safety filter.

    Examples
    --------
    >>> from tvcbf.qp import MuConstraint
    >>> c = MuConstraint(a=2.0, b=4.0)
    >>> c.is_satisfied(1.5), c.is_satisfied(2.5)
    (True, False)
    >>> c.slack(1.0)
    2.0
    """

    a: float
    b: float
    label: Optional[ConstraintLabel] = None

    def slack(self, mu: float) -> float:
        """Return ``b - a * mu``; non-negative iff ``mu`` satisfies the constraint."""
        return self.b - self.a * mu

    def is_satisfied(self, mu: float, tol: float = 0.0) -> bool:
        """Return whether ``a * mu <= b + tol``."""
        return self.a * mu <= self.b + tol
