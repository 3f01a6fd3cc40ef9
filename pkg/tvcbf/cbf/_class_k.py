# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Class-K functions used in barrier conditions."""
from typing import List

from skbase.base import BaseObject

from tvcbf.utils import check_positive

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["BaseClassK", "LinearClassK"]


class BaseClassK(BaseObject):
    """Continuous, strictly increasing function α with α(0) = 0.

    Descendants implement ``_evaluate`` and ``_derivative``.
    """

    _tags = {"object_type": "class_k"}

    def __call__(self, r: float) -> float:
        """Evaluate α(r)."""
        return self._evaluate(r)

    def derivative(self, r: float) -> float:
        """Evaluate dα/dr at r."""
        return self._derivative(r)

    def _evaluate(self, r):
        raise NotImplementedError("abstract method")

    def _derivative(self, r):
        raise NotImplementedError("abstract method")


class LinearClassK(BaseClassK):
    """Linear class-K function α(r) = slope * r.

    Parameters
    ----------
    slope : float, default=1.0
        Positive slope.

    Examples
    --------
    >>> from tvcbf.cbf import LinearClassK
    >>> alpha = LinearClassK(slope=2.0)
    >>> alpha(3.0), alpha.derivative(3.0)
    (6.0, 2.0)
    """

    def __init__(self, slope=1.0):
        self.slope = slope
        super().__init__()
        self._slope = check_positive(slope, name="slope")

    def _evaluate(self, r):
        return self._slope * r

    def _derivative(self, r):
        return self._slope

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the class-K function.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        return [{"slope": 1.0}, {"slope": 6.0}]
