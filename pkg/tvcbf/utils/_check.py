# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Utility functions to perform various types of checks."""
from __future__ import annotations

import math
import numbers
from typing import Any, Type

import numpy as np

__all__ = ["check_finite", "check_nonnegative", "check_positive"]
__author__ = ["tvcbf developers"]


def _is_real(x: Any) -> bool:
    return isinstance(x, numbers.Real) and not isinstance(x, bool)


def check_finite(x: Any, name: str = "value", error: Type[Exception] = ValueError):
    """Check that `x` is a finite real scalar or an array of finite reals.

    Parameters
    ----------
    x : float or array-like
        The value to check.
    name : str, default="value"
        Name used in the error message.
    error : Exception class, default=ValueError
        Exception raised when the check fails.

    Returns
    -------
    x : float or np.ndarray
        The input, converted to float for scalars.

    Raises
    ------
    error
        If `x` is not numeric or contains NaN or infinite values.

    Examples
    --------
    >>> from tvcbf.utils import check_finite
    >>> check_finite(3)
    3.0
    >>> check_finite(float("inf"), name="u")
    Traceback (most recent call last):
        ...
    ValueError: u must be finite, found inf
    """
    if _is_real(x):
        if not math.isfinite(x):
            raise error(f"{name} must be finite, found {x}")
        return float(x)
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise error(f"{name} must be finite, found {arr}")
    return arr


def check_positive(x: Any, name: str = "value", error: Type[Exception] = ValueError):
    """Check that `x` is a finite real scalar strictly greater than zero.

    Examples
    --------
    >>> from tvcbf.utils import check_positive
    >>> check_positive(0.5, name="dt")
    0.5
    >>> check_positive(0, name="dt")
    Traceback (most recent call last):
        ...
    ValueError: dt must be > 0, found 0
    """
    if not _is_real(x) or not math.isfinite(x):
        raise error(f"{name} must be a finite real number, found {x!r}")
    if x <= 0:
        raise error(f"{name} must be > 0, found {x}")
    return float(x)


def check_nonnegative(
    x: Any, name: str = "value", error: Type[Exception] = ValueError
):
    """Check that `x` is a finite real scalar greater than or equal to zero."""
    if not _is_real(x) or not math.isfinite(x):
        raise error(f"{name} must be a finite real number, found {x!r}")
    if x < 0:
        raise error(f"{name} must be >= 0, found {x}")
    return float(x)
