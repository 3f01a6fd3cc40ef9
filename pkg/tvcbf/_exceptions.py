# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Custom exceptions used in ``tvcbf``."""
from typing import List, Optional

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = [
    "TVCBFError",
    "DomainError",
    "HorizonError",
    "PastLastSignalError",
    "ConstructionError",
    "DegenerateConstraintError",
    "StateOutsideSafeSetError",
    "NumericError",
    "QPInfeasibleError",
    "ConfigError",
]


class TVCBFError(Exception):
    """Base class of all errors raised by ``tvcbf``."""


class DomainError(TVCBFError, ValueError):
    """Raised when a time or state lies outside the domain of an object.

    This class inherits from ValueError so that callers catching argument
    errors keep working.
    """


class HorizonError(DomainError):
    """Raised when a time is not covered by a signal's broadcast cycles."""


class PastLastSignalError(DomainError):
    """Raised when the ego position lies beyond the last stop line."""


class ConstructionError(TVCBFError, ValueError):
    """Raised when an object cannot be built from the given parameters."""


class DegenerateConstraintError(TVCBFError, ValueError):
    """Raised when the input coefficient of a barrier constraint vanishes."""


class StateOutsideSafeSetError(TVCBFError, ValueError):
    """Raised when a state expected to be safe has a non-positive barrier."""


class NumericError(TVCBFError, FloatingPointError):
    """Raised when a computation produces non-finite values.

    Parameters
    ----------
    message : str
        Description of the failure.
    step : int, optional
        Index of the simulation step at which the failure occurred.
    """

    def __init__(self, message: str = "", step: Optional[int] = None):
        self.step = step
        if step is not None:
            message = f"{message} (step {step})"
        super().__init__(message)


class QPInfeasibleError(TVCBFError, ValueError):
    """Raised when the safety filter's feasible input interval is empty."""


class ConfigError(TVCBFError, ValueError):
    """Raised when a scenario configuration is malformed."""
