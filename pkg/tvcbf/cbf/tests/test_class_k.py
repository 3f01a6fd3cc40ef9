# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Tests of class-K functions.

tests in this module:

    test_linear_class_k_vanishes_at_zero
    test_linear_class_k_strictly_increasing
    test_linear_class_k_rejects_non_positive_slope
"""
from typing import List

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tvcbf.cbf import LinearClassK

__author__: List[str] = ["tvcbf developers"]

reals = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


@pytest.mark.parametrize("slope", [0.1, 1.0, 6.0])
def test_linear_class_k_vanishes_at_zero(slope):
    """Test that α(0) = 0 and dα/dr is the slope."""
    alpha = LinearClassK(slope=slope)
    assert alpha(0.0) == 0.0
    assert alpha.derivative(3.0) == slope


@given(r1=reals, r2=reals, slope=st.floats(min_value=1e-3, max_value=1e3))
def test_linear_class_k_strictly_increasing(r1, r2, slope):
    """Test that r1 < r2 implies α(r1) < α(r2) on sampled pairs."""
    if r1 == r2:
        return
    r1, r2 = min(r1, r2), max(r1, r2)
    alpha = LinearClassK(slope=slope)
    assert alpha(r1) <= alpha(r2)
    if alpha(r1) != alpha(r2):
        assert alpha(r1) < alpha(r2)


@pytest.mark.parametrize("slope", [0.0, -1.0, float("nan")])
def test_linear_class_k_rejects_non_positive_slope(slope):
    """Test that the slope must be strictly positive."""
    with pytest.raises(ValueError):
        LinearClassK(slope=slope)
