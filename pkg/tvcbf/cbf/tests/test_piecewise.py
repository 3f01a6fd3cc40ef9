# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Tests of the piecewise barrier container and its switching rule.

tests in this module:

    test_active_piece_half_open_convention
    test_active_piece_single_piece
    test_active_piece_raises_outside_horizon
    test_construction_rejects_invalid_pieces
    test_mu_constraint_uses_active_piece
"""
import math
from typing import List

import pytest

from tvcbf._exceptions import ConstructionError, DomainError
from tvcbf.cbf import (
    AffineTimeCBFPiece,
    LinearClassK,
    PiecewiseTVCBF,
    SingleIntegrator,
)

__author__: List[str] = ["tvcbf developers"]


def _two_pieces():
    return PiecewiseTVCBF(
        pieces=[
            AffineTimeCBFPiece(slope=1.0, t_start=0.0, t_end=10.0),
            AffineTimeCBFPiece(slope=2.0, t_start=10.0, t_end=20.0),
        ]
    )


def test_active_piece_half_open_convention():
    """Test that a boundary belongs to the incoming piece."""
    cbf = _two_pieces()
    assert cbf.active_piece(10.0) == 1
    assert cbf.active_piece(9.999) == 0
    assert cbf.active_piece(0.0) == 0
    assert list(cbf.boundaries) == [10.0]


def test_active_piece_single_piece():
    """Test that a single piece covering the horizon is always active."""
    cbf = PiecewiseTVCBF(pieces=[AffineTimeCBFPiece(t_start=0.0, t_end=math.inf)])
    for t in [0.0, 1.0, 1e6]:
        assert cbf.active_piece(t) == 0


@pytest.mark.parametrize("t", [-0.1, 20.0, 25.0])
def test_active_piece_raises_outside_horizon(t):
    """Test that times outside the covered horizon raise DomainError."""
    with pytest.raises(DomainError):
        _two_pieces().active_piece(t)


def test_construction_rejects_invalid_pieces():
    """Test gaps, overlaps, mixed degrees and wrong class-K counts."""
    with pytest.raises(ConstructionError):
        PiecewiseTVCBF(pieces=[])
    with pytest.raises(ConstructionError):
        PiecewiseTVCBF(
            pieces=[
                AffineTimeCBFPiece(t_start=0.0, t_end=1.0),
                AffineTimeCBFPiece(t_start=1.5, t_end=2.0),
            ]
        )
    with pytest.raises(ConstructionError):
        PiecewiseTVCBF(
            pieces=[
                AffineTimeCBFPiece(t_start=0.0, t_end=1.0),
                AffineTimeCBFPiece(t_start=0.5, t_end=2.0),
            ]
        )
    with pytest.raises(ConstructionError):
        PiecewiseTVCBF(
            pieces=[
                AffineTimeCBFPiece(t_start=0.0, t_end=1.0),
                AffineTimeCBFPiece(t_start=1.0, t_end=2.0, rel_degree=2),
            ]
        )
    with pytest.raises(ConstructionError):
        PiecewiseTVCBF(
            pieces=[AffineTimeCBFPiece(t_start=0.0, t_end=1.0)],
            alphas=[LinearClassK(), LinearClassK()],
        )
    with pytest.raises(ConstructionError):
        AffineTimeCBFPiece(t_start=1.0, t_end=1.0)


def test_mu_constraint_uses_active_piece():
    """Test that the switching rule applies the piece active at t."""
    cbf = _two_pieces()
    dyn = SingleIntegrator()
    before = cbf.mu_constraint(9.5, [0.0], dyn)
    after = cbf.mu_constraint(10.0, [0.0], dyn)
    assert before.b == pytest.approx(1.0 + 9.5)
    assert after.b == pytest.approx(2.0 + 20.0)
