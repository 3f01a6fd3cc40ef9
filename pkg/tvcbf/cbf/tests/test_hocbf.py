# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Tests of β-cascades and safe-input constraints.

tests in this module:

    test_beta_cascade_relative_degree_one
    test_beta_cascade_relative_degree_two_static_state
    test_beta_cascade_raises_outside_interval
    test_beta0_equals_piece_value
    test_mu_constraint_speed_limit_piece
    test_mu_constraint_time_only_barrier_is_always_feasible
    test_mu_constraint_raises_when_relative_degree_violated
    test_mu_constraint_degree_two_matches_finite_difference
    test_affine_piece_derivatives_match_finite_difference
"""
from typing import List

import numpy as np
import pytest
from skbase.utils import check_random_state

from tvcbf._exceptions import DegenerateConstraintError, DomainError
from tvcbf.cbf import (
    AffineTimeCBFPiece,
    BaseCBFPiece,
    DoubleIntegrator,
    LinearClassK,
    SingleIntegrator,
    beta_cascade,
    hocbf_mu_constraint,
)

__author__: List[str] = ["tvcbf developers"]


class _ConstantPiece(BaseCBFPiece):
    """Barrier h(t, x) = value with no dependence on t or x."""

    def __init__(self, value=3.0, t_start=0.0, t_end=10.0, rel_degree=1):
        self.value = value
        self.t_start = t_start
        self.t_end = t_end
        self.rel_degree = rel_degree
        super().__init__()

    def _evaluate(self, t, x):
        return self.value

    def _time_derivative(self, t, x, order):
        return 0.0

    def _state_gradient(self, t, x):
        return np.zeros(len(x))


def test_beta_cascade_relative_degree_one():
    """Test β₀ for relative degree one pieces, including the toy example."""
    # h = 5 - x at x = 0, decreasing at rate 1 under t -> h(t) = 5 - t
    piece = AffineTimeCBFPiece(slope=-1.0, intercept=5.0, t_start=0.0, t_end=10.0)
    betas = beta_cascade(piece, [LinearClassK()], 0.0, [0.0], SingleIntegrator())
    assert betas == [5.0]
    # β₁ would be ḣ + α(h) = -1 + 5
    assert piece.time_derivative(0.0, [0.0]) + LinearClassK()(betas[0]) == 4.0

    toy = AffineTimeCBFPiece(slope=100.0, t_start=0.0, t_end=1.0)
    assert beta_cascade(toy, None, 0.0, [0.0], SingleIntegrator()) == [0.0]


def test_beta_cascade_relative_degree_two_static_state():
    """Test β₁ = ḣ + α₁(h) for a relative degree two piece at rest."""
    piece = AffineTimeCBFPiece(slope=0.0, intercept=1.0, rel_degree=2)
    betas = beta_cascade(
        piece,
        [LinearClassK(2.0), LinearClassK(1.0)],
        0.0,
        [0.0, 0.0],
        DoubleIntegrator(),
    )
    assert betas == [1.0, 2.0]


def test_beta_cascade_raises_outside_interval():
    """Test that evaluating a piece outside its interval raises DomainError."""
    piece = AffineTimeCBFPiece(slope=100.0, t_start=0.0, t_end=1.0)
    with pytest.raises(DomainError):
        beta_cascade(piece, None, 1.0, [0.0], SingleIntegrator())
    with pytest.raises(DomainError):
        hocbf_mu_constraint(piece, None, -0.5, [0.0], SingleIntegrator())


def test_beta0_equals_piece_value():
    """Test that β₀ is exactly the piece value on random inputs."""
    rng = check_random_state(3)
    piece = AffineTimeCBFPiece(slope=3.3, intercept=-1.7, t_end=50.0, rel_degree=2)
    for _ in range(200):
        t = rng.uniform(0.0, 50.0)
        x = rng.uniform(-10.0, 10.0, size=2)
        betas = beta_cascade(piece, None, t, x, DoubleIntegrator())
        assert betas[0] == piece.evaluate(t, x)


def test_mu_constraint_speed_limit_piece():
    """Test the speed limit barrier V_max - V gives mu <= V_max - V."""
    piece = AffineTimeCBFPiece(slope=0.0, intercept=20.0, state_index=1)
    constraint = hocbf_mu_constraint(
        piece, [LinearClassK()], 0.0, [0.0, 15.0], DoubleIntegrator()
    )
    assert constraint.a == 1.0
    assert constraint.b == 5.0


def test_mu_constraint_time_only_barrier_is_always_feasible():
    """Test that a constant barrier yields 0 * mu <= α(c)."""
    constraint = hocbf_mu_constraint(
        _ConstantPiece(value=3.0), [LinearClassK(2.0)], 1.0, [7.0], SingleIntegrator()
    )
    assert constraint.a == 0.0
    assert constraint.b == 6.0


def test_mu_constraint_raises_when_relative_degree_violated():
    """Test that a position barrier declared as degree one is degenerate."""
    piece = AffineTimeCBFPiece(slope=1.0, state_index=0, rel_degree=1)
    with pytest.raises(DegenerateConstraintError):
        hocbf_mu_constraint(piece, None, 0.0, [0.0, 1.0], DoubleIntegrator())


def test_mu_constraint_degree_two_matches_finite_difference():
    """Test the degree two constraint against a finite difference of β₁.

    Along a trajectory with constant input, β̇₁ = b - α₂(β₁) - a * mu.
    """
    piece = AffineTimeCBFPiece(slope=2.0, intercept=30.0, t_end=100.0, rel_degree=2)
    alphas = [LinearClassK(0.7), LinearClassK(1.3)]
    dyn = DoubleIntegrator()
    mu = -0.8

    def state(t):
        # exact flow of the double integrator from (0, 4) under constant mu
        return np.array([4.0 * t + 0.5 * mu * t**2, 4.0 + mu * t])

    for t in [0.5, 3.0, 7.5]:
        eps = 1e-5
        beta1_plus = beta_cascade(piece, alphas, t + eps, state(t + eps), dyn)[1]
        beta1_minus = beta_cascade(piece, alphas, t - eps, state(t - eps), dyn)[1]
        fd = (beta1_plus - beta1_minus) / (2 * eps)
        constraint = hocbf_mu_constraint(piece, alphas, t, state(t), dyn)
        beta1 = beta_cascade(piece, alphas, t, state(t), dyn)[1]
        expected = constraint.b - alphas[1](beta1) - constraint.a * mu
        assert fd == pytest.approx(expected, rel=1e-5, abs=1e-6)


def test_affine_piece_derivatives_match_finite_difference():
    """Test closed form derivatives against central finite differences."""
    rng = check_random_state(4)
    piece = AffineTimeCBFPiece(slope=-4.2, intercept=11.0, t_end=20.0, state_index=1)
    eps = 1e-6
    for _ in range(50):
        t = rng.uniform(1.0, 19.0)
        x = rng.uniform(-5.0, 5.0, size=3)
        fd_t = (piece.evaluate(t + eps, x) - piece.evaluate(t - eps, x)) / (2 * eps)
        assert fd_t == pytest.approx(piece.time_derivative(t, x), rel=1e-5)
        grad = piece.state_gradient(t, x)
        for i in range(3):
            dx = np.zeros(3)
            dx[i] = eps
            fd_x = (piece.evaluate(t, x + dx) - piece.evaluate(t, x - dx)) / (2 * eps)
            assert fd_x == pytest.approx(grad[i], rel=1e-5, abs=1e-7)
