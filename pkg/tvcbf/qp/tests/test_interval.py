# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Tests of constraint reduction and interval projection.

tests in this module:

    test_reduce_constraints_examples
    test_reduce_constraints_zero_coefficient_noise
    test_project_raises_on_empty_interval
    test_project_matches_vertex_oracle
    test_project_matches_grid_search
    test_project_is_idempotent
    test_project_is_monotone
    test_adding_constraint_never_enlarges_interval
"""
import math
from typing import List

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from skbase.utils import check_random_state

from tvcbf._exceptions import QPInfeasibleError
from tvcbf.qp import FeasibleInterval, MuConstraint, project, reduce_constraints

__author__: List[str] = ["tvcbf developers"]

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)
coef = st.one_of(
    st.floats(min_value=-10.0, max_value=-0.1),
    st.floats(min_value=0.1, max_value=10.0),
)
constraint_st = st.builds(MuConstraint, a=coef, b=finite)


def _random_instance(rng):
    """Draw a random constraint set, box and nominal input."""
    n_con = rng.randint(0, 6)
    constraints = []
    for _ in range(n_con):
        kind = rng.uniform()
        if kind < 0.05:
            b = rng.choice([rng.uniform(0.0, 5.0), rng.uniform(-5.0, -0.1)])
            constraints.append(MuConstraint(0.0, float(b)))
        else:
            a = rng.uniform(0.1, 10.0) * rng.choice([-1.0, 1.0])
            constraints.append(MuConstraint(float(a), float(rng.uniform(-20, 20))))
    box = None
    if rng.uniform() < 0.5:
        lo = rng.uniform(-5.0, 0.0)
        box = (float(lo), float(lo + rng.uniform(0.1, 8.0)))
    u_nom = float(rng.uniform(-10.0, 10.0))
    return constraints, box, u_nom


def _vertex_oracle(constraints, box, u_nom, tol=1e-9):
    """Minimise |mu - u_nom| over candidate vertices; None if infeasible."""
    candidates = [u_nom] + [c.b / c.a for c in constraints if c.a != 0]
    if box is not None:
        candidates += list(box)

    def feasible(mu):
        ok = all(c.a * mu <= c.b + tol * (1 + abs(c.b)) for c in constraints)
        if box is not None:
            ok = ok and box[0] - tol <= mu <= box[1] + tol
        return ok

    admissible = [mu for mu in candidates if feasible(mu)]
    if not admissible:
        return None
    return min(admissible, key=lambda mu: abs(mu - u_nom))


def test_reduce_constraints_examples():
    """Test reduce_constraints on hand-computed instances."""
    interval = reduce_constraints([MuConstraint(1.0, 3.0), MuConstraint(2.0, 4.0)])
    assert interval.lo == -math.inf
    assert interval.hi == 2.0

    assert reduce_constraints([MuConstraint(-1.0, -1.0), MuConstraint(1.0, 0.0)]).empty
    assert reduce_constraints([MuConstraint(0.0, -1.0)]).empty
    assert reduce_constraints([MuConstraint(0.0, 2.0)]) == FeasibleInterval()

    interval = reduce_constraints([MuConstraint(-2.0, 1.0)], box=(-3.0, 4.0))
    assert interval == FeasibleInterval(-0.5, 4.0)


def test_reduce_constraints_zero_coefficient_noise():
    """Test that a == 0 constraints with tiny negative b are no-ops."""
    interval = reduce_constraints([MuConstraint(0.0, -1e-13)], box=(-1.0, 1.0))
    assert interval == FeasibleInterval(-1.0, 1.0)
    assert reduce_constraints([MuConstraint(0.0, -1e-11)], box=(-1.0, 1.0)).empty


def test_project_raises_on_empty_interval():
    """Test that projecting onto an empty interval raises QPInfeasibleError."""
    with pytest.raises(QPInfeasibleError):
        project(0.0, FeasibleInterval(1.0, 0.0))


def test_project_matches_vertex_oracle():
    """Test projection against vertex enumeration on 10^5 random instances."""
    rng = check_random_state(0)
    for _ in range(100_000):
        constraints, box, u_nom = _random_instance(rng)
        interval = reduce_constraints(constraints, box=box)
        expected = _vertex_oracle(constraints, box, u_nom)
        if expected is None:
            assert interval.empty
            continue
        assert not interval.empty
        assert abs(project(u_nom, interval) - expected) <= 1e-9 * (1 + abs(expected))


def test_project_matches_grid_search():
    """Test projection against a brute-force grid search with step 1e-4."""
    rng = check_random_state(1)
    step = 1e-4
    grid = np.arange(-5.0, 5.0 + step / 2, step)
    for _ in range(1_000):
        constraints, box, u_nom = _random_instance(rng)
        u_nom = float(np.clip(u_nom, -5.0, 5.0))
        mask = np.ones_like(grid, dtype=bool)
        for c in constraints:
            mask &= c.a * grid <= c.b
        if box is not None:
            mask &= (grid >= box[0]) & (grid <= box[1])
        interval = reduce_constraints(constraints, box=box)
        # restrict to the grid window so both sides search the same set
        window = interval.intersect(FeasibleInterval(-5.0, 5.0))
        if not mask.any():
            assert window.empty or window.hi - window.lo < step
            continue
        best = grid[mask][np.argmin(np.abs(grid[mask] - u_nom))]
        assert abs(project(u_nom, window) - best) <= step + 1e-12


@given(
    x=finite,
    lo=st.floats(min_value=-100.0, max_value=100.0),
    width=st.floats(min_value=0.0, max_value=100.0),
)
def test_project_is_idempotent(x, lo, width):
    """Test that projecting twice equals projecting once."""
    interval = FeasibleInterval(lo, lo + width)
    once = project(x, interval)
    assert project(once, interval) == once


@given(
    x1=finite,
    x2=finite,
    constraints=st.lists(constraint_st, min_size=1, max_size=5),
)
def test_project_is_monotone(x1, x2, constraints):
    """Test that projection preserves the order of nominal inputs."""
    interval = reduce_constraints(constraints, box=(-1e4, 1e4))
    if interval.empty:
        return
    x1, x2 = min(x1, x2), max(x1, x2)
    assert project(x1, interval) <= project(x2, interval)


@given(
    constraints=st.lists(constraint_st, min_size=0, max_size=5),
    extra=constraint_st,
)
def test_adding_constraint_never_enlarges_interval(constraints, extra):
    """Test that the feasible interval is antitone in the constraint set."""
    before = reduce_constraints(constraints)
    after = reduce_constraints(constraints + [extra])
    assert after.lo >= before.lo
    assert after.hi <= before.hi
