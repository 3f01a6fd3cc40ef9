# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Piecewise Cᵐ time-varying barrier function and its switching rule."""
from bisect import bisect_right
from typing import List

import numpy as np
from skbase.base import BaseObject

from tvcbf._exceptions import ConstructionError, DomainError
from tvcbf.cbf._class_k import BaseClassK, LinearClassK
from tvcbf.cbf._hocbf import beta_cascade, hocbf_mu_constraint
from tvcbf.cbf._piece import AffineTimeCBFPiece, BaseCBFPiece

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["PiecewiseTVCBF"]


class PiecewiseTVCBF(BaseObject):
    """Barrier defined by smooth pieces on contiguous half-open time intervals.

    Piece ``k`` is valid on ``[t_k, t_{k+1})``; at an internal boundary the
    incoming piece is active. All pieces share one relative degree ``m`` and the
    barrier carries ``m`` class-K functions for its β-cascade.

    Parameters
    ----------
    pieces : list of BaseCBFPiece
        Pieces ordered in time; ``pieces[k].t_end == pieces[k + 1].t_start``.
    alphas : list of BaseClassK, optional
        Class-K functions α₁..αₘ. Defaults to α(r) = r for every order.

    Examples
    --------
    >>> from tvcbf.cbf import AffineTimeCBFPiece, PiecewiseTVCBF
    >>> cbf = PiecewiseTVCBF(
    ...     pieces=[
    ...         AffineTimeCBFPiece(slope=100.0, t_start=0.0, t_end=1.0),
    ...         AffineTimeCBFPiece(slope=200.0, t_start=1.0, t_end=2.0),
    ...     ]
    ... )
    >>> cbf.active_piece(0.999), cbf.active_piece(1.0)
    (0, 1)
    >>> cbf.evaluate(1.0, [0.0])
    200.0
    """

    _tags = {"object_type": "piecewise_cbf"}

    def __init__(self, pieces=None, alphas=None):
        self.pieces = pieces
        self.alphas = alphas
        super().__init__()

        if not pieces:
            raise ConstructionError("PiecewiseTVCBF needs at least one piece")
        for piece in pieces:
            if not isinstance(piece, BaseCBFPiece):
                raise ConstructionError(
                    f"pieces must be BaseCBFPiece instances, found {type(piece)}"
                )
        degrees = {piece.rel_degree for piece in pieces}
        if len(degrees) != 1:
            raise ConstructionError(f"pieces mix relative degrees {sorted(degrees)}")
        self._rel_degree = degrees.pop()

        for left, right in zip(pieces[:-1], pieces[1:]):
            if left.t_end != right.t_start:
                raise ConstructionError(
                    "piece intervals must be contiguous and non-overlapping, found "
                    f"[{left.t_start}, {left.t_end}) followed by "
                    f"[{right.t_start}, {right.t_end})"
                )

        if alphas is None:
            self._alphas = [LinearClassK() for _ in range(self._rel_degree)]
        else:
            if len(alphas) != self._rel_degree or not all(
                isinstance(alpha, BaseClassK) for alpha in alphas
            ):
                raise ConstructionError(
                    f"alphas must hold {self._rel_degree} BaseClassK instances"
                )
            self._alphas = list(alphas)

        self._starts = [piece.t_start for piece in pieces]

    @property
    def rel_degree(self) -> int:
        """Common relative degree m of the pieces."""
        return self._rel_degree

    @property
    def boundaries(self) -> np.ndarray:
        """Internal switching instants, one per consecutive pair of pieces."""
        return np.array(self._starts[1:], dtype=float)

    @property
    def t_start(self) -> float:
        """Start of the covered horizon."""
        return self.pieces[0].t_start

    @property
    def t_end(self) -> float:
        """End of the covered horizon (exclusive)."""
        return self.pieces[-1].t_end

    @property
    def class_k(self) -> List[BaseClassK]:
        """The class-K functions α₁..αₘ in use."""
        return list(self._alphas)

    def active_piece(self, t: float) -> int:
        """Return the index of the piece whose interval contains ``t``.

        Parameters
        ----------
        t : float
            Time in seconds.

        Returns
        -------
        int
            Zero-based piece index. At a boundary ``t_k`` the incoming piece is
            returned.

        Raises
        ------
        DomainError
            If ``t`` lies outside ``[t_start, t_end)``.
        """
        if not self.t_start <= t < self.t_end:
            raise DomainError(
                f"t={t} lies outside the horizon [{self.t_start}, {self.t_end})"
            )
        return bisect_right(self._starts, t) - 1

    def piece_at(self, t: float) -> BaseCBFPiece:
        """Return the active piece at ``t``."""
        return self.pieces[self.active_piece(t)]

    def evaluate(self, t: float, x) -> float:
        """Evaluate the active piece at ``(t, x)``."""
        return self.piece_at(t).evaluate(t, x)

    def beta_cascade(self, t: float, x, dynamics) -> List[float]:
        """Return β₀..βₘ₋₁ of the active piece, see :func:`beta_cascade`."""
        return beta_cascade(self.piece_at(t), self._alphas, t, x, dynamics)

    def mu_constraint(self, t: float, x, dynamics):
        """Return the safe-input constraint of the active piece.

        This is the switching controller's constraint set: at each instant the
        input must satisfy the barrier condition of the piece active at ``t``.
        """
        return hocbf_mu_constraint(self.piece_at(t), self._alphas, t, x, dynamics)

    @classmethod
    def get_test_params(cls, parameter_set="default"):
        """Return testing parameter settings for the piecewise barrier.

        Parameters
        ----------
        parameter_set : str, default="default"
            Name of the set of test parameters to return.

        Returns
        -------
        params : list of dict
        """
        params1 = {
            "pieces": [
                AffineTimeCBFPiece(slope=100.0, t_start=0.0, t_end=1.0),
                AffineTimeCBFPiece(slope=200.0, t_start=1.0, t_end=2.0),
            ],
        }
        params2 = {
            "pieces": [
                AffineTimeCBFPiece(
                    slope=0.0, intercept=5.0, t_start=0.0, t_end=10.0, rel_degree=2
                ),
            ],
            "alphas": [LinearClassK(2.0), LinearClassK(3.0)],
        }
        return [params1, params2]

