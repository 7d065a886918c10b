"""
Stick-breaking weights of the GEM and Pitman-Yor processes.

A unit stick is broken at ``W_1``; the piece ``W_1`` is the first weight and
the remainder is broken again at the fraction ``W_2``, and so on, so that
``p_i = W_i prod_{j<i} (1 - W_j)``. Only the first ``T`` pieces are drawn and
the unbroken remainder is kept as an explicit residual.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..exceptions import DomainError
from ..utils.parallel import make_rng
from .distributions import DiscreteDistribution


@dataclass(frozen=True, eq=False)
class StickBreakingWeights:
    """
    A truncated stick-breaking prefix.

    Parameters
    ----------
    weights : ndarray
        ``p_1, ..., p_T``.
    residual : float
        ``1 - sum(weights)``, the mass of all unbroken pieces.
    """

    weights: np.ndarray
    residual: float

    def __post_init__(self):
        weights = np.asarray(self.weights, dtype=float)
        if np.any(weights < 0) or self.residual < 0:
            raise DomainError("stick-breaking masses must be non-negative")
        if abs(math.fsum(weights) + self.residual - 1.0) > 1e-12:
            raise DomainError("stick-breaking masses do not sum to 1")
        object.__setattr__(self, 'weights', weights)

    def __len__(self):
        return self.weights.size

    def total(self):
        return math.fsum(self.weights) + self.residual

    def sorted_weights(self):
        """The prefix in decreasing order."""
        return np.sort(self.weights)[::-1]

    def to_distribution(self):
        """Distribution over the ``T`` pieces plus the residual as one more atom."""
        return DiscreteDistribution.from_weights(np.append(self.weights, self.residual))


def _break_stick(fractions):
    # rem[i] = prod_{j<=i} (1 - W_j); p_i = rem[i-1] - rem[i] telescopes.
    remaining = np.cumprod(1.0 - fractions)
    weights = -np.diff(np.concatenate(([1.0], remaining)))
    np.maximum(weights, 0.0, out=weights)
    return StickBreakingWeights(weights, float(remaining[-1]))


def _check_truncation(T):
    if int(T) != T or T < 1:
        raise DomainError(f"truncation T must be an integer >= 1, got {T}")
    return int(T)


def gem_weights(theta, T, seed=None):
    """
    First `T` weights of GEM(theta): ``W_i ~ Beta(1, theta)`` i.i.d.

    Parameters
    ----------
    theta : float
        Strength, ``> 0``.
    T : int
        Number of pieces drawn.
    seed : int, SeedSequence or Generator, optional

    Returns
    -------
    StickBreakingWeights
    """
    if not theta > 0:
        raise DomainError(f"GEM theta must be > 0, got {theta}")
    T = _check_truncation(T)
    rng = make_rng(seed)
    return _break_stick(rng.beta(1.0, theta, size=T))


def py_weights(alpha, theta, T, seed=None):
    """
    First `T` weights of the Pitman-Yor stick: ``W_i ~ Beta(1 - alpha, theta + i alpha)``.

    With ``alpha = 0`` this is :func:`gem_weights`.
    """
    if not 0 <= alpha < 1:
        raise DomainError(f"Pitman-Yor alpha must be in [0, 1), got {alpha}")
    if not theta + alpha > 0:
        raise DomainError(f"Pitman-Yor theta must exceed -alpha, got {theta}")
    T = _check_truncation(T)
    rng = make_rng(seed)
    i = np.arange(1, T + 1, dtype=float)
    return _break_stick(rng.beta(1.0 - alpha, theta + i * alpha))
