"""
Parameter value objects for the pattern estimators.
"""

import math
import warnings
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from ..exceptions import DomainError

THETA_FLOOR = 1e-6


def _finite(x, name):
    if x is None or isinstance(x, bool) or not math.isfinite(float(x)):
        raise DomainError(f"{name} must be a finite number, got {x!r}")
    return float(x)


@dataclass(frozen=True)
class CrpParams:
    """Strength parameter of the Chinese restaurant process (Ewens) estimator.

    Parameters
    ----------
    theta : float
        Strength; must be finite and strictly positive.
    """

    theta: float

    def __post_init__(self):
        theta = _finite(self.theta, 'theta')
        if theta <= 0:
            raise DomainError(f"CRP theta must be > 0, got {theta}")
        object.__setattr__(self, 'theta', theta)


@dataclass(frozen=True)
class PyParams:
    """Discount and strength of the Pitman-Yor estimator.

    Parameters
    ----------
    alpha : float
        Discount, ``0 <= alpha < 1``. ``alpha = 1`` would give every repeat
        probability zero and is excluded.
    theta : float
        Strength, ``theta > -alpha``.
    """

    alpha: float
    theta: float

    def __post_init__(self):
        alpha = _finite(self.alpha, 'alpha')
        theta = _finite(self.theta, 'theta')
        if not 0.0 <= alpha < 1.0:
            raise DomainError(f"Pitman-Yor alpha must be in [0, 1), got {alpha}")
        if theta + alpha <= 0:
            raise DomainError(
                f"Pitman-Yor theta must exceed -alpha = {-alpha}, got {theta}")
        object.__setattr__(self, 'alpha', alpha)
        object.__setattr__(self, 'theta', theta)


@dataclass(frozen=True)
class MixtureConfig:
    """Truncation of the CRP mixture's index grid.

    The mixture runs over ``i = 1..i_max`` and ``j = 2..j_max`` with weight
    ``c_ij = 1 / (i (i+1) j (j+1))`` on the CRP with ``theta = i / ln j``.
    ``None`` means "the length of the pattern being scored".

    Parameters
    ----------
    i_max : int or None
        At least 1.
    j_max : int or None
        At least 2 (``j = 1`` would give ``theta = inf``).
    """

    i_max: Optional[int] = None
    j_max: Optional[int] = None

    def __post_init__(self):
        if self.i_max is not None:
            if int(self.i_max) != self.i_max or self.i_max < 1:
                raise DomainError(f"i_max must be an integer >= 1, got {self.i_max}")
            object.__setattr__(self, 'i_max', int(self.i_max))
        if self.j_max is not None:
            if int(self.j_max) != self.j_max or self.j_max < 2:
                raise DomainError(f"j_max must be an integer >= 2, got {self.j_max}")
            object.__setattr__(self, 'j_max', int(self.j_max))

    @property
    def is_resolved(self):
        return self.i_max is not None and self.j_max is not None

    def resolve(self, n):
        """Fill unset bounds with the pattern length `n`."""
        return MixtureConfig(
            self.i_max if self.i_max is not None else max(int(n), 1),
            self.j_max if self.j_max is not None else max(int(n), 2),
        )

    def total_weight(self):
        """Sum of the included weights ``c_ij`` (the mixture's total mass)."""
        if not self.is_resolved:
            raise DomainError("resolve the mixture bounds before weighing them")
        # sum_{i<=I} 1/(i(i+1)) = 1 - 1/(I+1); sum_{2<=j<=J} 1/(j(j+1)) = 1/2 - 1/(J+1)
        return (1.0 - 1.0 / (self.i_max + 1)) * (0.5 - 1.0 / (self.j_max + 1))


@dataclass
class PredictiveDistribution:
    """One-step conditional law of the next pattern symbol.

    Parameters
    ----------
    seen : dict of int to float
        Probability that the next symbol repeats pattern symbol ``s``.
    new_symbol : float
        Probability that the next symbol is ``m + 1``.
    """

    seen: Dict[int, float] = field(default_factory=dict)
    new_symbol: float = 1.0

    def as_array(self):
        """Probabilities of symbols ``1..m`` followed by the new symbol."""
        return np.asarray([self.seen[s] for s in sorted(self.seen)]
                          + [self.new_symbol], dtype=float)

    def total(self):
        return math.fsum(self.seen.values()) + self.new_symbol


def select_crp_theta(n, m, floor=THETA_FLOOR):
    """
    Strength ``theta = m / ln n`` matched to a pattern's length and symbol count.

    Parameters
    ----------
    n : int
        Pattern length, at least 2.
    m : int
        Distinct symbols, ``0 <= m <= n``. ``m = 0`` hits the floor.
    floor : float, default 1e-6
        Smallest theta returned.

    Returns
    -------
    CrpParams

    Examples
    --------
    >>> round(select_crp_theta(10, 1).theta, 3)
    0.434
    """
    if n < 2:
        raise DomainError(f"theta selection needs n >= 2, got {n}")
    if not 0 <= m <= n:
        raise DomainError(f"m must be in [0, n], got m={m}, n={n}")
    theta = m / math.log(n)
    if theta < floor:
        warnings.warn(f"theta = m / ln n = {theta} floored at {floor}")
        theta = floor
    return CrpParams(theta)
