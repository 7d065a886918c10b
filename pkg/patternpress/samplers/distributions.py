"""
Finite discrete distributions and i.i.d. sampling from them.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from ..exceptions import DomainError
from ..utils.parallel import make_rng

GEOMETRIC_TAIL = 1e-15


@dataclass(frozen=True, eq=False)
class DiscreteDistribution:
    """
    A distribution on the labels ``1..k``.

    Parameters
    ----------
    probs : ndarray
        ``probs[i]`` is the probability of label ``i + 1``. Must be
        non-negative and sum to 1 within 1e-12.
    """

    probs: np.ndarray

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=float).ravel()
        if probs.size == 0:
            raise DomainError("a distribution needs at least one atom")
        if not np.all(np.isfinite(probs)) or np.any(probs < 0):
            raise DomainError("probabilities must be finite and non-negative")
        if abs(math.fsum(probs) - 1.0) > 1e-12:
            raise DomainError(f"probabilities sum to {math.fsum(probs)!r}, not 1")
        probs.setflags(write=False)
        object.__setattr__(self, 'probs', probs)

    @classmethod
    def from_weights(cls, weights):
        """Normalize non-negative weights into a distribution."""
        w = np.asarray(weights, dtype=float)
        total = math.fsum(w)
        if not total > 0:
            raise DomainError("weights must have positive total mass")
        return cls(w / total)

    @property
    def k(self):
        """Support size (including zero-probability labels)."""
        return self.probs.size

    def entropy_nats(self):
        return float(stats.entropy(self.probs))

    def __len__(self):
        return self.k


def point_mass():
    return DiscreteDistribution(np.ones(1))


def uniform(k):
    """Uniform distribution on ``1..k``."""
    if int(k) != k or k < 1:
        raise DomainError(f"uniform needs an integer k >= 1, got {k}")
    return DiscreteDistribution(np.full(int(k), 1.0 / k))


def zipf(s, k):
    """Zipf law ``p_i proportional to i^-s`` truncated to ``1..k``."""
    if int(k) != k or k < 1:
        raise DomainError(f"zipf needs an integer k >= 1, got {k}")
    if not s >= 0:
        raise DomainError(f"zipf exponent must be non-negative, got {s}")
    return DiscreteDistribution.from_weights(np.arange(1, int(k) + 1, dtype=float) ** -s)


def geometric(r, tail=GEOMETRIC_TAIL):
    """
    Geometric law ``p_i = (1 - r) r^(i-1)`` for ``i >= 1``.

    The support is cut where the remaining tail mass ``r^k`` drops below
    `tail`, and the kept atoms are renormalized.

    Examples
    --------
    >>> round(geometric(0.5).entropy_nats() / math.log(2), 9)
    2.0
    """
    if not 0 <= r < 1:
        raise DomainError(f"geometric ratio must be in [0, 1), got {r}")
    if r == 0:
        return point_mass()
    k = max(1, math.ceil(math.log(tail) / math.log(r)))
    return DiscreteDistribution.from_weights(r ** np.arange(k, dtype=float))


def sample_iid(dist, n, seed=None):
    """
    Draw `n` labels independently from `dist`.

    Parameters
    ----------
    dist : DiscreteDistribution
    n : int
    seed : int, SeedSequence or Generator, optional

    Returns
    -------
    ndarray of int64
        Labels in ``1..k``.
    """
    if n < 0:
        raise DomainError("sample length must be non-negative")
    rng = make_rng(seed)
    if dist.k == 1:
        return np.ones(n, dtype=np.int64)
    return rng.choice(dist.k, size=n, p=dist.probs).astype(np.int64) + 1
