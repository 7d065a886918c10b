"""
Log-domain helpers.

Pattern probabilities underflow double precision for patterns of a few hundred
symbols, so everything in patternpress is accumulated as natural logarithms and
converted to bits only when reported.
"""

import math

import numpy as np
from scipy.special import gammaln, logsumexp

LN2 = math.log(2.0)


def nats_to_bits(x):
    """Convert a quantity in nats to bits."""
    return x / LN2


def log_rising_factorial(x, n):
    """Natural log of the rising factorial ``x (x+1) ... (x+n-1)``.

    Parameters
    ----------
    x : float or array_like
        Base; must be positive.
    n : int or array_like
        Number of factors. ``n = 0`` gives the empty product (log 1 = 0).

    Returns
    -------
    float or ndarray

    Examples
    --------
    >>> round(float(np.exp(log_rising_factorial(2.0, 3))), 6)  # 2 * 3 * 4
    24.0
    """
    return gammaln(np.add(x, n)) - gammaln(x)


def log_factorial(n):
    """Natural log of ``n!``."""
    return gammaln(np.add(n, 1))


def log_falling_factorial(k, m):
    """Natural log of ``k (k-1) ... (k-m+1)``; ``-inf`` when ``m > k``."""
    if m > k:
        return -math.inf
    return float(gammaln(k + 1) - gammaln(k - m + 1))


__all__ = [
    'LN2',
    'nats_to_bits',
    'log_rising_factorial',
    'log_factorial',
    'log_falling_factorial',
    'logsumexp',
    'gammaln',
]
