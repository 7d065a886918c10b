"""
Summaries for the Monte Carlo verification suites: a sample mean with its
spread, and a least-squares line for growth-rate fits.
"""

import numpy as np
from scipy import stats


def mean_and_std(data):
    """Sample mean and (ddof=1) standard deviation; std is 0 for one sample."""
    X = np.asarray(data, dtype=float)
    if len(X) < 2:
        return float(X.mean()), 0.0
    return float(X.mean()), float(X.std(ddof=1))


def linear_fit(x, y):
    """
    Least-squares line through ``(x, y)``.

    Returns
    -------
    slope : float
    intercept : float
    r_squared : float

    Examples
    --------
    >>> slope, intercept, r2 = linear_fit([1, 2, 3], [3, 5, 7])
    >>> round(slope, 9), round(intercept, 9), round(r2, 9)
    (2.0, 1.0, 1.0)
    """
    res = stats.linregress(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    return float(res.slope), float(res.intercept), float(res.rvalue ** 2)
