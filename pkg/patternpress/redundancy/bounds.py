"""
Closed-form redundancy bounds, in nats.

All logarithms are natural. The CRP bounds are stated for ``n >= 16``, where
the three-term bound is monotone in ``m``; below that they raise
:class:`~patternpress.exceptions.DomainError`.
"""

import math

import numpy as np

from ..exceptions import DomainError
from ..estimators import PyParams, py_log_prob
from ..math_utils import log_factorial
from ..pattern import PrevalenceProfile

MIN_N = 16
CLAIM_TOLERANCE = 1e-12


def _check_nm(n, m):
    if n < MIN_N:
        raise DomainError(f"the CRP bound is only established for n >= {MIN_N}, got {n}")
    if not 1 <= m <= n:
        raise DomainError(f"m must be in [1, n], got m={m}, n={n}")


def crp_bound_partialred(n, m, theta=None):
    """
    Three-term redundancy bound of the CRP with ``theta = m / ln n``.

    ``m ln(n/m) + m ln ln n + (m / ln n) ln(2 + n ln n / m)``

    Parameters
    ----------
    n, m : int
        Pattern length (``>= 16``) and distinct symbols.
    theta : float, optional
        If given, must be ``m / ln n`` (the bound is specific to that choice).

    Returns
    -------
    float
    """
    _check_nm(n, m)
    ln_n = math.log(n)
    if theta is not None and not math.isclose(theta, m / ln_n, rel_tol=1e-9):
        raise DomainError(f"this bound holds for theta = m / ln n = {m / ln_n}, "
                          f"not {theta}; use crp_bound_stairbound")
    return (m * math.log(n / m) + m * math.log(ln_n)
            + (m / ln_n) * math.log(2 + n * ln_n / m))


def _ceil_term(theta_bar, n):
    # theta_bar * ln((theta_bar + n) e / theta_bar), read as 0 when theta_bar <= 0
    if theta_bar <= 0:
        return 0.0
    return theta_bar * (math.log(theta_bar + n) + 1.0 - math.log(theta_bar))


def crp_bound_stairbound(n, m, theta):
    """
    Redundancy bound of the CRP for any strength.

    ``m ln(n/m) + ln(m! / theta^m) + tb ln((tb + n) e / tb)`` with
    ``tb = ceil(theta)``.
    """
    _check_nm(n, m)
    if not theta > 0:
        raise DomainError(f"theta must be > 0, got {theta}")
    return (m * math.log(n / m) + float(log_factorial(m)) - m * math.log(theta)
            + _ceil_term(math.ceil(theta), n))


def py_bound_upper(n, m, alpha, theta):
    """
    Five-term redundancy bound of the Pitman-Yor estimator.

    ``2m ln(n/m) + (m-2) ln(1/((1-alpha) alpha)) + tb ln((tb+n) e / tb)
    + ln(m^2 / (theta + alpha)) + ln(1/(1-alpha)^2)`` with ``tb = ceil(theta)``.
    """
    if not 0 < alpha < 1:
        raise DomainError(f"the Pitman-Yor bound needs 0 < alpha < 1, got {alpha}")
    if not theta + alpha > 0:
        raise DomainError(f"theta must exceed -alpha, got {theta}")
    if not 1 <= m <= n:
        raise DomainError(f"m must be in [1, n], got m={m}, n={n}")
    return (2 * m * math.log(n / m)
            + (m - 2) * -math.log((1 - alpha) * alpha)
            + _ceil_term(math.ceil(theta), n)
            + math.log(m * m / (theta + alpha))
            - 2 * math.log(1 - alpha))


def distinct_threshold(n, C=1.0):
    """``C n (ln ln n)^2 / ln n``: the symbol count below which the CRP bound is o(n)."""
    if n < 3:
        raise DomainError("ln ln n needs n >= 3")
    ln_n = math.log(n)
    return C * n * math.log(ln_n) ** 2 / ln_n


def crp_bound_scaled(n, C=1.0):
    """``3 C n (ln ln n)^3 / ln n``, the bound at ``m = distinct_threshold(n, C)``."""
    if n < 3:
        raise DomainError("ln ln n needs n >= 3")
    ln_n = math.log(n)
    return 3 * C * n * math.log(ln_n) ** 3 / ln_n


def mixture_bound(n, m):
    """
    Redundancy bound of the CRP mixture: ``ln(1 / c_{m,n})`` plus the
    three-term CRP bound, where ``c_{m,n} = 1 / (m (m+1) n (n+1))``.
    """
    _check_nm(n, m)
    log_inv_c = math.log(m) + math.log(m + 1) + math.log(n) + math.log(n + 1)
    return log_inv_c + crp_bound_partialred(n, m)


def _witness_profiles(n):
    return (PrevalenceProfile({n: 1}, n=n, m=1),
            PrevalenceProfile({1: n}, n=n, m=n))


def py_linear_witnesses(alpha, theta, n):
    """
    Code lengths of the Pitman-Yor estimator on ``1 1 ... 1`` and ``1 2 ... n``.

    Returns
    -------
    (float, float)
        ``-ln q(1^n)`` and ``-ln q(1 2 ... n)`` in nats.

    Examples
    --------
    >>> ones, distinct = py_linear_witnesses(0.5, 0.5, 2)
    >>> round(math.exp(-ones), 12), round(math.exp(-distinct), 12)
    (0.333333333333, 0.666666666667)
    """
    if n < 2:
        raise DomainError("the witnesses need n >= 2")
    params = PyParams(alpha, theta)
    ones, distinct = _witness_profiles(n)
    return -py_log_prob(params, ones), -py_log_prob(params, distinct)


def claim_constant(alpha):
    """Per-step bound ``max(1/2, alpha)`` on the witness product terms."""
    return max(0.5, alpha)


def py_witness_lower_bound(alpha, n):
    """``(n - 1) ln(1 / max(1/2, alpha))``: a floor on the witnesses' summed code length."""
    return (n - 1) * -math.log(claim_constant(alpha))


def py_worst_case_lower_bound(alpha, theta, n, delta=0.0):
    """
    Lower bounds on the Pitman-Yor estimator's worst-case redundancy.

    A point mass gives ``1^n`` probability 1 and a uniform law on a large set
    gives ``1 2 ... n`` probability ``1 - delta``.

    Returns
    -------
    (float, float)
        ``max(witnesses) + ln(1 - delta)`` and the averaged form
        ``(n - 1) / 2 ln(1 / max(1/2, alpha)) + ln(1 - delta)``.
    """
    if not 0 <= delta < 1:
        raise DomainError(f"delta must be in [0, 1), got {delta}")
    ones, distinct = py_linear_witnesses(alpha, theta, n)
    slack = math.log1p(-delta)
    return max(ones, distinct) + slack, py_witness_lower_bound(alpha, n) / 2 + slack


def _claim_lhs(j, alpha, theta):
    return (j - alpha) * (theta + j * alpha) / (theta + j) ** 2


def claim_inequality_check(j, alpha, theta):
    """
    Whether ``(j - alpha)(theta + j alpha) / (theta + j)^2 <= max(1/2, alpha)``.

    Raises
    ------
    DomainError
        Unless ``j >= 1``, ``0 < alpha < 1`` and ``alpha + theta > 0``.

    Examples
    --------
    >>> claim_inequality_check(1, 0.3, 0.2)
    True
    """
    if j < 1:
        raise DomainError(f"j must be >= 1, got {j}")
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must be in (0, 1), got {alpha}")
    if not alpha + theta > 0:
        raise DomainError(f"alpha + theta must be > 0, got {alpha + theta}")
    return bool(_claim_lhs(j, alpha, theta) <= claim_constant(alpha) + CLAIM_TOLERANCE)


def claim_grid_sweep(j_max=1000, alpha_step=0.01, theta_step=0.05, theta_max=10.0):
    """
    Check the claim inequality on a full grid.

    The grid is ``j = 1..j_max``, ``alpha = alpha_step, 2 alpha_step, ... < 1``
    and ``theta`` from ``-alpha + 0.01`` to `theta_max` in `theta_step` steps.

    Returns
    -------
    (int, list)
        Number of grid points checked, and ``(j, alpha, theta, lhs)`` for every
        violation.
    """
    j = np.arange(1, j_max + 1, dtype=float)[:, None]
    n_alpha = int(round(1 / alpha_step))
    checked = 0
    violations = []
    for a in range(1, n_alpha):
        alpha = a * alpha_step
        theta = np.arange(-alpha + 0.01, theta_max + 1e-9, theta_step)[None, :]
        lhs = _claim_lhs(j, alpha, theta)
        bad = lhs > claim_constant(alpha) + CLAIM_TOLERANCE
        checked += lhs.size
        for jj, tt in zip(*np.nonzero(bad)):
            violations.append((int(j[jj, 0]), alpha, float(theta[0, tt]), float(lhs[jj, tt])))
    return checked, violations


def expected_distinct_bound(entropy_nats, n):
    """
    Bound ``n H / ln n + 1`` on the expected number of distinct symbols.

    Examples
    --------
    >>> expected_distinct_bound(0.0, 100)
    1.0
    """
    if entropy_nats < 0:
        raise DomainError("entropy must be non-negative")
    if n < 2:
        raise DomainError("n must be >= 2")
    return n * entropy_nats / math.log(n) + 1.0


def markov_distinct_tail(entropy_nats, n):
    """
    Markov bound on ``P(M_n > n (ln ln n)^2 / ln n)``:
    ``H / (ln ln n)^2 + ln n / (n (ln ln n)^2)``.
    """
    if entropy_nats < 0:
        raise DomainError("entropy must be non-negative")
    if n < MIN_N:
        raise DomainError(f"the tail bound is stated for n >= {MIN_N}, got {n}")
    ln_n = math.log(n)
    lnln2 = math.log(ln_n) ** 2
    return entropy_nats / lnln2 + ln_n / (n * lnln2)


def _check_sorted(v, name):
    if np.any(v < 0):
        raise DomainError(f"{name} must be non-negative")
    if np.any(np.diff(v) > 0):
        raise DomainError(f"{name} must be sorted in non-increasing order")


def chebyshev_sum_check(x, y, both=False):
    """
    Check the sorted-sequence product inequality.

    For non-increasing, non-negative ``x`` and ``y`` of equal length,
    ``mean(x * y) >= mean(x) * mean(y)``; with ``both=True`` also
    ``mean(x) * mean(y) >= mean(x * reversed(y))``.

    Examples
    --------
    >>> chebyshev_sum_check([3, 2, 1], [6, 5, 4])
    True
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise DomainError("x and y must be vectors of equal length")
    if x.size == 0:
        raise DomainError("x and y must be non-empty")
    _check_sorted(x, 'x')
    _check_sorted(y, 'y')
    product_of_means = x.mean() * y.mean()
    tol = CLAIM_TOLERANCE * max(1.0, abs(product_of_means))
    ok = np.mean(x * y) >= product_of_means - tol
    if both:
        ok = ok and product_of_means >= np.mean(x * y[::-1]) - tol
    return bool(ok)
