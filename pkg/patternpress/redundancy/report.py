"""
Per-pattern redundancy of an estimator.

The best probability any i.i.d. source can give a pattern is replaced by the
envelope bound, so reported redundancies are upper bounds on the true ones.
"""

import math
from dataclasses import asdict, dataclass
from typing import Optional

from ..estimators import (CRPEstimator, CRPMixtureEstimator, PitmanYorEstimator,
                          PitmanYorMixtureEstimator)
from ..exceptions import TooLarge
from ..oracle import envelope_log_bound
from ..pattern import Pattern, PrevalenceProfile, profile, validate_pattern
from .bounds import (MIN_N, crp_bound_partialred, crp_bound_stairbound,
                     mixture_bound, py_bound_upper)

WORST_CASE_MAX_N = 12


@dataclass
class RedundancyReport:
    """
    Redundancy of one estimator on one pattern, in nats.

    Parameters
    ----------
    n, m : int
    ln_p_upper : float
        Envelope log-probability (upper bound on any source's log-probability).
    ln_q : float
        Estimator log-probability.
    redundancy_nats : float
        ``ln_p_upper - ln_q``.
    bound_nats : float or None
        The matching theorem bound, when one applies.
    per_symbol : float
        ``redundancy_nats / n`` (0 for the empty pattern).
    """

    n: int
    m: int
    ln_p_upper: float
    ln_q: float
    redundancy_nats: float
    bound_nats: Optional[float]
    per_symbol: float
    estimator: Optional[dict] = None

    def to_dict(self):
        return asdict(self)


def theorem_bound(estimator, n, m):
    """The redundancy bound that covers `estimator` at ``(n, m)``, or None."""
    if m < 1:
        return None
    if isinstance(estimator, CRPEstimator):
        if n < MIN_N:
            return None
        if math.isclose(estimator.theta, m / math.log(n), rel_tol=1e-9):
            return crp_bound_partialred(n, m)
        return crp_bound_stairbound(n, m, estimator.theta)
    if isinstance(estimator, PitmanYorEstimator):
        if estimator.alpha == 0.0:
            return theorem_bound(CRPEstimator(estimator.theta), n, m)
        return py_bound_upper(n, m, estimator.alpha, estimator.theta)
    if isinstance(estimator, CRPMixtureEstimator) and not isinstance(
            estimator, PitmanYorMixtureEstimator):
        return mixture_bound(n, m) if n >= MIN_N else None
    return None


def _report(estimator, prof):
    ln_p = envelope_log_bound(prof).log_bound
    ln_q = estimator.log_prob_profile(prof)
    red = ln_p - ln_q
    return RedundancyReport(
        n=prof.n, m=prof.m, ln_p_upper=ln_p, ln_q=ln_q, redundancy_nats=red,
        bound_nats=theorem_bound(estimator, prof.n, prof.m),
        per_symbol=red / prof.n if prof.n else 0.0,
        estimator=estimator.describe(),
    )


def pattern_redundancy(estimator, pattern):
    """
    Redundancy report of `estimator` on `pattern`.

    Examples
    --------
    >>> r = pattern_redundancy(CRPEstimator(1.0), [1, 1])
    >>> round(r.redundancy_nats, 12) == round(math.log(2), 12)
    True
    """
    pattern = validate_pattern(pattern)
    return _report(estimator.resolve(pattern.n), profile(pattern))


def _integer_partitions(n, largest=None):
    # non-increasing tuples summing to n
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _integer_partitions(n - first, first):
            yield (first,) + rest


def _pattern_with_multiplicities(mults):
    symbols = []
    for s, mu in enumerate(mults, start=1):
        symbols.extend([s] * mu)
    return Pattern._trusted(symbols)


def worst_case_redundancy(estimator, n, max_n=WORST_CASE_MAX_N):
    """
    Largest envelope-proxy redundancy over all patterns of length `n`.

    Redundancy depends on a pattern only through its prevalence profile, so
    the search runs over the integer partitions of `n`.

    Returns
    -------
    (RedundancyReport, Pattern)
        The worst report and a pattern attaining it.
    """
    if n > max_n:
        raise TooLarge("pattern length", n, max_n)
    estimator = estimator.resolve(n)
    best = None
    for mults in _integer_partitions(n):
        report = _report(estimator, PrevalenceProfile.from_multiplicities(mults))
        if best is None or report.redundancy_nats > best[0].redundancy_nats:
            best = (report, _pattern_with_multiplicities(mults))
    return best
