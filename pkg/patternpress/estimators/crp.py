"""
The Chinese restaurant process (Ewens sampling formula) pattern estimator.

Under the CRP with strength ``theta`` a pattern with ``m`` distinct symbols,
length ``n`` and prevalences ``phi_mu`` has probability::

    theta^m / (theta (theta+1) ... (theta+n-1)) * prod_mu ((mu-1)!)^phi_mu

which depends on the pattern only through its prevalence profile.
"""

import numpy as np

from ..math_utils import gammaln, log_rising_factorial
from ..pattern import PrevalenceProfile
from ._base import ExchangeablePredictor, PatternEstimator
from .params import CrpParams, PredictiveDistribution


def _profile_log_gamma(prof, shift=0.0):
    # sum_mu phi_mu * ln Gamma(mu - shift)
    if not prof.counts:
        return 0.0
    mus = np.fromiter(prof.counts.keys(), dtype=float)
    phis = np.fromiter(prof.counts.values(), dtype=float)
    return float(np.dot(phis, gammaln(mus - shift)))


def crp_log_prob_vec(thetas, prof):
    """CRP log-probability of `prof` for an array of strengths."""
    thetas = np.asarray(thetas, dtype=float)
    if prof.n == 0:
        return np.zeros_like(thetas)
    return (prof.m * np.log(thetas) - log_rising_factorial(thetas, prof.n)
            + _profile_log_gamma(prof))


def crp_log_prob(params, prof):
    """
    Log-probability of a prevalence profile under the CRP.

    Parameters
    ----------
    params : CrpParams
    prof : PrevalenceProfile

    Returns
    -------
    float
        Natural log. The empty profile has log-probability 0.

    Examples
    --------
    >>> from patternpress.pattern import profile, Pattern
    >>> round(float(np.exp(crp_log_prob(CrpParams(2.0), profile(Pattern((1, 1)))))), 12)
    0.333333333333
    """
    return float(crp_log_prob_vec(params.theta, prof))


def _check_multiplicities(prof, multiplicities):
    if isinstance(multiplicities, dict):
        mults = {int(s): int(c) for s, c in multiplicities.items()}
    else:
        mults = {s + 1: int(c) for s, c in enumerate(multiplicities)}
    if sorted(mults) != list(range(1, prof.m + 1)):
        raise ValueError("multiplicities must cover symbols 1..m of the profile")
    if PrevalenceProfile.from_multiplicities(mults.values()) != prof:
        raise ValueError("multiplicities are inconsistent with the profile")
    return mults


def crp_predictive(params, prof, multiplicities):
    """
    Conditional law of the next symbol under the CRP.

    A symbol seen ``mu`` times repeats with probability ``mu / (n + theta)``; a
    new symbol appears with probability ``theta / (n + theta)``.
    """
    mults = _check_multiplicities(prof, multiplicities)
    denom = prof.n + params.theta
    return PredictiveDistribution(
        {s: c / denom for s, c in mults.items()}, params.theta / denom)


class CRPEstimator(PatternEstimator):
    """Pattern estimator of the CRP with a fixed strength.

    Parameters
    ----------
    theta : float or CrpParams
    """

    name = 'crp'
    estimator_id = 1

    def __init__(self, theta=1.0):
        self.params = theta if isinstance(theta, CrpParams) else CrpParams(theta)

    @property
    def theta(self):
        return self.params.theta

    def log_prob_profile(self, prof):
        return crp_log_prob(self.params, prof)

    def predictor(self, n=None):
        return ExchangeablePredictor(0.0, self.theta)

    def header_params(self):
        return (self.theta,)

    def describe(self):
        return {'estimator': self.name, 'theta': self.theta}
