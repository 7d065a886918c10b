"""
The Pitman-Yor (two-parameter Poisson-Dirichlet) pattern estimator.

With discount ``alpha`` and strength ``theta`` a pattern gets probability::

    prod_{i=1}^{m-1} (theta + i alpha) / prod_{i=1}^{n-1} (theta + i)
        * prod_mu [ Gamma(mu - alpha) / Gamma(1 - alpha) ]^phi_mu

The leading ``theta / theta`` of the textbook form is cancelled before
evaluation, so ``theta = 0`` is fine whenever ``alpha > 0``.
"""

import numpy as np

from ..math_utils import gammaln, log_rising_factorial
from ._base import ExchangeablePredictor, PatternEstimator
from .crp import _check_multiplicities, _profile_log_gamma, crp_log_prob
from .params import CrpParams, PredictiveDistribution, PyParams


def _profile_terms(alpha, prof):
    return _profile_log_gamma(prof, alpha) - prof.m * float(gammaln(1.0 - alpha))


def py_log_prob(params, prof):
    """
    Log-probability of a prevalence profile under the Pitman-Yor process.

    ``alpha = 0`` runs the CRP code path, so the two agree exactly.

    Parameters
    ----------
    params : PyParams
    prof : PrevalenceProfile

    Returns
    -------
    float
    """
    alpha, theta = params.alpha, params.theta
    if alpha == 0.0:
        return crp_log_prob(CrpParams(theta), prof)
    if prof.n == 0:
        return 0.0
    new_terms = float(np.sum(np.log(theta + alpha * np.arange(1, prof.m))))
    old_terms = float(log_rising_factorial(theta + 1.0, prof.n - 1))
    return new_terms - old_terms + _profile_terms(alpha, prof)


def py_log_prob_vec(thetas, alpha, prof):
    """Pitman-Yor log-probability of `prof` for an array of strengths.

    Uses ``sum_{i<m} ln(theta + i alpha)`` in Gamma-function form, which needs
    ``alpha > 0``.
    """
    thetas = np.asarray(thetas, dtype=float)
    if prof.n == 0:
        return np.zeros_like(thetas)
    ratio = thetas / alpha
    new_terms = ((prof.m - 1) * np.log(alpha)
                 + log_rising_factorial(ratio + 1.0, prof.m - 1))
    old_terms = log_rising_factorial(thetas + 1.0, prof.n - 1)
    return new_terms - old_terms + _profile_terms(alpha, prof)


def py_predictive(params, prof, multiplicities):
    """
    Conditional law of the next symbol under the Pitman-Yor process.

    A symbol seen ``mu`` times repeats with probability
    ``(mu - alpha) / (n + theta)``; a new symbol appears with probability
    ``(theta + m alpha) / (n + theta)``. Before the first symbol the new
    symbol is certain.

    Examples
    --------
    >>> from patternpress.pattern import Pattern, profile
    >>> py_predictive(PyParams(0.5, 1.0), profile(Pattern((1,))), [1])
    PredictiveDistribution(seen={1: 0.25}, new_symbol=0.75)
    """
    mults = _check_multiplicities(prof, multiplicities)
    if prof.n == 0:
        return PredictiveDistribution({}, 1.0)
    denom = prof.n + params.theta
    return PredictiveDistribution(
        {s: (c - params.alpha) / denom for s, c in mults.items()},
        (params.theta + prof.m * params.alpha) / denom)


class PitmanYorEstimator(PatternEstimator):
    """Pattern estimator of the Pitman-Yor process.

    Parameters
    ----------
    alpha : float or PyParams
        Discount in ``[0, 1)``, or a ready-made :class:`PyParams`.
    theta : float
        Strength, ``theta > -alpha``. Ignored when `alpha` is a PyParams.
    """

    name = 'py'
    estimator_id = 2

    def __init__(self, alpha=0.5, theta=1.0):
        self.params = alpha if isinstance(alpha, PyParams) else PyParams(alpha, theta)

    @property
    def alpha(self):
        return self.params.alpha

    @property
    def theta(self):
        return self.params.theta

    def log_prob_profile(self, prof):
        return py_log_prob(self.params, prof)

    def predictor(self, n=None):
        return ExchangeablePredictor(self.alpha, self.theta)

    def header_params(self):
        return (self.alpha, self.theta)

    def describe(self):
        return {'estimator': self.name, 'alpha': self.alpha, 'theta': self.theta}
