"""
Mixtures of CRP (and Pitman-Yor) estimators over a grid of strengths.

The mixture puts weight ``c_ij = 1 / (i (i+1) j (j+1))`` on the component with
``theta = i / ln j`` for ``i >= 1`` and ``j >= 2``. The ``j = 1`` row (infinite
theta) is dropped and the weights are not renormalized, so the truncated
mixture is a sub-probability that lower-bounds the full one.

The closed form is evaluated row block by row block with log-sum-exp. The
sequential form keeps posterior weights over the components and mixes their
one-step predictives; chained over a pattern it reproduces the closed form up
to the constant ``ln sum c_ij``, which the predictor reports as ``log_mass``.
"""

import logging
import warnings

import numpy as np

from ..exceptions import DomainError
from ..math_utils import logsumexp
from ..pattern import profile, validate_pattern
from ._base import PatternEstimator, Predictor
from .crp import crp_log_prob_vec
from .params import MixtureConfig
from .pitman_yor import py_log_prob_vec

logger = logging.getLogger(__name__)

ROW_BLOCK = 256
LARGE_GRID = 10_000_000


def _grid_rows(i_lo, i_hi, j_max):
    i = np.arange(i_lo, i_hi + 1, dtype=float)[:, None]
    j = np.arange(2, j_max + 1, dtype=float)[None, :]
    thetas = i / np.log(j)
    log_c = -np.log(i * (i + 1)) - np.log(j * (j + 1))
    return thetas, log_c


def _check_size(config):
    size = config.i_max * (config.j_max - 1)
    if size > LARGE_GRID:
        warnings.warn(f"mixture grid has {size} components; scoring is O(grid)")
    return size


def mixture_components(config):
    """Flat arrays ``(thetas, log_weights)`` over a resolved grid."""
    if not config.is_resolved:
        raise DomainError("mixture bounds must be resolved to list components")
    _check_size(config)
    thetas, log_c = _grid_rows(1, config.i_max, config.j_max)
    return thetas.ravel(), log_c.ravel()


def _mixture_log_prob_profile(config, prof, component_log_prob):
    config = config.resolve(prof.n)
    _check_size(config)
    partial = []
    for i_lo in range(1, config.i_max + 1, ROW_BLOCK):
        i_hi = min(i_lo + ROW_BLOCK - 1, config.i_max)
        thetas, log_c = _grid_rows(i_lo, i_hi, config.j_max)
        partial.append(logsumexp(log_c + component_log_prob(thetas, prof)))
    return float(logsumexp(partial))


def mixture_log_prob(config, pattern):
    """
    Log-probability of a pattern under the truncated CRP mixture.

    Parameters
    ----------
    config : MixtureConfig
        Unset bounds default to the pattern length.
    pattern : Pattern or sequence of int

    Returns
    -------
    float
        ``ln sum_ij c_ij CRP_{i / ln j}(pattern)``.
    """
    prof = profile(validate_pattern(pattern))
    return _mixture_log_prob_profile(config, prof, crp_log_prob_vec)


def py_mixture_log_prob(config, alpha, pattern):
    """The same mixture with Pitman-Yor components of discount `alpha`."""
    prof = profile(validate_pattern(pattern))
    return _py_mixture_log_prob_profile(config, alpha, prof)


def _py_mixture_log_prob_profile(config, alpha, prof):
    if alpha == 0.0:
        return _mixture_log_prob_profile(config, prof, crp_log_prob_vec)
    return _mixture_log_prob_profile(
        config, prof, lambda thetas, p: py_log_prob_vec(thetas, alpha, p))


class MixturePredictor(Predictor):
    """Bayes-mixture predictor over a fixed set of components.

    Parameters
    ----------
    thetas : ndarray
        Component strengths.
    log_weights : ndarray
        Unnormalized log prior weights.
    alpha : float, default 0.0
        Common discount of the components.
    """

    def __init__(self, thetas, log_weights, alpha=0.0):
        super().__init__()
        self.thetas = np.asarray(thetas, dtype=float)
        self.alpha = alpha
        self.log_mass = float(logsumexp(log_weights))
        self._log_w = np.asarray(log_weights, dtype=float) - self.log_mass
        self._w = np.exp(self._log_w)

    def _factors(self):
        inv = self._w / (self.n + self.thetas)
        seen = inv.sum()
        new = np.dot(inv, self.thetas + self.m * self.alpha)
        return seen, new

    def probabilities(self):
        if self.n == 0:
            return np.ones(1)
        seen, new = self._factors()
        return np.append((np.asarray(self.counts, dtype=float) - self.alpha) * seen,
                         new)

    def prob_of(self, symbol):
        if self.n == 0:
            return 1.0 if symbol == 1 else 0.0
        seen, new = self._factors()
        if symbol == self.m + 1:
            return float(new)
        return float((self.counts[symbol - 1] - self.alpha) * seen)

    def _observe(self, symbol):
        if self.n == 0:
            return
        if symbol == self.m + 1:
            step = (self.thetas + self.m * self.alpha) / (self.n + self.thetas)
        else:
            step = (self.counts[symbol - 1] - self.alpha) / (self.n + self.thetas)
        log_w = self._log_w + np.log(step)
        self._log_w = log_w - logsumexp(log_w)
        self._w = np.exp(self._log_w)


class CRPMixtureEstimator(PatternEstimator):
    """Truncated mixture of CRP estimators with strengths ``i / ln j``.

    Parameters
    ----------
    i_max, j_max : int, optional
        Grid truncation; ``None`` uses the length of the scored pattern.
    """

    name = 'mixture'
    estimator_id = 3
    alpha = 0.0

    def __init__(self, i_max=None, j_max=None):
        if isinstance(i_max, MixtureConfig):
            self.config = i_max
        else:
            self.config = MixtureConfig(i_max, j_max)

    def _with_config(self, config):
        return type(self)(config)

    def resolve(self, n):
        if self.config.is_resolved:
            return self
        return self._with_config(self.config.resolve(n))

    def log_prob_profile(self, prof):
        return _mixture_log_prob_profile(self.config, prof, crp_log_prob_vec)

    def predictor(self, n=None):
        config = self.config
        if not config.is_resolved:
            if n is None:
                raise DomainError("the mixture predictor needs a pattern length "
                                  "or explicit i_max and j_max")
            config = config.resolve(n)
        thetas, log_c = mixture_components(config)
        logger.debug("mixture predictor over %d components", thetas.size)
        return MixturePredictor(thetas, log_c, self.alpha)

    def header_params(self):
        if not self.config.is_resolved:
            raise DomainError("resolve the mixture bounds before coding")
        return (float(self.config.i_max), float(self.config.j_max))

    def describe(self):
        return {'estimator': self.name, 'i_max': self.config.i_max,
                'j_max': self.config.j_max}


class PitmanYorMixtureEstimator(CRPMixtureEstimator):
    """The truncated mixture over Pitman-Yor components with a common discount."""

    name = 'py-mixture'
    estimator_id = None

    def __init__(self, alpha=0.5, i_max=None, j_max=None):
        super().__init__(i_max, j_max)
        if not 0.0 <= alpha < 1.0:
            raise DomainError(f"Pitman-Yor alpha must be in [0, 1), got {alpha}")
        self.alpha = float(alpha)

    def _with_config(self, config):
        return type(self)(self.alpha, config)

    def log_prob_profile(self, prof):
        return _py_mixture_log_prob_profile(self.config, self.alpha, prof)

    def header_params(self):
        return PatternEstimator.header_params(self)

    def describe(self):
        out = super().describe()
        out['alpha'] = self.alpha
        return out
