"""
The :mod:`patternpress.estimators` module assigns probabilities to patterns
under the CRP (Ewens), Pitman-Yor and mixture models, in closed form and
sequentially through one-step predictive distributions.
"""

from .params import (CrpParams, PyParams, MixtureConfig, PredictiveDistribution,
                     select_crp_theta)
from ._base import PatternEstimator, Predictor, ExchangeablePredictor
from .crp import CRPEstimator, crp_log_prob, crp_predictive
from .pitman_yor import PitmanYorEstimator, py_log_prob, py_predictive
from .mixture import (CRPMixtureEstimator, PitmanYorMixtureEstimator,
                      MixturePredictor, mixture_log_prob, py_mixture_log_prob,
                      mixture_components)
from .factory import (make_estimator, estimator_from_header, as_estimator,
                      sequential_log_prob, ESTIMATOR_NAMES)

__all__ = [
    'CrpParams',
    'PyParams',
    'MixtureConfig',
    'PredictiveDistribution',
    'select_crp_theta',
    'PatternEstimator',
    'Predictor',
    'ExchangeablePredictor',
    'CRPEstimator',
    'crp_log_prob',
    'crp_predictive',
    'PitmanYorEstimator',
    'py_log_prob',
    'py_predictive',
    'CRPMixtureEstimator',
    'PitmanYorMixtureEstimator',
    'MixturePredictor',
    'mixture_log_prob',
    'py_mixture_log_prob',
    'mixture_components',
    'make_estimator',
    'estimator_from_header',
    'as_estimator',
    'sequential_log_prob',
    'ESTIMATOR_NAMES',
]
