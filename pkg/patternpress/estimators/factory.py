import math

from ..exceptions import CorruptStream, DomainError, UnknownVersion
from ..pattern import validate_pattern
from ._base import PatternEstimator
from .crp import CRPEstimator
from .mixture import CRPMixtureEstimator, PitmanYorMixtureEstimator
from .params import CrpParams, PyParams, select_crp_theta
from .pitman_yor import PitmanYorEstimator

ESTIMATOR_NAMES = ('crp', 'py', 'mixture', 'py-mixture')

_BY_ID = {
    CRPEstimator.estimator_id: CRPEstimator,
    PitmanYorEstimator.estimator_id: PitmanYorEstimator,
    CRPMixtureEstimator.estimator_id: CRPMixtureEstimator,
}

_PARAM_COUNT = {1: 1, 2: 2, 3: 2}

# Largest mixture grid a coded header may ask for.
HEADER_MAX_COMPONENTS = 50_000_000


def _adaptive_theta(pattern, default):
    if pattern is None or pattern.n < 2 or pattern.m == 0:
        return default
    return select_crp_theta(pattern.n, pattern.m).theta


def make_estimator(name, theta=None, alpha=None, i_max=None, j_max=None,
                   pattern=None, config=None):
    """
    Build an estimator from command-line style arguments.

    Parameters
    ----------
    name : str
        One of ``crp``, ``py``, ``mixture`` or ``py-mixture``.
    theta : float, optional
        Strength for ``crp`` and ``py``. When omitted and `pattern` is given,
        ``theta = m / ln n`` is matched to the pattern; otherwise the
        ``estimator.theta`` configuration value is used.
    alpha : float, optional
        Discount for ``py`` and ``py-mixture`` (default: ``estimator.alpha``).
    i_max, j_max : int, optional
        Mixture truncation (default: ``mixture.*`` or the pattern length).
    pattern : Pattern, optional
        The pattern that will be scored.
    config : dict, optional
        Loaded configuration supplying defaults.

    Returns
    -------
    PatternEstimator
    """
    config = config or {}
    est_cfg = config.get('estimator', {})
    mix_cfg = config.get('mixture', {})
    if pattern is not None:
        pattern = validate_pattern(pattern)

    if name in ('crp', 'py') and (i_max is not None or j_max is not None):
        raise DomainError(f"--imax/--jmax only apply to mixture estimators, "
                          f"not {name}")
    if name in ('crp', 'mixture') and alpha is not None:
        raise DomainError(f"--alpha does not apply to the {name} estimator")
    if name in ('mixture', 'py-mixture') and theta is not None:
        raise DomainError("mixture estimators choose theta themselves; "
                          "drop --theta")

    default_theta = est_cfg.get('theta', 1.0)
    default_alpha = est_cfg.get('alpha', 0.5)
    if name == 'crp':
        if theta is None:
            theta = _adaptive_theta(pattern, default_theta)
        return CRPEstimator(theta)
    if name == 'py':
        if theta is None:
            theta = _adaptive_theta(pattern, default_theta)
        return PitmanYorEstimator(default_alpha if alpha is None else alpha, theta)

    i_max = mix_cfg.get('i_max') if i_max is None else i_max
    j_max = mix_cfg.get('j_max') if j_max is None else j_max
    if name == 'mixture':
        est = CRPMixtureEstimator(i_max, j_max)
    elif name == 'py-mixture':
        est = PitmanYorMixtureEstimator(default_alpha if alpha is None else alpha,
                                        i_max, j_max)
    else:
        raise DomainError(f"unknown estimator {name!r}; choose from "
                          f"{', '.join(ESTIMATOR_NAMES)}")
    if pattern is not None:
        est = est.resolve(pattern.n)
    return est


def estimator_from_header(estimator_id, params, max_components=HEADER_MAX_COMPONENTS):
    """Rebuild the estimator a coded header describes.

    Raises :class:`UnknownVersion` for an unknown id or invalid parameters and
    :class:`CorruptStream` for a mixture grid larger than `max_components`.
    """
    cls = _BY_ID.get(estimator_id)
    if cls is None:
        raise UnknownVersion(f"unknown estimator id {estimator_id}")
    if len(params) != _PARAM_COUNT[estimator_id]:
        raise UnknownVersion(f"estimator id {estimator_id} takes "
                             f"{_PARAM_COUNT[estimator_id]} parameters, "
                             f"header has {len(params)}")
    try:
        if cls is CRPMixtureEstimator:
            i_max, j_max = params
            if not (float(i_max).is_integer() and float(j_max).is_integer()):
                raise DomainError("mixture bounds must be integers")
            if i_max > 0 and j_max > 0 and int(i_max) * int(j_max) > max_components:
                raise CorruptStream(f"header mixture grid {int(i_max)} x {int(j_max)} "
                                    f"exceeds {max_components} components")
            return CRPMixtureEstimator(int(i_max), int(j_max))
        return cls(*params)
    except DomainError as e:
        raise UnknownVersion(f"header parameters are invalid: {e}") from e


def as_estimator(obj):
    """Accept an estimator or a bare parameter object."""
    if isinstance(obj, PatternEstimator):
        return obj
    if isinstance(obj, CrpParams):
        return CRPEstimator(obj)
    if isinstance(obj, PyParams):
        return PitmanYorEstimator(obj)
    raise TypeError(f"cannot build an estimator from {type(obj).__name__}")


def sequential_log_prob(params, pattern):
    """
    Log-probability of a pattern by chaining one-step predictives.

    Parameters
    ----------
    params : CrpParams, PyParams or PatternEstimator
    pattern : Pattern or sequence of int

    Returns
    -------
    float
        ``sum_i ln P(psi_i | psi_1..psi_{i-1})``; 0 for the empty pattern.

    Examples
    --------
    >>> round(math.exp(sequential_log_prob(CrpParams(1.0), [1, 2, 1])), 12)
    0.166666666667
    """
    return as_estimator(params).sequential_log_prob(pattern)
