"""
Pattern sources named by command-line specifiers.

=========================== ==================================================
specifier                   source
=========================== ==================================================
``uniform:k``               i.i.d. uniform on ``1..k``
``zipf:s:k``                i.i.d. Zipf with exponent ``s`` on ``1..k``
``geometric:r``             i.i.d. ``(1 - r) r^(i-1)``
``dirichlet-stick:theta:T`` i.i.d. from one draw of GEM(theta) weights
``py-stick:alpha:theta:T``  i.i.d. from one draw of Pitman-Yor stick weights
``crp:theta``               sequential CRP pattern
``py:alpha:theta``          sequential Pitman-Yor pattern
=========================== ==================================================

Stick sources draw their weights once, when the specifier is parsed, and keep
the residual stick mass as one extra atom.
"""

import logging
import warnings
from abc import ABC, abstractmethod

import numpy as np

from ..estimators import CrpParams, PyParams
from ..exceptions import DomainError
from ..pattern import extract_pattern
from ..utils.parallel import make_rng, parallel_map, spawn_seeds
from .distributions import geometric, sample_iid, uniform, zipf
from .partitions import sample_crp_partition
from .stick_breaking import gem_weights, py_weights

logger = logging.getLogger(__name__)

RESIDUAL_WARNING = 1e-3


class Source(ABC):
    """Something that emits random patterns of a requested length."""

    #: i.i.d. sources expose their distribution; partition sources do not
    distribution = None

    def __init__(self, spec):
        self.spec = spec

    def __repr__(self):
        return f"Source({self.spec!r})"

    @abstractmethod
    def sample_pattern(self, n, rng):
        """Draw one pattern of length `n` using generator `rng`."""

    def distinct_count(self, n, rng):
        """Number of distinct symbols in one sampled pattern."""
        return self.sample_pattern(n, rng).m

    @property
    def entropy_nats(self):
        return None


class IidSource(Source):
    """Patterns of i.i.d. sequences from a fixed distribution."""

    def __init__(self, spec, distribution):
        super().__init__(spec)
        self.distribution = distribution

    def sample_tokens(self, n, rng):
        return sample_iid(self.distribution, n, rng)

    def sample_pattern(self, n, rng):
        return extract_pattern(self.sample_tokens(n, rng))

    def distinct_count(self, n, rng):
        return int(np.unique(self.sample_tokens(n, rng)).size)

    @property
    def entropy_nats(self):
        return self.distribution.entropy_nats()


class PartitionSource(Source):
    """Patterns drawn sequentially from a CRP or Pitman-Yor process."""

    def __init__(self, spec, params):
        super().__init__(spec)
        self.params = params

    def sample_pattern(self, n, rng):
        return sample_crp_partition(self.params, n, rng)


def _numbers(spec, fields, kinds):
    if len(fields) != len(kinds):
        raise DomainError(f"source {spec!r} takes {len(kinds)} parameter(s)")
    out = []
    for f, kind in zip(fields, kinds):
        try:
            x = kind(f)
        except ValueError:
            raise DomainError(f"bad parameter {f!r} in source {spec!r}")
        out.append(x)
    return out


def _stick_source(spec, weights):
    if weights.residual > RESIDUAL_WARNING:
        warnings.warn(f"{spec}: unbroken stick mass {weights.residual:.3g} "
                      f"is kept as a single atom; raise T")
    return IidSource(spec, weights.to_distribution())


def parse_source(spec, seed=None):
    """
    Build a :class:`Source` from a specifier such as ``zipf:1.5:10000``.

    Parameters
    ----------
    spec : str
    seed : int, SeedSequence or Generator, optional
        Used only by the stick sources, to draw their weights.

    Raises
    ------
    DomainError
        On an unknown kind or bad parameters.
    """
    kind, *fields = spec.strip().split(':')
    if kind == 'uniform':
        (k,) = _numbers(spec, fields, (int,))
        return IidSource(spec, uniform(k))
    if kind == 'zipf':
        s, k = _numbers(spec, fields, (float, int))
        return IidSource(spec, zipf(s, k))
    if kind == 'geometric':
        (r,) = _numbers(spec, fields, (float,))
        return IidSource(spec, geometric(r))
    if kind == 'dirichlet-stick':
        theta, T = _numbers(spec, fields, (float, int))
        return _stick_source(spec, gem_weights(theta, T, make_rng(seed)))
    if kind == 'py-stick':
        alpha, theta, T = _numbers(spec, fields, (float, float, int))
        return _stick_source(spec, py_weights(alpha, theta, T, make_rng(seed)))
    if kind == 'crp':
        (theta,) = _numbers(spec, fields, (float,))
        return PartitionSource(spec, CrpParams(theta))
    if kind == 'py':
        alpha, theta = _numbers(spec, fields, (float, float))
        return PartitionSource(spec, PyParams(alpha, theta))
    raise DomainError(f"unknown source kind {kind!r} in {spec!r}")


def _distinct_trial(args):
    source, n, seed_seq = args
    return source.distinct_count(n, make_rng(seed_seq))


def _pattern_trial(args):
    source, n, seed_seq = args
    return source.sample_pattern(n, make_rng(seed_seq))


def distinct_count_samples(source, n, trials, seed, workers=1, verbose=False):
    """
    Number of distinct symbols ``M_n`` in each of `trials` sampled patterns.

    Trial ``t`` uses the ``t``-th child of ``SeedSequence(seed)``.

    Returns
    -------
    ndarray of int64
    """
    seeds = spawn_seeds(seed, trials)
    counts = parallel_map(_distinct_trial, [(source, n, s) for s in seeds],
                          workers=workers, verbose=verbose, desc=f"M_n {source.spec}")
    return np.asarray(counts, dtype=np.int64)


def sample_patterns(source, n, trials, seed, workers=1, verbose=False):
    """Sample `trials` independent patterns of length `n`, in trial order."""
    seeds = spawn_seeds(seed, trials)
    logger.debug("sampling %d patterns of length %d from %s", trials, n, source.spec)
    return parallel_map(_pattern_trial, [(source, n, s) for s in seeds],
                        workers=workers, verbose=verbose, desc=f"sample {source.spec}")
