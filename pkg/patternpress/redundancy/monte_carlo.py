"""
Monte Carlo estimate of an estimator's average redundancy on a fixed source.

Each trial samples a sequence, takes its pattern and compares the estimator's
log-probability with the source's log-probability of that pattern. The source
term is computed in one of three modes:

``exact``
    The exact pattern probability (only when its guard allows).
``sequence``
    ``ln p(x) + sum_mu ln phi_mu!``, the probability of the observed sequence
    and its relabelings among equally frequent symbols. This is a lower bound
    on ``ln p(psi)``, so the averaged redundancy is a lower proxy.
``envelope``
    The envelope bound, an upper proxy. The only choice for sources without
    an explicit distribution.

The mode used by every trial is reported.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from ..exceptions import DomainError, TooLarge
from ..math_utils import gammaln, mean_and_std
from ..oracle import EXACT_MAX_TERMS, envelope_log_bound, pattern_prob_exact
from ..pattern import extract_pattern, profile
from ..samplers import DiscreteDistribution, IidSource, sample_iid
from ..utils.parallel import make_rng, parallel_map, spawn_seeds

logger = logging.getLogger(__name__)

MODES = ('auto', 'exact', 'sequence', 'envelope')


@dataclass
class AverageRedundancy:
    """Result of :func:`average_redundancy_mc` (nats per symbol)."""

    per_symbol: float
    std_error: float
    n: int
    trials: int
    seed: int
    modes: Dict[str, int] = field(default_factory=dict)

    def to_dict(self):
        return {'per_symbol_nats': self.per_symbol, 'std_error': self.std_error,
                'n': self.n, 'trials': self.trials, 'seed': self.seed,
                'modes': dict(self.modes)}


def _sequence_log_prob(dist, tokens, prof):
    log_probs = np.log(dist.probs[tokens - 1])
    log_relabel = sum(float(gammaln(phi + 1)) for phi in prof.counts.values())
    return float(np.sum(log_probs)) + log_relabel


def _trial(args):
    source, estimator, n, seed_seq, mode, max_terms = args
    rng = make_rng(seed_seq)
    dist = source.distribution if isinstance(source, IidSource) else None
    if dist is not None:
        tokens = sample_iid(dist, n, rng)
        pattern = extract_pattern(tokens)
    else:
        pattern = source.sample_pattern(n, rng)
    prof = profile(pattern)
    ln_q = estimator.log_prob_profile(prof)

    used = mode
    ln_p = None
    if mode in ('auto', 'exact') and dist is not None:
        try:
            p = pattern_prob_exact(dist, pattern, max_terms)
            if p > 0:
                ln_p, used = math.log(p), 'exact'
        except TooLarge:
            if mode == 'exact':
                raise
    if ln_p is None and mode in ('auto', 'sequence') and dist is not None:
        ln_p, used = _sequence_log_prob(dist, tokens, prof), 'sequence'
    if ln_p is None:
        if mode in ('exact', 'sequence'):
            raise DomainError(f"mode {mode!r} needs a source with a distribution "
                              f"and a representable probability")
        ln_p, used = envelope_log_bound(prof).log_bound, 'envelope'
    return (ln_p - ln_q) / n, used


def average_redundancy_mc(source, estimator, n, trials, seed, mode='auto',
                          max_terms=EXACT_MAX_TERMS, workers=1, verbose=False):
    """
    Average per-symbol redundancy of `estimator` on `source`.

    Parameters
    ----------
    source : DiscreteDistribution or Source
    estimator : PatternEstimator
    n : int
        Pattern length, at least 1.
    trials : int
        At least 1. Trial ``t`` draws from the ``t``-th child seed of `seed`.
    seed : int
    mode : {'auto', 'exact', 'sequence', 'envelope'}
    max_terms : int
        Guard for the exact mode.
    workers : int, default 1
    verbose : bool, default False

    Returns
    -------
    AverageRedundancy
    """
    if mode not in MODES:
        raise DomainError(f"mode must be one of {', '.join(MODES)}")
    if n < 1 or trials < 1:
        raise DomainError("n and trials must be at least 1")
    if isinstance(source, DiscreteDistribution):
        source = IidSource('distribution', source)
    estimator = estimator.resolve(n)

    items = [(source, estimator, n, s, mode, max_terms)
             for s in spawn_seeds(seed, trials)]
    results = parallel_map(_trial, items, workers=workers, verbose=verbose,
                           desc=f"redundancy n={n}")
    values = np.asarray([r[0] for r in results])
    modes = Counter(r[1] for r in results)
    mean, std = mean_and_std(values)
    logger.info("average redundancy at n=%d: %.6g nats/symbol (%s)",
                n, mean, dict(modes))
    return AverageRedundancy(per_symbol=float(mean),
                             std_error=float(std / math.sqrt(trials)),
                             n=n, trials=trials, seed=seed, modes=dict(modes))
