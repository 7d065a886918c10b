"""
The :mod:`patternpress.oracle` module holds exact and brute-force reference
computations for small patterns: probabilities under a known distribution, the
pattern-count envelope and a numerical search for the most likely
distribution of a pattern.
"""

from .exact import (EnvelopeBound, envelope_log_bound, log_pattern_count,
                    pattern_prob_exact, pattern_prob_with_diffuse, exact_log_prob,
                    EXACT_MAX_TERMS)
from .pml import max_pattern_prob, MAXPROB_MAX_N, DIFFUSE_ATOMS

__all__ = [
    'EnvelopeBound',
    'envelope_log_bound',
    'log_pattern_count',
    'pattern_prob_exact',
    'pattern_prob_with_diffuse',
    'exact_log_prob',
    'EXACT_MAX_TERMS',
    'max_pattern_prob',
    'MAXPROB_MAX_N',
    'DIFFUSE_ATOMS',
]
