"""
patternpress
============

Pattern probability estimators, their redundancy, and pattern compression.

A pattern replaces each symbol of a sequence by the order of its first
appearance (``FEDERER`` becomes ``1 2 3 2 4 2 4``). This package scores
patterns under CRP, Pitman-Yor and mixture estimators, compares them with the
best i.i.d. source, and codes them with an arithmetic coder.
"""

# PEP0440 compatible formatted version, see:
# https://www.python.org/dev/peps/pep-0440/
#
#   X.Y.Z   # For bugfix releases
#   X.Y.devN
#
__version__ = '0.1.0'

from .pattern import Pattern, PrevalenceProfile, extract_pattern, profile
from .estimators import (CRPEstimator, PitmanYorEstimator, CRPMixtureEstimator,
                         make_estimator)
from .exceptions import PatternpressError

__all__ = [
    'Pattern',
    'PrevalenceProfile',
    'extract_pattern',
    'profile',
    'CRPEstimator',
    'PitmanYorEstimator',
    'CRPMixtureEstimator',
    'make_estimator',
    'PatternpressError',
]
