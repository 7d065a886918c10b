"""
The :mod:`patternpress.pattern` module defines patterns, extracts them from
token sequences and computes their prevalence profiles.
"""

from .pattern import (Pattern, PrevalenceProfile, extract_pattern, profile,
                      validate_pattern)
from .enumerate import enumerate_patterns, bell_numbers, ENUMERATE_MAX_N
from .io import (parse_pattern, format_pattern, read_patterns, write_patterns,
                 read_tokens)

__all__ = [
    'Pattern',
    'PrevalenceProfile',
    'extract_pattern',
    'profile',
    'validate_pattern',
    'enumerate_patterns',
    'bell_numbers',
    'ENUMERATE_MAX_N',
    'parse_pattern',
    'format_pattern',
    'read_patterns',
    'write_patterns',
    'read_tokens',
]
