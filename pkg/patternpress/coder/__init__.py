"""
The :mod:`patternpress.coder` module compresses patterns with an arithmetic
coder driven by an estimator's sequential predictive distributions.
"""

from .arithmetic import ArithmeticEncoder, ArithmeticDecoder, FrequencyTable
from .quantize import quantize, FREQUENCY_BITS
from .codec import (CodedPattern, encode, decode, code_log_prob, MAGIC, VERSION,
                    FILE_EXTENSION)

__all__ = [
    'ArithmeticEncoder',
    'ArithmeticDecoder',
    'FrequencyTable',
    'quantize',
    'FREQUENCY_BITS',
    'CodedPattern',
    'encode',
    'decode',
    'code_log_prob',
    'MAGIC',
    'VERSION',
    'FILE_EXTENSION',
]
