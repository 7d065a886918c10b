"""
Pattern compression with an estimator's sequential predictive distributions.

At every step the coding alphabet is the set of symbols seen so far plus one
"new symbol" event, whose index is implied. The first step has a single
option and costs nothing.

Artifact layout (little-endian)::

    magic    4 bytes  b"PTNC"
    version  u8       1
    id       u8       1 = CRP [theta], 2 = Pitman-Yor [alpha, theta],
                      3 = CRP mixture [i_max, j_max]
    params   f64 * count(id)
    n        u64
    crc32    u32      of the payload
    payload  bytes
"""

import logging
import math
import struct
import zlib
from dataclasses import dataclass
from typing import Tuple

from ..estimators import estimator_from_header
from ..estimators.factory import _PARAM_COUNT, HEADER_MAX_COMPONENTS
from ..exceptions import (CorruptStream, DomainError, TooLarge, UnknownVersion,
                          ZeroProbability)
from ..pattern import Pattern, validate_pattern
from .arithmetic import ArithmeticDecoder, ArithmeticEncoder, FrequencyTable
from .quantize import FREQUENCY_BITS, quantize

logger = logging.getLogger(__name__)

MAGIC = b"PTNC"
VERSION = 1
FILE_EXTENSION = '.ptnc'

# Longest pattern a header may declare.
DECODE_MAX_N = 1 << 24

_PREFIX = struct.Struct('<4sBB')
_TRAILER = struct.Struct('<QI')


@dataclass(frozen=True)
class CodedPattern:
    """A compressed pattern: header fields plus the arithmetic-coded payload."""

    estimator_id: int
    params: Tuple[float, ...]
    n: int
    payload: bytes
    version: int = VERSION

    @property
    def payload_bits(self):
        return 8 * len(self.payload)

    @property
    def crc(self):
        return zlib.crc32(self.payload) & 0xFFFFFFFF

    def to_bytes(self):
        params = struct.pack(f'<{len(self.params)}d', *self.params)
        return (_PREFIX.pack(MAGIC, self.version, self.estimator_id) + params
                + _TRAILER.pack(self.n, self.crc) + self.payload)

    @classmethod
    def from_bytes(cls, data):
        """
        Parse an artifact.

        Raises
        ------
        CorruptStream
            Bad magic, truncated header or CRC mismatch.
        UnknownVersion
            Unsupported version or estimator id.
        """
        data = bytes(data)
        if len(data) < _PREFIX.size:
            raise CorruptStream("artifact is shorter than its header")
        magic, version, estimator_id = _PREFIX.unpack_from(data)
        if magic != MAGIC:
            raise CorruptStream(f"bad magic {magic!r}")
        if version != VERSION:
            raise UnknownVersion(f"unsupported format version {version}")
        if estimator_id not in _PARAM_COUNT:
            raise UnknownVersion(f"unknown estimator id {estimator_id}")
        count = _PARAM_COUNT[estimator_id]
        offset = _PREFIX.size
        header_end = offset + 8 * count + _TRAILER.size
        if len(data) < header_end:
            raise CorruptStream("artifact header is truncated")
        params = struct.unpack_from(f'<{count}d', data, offset)
        n, crc = _TRAILER.unpack_from(data, offset + 8 * count)
        payload = data[header_end:]
        coded = cls(estimator_id, tuple(params), n, payload, version)
        if coded.crc != crc:
            raise CorruptStream("payload checksum mismatch")
        return coded


def _step_tables(predictor, frequency_bits):
    probs = predictor.probabilities()
    if probs.size == 1:
        return None, probs
    return FrequencyTable(quantize(probs, frequency_bits)), probs


def _codable(estimator, n):
    estimator = estimator.resolve(n)
    if estimator.estimator_id is None:
        raise DomainError(f"the {estimator.name} estimator has no coded format")
    return estimator


def encode(estimator, pattern, frequency_bits=FREQUENCY_BITS):
    """
    Compress a pattern.

    Parameters
    ----------
    estimator : PatternEstimator
        CRP, Pitman-Yor or CRP mixture (mixture bounds default to the pattern
        length).
    pattern : Pattern or sequence of int
    frequency_bits : int, default 32

    Returns
    -------
    CodedPattern
    """
    pattern = validate_pattern(pattern)
    if pattern.n > DECODE_MAX_N:
        raise TooLarge("pattern length", pattern.n, DECODE_MAX_N)
    estimator = _codable(estimator, pattern.n)
    predictor = estimator.predictor(pattern.n)
    encoder = ArithmeticEncoder()
    for s in pattern:
        table, _ = _step_tables(predictor, frequency_bits)
        if table is not None:
            if table.high(s - 1) <= table.low(s - 1):
                raise ZeroProbability(f"symbol {s} has no quantized mass")
            encoder.encode(table, s - 1)
        predictor.update(s)
    payload = encoder.finish()
    logger.debug("coded %d symbols into %d bytes", pattern.n, len(payload))
    return CodedPattern(estimator.estimator_id,
                        tuple(float(x) for x in estimator.header_params()),
                        pattern.n, payload)


def decode(coded, frequency_bits=FREQUENCY_BITS, max_n=DECODE_MAX_N,
           max_components=HEADER_MAX_COMPONENTS):
    """
    Decompress a :class:`CodedPattern` (or its bytes).

    Parameters
    ----------
    coded : CodedPattern or bytes
    frequency_bits : int, default 32
    max_n : int
        Largest pattern length a header may declare.
    max_components : int
        Largest mixture grid a header may declare.

    Raises
    ------
    CorruptStream
        If the header exceeds a limit or the payload runs out before the
        pattern does.
    """
    if isinstance(coded, (bytes, bytearray)):
        coded = CodedPattern.from_bytes(coded)
    if coded.n > max_n:
        raise CorruptStream(f"header declares {coded.n} symbols; the limit is {max_n}")
    estimator = estimator_from_header(coded.estimator_id, coded.params, max_components)
    predictor = estimator.predictor(coded.n)
    decoder = ArithmeticDecoder(coded.payload)
    readable = len(coded.payload) * 8 + decoder.state_bits
    symbols = []
    for _ in range(coded.n):
        table, _ = _step_tables(predictor, frequency_bits)
        s = 1 if table is None else decoder.decode(table) + 1
        if decoder.position > readable:
            raise CorruptStream(f"payload ended after {len(symbols)} of {coded.n} symbols")
        predictor.update(s)
        symbols.append(s)
    return Pattern._trusted(symbols)


def code_log_prob(estimator, pattern, frequency_bits=FREQUENCY_BITS, quantized=True):
    """
    Sum of log coding probabilities the coder uses for `pattern`.

    With ``quantized=False`` the predictive probabilities before quantization
    are used. For the CRP mixture this is the mixture probability divided by
    the total included weight.
    """
    pattern = validate_pattern(pattern)
    estimator = _codable(estimator, pattern.n)
    predictor = estimator.predictor(pattern.n)
    total = 0.0
    for s in pattern:
        table, probs = _step_tables(predictor, frequency_bits)
        if table is not None:
            if quantized:
                total += math.log((table.high(s - 1) - table.low(s - 1)) / table.total)
            else:
                total += math.log(probs[s - 1])
        predictor.update(s)
    return total
