import math

import numpy as np
import pytest

from patternpress.coder import (MAGIC, ArithmeticDecoder, ArithmeticEncoder, CodedPattern,
                                FrequencyTable, code_log_prob, decode, encode, quantize)
from patternpress.estimators import (CRPEstimator, CRPMixtureEstimator, CrpParams,
                                     PitmanYorEstimator, PitmanYorMixtureEstimator,
                                     mixture_log_prob)
from patternpress.exceptions import (CorruptStream, DomainError, UnknownVersion,
                                     ZeroProbability)
from patternpress.math_utils import nats_to_bits
from patternpress.pattern import Pattern
from patternpress.samplers import sample_crp_partition

ESTIMATORS = [CRPEstimator(1.0), CRPEstimator(7.5), PitmanYorEstimator(0.5, 1.0),
              PitmanYorEstimator(0.8, -0.3), CRPMixtureEstimator()]


@pytest.fixture(scope="module")
def sampled_patterns():
    return [sample_crp_partition(CrpParams(theta), n, seed)
            for seed, (theta, n) in enumerate([(0.5, 30), (2.0, 200), (10.0, 120),
                                                (1.0, 2), (4.0, 300)])]


class TestQuantize(object):

    def test_total(self):
        freqs = quantize([0.2, 0.3, 0.5])
        assert int(freqs.sum()) == 1 << 32

    def test_every_symbol_keeps_a_count(self):
        freqs = quantize([1 - 1e-15, 1e-15])
        assert freqs.tolist() == [(1 << 32) - 1, 1]

    def test_deficit_goes_to_most_probable(self):
        freqs = quantize([0.1, 0.6, 0.3], frequency_bits=4)
        assert int(freqs.sum()) == 16
        assert freqs[0] == 2 and freqs[2] == 5
        assert freqs[1] == 9

    def test_too_many_symbols(self):
        with pytest.raises(ValueError):
            quantize(np.full(16, 1 / 16), frequency_bits=4)

    def test_empty_top(self):
        with pytest.raises(ZeroProbability):
            quantize(np.full(10, 0.1), frequency_bits=4)


class TestArithmeticCoder(object):

    def test_round_trip_fixed_table(self):
        table = FrequencyTable([1, 5, 90, 4])
        symbols = np.random.default_rng(0).choice(4, size=2000, p=[0.01, 0.05, 0.9, 0.04])
        encoder = ArithmeticEncoder()
        for s in symbols:
            encoder.encode(table, int(s))
        payload = encoder.finish()
        decoder = ArithmeticDecoder(payload)
        assert [decoder.decode(table) for _ in symbols] == symbols.tolist()

    def test_length_near_information_content(self):
        table = FrequencyTable([1, 3])
        symbols = [1, 1, 0, 1, 1, 1, 0, 1] * 50
        encoder = ArithmeticEncoder()
        for s in symbols:
            encoder.encode(table, s)
        bits = 8 * len(encoder.finish())
        ideal = -sum(math.log2(0.75 if s else 0.25) for s in symbols)
        assert ideal - 1 <= bits <= ideal + 16

    def test_no_steps_is_empty(self):
        assert ArithmeticEncoder().finish() == b''

    def test_rejects_empty_symbol(self):
        with pytest.raises(ValueError):
            ArithmeticEncoder().encode(FrequencyTable([0, 4]), 0)

    def test_frequency_table(self):
        table = FrequencyTable([2, 3, 5])
        assert table.total == 10
        assert (table.low(1), table.high(1)) == (2, 5)
        assert [table.symbol_at(v) for v in (0, 1, 2, 4, 5, 9)] == [0, 0, 1, 1, 2, 2]


class TestCodec(object):

    @pytest.mark.parametrize("estimator", ESTIMATORS, ids=repr)
    def test_round_trip(self, estimator, sampled_patterns):
        for pattern in sampled_patterns:
            coded = encode(estimator, pattern)
            assert decode(coded.to_bytes()) == pattern
            assert decode(coded) == pattern

    @pytest.mark.parametrize("estimator", ESTIMATORS, ids=repr)
    def test_payload_close_to_ideal_length(self, estimator, sampled_patterns):
        for pattern in sampled_patterns:
            coded = encode(estimator, pattern)
            ideal = nats_to_bits(-code_log_prob(estimator, pattern, quantized=False))
            assert ideal - 1 <= coded.payload_bits <= ideal + 32 + pattern.n * 2.0 ** -20

    def test_trivial_patterns_have_empty_payload(self):
        for pattern in ([], [1]):
            coded = encode(CRPEstimator(1.0), pattern)
            assert coded.payload == b''
            assert decode(coded.to_bytes()) == Pattern(tuple(pattern))

    def test_header_layout(self):
        data = encode(PitmanYorEstimator(0.25, 2.0), [1, 2, 1, 3]).to_bytes()
        assert data[:4] == MAGIC
        assert data[4] == 1 and data[5] == 2
        coded = CodedPattern.from_bytes(data)
        assert coded.params == (0.25, 2.0)
        assert coded.n == 4

    def test_mixture_header_records_bounds(self):
        coded = encode(CRPMixtureEstimator(), [1, 2, 2, 3, 1])
        assert coded.estimator_id == 3
        assert coded.params == (5.0, 5.0)

    def test_flipped_payload_byte(self, sampled_patterns):
        data = bytearray(encode(CRPEstimator(2.0), sampled_patterns[1]).to_bytes())
        data[-1] ^= 0x10
        with pytest.raises(CorruptStream):
            decode(bytes(data))

    def test_truncated_artifact(self, sampled_patterns):
        data = encode(CRPEstimator(2.0), sampled_patterns[1]).to_bytes()
        for cut in (3, 10, len(data) - 1):
            with pytest.raises(CorruptStream):
                CodedPattern.from_bytes(data[:cut])

    def test_bad_magic(self):
        data = encode(CRPEstimator(1.0), [1, 2]).to_bytes()
        with pytest.raises(CorruptStream):
            CodedPattern.from_bytes(b'XXXX' + data[4:])

    def test_unknown_version_and_estimator(self):
        with pytest.raises(UnknownVersion):
            CodedPattern.from_bytes(CodedPattern(1, (1.0,), 2, b'', version=2).to_bytes())
        with pytest.raises(UnknownVersion):
            CodedPattern.from_bytes(CodedPattern(9, (1.0,), 2, b'').to_bytes())

    def test_invalid_header_parameters(self):
        data = CodedPattern(1, (-1.0,), 2, b'').to_bytes()
        with pytest.raises(UnknownVersion):
            decode(data)

    def test_mixture_sequential_matches_closed_form(self, sampled_patterns):
        for pattern in sampled_patterns:
            est = CRPMixtureEstimator().resolve(pattern.n)
            joint = code_log_prob(est, pattern, quantized=False) + \
                math.log(est.config.total_weight())
            assert joint == pytest.approx(mixture_log_prob(est.config, pattern), abs=1e-6)

    def test_quantization_cost_is_tiny(self, sampled_patterns):
        est = PitmanYorEstimator(0.5, 1.0)
        for pattern in sampled_patterns:
            exact = code_log_prob(est, pattern, quantized=False)
            coded = code_log_prob(est, pattern)
            assert abs(exact - coded) <= pattern.n * 2.0 ** -20

    def test_pitman_yor_mixture_is_not_codable(self):
        with pytest.raises(DomainError):
            encode(PitmanYorMixtureEstimator(0.5, 4, 4), [1, 2, 1])

    def test_header_length_beyond_limit(self):
        data = CodedPattern(1, (1.0,), 2 ** 40, b'').to_bytes()
        with pytest.raises(CorruptStream, match="limit"):
            decode(data)

    def test_empty_payload_for_long_pattern(self):
        with pytest.raises(CorruptStream, match="payload ended"):
            decode(CodedPattern(1, (1.0,), 200_000, b''))

    def test_payload_dropped(self, sampled_patterns):
        coded = encode(CRPEstimator(2.0), sampled_patterns[4])
        with pytest.raises(CorruptStream):
            decode(CodedPattern(coded.estimator_id, coded.params, coded.n, b''))

    def test_custom_length_limit(self):
        data = encode(CRPEstimator(1.0), [1, 2, 1, 3]).to_bytes()
        with pytest.raises(CorruptStream):
            decode(data, max_n=3)
        assert decode(data, max_n=4) == Pattern((1, 2, 1, 3))

    def test_oversized_mixture_grid_in_header(self):
        data = CodedPattern(3, (1e6, 1e6), 5, b'\x00').to_bytes()
        with pytest.raises(CorruptStream, match="components"):
            decode(data)
        with pytest.raises(CorruptStream):
            decode(encode(CRPMixtureEstimator(), [1, 2, 1, 3]), max_components=10)
