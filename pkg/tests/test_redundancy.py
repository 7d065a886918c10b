import copy
import math

import numpy as np
import pytest

from patternpress.estimators import (CRPEstimator, CRPMixtureEstimator, PitmanYorEstimator,
                                     PitmanYorMixtureEstimator)
from patternpress.exceptions import DomainError, TooLarge
from patternpress.pattern import enumerate_patterns
from patternpress.redundancy import (SUITES, average_redundancy_mc, crp_bound_partialred,
                                     crp_bound_stairbound, mixture_bound, pattern_redundancy,
                                     py_bound_upper, run_suites, summary_table,
                                     theorem_bound, worst_case_redundancy)
from patternpress.samplers import parse_source, point_mass, uniform
from patternpress.utils.config_utils import DEFAULT_CONFIG


@pytest.fixture
def small_config():
    config = copy.deepcopy(DEFAULT_CONFIG)
    config['verify'].update({
        'normalization_max_n': 5,
        'sequential_patterns': 20,
        'sequential_max_n': 60,
        'claim_j_max': 30,
        'claim_theta_step': 0.25,
        'codec_trials': 12,
        'codec_max_n': 40,
        'bell_max_n': 8,
        'exchangeability_profiles': 10,
        'envelope_max_n': 5,
        'envelope_distributions': 10,
        'theorem_ns': [1024],
        'theorem_trials': 2,
        'hrate_ns': [1000],
        'hrate_trials': 30,
        'growth_n': 2000,
        'growth_trials': 60,
        'weak_log2_ns': [6, 8, 10],
        'weak_trials': 4,
    })
    return config


class TestPatternRedundancy(object):

    def test_single_symbol(self):
        assert pattern_redundancy(CRPEstimator(1.0), [1]).redundancy_nats == \
            pytest.approx(0.0, abs=1e-12)

    def test_repeat(self):
        report = pattern_redundancy(CRPEstimator(1.0), [1, 1])
        assert report.redundancy_nats == pytest.approx(math.log(2))
        assert report.per_symbol == pytest.approx(math.log(2) / 2)
        assert report.bound_nats is None

    def test_pitman_yor(self):
        report = pattern_redundancy(PitmanYorEstimator(0.5, 0.5), [1, 2])
        assert report.redundancy_nats == pytest.approx(math.log(1.5))

    def test_empty_pattern(self):
        report = pattern_redundancy(CRPEstimator(1.0), [])
        assert report.redundancy_nats == 0.0
        assert report.per_symbol == 0.0

    def test_mixture_is_resolved(self):
        report = pattern_redundancy(CRPMixtureEstimator(), [1, 2, 1, 1])
        assert report.estimator['i_max'] == 4

    def test_to_dict(self):
        d = pattern_redundancy(CRPEstimator(2.0), [1, 2, 2]).to_dict()
        assert {'n', 'm', 'ln_p_upper', 'ln_q', 'redundancy_nats', 'bound_nats',
                'per_symbol', 'estimator'} <= set(d)
        assert (d['n'], d['m']) == (3, 2)

    def test_redundancy_is_non_negative_on_all_small_patterns(self):
        est = CRPEstimator(1.3)
        for p in enumerate_patterns(6):
            assert pattern_redundancy(est, p).redundancy_nats >= -1e-12


class TestWorstCase(object):

    def test_matches_exhaustive_search(self):
        est = PitmanYorEstimator(0.4, 1.0)
        report, pattern = worst_case_redundancy(est, 7)
        exhaustive = max(pattern_redundancy(est, p).redundancy_nats
                         for p in enumerate_patterns(7))
        assert report.redundancy_nats == pytest.approx(exhaustive)
        assert pattern_redundancy(est, pattern).redundancy_nats == \
            pytest.approx(report.redundancy_nats)

    def test_guard(self):
        with pytest.raises(TooLarge):
            worst_case_redundancy(CRPEstimator(1.0), 13)


class TestTheoremBound(object):

    def test_crp_with_adaptive_theta(self):
        n, m = 100, 5
        est = CRPEstimator(m / math.log(n))
        assert theorem_bound(est, n, m) == crp_bound_partialred(n, m)

    def test_crp_with_other_theta(self):
        assert theorem_bound(CRPEstimator(2.0), 100, 5) == crp_bound_stairbound(100, 5, 2.0)

    def test_short_patterns_have_no_crp_bound(self):
        assert theorem_bound(CRPEstimator(2.0), 10, 3) is None
        assert theorem_bound(CRPEstimator(2.0), 100, 0) is None

    def test_pitman_yor(self):
        assert theorem_bound(PitmanYorEstimator(0.5, 1.0), 100, 5) == \
            py_bound_upper(100, 5, 0.5, 1.0)
        assert theorem_bound(PitmanYorEstimator(0.0, 2.0), 100, 5) == \
            crp_bound_stairbound(100, 5, 2.0)

    def test_mixtures(self):
        assert theorem_bound(CRPMixtureEstimator(100, 100), 100, 5) == mixture_bound(100, 5)
        assert theorem_bound(PitmanYorMixtureEstimator(0.5, 10, 10), 100, 5) is None

    def test_sampled_patterns_respect_bound(self):
        source = parse_source('crp:2')
        for s in range(3):
            pattern = source.sample_pattern(2048, np.random.default_rng(s))
            est = CRPEstimator(pattern.m / math.log(pattern.n))
            report = pattern_redundancy(est, pattern)
            assert report.redundancy_nats <= report.bound_nats + 1.0


class TestAverageRedundancy(object):

    def test_point_mass_closed_form(self):
        n, theta = 20, 2.0
        result = average_redundancy_mc(point_mass(), CRPEstimator(theta), n, 3, seed=1)
        expected = sum(math.log((i + theta) / i) for i in range(1, n)) / n
        assert result.per_symbol == pytest.approx(expected)
        assert result.std_error == pytest.approx(0.0, abs=1e-12)
        assert result.modes == {'exact': 3}

    def test_deterministic(self):
        source = parse_source('zipf:1.3:50')
        a = average_redundancy_mc(source, CRPEstimator(1.0), 64, 5, seed=42)
        b = average_redundancy_mc(source, CRPEstimator(1.0), 64, 5, seed=42)
        assert a.to_dict() == b.to_dict()

    def test_sequence_mode_is_a_lower_proxy(self):
        est = CRPEstimator(1.0)
        exact = average_redundancy_mc(uniform(3), est, 8, 10, seed=5, mode='exact')
        seq = average_redundancy_mc(uniform(3), est, 8, 10, seed=5, mode='sequence')
        assert seq.per_symbol <= exact.per_symbol + 1e-12
        assert seq.modes == {'sequence': 10}

    def test_partition_sources_use_envelope(self):
        result = average_redundancy_mc(parse_source('crp:1'), CRPEstimator(1.0), 50, 4, seed=3)
        assert result.modes == {'envelope': 4}
        with pytest.raises(DomainError):
            average_redundancy_mc(parse_source('crp:1'), CRPEstimator(1.0), 50, 2, seed=3,
                                  mode='exact')

    def test_arguments(self):
        with pytest.raises(DomainError):
            average_redundancy_mc(uniform(2), CRPEstimator(1.0), 10, 2, seed=1, mode='best')
        with pytest.raises(DomainError):
            average_redundancy_mc(uniform(2), CRPEstimator(1.0), 0, 2, seed=1)


class TestVerifySuites(object):

    @pytest.mark.parametrize("name", ['bell', 'normalization', 'sequential',
                                      'exchangeability', 'envelope', 'theorem1',
                                      'pyupper', 'linear', 'claim', 'hrate', 'growth',
                                      'weak', 'codec'])
    def test_suite_passes(self, small_config, name):
        result, = run_suites([name], config=small_config, seed=7)
        assert result.passed, result.failures
        assert result.checked > 0

    def test_normalization_checks_mixture_at_every_length(self, small_config):
        small_config['verify']['normalization_max_n'] = 7
        result, = run_suites(['normalization'], config=small_config, seed=7)
        # three CRP, nine Pitman-Yor and one mixture per length
        assert result.checked == 7 * 13
        assert result.passed, result.failures

    def test_unknown_suite(self):
        with pytest.raises(DomainError):
            run_suites(['nope'])

    def test_summary_table(self, small_config):
        results = run_suites(['bell', 'claim'], config=small_config, seed=1)
        table = summary_table(results)
        assert list(table['suite']) == ['bell', 'claim']
        assert table['passed'].all()

    def test_suite_registry(self):
        assert {'bell', 'normalization', 'sequential', 'exchangeability', 'envelope',
                'theorem1', 'pyupper', 'linear', 'claim', 'hrate', 'growth', 'weak',
                'codec'} == set(SUITES)
