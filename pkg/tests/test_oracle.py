import itertools
import math
from collections import Counter, defaultdict

import numpy as np
import pytest

from patternpress.exceptions import DomainError, TooLarge
from patternpress.oracle import (envelope_log_bound, exact_log_prob, log_pattern_count,
                                 max_pattern_prob, pattern_prob_exact,
                                 pattern_prob_with_diffuse)
from patternpress.pattern import Pattern, enumerate_patterns, extract_pattern, profile
from patternpress.samplers import DiscreteDistribution, point_mass, sample_iid, uniform
from patternpress.utils.parallel import make_rng


def _brute_force_pattern_probs(probs, n):
    out = defaultdict(float)
    for seq in itertools.product(range(len(probs)), repeat=n):
        out[tuple(extract_pattern(seq))] += math.prod(probs[i] for i in seq)
    return out


class TestPatternProbExact(object):

    def test_uniform_two_repeat(self):
        assert pattern_prob_exact(uniform(2), [1, 1]) == pytest.approx(0.5)

    def test_uniform_two_distinct(self):
        assert pattern_prob_exact(uniform(2), [1, 2]) == pytest.approx(0.5)

    def test_more_symbols_than_atoms(self):
        assert pattern_prob_exact(point_mass(), [1, 2]) == 0.0
        assert exact_log_prob(point_mass(), [1, 2]) == -math.inf

    def test_empty_pattern(self):
        assert pattern_prob_exact(uniform(3), []) == 1.0

    def test_matches_brute_force(self):
        probs = [0.5, 0.3, 0.15, 0.05]
        dist = DiscreteDistribution(np.array(probs))
        brute = _brute_force_pattern_probs(probs, 5)
        for p in enumerate_patterns(5):
            assert pattern_prob_exact(dist, p) == pytest.approx(brute.get(tuple(p), 0.0),
                                                                rel=1e-9, abs=1e-15)

    def test_sums_to_one_over_patterns(self):
        dist = DiscreteDistribution(np.array([0.6, 0.25, 0.1, 0.05]))
        total = math.fsum(pattern_prob_exact(dist, p) for p in enumerate_patterns(6))
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_zero_mass_atoms_are_ignored(self):
        dist = DiscreteDistribution(np.array([0.5, 0.0, 0.5]))
        assert pattern_prob_exact(dist, [1, 2, 3]) == 0.0
        assert pattern_prob_exact(dist, [1, 2]) == pytest.approx(0.5)

    def test_guard(self):
        with pytest.raises(TooLarge):
            pattern_prob_exact(uniform(1000), [1, 2, 3, 4])


class TestSampledFrequencies(object):

    def test_iid_pattern_frequencies_match_exact(self):
        dist = DiscreteDistribution.from_weights([0.5, 0.3, 0.15, 0.05])
        n, trials = 4, 20_000
        rng = make_rng(29)
        counts = Counter(extract_pattern(sample_iid(dist, n, rng)) for _ in range(trials))
        assert sum(counts.values()) == trials
        for p in enumerate_patterns(n):
            prob = pattern_prob_exact(dist, p)
            band = 5 * math.sqrt(prob * (1 - prob) / trials)
            assert abs(counts[p] / trials - prob) <= band, str(p)


class TestDiffuseBlock(object):

    def test_pure_diffuse(self):
        assert pattern_prob_with_diffuse([], 1.0, 10, [1, 2]) == pytest.approx(0.9)
        assert pattern_prob_with_diffuse([], 1.0, 10, [1, 1]) == pytest.approx(0.1)

    def test_matches_explicit_atoms(self):
        explicit = DiscreteDistribution(np.array([0.3, 0.2] + [0.1] * 5))
        for p in enumerate_patterns(5):
            assert pattern_prob_with_diffuse([0.3, 0.2], 0.5, 5, p) == pytest.approx(
                pattern_prob_exact(explicit, p), rel=1e-9, abs=1e-15)

    def test_bad_mass(self):
        with pytest.raises(DomainError):
            pattern_prob_with_diffuse([0.5], 1.5, 3, [1])


class TestEnvelope(object):

    def test_small_profile(self):
        prof = profile(Pattern((1, 1, 2)))
        assert envelope_log_bound(prof).bound == pytest.approx(1 / 3)
        assert log_pattern_count(prof) == pytest.approx(math.log(3))

    def test_all_ones_and_all_distinct(self):
        assert envelope_log_bound(profile(Pattern((1,) * 9))).log_bound == pytest.approx(0.0)
        assert envelope_log_bound(profile(Pattern(tuple(range(1, 10))))).log_bound == \
            pytest.approx(0.0)

    def test_bounds_exact_probabilities(self):
        rng = np.random.default_rng(31)
        for _ in range(10):
            dist = DiscreteDistribution.from_weights(rng.dirichlet(np.ones(5)))
            for p in enumerate_patterns(6):
                bound = envelope_log_bound(profile(p)).bound
                assert pattern_prob_exact(dist, p) <= bound * (1 + 1e-12)

    def test_count_matches_enumeration(self):
        counts = defaultdict(int)
        for p in enumerate_patterns(6):
            counts[profile(p)] += 1
        for prof, c in counts.items():
            assert math.exp(log_pattern_count(prof)) == pytest.approx(c)


class TestMaxPatternProb(object):

    def test_point_mass_attains_repeats(self):
        assert max_pattern_prob([1, 1], 1, starts=2, seed=1) == pytest.approx(1.0)

    def test_distinct_pair_approaches_one(self):
        value = max_pattern_prob([1, 2], 1, diffuse_atoms=1000, starts=2, seed=1)
        assert value >= 1 - 1 / 1000 - 1e-9
        assert value <= 1.0

    def test_two_atom_optimum(self):
        value = max_pattern_prob([1, 1, 2], 2, starts=3, seed=2)
        assert value >= 2 / 9 - 1e-4
        assert value <= 1 / 3

    def test_monotone_in_budget(self):
        pattern = [1, 2, 1, 3, 1]
        values = [max_pattern_prob(pattern, k, starts=2, grid_resolution=60, seed=4)
                  for k in (1, 2, 3)]
        assert values[0] <= values[1] <= values[2]
        assert values[2] <= envelope_log_bound(profile(Pattern(tuple(pattern)))).bound

    def test_returns_masses(self):
        value, masses = max_pattern_prob([1, 1, 2], 2, starts=2, seed=2,
                                         return_argmax=True)
        assert masses.sum() == pytest.approx(1.0)
        assert value == pytest.approx(pattern_prob_with_diffuse(
            masses[:-1], min(masses[-1], 1.0), 1000, [1, 1, 2]))

    def test_guard(self):
        with pytest.raises(TooLarge):
            max_pattern_prob([1] * 11, 1)
