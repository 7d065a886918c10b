"""
Numerical verification suites behind ``patternpress verify``.

Each suite checks one family of properties at the sizes given in the
``verify`` section of the configuration and returns a :class:`SuiteResult`.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import List

import numpy as np
import pandas as pd
from tqdm import tqdm

from ..coder import code_log_prob, decode, encode
from ..estimators import (CRPEstimator, CRPMixtureEstimator, CrpParams,
                          PitmanYorEstimator, mixture_log_prob)
from ..exceptions import DomainError
from ..math_utils import linear_fit, mean_and_std, nats_to_bits
from ..oracle import envelope_log_bound, pattern_prob_exact
from ..pattern import bell_numbers, enumerate_patterns, extract_pattern, profile
from ..samplers import (DiscreteDistribution, distinct_count_samples,
                        parse_source, sample_crp_partition, sample_patterns)
from ..utils.config_utils import DEFAULT_CONFIG
from ..utils.parallel import make_rng, spawn_seeds
from .bounds import (claim_grid_sweep, crp_bound_partialred, distinct_threshold,
                     expected_distinct_bound, markov_distinct_tail,
                     py_bound_upper, py_linear_witnesses, py_witness_lower_bound)
from .monte_carlo import average_redundancy_mc

logger = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 20


@dataclass
class SuiteResult:
    """Outcome of one verification suite."""

    name: str
    passed: bool
    checked: int
    failures: List[str] = field(default_factory=list)
    detail: str = ''

    def to_dict(self):
        return {'suite': self.name, 'passed': self.passed, 'checked': self.checked,
                'failures': len(self.failures), 'detail': self.detail}


class _Tally:
    def __init__(self, name):
        self.name = name
        self.checked = 0
        self.failures = []

    def check(self, ok, message):
        self.checked += 1
        if not ok:
            self.failures.append(message)

    def result(self, detail=''):
        if self.failures:
            logger.warning("suite %s: %d of %d checks failed", self.name,
                           len(self.failures), self.checked)
        return SuiteResult(self.name, not self.failures, self.checked,
                           self.failures[:MAX_REPORTED_FAILURES], detail)


def _profile_counts(n, max_n):
    return Counter(profile(p) for p in enumerate_patterns(n, max_n=max_n))


def _normalization_estimators():
    yield from (CRPEstimator(theta) for theta in (0.1, 1.0, 5.0))
    for alpha in (0.1, 0.5, 0.9):
        for theta in (-alpha / 2, 1.0, 5.0):
            yield PitmanYorEstimator(alpha, theta)


def suite_bell(config, seed, workers=1, verbose=False):
    max_n = config['verify']['bell_max_n']
    tally = _Tally('bell')
    guard = config['guards']['enumerate_max_n']
    bells = bell_numbers(max_n)
    for n in tqdm(range(max_n + 1), desc='bell', disable=not verbose):
        count = sum(1 for _ in enumerate_patterns(n, max_n=guard))
        tally.check(count == bells[n], f"n={n}: enumerated {count}, Bell {bells[n]}")
    return tally.result(f"n <= {max_n}")


def suite_normalization(config, seed, workers=1, verbose=False):
    max_n = config['verify']['normalization_max_n']
    tally = _Tally('normalization')
    guard = config['guards']['enumerate_max_n']
    estimators = list(_normalization_estimators())
    for n in tqdm(range(1, max_n + 1), desc='normalization', disable=not verbose):
        counts = _profile_counts(n, guard)
        for est in estimators:
            total = math.fsum(c * math.exp(est.log_prob_profile(prof))
                              for prof, c in counts.items())
            tally.check(abs(total - 1.0) <= 1e-8, f"{est!r} at n={n}: sum {total!r}")
        mix = CRPMixtureEstimator(n, max(n, 2))
        expected = mix.config.total_weight()
        total = math.fsum(c * math.exp(mix.log_prob_profile(prof))
                          for prof, c in counts.items())
        tally.check(abs(total - expected) <= 1e-8,
                    f"{mix!r} at n={n}: sum {total!r}, weight {expected!r}")
    return tally.result(f"n <= {max_n}, {len(estimators)} parameter sets")


def _random_estimator(rng, mixture_ok):
    kind = rng.integers(3 if mixture_ok else 2)
    if kind == 0:
        return CRPEstimator(float(rng.uniform(0.05, 10.0)))
    if kind == 1:
        alpha = float(rng.uniform(0.0, 0.95))
        return PitmanYorEstimator(alpha, float(rng.uniform(-alpha + 0.01, 10.0)))
    return CRPMixtureEstimator()


def _random_pattern(rng, max_n):
    n = int(rng.integers(1, max_n + 1))
    theta = float(rng.uniform(0.2, 20.0))
    return sample_crp_partition(CrpParams(theta), n, rng)


def suite_sequential(config, seed, workers=1, verbose=False):
    cfg = config['verify']
    tally = _Tally('sequential')
    rng = make_rng(seed)
    for _ in tqdm(range(cfg['sequential_patterns']), desc='sequential',
                  disable=not verbose):
        pattern = _random_pattern(rng, cfg['sequential_max_n'])
        est = _random_estimator(rng, mixture_ok=pattern.n <= 60).resolve(pattern.n)
        closed = est.log_prob(pattern)
        chained = est.sequential_log_prob(pattern)
        tally.check(math.isclose(closed, chained, rel_tol=1e-12, abs_tol=1e-9),
                    f"{est!r} on n={pattern.n}: closed {closed!r}, sequential {chained!r}")
    return tally.result(f"n <= {cfg['sequential_max_n']}")


def suite_exchangeability(config, seed, workers=1, verbose=False):
    cfg = config['verify']
    tally = _Tally('exchangeability')
    rng = make_rng(seed)
    for _ in tqdm(range(cfg['exchangeability_profiles']), desc='exchangeability',
                  disable=not verbose):
        pattern = _random_pattern(rng, 50)
        est = _random_estimator(rng, mixture_ok=False)
        reference = est.sequential_log_prob(pattern)
        for _ in range(3):
            shuffled = extract_pattern(rng.permutation(pattern.as_array()))
            value = est.sequential_log_prob(shuffled)
            tally.check(math.isclose(value, reference, rel_tol=1e-12, abs_tol=1e-12),
                        f"{est!r}: {shuffled} gives {value!r}, {pattern} gives {reference!r}")
    return tally.result("n <= 50, three relabelings each")


def suite_envelope(config, seed, workers=1, verbose=False):
    cfg = config['verify']
    tally = _Tally('envelope')
    rng = make_rng(seed)
    guard = config['guards']['enumerate_max_n']
    profiles = {n: list(_profile_counts(n, guard))
                for n in range(1, cfg['envelope_max_n'] + 1)}
    # one representative pattern per profile; the i.i.d. probability is exchangeable
    representatives = {n: [next(p for p in enumerate_patterns(n, max_n=guard)
                                if profile(p) == prof)
                           for prof in profs] for n, profs in profiles.items()}
    for _ in tqdm(range(cfg['envelope_distributions']), desc='envelope',
                  disable=not verbose):
        k = int(rng.integers(1, 7))
        dist = DiscreteDistribution.from_weights(rng.dirichlet(np.ones(k)))
        for n, patterns in representatives.items():
            for pattern in patterns:
                p = pattern_prob_exact(dist, pattern)
                bound = envelope_log_bound(profile(pattern)).bound
                tally.check(p <= bound * (1 + 1e-12),
                            f"k={k} pattern {pattern}: p={p!r} > envelope {bound!r}")
    return tally.result(f"n <= {cfg['envelope_max_n']}")


def _bound_suite(name, config, seed, workers, verbose, estimator_for, bound_for):
    cfg = config['verify']
    slack = config['redundancy']['slack_nats']
    tally = _Tally(name)
    sources = ['crp:2', 'py:0.5:1', 'zipf:1.5:10000']
    for n in cfg['theorem_ns']:
        limit = distinct_threshold(n)
        for spec, child in zip(sources, spawn_seeds(seed, len(sources))):
            patterns = sample_patterns(parse_source(spec), n, cfg['theorem_trials'],
                                       child, workers=workers, verbose=verbose)
            for pattern in patterns:
                prof = profile(pattern)
                if prof.m > limit:
                    continue
                theta = prof.m / math.log(n)
                red = envelope_log_bound(prof).log_bound - \
                    estimator_for(theta).log_prob_profile(prof)
                bound = bound_for(n, prof.m, theta)
                tally.check(red <= bound + slack,
                            f"{spec} n={n} m={prof.m}: redundancy {red:.4f} > "
                            f"bound {bound:.4f} + {slack}")
    return tally.result(f"n in {cfg['theorem_ns']}, slack {slack} nats")


def suite_theorem1(config, seed, workers=1, verbose=False):
    return _bound_suite('theorem1', config, seed, workers, verbose,
                        CRPEstimator,
                        lambda n, m, theta: crp_bound_partialred(n, m, theta))


def suite_pyupper(config, seed, workers=1, verbose=False):
    alpha = config['estimator']['alpha']
    if not 0 < alpha < 1:
        raise DomainError(f"the pyupper suite needs 0 < estimator.alpha < 1, got {alpha}")
    return _bound_suite('pyupper', config, seed, workers, verbose,
                        lambda theta: PitmanYorEstimator(alpha, theta),
                        lambda n, m, theta: py_bound_upper(n, m, alpha, theta))


def suite_linear(config, seed, workers=1, verbose=False):
    ns = [2 ** k for k in config['verify']['linear_log2_ns']]
    tally = _Tally('linear')
    slopes = []
    for alpha in (0.1, 0.5, 0.9):
        sums = []
        for n in ns:
            total = sum(py_linear_witnesses(alpha, 1.0, n))
            floor = py_witness_lower_bound(alpha, n)
            tally.check(total >= floor,
                        f"alpha={alpha} n={n}: witnesses {total:.4f} < {floor:.4f}")
            sums.append(total)
        slope, _, r2 = linear_fit(ns, sums)
        tally.check(slope > 0 and r2 > 0.999,
                    f"alpha={alpha}: slope {slope:.4g}, r^2 {r2:.6f}")
        slopes.append(f"{alpha}:{slope:.4f}")
    return tally.result("slopes " + " ".join(slopes))


def suite_claim(config, seed, workers=1, verbose=False):
    cfg = config['verify']
    checked, violations = claim_grid_sweep(j_max=cfg['claim_j_max'],
                                           theta_step=cfg['claim_theta_step'])
    failures = [f"j={j} alpha={a:.2f} theta={t:.2f}: lhs {v!r}"
                for j, a, t, v in violations]
    return SuiteResult('claim', not failures, checked,
                       failures[:MAX_REPORTED_FAILURES],
                       f"j <= {cfg['claim_j_max']}")


def suite_hrate(config, seed, workers=1, verbose=False):
    cfg = config['verify']
    tally = _Tally('hrate')
    sources = ['geometric:0.5', 'zipf:1.5:10000', 'uniform:100']
    for spec, child in zip(sources, spawn_seeds(seed, len(sources))):
        source = parse_source(spec)
        H = source.entropy_nats
        for n in cfg['hrate_ns']:
            counts = distinct_count_samples(source, n, cfg['hrate_trials'], child,
                                            workers=workers, verbose=verbose)
            mean, std = mean_and_std(counts)
            bound = expected_distinct_bound(H, n)
            tally.check(mean + 3 * std <= bound,
                        f"{spec} n={n}: mean {mean:.2f} + 3 sd {std:.2f} > {bound:.2f}")
            threshold = n * math.log(math.log(n)) ** 2 / math.log(n)
            tail = float(np.mean(counts > threshold))
            tail_bound = markov_distinct_tail(H, n)
            tally.check(tail <= tail_bound,
                        f"{spec} n={n}: tail frequency {tail} > {tail_bound:.4g}")
    return tally.result(f"{cfg['hrate_trials']} trials per point")


def _prefix_distinct(pattern, k):
    return int(pattern.as_array()[:k].max())


def suite_growth(config, seed, workers=1, verbose=False):
    cfg = config['verify']
    n = cfg['growth_n']
    short = max(n // 10, 2)
    tally = _Tally('growth')
    crp_seed, py_seed = spawn_seeds(seed, 2)

    crp = sample_patterns(parse_source('crp:2'), n, cfg['growth_trials'], crp_seed,
                          workers=workers, verbose=verbose)
    ratio = float(np.mean([p.m for p in crp])) / math.log(n)
    tally.check(1.6 <= ratio <= 2.4, f"CRP(2): mean M_n / ln n = {ratio:.3f}")

    # M_n grows like n^alpha; compare each sample with its own prefix
    py = sample_patterns(parse_source('py:0.6:1'), n, cfg['growth_trials'], py_seed,
                         workers=workers, verbose=verbose)
    exponents = [math.log(p.m / _prefix_distinct(p, short)) / math.log(n / short)
                 for p in py]
    exponent = float(np.mean(exponents))
    tally.check(0.5 <= exponent <= 0.7, f"PY(0.6, 1): growth exponent {exponent:.3f}")
    return tally.result(f"CRP ratio {ratio:.3f}, PY exponent {exponent:.3f}")


def suite_weak(config, seed, workers=1, verbose=False):
    cfg = config['verify']
    ns = [2 ** k for k in cfg['weak_log2_ns']]
    source = parse_source('geometric:0.5')
    tally = _Tally('weak')
    values = []
    for n, child in zip(ns, spawn_seeds(seed, len(ns))):
        est = CRPMixtureEstimator(n, n)
        result = average_redundancy_mc(source, est, n, cfg['weak_trials'], child,
                                       workers=workers, verbose=verbose)
        values.append(result.per_symbol)
    for (n0, v0), (n1, v1) in zip(zip(ns, values), zip(ns[1:], values[1:])):
        tally.check(v1 < v0, f"per-symbol divergence rose from {v0:.5f} at n={n0} "
                             f"to {v1:.5f} at n={n1}")
    return tally.result(" ".join(f"{n}:{v:.5f}" for n, v in zip(ns, values)))


def suite_codec(config, seed, workers=1, verbose=False):
    cfg = config['verify']
    bits = config['coder']['frequency_bits']
    tally = _Tally('codec')
    rng = make_rng(seed)
    for _ in tqdm(range(cfg['codec_trials']), desc='codec', disable=not verbose):
        n = int(rng.integers(0, cfg['codec_max_n'] + 1))
        pattern = sample_crp_partition(CrpParams(float(rng.uniform(0.5, 10.0))), n, rng)
        est = _random_estimator(rng, mixture_ok=True).resolve(n)
        coded = encode(est, pattern, bits)
        restored = decode(coded.to_bytes(), bits)
        tally.check(restored == pattern, f"{est!r}: round trip changed a length-{n} pattern")

        ideal = nats_to_bits(-code_log_prob(est, pattern, bits, quantized=False))
        upper = ideal + 32 + n * 2.0 ** -20
        tally.check(ideal - 1 <= coded.payload_bits <= upper,
                    f"{est!r} n={n}: {coded.payload_bits} bits, ideal {ideal:.3f}")
        if isinstance(est, CRPMixtureEstimator) and n > 0:
            joint = code_log_prob(est, pattern, bits, quantized=False) + \
                math.log(est.config.total_weight())
            direct = mixture_log_prob(est.config, pattern)
            tally.check(abs(joint - direct) <= 1e-6,
                        f"mixture n={n}: sequential {joint!r}, closed {direct!r}")
    return tally.result(f"{cfg['codec_trials']} patterns, n <= {cfg['codec_max_n']}")


SUITES = {
    'bell': suite_bell,
    'normalization': suite_normalization,
    'sequential': suite_sequential,
    'exchangeability': suite_exchangeability,
    'envelope': suite_envelope,
    'theorem1': suite_theorem1,
    'pyupper': suite_pyupper,
    'linear': suite_linear,
    'claim': suite_claim,
    'hrate': suite_hrate,
    'growth': suite_growth,
    'weak': suite_weak,
    'codec': suite_codec,
}


def run_suites(names=None, config=None, seed=None, workers=1, verbose=False):
    """
    Run verification suites in order.

    Parameters
    ----------
    names : list of str, optional
        Suites to run; all of :data:`SUITES` by default.
    config : dict, optional
        Loaded configuration; the built-in defaults otherwise.
    seed : int, optional
        Root seed; suite ``i`` uses the ``i``-th child. Defaults to the
        configured seed.

    Returns
    -------
    list of SuiteResult
    """
    config = config or DEFAULT_CONFIG
    names = list(SUITES) if names is None else list(names)
    unknown = [x for x in names if x not in SUITES]
    if unknown:
        raise DomainError(f"unknown suite(s): {', '.join(unknown)}; "
                          f"choose from {', '.join(SUITES)}")
    seed = config['seed'] if seed is None else seed
    results = []
    for name, child in zip(names, spawn_seeds(seed, len(names))):
        logger.info("running suite %s", name)
        result = SUITES[name](config, child, workers=workers, verbose=verbose)
        logger.info("suite %s: %s (%d checks)", name,
                    'pass' if result.passed else 'FAIL', result.checked)
        results.append(result)
    return results


def summary_table(results):
    """One row per suite: name, passed, checks, failures, detail."""
    return pd.DataFrame([r.to_dict() for r in results],
                        columns=['suite', 'passed', 'checked', 'failures', 'detail'])
