"""
Exact pattern probabilities under a known distribution.

The probability that an i.i.d. sample from ``p`` has pattern ``psi`` is the sum,
over injective maps ``sigma`` from the pattern's symbols into the support, of
``prod_s p_sigma(s)^mu_s``. Symbols with equal multiplicity are
interchangeable, so the sum is taken over which atoms receive *some* symbol of
each multiplicity class and then multiplied by ``prod_mu phi_mu!``. The
per-atom dynamic program below keeps, as its state, how many symbols of each
class are still unplaced.
"""

import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from ..exceptions import DomainError, TooLarge
from ..math_utils import gammaln, log_falling_factorial
from ..pattern import profile, validate_pattern

EXACT_MAX_TERMS = 10_000_000


@dataclass(frozen=True)
class EnvelopeBound:
    """Upper bound on the probability of any pattern with a given profile.

    Parameters
    ----------
    log_bound : float
        ``ln( prod_mu (mu!)^phi_mu phi_mu! / n! )``, which is ``<= 0``.
    """

    log_bound: float

    @property
    def bound(self):
        return math.exp(self.log_bound)


def envelope_log_bound(prof):
    """
    Envelope bound of a prevalence profile.

    The number of patterns sharing `prof` is ``n! / prod_mu (mu!)^phi_mu
    phi_mu!``; since they all have the same probability under any i.i.d.
    source, none can have probability above the reciprocal.

    Examples
    --------
    >>> from patternpress.pattern import Pattern, profile
    >>> round(math.exp(envelope_log_bound(profile(Pattern((1, 1, 2)))).log_bound), 12)
    0.333333333333
    """
    if prof.n == 0:
        return EnvelopeBound(0.0)
    mus = np.fromiter(prof.counts.keys(), dtype=float)
    phis = np.fromiter(prof.counts.values(), dtype=float)
    log_bound = (np.dot(phis, gammaln(mus + 1)) + np.sum(gammaln(phis + 1))
                 - gammaln(prof.n + 1))
    return EnvelopeBound(min(float(log_bound), 0.0))


def log_pattern_count(prof):
    """Natural log of the number of patterns with prevalence profile `prof`."""
    return -envelope_log_bound(prof).log_bound


def _classes(prof):
    mus = tuple(prof.counts.keys())
    phis = tuple(prof.counts.values())
    log_sym = float(np.sum(gammaln(np.asarray(phis, dtype=float) + 1))) if phis else 0.0
    return mus, phis, log_sym


def _place_on_atoms(weights, mus, phis, spare_slots):
    """Run the per-atom program; returns ``{remaining: value}``.

    A state survives only while its unplaced symbols fit on the atoms still to
    come plus `spare_slots` further slots.
    """
    dp = {phis: 1.0}
    left = len(weights)
    for p in weights:
        left -= 1
        powers = [p ** mu for mu in mus]
        nxt = defaultdict(float)
        for state, v in dp.items():
            if sum(state) <= left + spare_slots:
                nxt[state] += v
            if p == 0.0:
                continue
            for c, r in enumerate(state):
                if r:
                    child = state[:c] + (r - 1,) + state[c + 1:]
                    if sum(child) <= left + spare_slots:
                        nxt[child] += v * powers[c]
        dp = nxt
    return dp


def pattern_prob_with_diffuse(weights, diffuse_mass, diffuse_atoms, pattern):
    """
    Pattern probability for discrete atoms plus a block of equal small atoms.

    Parameters
    ----------
    weights : array_like
        Masses of the individually tracked atoms.
    diffuse_mass : float
        Total mass spread evenly over `diffuse_atoms` further atoms.
    diffuse_atoms : int
        Size ``u`` of the equal-mass block.
    pattern : Pattern

    Returns
    -------
    float
    """
    check_diffuse_args(diffuse_mass, diffuse_atoms)
    pattern = validate_pattern(pattern)
    prof = profile(pattern)
    if prof.n == 0:
        return 1.0
    weights = [float(w) for w in weights]
    u = int(diffuse_atoms) if diffuse_mass > 0 else 0
    mus, phis, log_sym = _classes(prof)
    dp = _place_on_atoms(weights, mus, phis, u)

    total = 0.0
    delta = diffuse_mass / u if u else 0.0
    log_u_fact = float(gammaln(u + 1))
    for state, v in dp.items():
        if v == 0.0:
            continue
        placed = sum(state)
        if placed == 0:
            total += v
            continue
        if placed > u:
            continue
        # unordered choice of which diffuse atoms take each class
        log_ways = (log_u_fact - float(gammaln(u - placed + 1))
                    - sum(float(gammaln(r + 1)) for r in state))
        mass = sum(mu * r for mu, r in zip(mus, state))
        total += v * math.exp(log_ways + mass * math.log(delta))
    return total * math.exp(log_sym)


def pattern_prob_exact(dist, pattern, max_terms=EXACT_MAX_TERMS):
    """
    Probability that an i.i.d. sample from `dist` has pattern `pattern`.

    Parameters
    ----------
    dist : DiscreteDistribution
    pattern : Pattern or sequence of int
    max_terms : int, default 10**7
        Guard on the number of injective maps ``k (k-1) ... (k-m+1)``.

    Returns
    -------
    float
        0 when the pattern has more symbols than `dist` has atoms.

    Raises
    ------
    TooLarge
        When the injective-map count exceeds `max_terms`.

    Examples
    --------
    >>> from patternpress.samplers import uniform
    >>> pattern_prob_exact(uniform(2), [1, 2])
    0.5
    """
    pattern = validate_pattern(pattern)
    probs = np.asarray(dist.probs, dtype=float)
    support = probs[probs > 0]
    k, m = support.size, pattern.m
    if m > k:
        return 0.0
    log_terms = log_falling_factorial(k, m)
    if log_terms > math.log(max_terms):
        raise TooLarge("injective map count", f"e^{log_terms:.1f}", max_terms)
    return pattern_prob_with_diffuse(support, 0.0, 0, pattern)


def exact_log_prob(dist, pattern, max_terms=EXACT_MAX_TERMS):
    """Natural log of :func:`pattern_prob_exact` (``-inf`` for probability 0)."""
    p = pattern_prob_exact(dist, pattern, max_terms)
    return math.log(p) if p > 0 else -math.inf


def check_diffuse_args(diffuse_mass, diffuse_atoms):
    if not 0 <= diffuse_mass <= 1:
        raise DomainError(f"diffuse mass must be in [0, 1], got {diffuse_mass}")
    if diffuse_atoms < 0:
        raise DomainError("diffuse atom count must be non-negative")
