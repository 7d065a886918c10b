"""
Numerical maximization of a pattern's probability over distributions.

``sup_p p(psi)`` over all discrete distributions is searched over ``k`` free
atoms plus a diffuse block of ``u`` equal atoms that stands in for continuous
mass. Every value returned is the probability of an actual distribution, so
it is a lower bound on the supremum.
"""

import itertools
import logging
import math

import numpy as np
from scipy.optimize import minimize
from scipy.special import softmax

from ..exceptions import DomainError, TooLarge
from ..pattern import validate_pattern
from ..utils.parallel import make_rng, parallel_map, spawn_seeds
from .exact import pattern_prob_with_diffuse

logger = logging.getLogger(__name__)

MAXPROB_MAX_N = 10
DIFFUSE_ATOMS = 1000
GRID_MAX_ATOMS = 3
_FLOOR = 1e-300


def _prob(masses, pattern, u):
    # masses: k atom masses followed by the diffuse mass
    return pattern_prob_with_diffuse(masses[:-1], float(min(masses[-1], 1.0)), u, pattern)


def _neg_log(z, pattern, u):
    return -math.log(max(_prob(softmax(z), pattern, u), _FLOOR))


def _run_start(args):
    pattern, u, start = args
    z0 = np.log(np.maximum(start, 1e-12))
    res = minimize(_neg_log, z0, args=(pattern, u), method='L-BFGS-B')
    masses = softmax(res.x)
    return _prob(masses, pattern, u), masses


def _simplex_grid(k, resolution):
    # all (a_1..a_k) / resolution with sum equal to resolution
    for cut in itertools.combinations(range(resolution + k - 1), k - 1):
        parts = np.diff(np.concatenate(([-1], cut, [resolution + k - 1]))) - 1
        yield parts / resolution


def _grid_best(pattern, k, resolution):
    best, arg = 0.0, None
    for w in _simplex_grid(k, resolution):
        v = pattern_prob_with_diffuse(w, 0.0, 0, pattern)
        if v > best:
            best, arg = v, np.append(w, 0.0)
    return best, arg


def max_pattern_prob(pattern, support_budget, diffuse_atoms=DIFFUSE_ATOMS,
                     starts=8, grid_resolution=200, seed=None,
                     max_n=MAXPROB_MAX_N, workers=1, return_argmax=False):
    """
    Largest pattern probability found over distributions with few atoms.

    The search runs for ``k = 1..support_budget`` free atoms (plus the
    diffuse block), each ``k`` warm-started from the best point of ``k - 1``,
    so the result never decreases as the budget grows. Candidates also
    include a point mass, the pure diffuse block, and a simplex grid over at
    most three atoms.

    Parameters
    ----------
    pattern : Pattern
        At most `max_n` symbols long.
    support_budget : int
        Largest number of free atoms.
    diffuse_atoms : int, default 1000
        Size of the equal-mass block.
    starts : int, default 8
        Random Dirichlet starts per ``k``.
    grid_resolution : int, default 200
        Grid steps per unit mass for two atoms; three atoms use a quarter.
    seed : int, optional
    max_n : int, default 10
    workers : int, default 1
        Processes for the random starts.
    return_argmax : bool, default False
        Also return the masses (free atoms, then the diffuse mass).

    Returns
    -------
    float, or (float, ndarray)
    """
    pattern = validate_pattern(pattern)
    if pattern.n > max_n:
        raise TooLarge("pattern length", pattern.n, max_n)
    if support_budget < 0:
        raise DomainError("support budget must be non-negative")
    u = int(diffuse_atoms)
    if pattern.n == 0:
        return (1.0, np.ones(1)) if return_argmax else 1.0

    best = _prob(np.array([0.0, 1.0]), pattern, u)
    best_arg = np.array([1.0])  # all mass diffuse
    point = pattern_prob_with_diffuse([1.0], 0.0, 0, pattern)
    if point > best:
        best, best_arg = point, np.array([1.0, 0.0])

    seeds = spawn_seeds(seed, max(int(support_budget), 1))
    for k in range(1, int(support_budget) + 1):
        if k <= GRID_MAX_ATOMS:
            resolution = grid_resolution if k <= 2 else max(grid_resolution // 4, 1)
            v, arg = _grid_best(pattern, k, resolution)
            if v > best:
                best, best_arg = v, arg

        warm = np.concatenate((best_arg[:-1],
                               np.zeros(k + 1 - best_arg.size), best_arg[-1:]))
        rng = make_rng(seeds[k - 1])
        candidates = [warm] + list(rng.dirichlet(np.ones(k + 1), size=starts))
        results = parallel_map(_run_start, [(pattern, u, c) for c in candidates],
                               workers=workers)
        for v, masses in results:
            if v > best:
                best, best_arg = v, masses
        # the warm start's own value is attainable at this k
        warm_value = _prob(warm, pattern, u)
        if warm_value > best:
            best, best_arg = warm_value, warm
        logger.debug("max pattern prob with %d atoms: %.6g", k, best)

    if return_argmax:
        return best, best_arg
    return best
