"""
Sequential sampling of CRP and Pitman-Yor patterns.

Each symbol is drawn from the one-step predictive of the process. Repeats are
drawn by copying the symbol at a uniformly chosen earlier position, which
selects symbol ``s`` with probability ``mu_s / i`` without scanning the table
counts. The Pitman-Yor discount is applied by accepting the copied symbol
with probability ``(mu_s - alpha) / mu_s``.
"""

import math

import numpy as np

from ..estimators import CrpParams, PyParams
from ..exceptions import DomainError
from ..pattern import Pattern
from ..utils.parallel import make_rng


def _alpha_theta(params):
    if isinstance(params, CrpParams):
        return 0.0, params.theta
    if isinstance(params, PyParams):
        return params.alpha, params.theta
    raise TypeError(f"expected CrpParams or PyParams, got {type(params).__name__}")


def sample_crp_partition(params, n, seed=None, return_log_prob=False):
    """
    Sample a length-`n` pattern from the CRP or Pitman-Yor process.

    Parameters
    ----------
    params : CrpParams or PyParams
    n : int
    seed : int, SeedSequence or Generator, optional
    return_log_prob : bool, default False
        Also return the sum of the log step probabilities.

    Returns
    -------
    Pattern, or (Pattern, float)
    """
    if n < 0:
        raise DomainError("pattern length must be non-negative")
    alpha, theta = _alpha_theta(params)
    rng = make_rng(seed)

    symbols = np.empty(n, dtype=np.int64)
    counts = [0]  # counts[s] for s >= 1; slot 0 unused
    log_prob = 0.0
    u = rng.random(n)
    for i in range(n):
        m = len(counts) - 1
        if i == 0:
            s = 1
        else:
            denom = i + theta
            x = u[i] * denom
            if x < theta + m * alpha:
                s = m + 1
            elif alpha == 0.0:
                # x - theta is uniform on [0, i) given a repeat
                s = int(symbols[min(int(x - theta), i - 1)])
            else:
                while True:
                    s = int(symbols[rng.integers(i)])
                    mu = counts[s]
                    if rng.random() * mu < mu - alpha:
                        break
            if return_log_prob:
                if s == m + 1:
                    log_prob += math.log((theta + m * alpha) / denom)
                else:
                    log_prob += math.log((counts[s] - alpha) / denom)
        if s == len(counts):
            counts.append(1)
        else:
            counts[s] += 1
        symbols[i] = s

    pattern = Pattern._trusted(symbols.tolist())
    if return_log_prob:
        return pattern, log_prob
    return pattern
