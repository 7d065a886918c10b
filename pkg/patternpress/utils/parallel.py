"""
Seeded, order-preserving parallel execution of Monte Carlo trials.

Every randomized routine in patternpress takes a root seed. Trial ``t`` of a
batch always draws from the ``t``-th child of ``SeedSequence(seed)``, so results
do not depend on how many workers run the batch or in what order they finish.
"""

import logging
import os
from multiprocessing import Pool

import numpy as np
from tqdm import tqdm

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = 'PATTERNPRESS_THREADS'


def make_rng(seed):
    """Build a counter-based (Philox) generator from an int or SeedSequence."""
    if isinstance(seed, np.random.Generator):
        return seed
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return np.random.Generator(np.random.Philox(seed))


def spawn_seeds(seed, count):
    """Derive `count` independent child seed sequences from a root seed."""
    if not isinstance(seed, np.random.SeedSequence):
        seed = np.random.SeedSequence(seed)
    return seed.spawn(count)


def worker_count(config=None):
    """Resolve the parallelism cap.

    ``PATTERNPRESS_THREADS`` takes precedence over the ``threads`` config key,
    which takes precedence over the number of cores.
    """
    env = os.environ.get(THREADS_ENV_VAR)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            logger.warning("Ignoring non-integer %s=%r", THREADS_ENV_VAR, env)
    if config and config.get('threads'):
        return max(1, int(config['threads']))
    return os.cpu_count() or 1


def parallel_map(func, items, workers=1, verbose=False, desc=None):
    """Apply `func` to every item, returning results in input order.

    Parameters
    ----------
    func : callable
        A module-level (picklable) function of one argument.
    items : iterable
        Arguments; typically ``(trial_index, seed_sequence, ...)`` tuples.
    workers : int, default 1
        Number of worker processes. ``1`` runs serially in-process.
    verbose : bool, default False
        Show a tqdm progress bar on stderr.
    desc : str, optional
        Progress bar label.

    Returns
    -------
    list
        ``[func(item) for item in items]``.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(x) for x in tqdm(items, desc=desc, disable=not verbose)]

    with Pool(processes=min(workers, len(items))) as pool:
        return list(tqdm(pool.imap(func, items), total=len(items), desc=desc,
                         disable=not verbose))
