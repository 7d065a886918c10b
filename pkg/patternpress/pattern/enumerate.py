"""
Exhaustive enumeration of patterns, for test oracles at small lengths.

The patterns of length ``n`` are in bijection with the set partitions of
``{1..n}``, so there are Bell(n) of them. Bell(14) is about 1.9e8, which is
where exhaustive enumeration stops being useful.
"""

import logging

from ..exceptions import DomainError, TooLarge
from .pattern import Pattern

logger = logging.getLogger(__name__)

ENUMERATE_MAX_N = 14


def bell_numbers(n_max):
    """
    Bell numbers ``B(0), ..., B(n_max)`` via the Bell triangle.

    Examples
    --------
    >>> bell_numbers(5)
    [1, 1, 2, 5, 15, 52]
    """
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    bells = [1]
    row = [1]
    for _ in range(n_max):
        new_row = [row[-1]]
        for x in row:
            new_row.append(new_row[-1] + x)
        row = new_row
        bells.append(row[0])
    return bells


def enumerate_patterns(n, max_n=ENUMERATE_MAX_N):
    """
    Yield every pattern of length `n` exactly once, in lexicographic order.

    Parameters
    ----------
    n : int
        Pattern length.
    max_n : int, default 14
        Enumeration guard.

    Yields
    ------
    Pattern

    Raises
    ------
    TooLarge
        If ``n > max_n``.
    """
    if n < 0:
        raise DomainError("pattern length must be non-negative")
    if n > max_n:
        raise TooLarge("pattern length", n, max_n)
    if n == 0:
        yield Pattern._trusted(())
        return

    a = [1] * n
    # prefix_max[i] = max(a[0..i])
    prefix_max = [1] * n
    while True:
        yield Pattern._trusted(a)

        i = n - 1
        while i > 0 and a[i] > prefix_max[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        prefix_max[i] = max(prefix_max[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 1
            prefix_max[j] = prefix_max[i]
