"""
Patterns of sequences and their prevalence profiles.

The pattern of a sequence replaces every symbol by the order in which it first
appeared: FEDERER becomes 1 2 3 2 4 2 4. Patterns keep the repeat structure of
a sequence and throw away symbol identities, which is exactly the information
that can be compressed universally over unknown, possibly infinite alphabets.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, Sequence, Tuple

import numpy as np

from ..exceptions import InvalidPattern


def _first_violation(symbols):
    """Return ``(position, reason)`` of the first bad symbol, or None."""
    running_max = 0
    for i, s in enumerate(symbols):
        if isinstance(s, bool) or not isinstance(s, (int, np.integer)):
            return i + 1, f"symbol {s!r} is not an integer"
        if s < 1:
            return i + 1, f"symbol {s} is not positive"
        if s > running_max + 1:
            if i == 0:
                return 1, "a pattern must start with 1"
            return i + 1, f"symbol {s} skips {running_max + 1}"
        if s > running_max:
            running_max = int(s)
    return None


@dataclass(frozen=True)
class Pattern:
    """
    A restricted-growth string: the pattern of some sequence.

    Parameters
    ----------
    symbols : tuple of int
        1-based pattern indices. The first symbol is 1, and every symbol is at
        most one more than the largest symbol before it.

    Raises
    ------
    InvalidPattern
        If `symbols` violates the restricted-growth property.
    """

    symbols: Tuple[int, ...] = ()

    def __post_init__(self):
        symbols = tuple(int(s) if isinstance(s, np.integer) else s
                        for s in self.symbols)
        object.__setattr__(self, 'symbols', symbols)
        bad = _first_violation(symbols)
        if bad is not None:
            raise InvalidPattern(*bad)

    @classmethod
    def _trusted(cls, symbols):
        # Skips validation; only for producers that guarantee the invariants.
        obj = object.__new__(cls)
        object.__setattr__(obj, 'symbols', tuple(symbols))
        return obj

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, idx):
        return self.symbols[idx]

    def __str__(self):
        return " ".join(str(s) for s in self.symbols)

    @property
    def n(self):
        """Pattern length."""
        return len(self.symbols)

    @property
    def m(self):
        """Number of distinct symbols (the largest symbol)."""
        return max(self.symbols) if self.symbols else 0

    def multiplicities(self):
        """Occurrence count of each symbol 1..m, as an int array of length m."""
        if not self.symbols:
            return np.zeros(0, dtype=np.int64)
        return np.bincount(np.asarray(self.symbols, dtype=np.int64))[1:]

    def first_occurrences(self):
        """0-based positions at which each symbol 1..m first appears."""
        firsts = []
        seen = 0
        for i, s in enumerate(self.symbols):
            if s > seen:
                firsts.append(i)
                seen = s
        return firsts

    def as_array(self):
        return np.asarray(self.symbols, dtype=np.int64)


@dataclass(frozen=True)
class PrevalenceProfile:
    """
    The prevalences of a pattern.

    Parameters
    ----------
    counts : dict of int to int
        Maps a multiplicity ``mu`` to the number of distinct symbols that
        appear exactly ``mu`` times (the prevalence of ``mu``). Zero entries are
        not stored.
    n : int
        Pattern length, ``sum(mu * phi_mu)``.
    m : int
        Number of distinct symbols, ``sum(phi_mu)``.
    """

    counts: Dict[int, int] = field(default_factory=dict)
    n: int = 0
    m: int = 0

    def __post_init__(self):
        counts = {int(mu): int(phi) for mu, phi in self.counts.items() if phi}
        if any(mu < 1 or phi < 0 for mu, phi in counts.items()):
            raise ValueError("multiplicities must be positive and prevalences "
                             "non-negative")
        object.__setattr__(self, 'counts', dict(sorted(counts.items())))
        if sum(mu * phi for mu, phi in counts.items()) != self.n:
            raise ValueError("prevalences do not add up to the pattern length")
        if sum(counts.values()) != self.m:
            raise ValueError("prevalences do not add up to the symbol count")

    def __hash__(self):
        return hash(self.key())

    @classmethod
    def from_multiplicities(cls, multiplicities):
        mults = [int(x) for x in multiplicities]
        return cls(Counter(mults), n=sum(mults), m=len(mults))

    def key(self):
        """Hashable identity: ``(n, ((mu, phi_mu), ...))``."""
        return self.n, tuple(self.counts.items())

    def items(self):
        return self.counts.items()

    def multiplicity_array(self):
        """Sorted (descending) multiplicities, one per distinct symbol."""
        out = []
        for mu, phi in sorted(self.counts.items(), reverse=True):
            out.extend([mu] * phi)
        return np.asarray(out, dtype=np.int64)

    def to_dict(self):
        return {
            'n': self.n,
            'm': self.m,
            'prevalences': {str(mu): phi for mu, phi in self.counts.items()},
            'multiplicities': self.multiplicity_array().tolist(),
        }


def _array_pattern(x):
    if x.size == 0:
        return np.zeros(0, dtype=np.int64)
    _, first, inverse = np.unique(x, return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int64)
    rank[np.argsort(first)] = np.arange(1, first.size + 1)
    return rank[inverse.ravel()]


def extract_pattern(tokens: Iterable[Hashable]) -> Pattern:
    """
    Compute the pattern of a token sequence.

    The first occurrence of a token is assigned the next unused index; later
    occurrences reuse it. Tokens are compared for equality only.

    Parameters
    ----------
    tokens : iterable of hashable
        The sequence. May be empty.

    Returns
    -------
    Pattern

    Examples
    --------
    >>> str(extract_pattern("FEDERER"))
    '1 2 3 2 4 2 4'
    >>> str(extract_pattern("PATTERN"))
    '1 2 3 3 4 5 6'
    """
    if isinstance(tokens, np.ndarray) and tokens.ndim == 1:
        return Pattern._trusted(_array_pattern(tokens).tolist())
    index = {}
    out = []
    for tok in tokens:
        idx = index.get(tok)
        if idx is None:
            idx = len(index) + 1
            index[tok] = idx
        out.append(idx)
    return Pattern._trusted(out)


def profile(pattern: Pattern) -> PrevalenceProfile:
    """
    Prevalence profile of a pattern.

    Examples
    --------
    >>> profile(extract_pattern("FEDERER")).counts
    {1: 2, 2: 1, 3: 1}
    """
    return PrevalenceProfile.from_multiplicities(pattern.multiplicities())


def validate_pattern(symbols: Sequence[int]) -> Pattern:
    """
    Check that `symbols` is a restricted-growth string and wrap it.

    Raises
    ------
    InvalidPattern
        With the 1-based position of the first violating symbol.

    Examples
    --------
    >>> validate_pattern([1, 3])
    Traceback (most recent call last):
        ...
    patternpress.exceptions.InvalidPattern: invalid pattern at position 2: symbol 3 skips 2
    """
    if isinstance(symbols, Pattern):
        return symbols
    return Pattern(tuple(symbols))
