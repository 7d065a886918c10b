import math
from abc import ABC, abstractmethod

import numpy as np

from ..pattern import profile, validate_pattern
from .params import PredictiveDistribution


class Predictor(ABC):
    """Stateful one-step predictor over pattern symbols.

    After ``update`` has been called with ``psi_1, ..., psi_i``, the predictor
    gives the conditional law of ``psi_{i+1}`` over the symbols ``1..m`` seen
    so far plus the new symbol ``m + 1``.
    """

    def __init__(self):
        self.counts = []
        self.n = 0
        # log of the total mass the sequential factorization starts from
        self.log_mass = 0.0

    @property
    def m(self):
        return len(self.counts)

    @abstractmethod
    def probabilities(self):
        """Array of length ``m + 1``: symbols ``1..m`` then the new symbol."""

    @abstractmethod
    def prob_of(self, symbol):
        """Probability of one next symbol (``m + 1`` means new)."""

    def _observe(self, symbol):
        pass

    def update(self, symbol):
        if symbol == self.m + 1:
            self._observe(symbol)
            self.counts.append(1)
        elif 1 <= symbol <= self.m:
            self._observe(symbol)
            self.counts[symbol - 1] += 1
        else:
            raise ValueError(f"symbol {symbol} is not a valid continuation "
                             f"of a pattern with {self.m} symbols")
        self.n += 1

    def distribution(self):
        """The current one-step law as a :class:`PredictiveDistribution`."""
        probs = self.probabilities()
        return PredictiveDistribution(
            {s + 1: float(p) for s, p in enumerate(probs[:-1])}, float(probs[-1]))


class ExchangeablePredictor(Predictor):
    """Predictor of a Pitman-Yor (``alpha = 0``: CRP) exchangeable partition."""

    def __init__(self, alpha, theta):
        super().__init__()
        self.alpha = alpha
        self.theta = theta

    def probabilities(self):
        if self.n == 0:
            return np.ones(1)
        denom = self.n + self.theta
        seen = (np.asarray(self.counts, dtype=float) - self.alpha) / denom
        new = (self.theta + self.m * self.alpha) / denom
        return np.append(seen, new)

    def prob_of(self, symbol):
        if self.n == 0:
            return 1.0 if symbol == 1 else 0.0
        denom = self.n + self.theta
        if symbol == self.m + 1:
            return (self.theta + self.m * self.alpha) / denom
        return (self.counts[symbol - 1] - self.alpha) / denom


class PatternEstimator(ABC):
    """Interface shared by every pattern probability estimator.

    Subclasses provide the closed-form ``log_prob_profile`` and a sequential
    ``predictor``; ``sequential_log_prob`` chains the predictor through the
    product rule, which is also what the coder does.
    """

    #: short name used on the command line
    name = None
    #: estimator id written into coded headers (None: not codable)
    estimator_id = None

    def __repr__(self):
        params = ", ".join(f"{k}={v}" for k, v in self.describe().items()
                           if k != 'estimator')
        return f"{self.__class__.__name__}({params})"

    @abstractmethod
    def log_prob_profile(self, prof):
        """Natural-log probability of any pattern with prevalence profile `prof`."""

    def log_prob(self, pattern):
        pattern = validate_pattern(pattern)
        return self.log_prob_profile(profile(pattern))

    @abstractmethod
    def predictor(self, n=None):
        """A fresh :class:`Predictor` for a pattern of (optional) length `n`."""

    def resolve(self, n):
        """Estimator with every length-dependent setting fixed for length `n`."""
        return self

    def sequential_log_prob(self, pattern):
        pattern = validate_pattern(pattern)
        pred = self.predictor(pattern.n)
        total = pred.log_mass
        for s in pattern:
            p = pred.prob_of(s)
            if p <= 0:
                return -math.inf
            total += math.log(p)
            pred.update(s)
        return total

    def header_params(self):
        """Parameters stored in a coded header, as floats."""
        raise NotImplementedError(f"{self.name} estimators cannot be coded")

    @abstractmethod
    def describe(self):
        """JSON-friendly description of the estimator."""
