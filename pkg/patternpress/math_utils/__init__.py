from .logs import (LN2, nats_to_bits, log_rising_factorial, log_factorial,
                   log_falling_factorial, logsumexp, gammaln)
from .stats import mean_and_std, linear_fit
