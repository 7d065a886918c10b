"""
The :mod:`patternpress.redundancy` module measures how far an estimator's
pattern probabilities fall short of the best i.i.d. source, evaluates the
closed-form redundancy bounds, and runs the numerical verification suites.
"""

from .bounds import (crp_bound_partialred, crp_bound_stairbound, py_bound_upper,
                     distinct_threshold, crp_bound_scaled, mixture_bound,
                     py_linear_witnesses, py_witness_lower_bound,
                     py_worst_case_lower_bound, claim_constant,
                     claim_inequality_check, claim_grid_sweep,
                     expected_distinct_bound, markov_distinct_tail,
                     chebyshev_sum_check, MIN_N)
from .report import (RedundancyReport, pattern_redundancy, theorem_bound,
                     worst_case_redundancy)
from .monte_carlo import AverageRedundancy, average_redundancy_mc, MODES
from .verify import SuiteResult, SUITES, run_suites, summary_table

__all__ = [
    'crp_bound_partialred',
    'crp_bound_stairbound',
    'py_bound_upper',
    'distinct_threshold',
    'crp_bound_scaled',
    'mixture_bound',
    'py_linear_witnesses',
    'py_witness_lower_bound',
    'py_worst_case_lower_bound',
    'claim_constant',
    'claim_inequality_check',
    'claim_grid_sweep',
    'expected_distinct_bound',
    'markov_distinct_tail',
    'chebyshev_sum_check',
    'MIN_N',
    'RedundancyReport',
    'pattern_redundancy',
    'theorem_bound',
    'worst_case_redundancy',
    'AverageRedundancy',
    'average_redundancy_mc',
    'MODES',
    'SuiteResult',
    'SUITES',
    'run_suites',
    'summary_table',
]
