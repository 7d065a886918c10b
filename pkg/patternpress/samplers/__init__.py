"""
The :mod:`patternpress.samplers` module generates synthetic data: i.i.d.
samples from finite distributions, stick-breaking weights, and sequentially
sampled CRP / Pitman-Yor patterns.
"""

from .distributions import (DiscreteDistribution, point_mass, uniform, zipf,
                            geometric, sample_iid)
from .stick_breaking import StickBreakingWeights, gem_weights, py_weights
from .partitions import sample_crp_partition
from .sources import (Source, IidSource, PartitionSource, parse_source,
                      distinct_count_samples, sample_patterns)

__all__ = [
    'DiscreteDistribution',
    'point_mass',
    'uniform',
    'zipf',
    'geometric',
    'sample_iid',
    'StickBreakingWeights',
    'gem_weights',
    'py_weights',
    'sample_crp_partition',
    'Source',
    'IidSource',
    'PartitionSource',
    'parse_source',
    'distinct_count_samples',
    'sample_patterns',
]
