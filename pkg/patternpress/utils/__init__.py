from .config_utils import load_config, DEFAULT_CONFIG
from .parallel import make_rng, spawn_seeds, worker_count, parallel_map

__all__ = [
    'load_config',
    'DEFAULT_CONFIG',
    'make_rng',
    'spawn_seeds',
    'worker_count',
    'parallel_map',
]
