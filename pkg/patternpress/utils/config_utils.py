import copy
import logging
import os
from pathlib import Path

from yaml import load, Loader
from yaml import YAMLError

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = 'PATTERNPRESS_CONFIG'

# Built-in defaults; CONFIG-default.yaml documents the same keys.
DEFAULT_CONFIG = {
    'seed': 0xC0FFEE,
    'threads': None,
    'logging': {'level': 'WARNING'},
    'guards': {
        'enumerate_max_n': 14,
        'exact_max_terms': 10_000_000,
        'maxprob_max_n': 10,
        'decode_max_n': 1 << 24,
        'header_max_components': 50_000_000,
    },
    'estimator': {'theta': 1.0, 'alpha': 0.5},
    'mixture': {'i_max': None, 'j_max': None},
    'oracle': {'diffuse_atoms': 1000, 'starts': 8, 'grid_resolution': 200},
    'coder': {'frequency_bits': 32},
    'redundancy': {'slack_nats': 1.0},
    'verify': {
        'normalization_max_n': 10,
        'sequential_patterns': 10_000,
        'sequential_max_n': 500,
        'exchangeability_profiles': 1000,
        'envelope_max_n': 7,
        'envelope_distributions': 100,
        'theorem_ns': [1024, 16384, 262144],
        'theorem_trials': 5,
        'linear_log2_ns': [7, 8, 9, 10, 11, 12, 13, 14],
        'claim_j_max': 1000,
        'claim_theta_step': 0.01,
        'hrate_ns': [1000, 10000],
        'hrate_trials': 1000,
        'growth_n': 10000,
        'growth_trials': 200,
        'weak_log2_ns': [6, 8, 10, 12],
        'weak_trials': 10,
        'codec_trials': 10_000,
        'codec_max_n': 300,
        'bell_max_n': 12,
    },
}


def _get_default_config_file():
    env_path = os.environ.get(CONFIG_ENV_VAR)
    if env_path:
        return env_path
    root_dir = Path(__file__).resolve().parents[2]
    if os.path.exists(os.path.join(root_dir, 'CONFIG.yaml')):
        default_config_file = os.path.join(root_dir, 'CONFIG.yaml')
    else:
        default_config_file = os.path.join(root_dir, 'CONFIG-default.yaml')
    return default_config_file


def _merge(base, override):
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        elif value is not None or key not in merged:
            merged[key] = value
    return merged


def load_config(config_file_path=None):
    """Load a patternpress configuration file from the location specified.

    If the user does not provide a value for `config_file_path`, we try, in
    order: the file named by the ``PATTERNPRESS_CONFIG`` environment variable,
    ``CONFIG.yaml`` in the repository root, and ``CONFIG-default.yaml`` in the
    repository root.

    Parameters
    ----------
    config_file_path : str, optional
        Fully qualified path to a patternpress configuration file, by default
        None

    Returns
    -------
    config : dict
        Dictionary containing configuration options. Keys missing from the file
        keep their built-in defaults. If no file is found at all, the built-in
        defaults are returned.

    Raises
    ------
    RuntimeError
        If the file exists but is not a YAML mapping.
    """
    if config_file_path:
        full_fname = config_file_path
    else:
        full_fname = _get_default_config_file()

    try:
        with open(full_fname, 'r') as fp:
            cnf = load(fp, Loader=Loader)
    except FileNotFoundError:
        if config_file_path:
            raise
        logger.info("No config file at %s; using built-in defaults", full_fname)
        return copy.deepcopy(DEFAULT_CONFIG)
    except YAMLError as e:
        raise RuntimeError(
            f"Config file {full_fname} is not valid YAML: {e}"
        )

    if cnf is None:
        cnf = {}
    if not isinstance(cnf, dict):
        raise RuntimeError(
            f"Config file {full_fname} must contain a YAML mapping of "
            "options; refer to CONFIG-default.yaml for the expected layout."
        )

    return _merge(DEFAULT_CONFIG, cnf)
