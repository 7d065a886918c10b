import os

import pytest

from patternpress.utils.config_utils import CONFIG_ENV_VAR, DEFAULT_CONFIG, load_config
from patternpress.utils.parallel import THREADS_ENV_VAR, worker_count

TEST_DIR = os.path.dirname(os.path.abspath(__file__))


class TestLoadConfig(object):

    def test_raise_when_bad_config_given(self):
        bad_config_file = os.path.join(TEST_DIR, 'badconfig.txt')
        with pytest.raises(RuntimeError) as e_info:
            load_config(bad_config_file)
        assert 'YAML mapping' in str(e_info.value)

    def test_raise_when_config_file_not_found(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_config(str(tmp_path / 'missing.yaml'))

    def test_missing_keys_keep_defaults(self, tmp_path):
        path = tmp_path / 'partial.yaml'
        path.write_text("seed: 3\nverify:\n  codec_trials: 5\n")
        config = load_config(str(path))
        assert config['seed'] == 3
        assert config['verify']['codec_trials'] == 5
        assert config['verify']['codec_max_n'] == DEFAULT_CONFIG['verify']['codec_max_n']
        assert config['coder']['frequency_bits'] == 32

    def test_empty_file_gives_defaults(self, tmp_path):
        path = tmp_path / 'empty.yaml'
        path.write_text("")
        assert load_config(str(path)) == DEFAULT_CONFIG

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / 'broken.yaml'
        path.write_text("seed: [1, 2\n")
        with pytest.raises(RuntimeError):
            load_config(str(path))

    def test_environment_variable(self, tmp_path, monkeypatch):
        path = tmp_path / 'env.yaml'
        path.write_text("estimator:\n  alpha: 0.25\n")
        monkeypatch.setenv(CONFIG_ENV_VAR, str(path))
        config = load_config()
        assert config['estimator']['alpha'] == 0.25
        assert config['estimator']['theta'] == 1.0

    def test_loading_does_not_mutate_defaults(self, tmp_path):
        path = tmp_path / 'override.yaml'
        path.write_text("verify:\n  bell_max_n: 3\n")
        load_config(str(path))
        assert DEFAULT_CONFIG['verify']['bell_max_n'] == 12

    def test_shipped_file_matches_defaults(self):
        path = os.path.join(os.path.dirname(TEST_DIR), 'CONFIG-default.yaml')
        assert load_config(path) == DEFAULT_CONFIG

    def test_verify_defaults_run_at_full_size(self):
        cfg = DEFAULT_CONFIG['verify']
        assert cfg['normalization_max_n'] == 10
        assert cfg['sequential_patterns'] == 10_000
        assert cfg['exchangeability_profiles'] == 1000
        assert 2 ** 18 in cfg['theorem_ns']
        assert cfg['hrate_trials'] == 1000
        assert cfg['growth_trials'] == 200
        assert cfg['codec_trials'] == 10_000


class TestWorkerCount(object):

    def test_environment_wins(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV_VAR, '3')
        assert worker_count({'threads': 8}) == 3

    def test_config_value(self, monkeypatch):
        monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
        assert worker_count({'threads': 2}) == 2

    def test_bad_environment_value_is_ignored(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV_VAR, 'many')
        assert worker_count({'threads': 4}) == 4
