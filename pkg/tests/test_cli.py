import json

import pytest

from patternpress.scripts.cli import SWEEP_COLUMNS, main


def run(*argv):
    return main(['--threads', '1'] + [str(a) for a in argv])


@pytest.fixture
def small_config(tmp_path):
    path = tmp_path / 'CONFIG.yaml'
    path.write_text("seed: 11\n"
                    "verify:\n"
                    "  claim_j_max: 20\n"
                    "  claim_theta_step: 0.5\n"
                    "  bell_max_n: 6\n")
    return path


class TestPatternCommands(object):

    def test_extract_characters(self, tmp_path, capsys):
        path = tmp_path / 'word.txt'
        path.write_text("FEDERER\n")
        assert run('pattern', 'extract', '--chars', path) == 0
        assert capsys.readouterr().out == "1 2 3 2 4 2 4\n"

    def test_extract_tokens_per_line(self, tmp_path):
        src = tmp_path / 'tokens.txt'
        src.write_text("the\ncat\nthe\ndog\n")
        dst = tmp_path / 'pattern.txt'
        assert run('pattern', 'extract', src, '-o', dst) == 0
        assert dst.read_text() == "1 2 1 3\n"

    def test_profile(self, capsys):
        assert run('pattern', 'profile', '--pattern', '1 2 3 2 4 2 4') == 0
        out = json.loads(capsys.readouterr().out)
        assert (out['n'], out['m']) == (7, 4)
        assert out['prevalences'] == {'1': 2, '2': 1, '3': 1}
        assert out['multiplicities'] == [3, 2, 1, 1]
        assert out['first_occurrences'] == [1, 2, 3, 5]

    def test_validate_reports_line(self, tmp_path, capsys):
        path = tmp_path / 'patterns.txt'
        path.write_text("1 2 1\n1 3\n")
        assert run('pattern', 'validate', path) == 1
        assert 'line 2' in capsys.readouterr().err


class TestProb(object):

    def test_single_pattern(self, capsys):
        assert run('prob', '--theta', 1, '--pattern', '1 1') == 0
        out = json.loads(capsys.readouterr().out)
        assert out['ln_prob'] == pytest.approx(-0.6931, abs=1e-4)
        assert out['bits'] == pytest.approx(1.0)
        assert out['estimator'] == {'estimator': 'crp', 'theta': 1.0}

    def test_file_gives_list(self, tmp_path, capsys):
        path = tmp_path / 'patterns.txt'
        path.write_text("1 2\n1 1 1\n")
        assert run('prob', '--estimator', 'py', '--alpha', 0.5, '--theta', 0.5, path) == 0
        out = json.loads(capsys.readouterr().out)
        assert len(out) == 2
        assert out[0]['ln_prob'] == pytest.approx(-0.405465, abs=1e-6)

    def test_inconsistent_flags(self, capsys):
        assert run('prob', '--alpha', 0.5, '--pattern', '1 2') == 1
        assert 'error' in capsys.readouterr().err


class TestCompression(object):

    @pytest.mark.parametrize("estimator", ['crp', 'py', 'mixture'])
    def test_round_trip(self, tmp_path, capsys, estimator):
        src = tmp_path / 'p.txt'
        src.write_text("1 2 1 3 1 1 2 4 5 1\n")
        artifact = tmp_path / 'p.ptnc'
        assert run('compress', '--estimator', estimator, src, '-o', artifact) == 0
        assert artifact.read_bytes()[:4] == b'PTNC'
        assert run('decompress', artifact) == 0
        assert capsys.readouterr().out == "1 2 1 3 1 1 2 4 5 1\n"

    def test_one_pattern_per_file(self, tmp_path):
        src = tmp_path / 'two.txt'
        src.write_text("1 2\n1 1\n")
        assert run('compress', src, '-o', tmp_path / 'x.ptnc') == 1

    def test_corrupt_artifact(self, tmp_path):
        artifact = tmp_path / 'bad.ptnc'
        artifact.write_bytes(b'PTNC\x01')
        assert run('decompress', artifact) == 1

    def test_missing_file(self, tmp_path):
        assert run('decompress', tmp_path / 'missing.ptnc') == 2


class TestSimulationAndRedundancy(object):

    def test_simulate_patterns(self, capsys):
        assert run('--seed', 5, 'simulate', '--source', 'zipf:1.5:100', '--n', 20,
                   '--trials', 3) == 0
        captured = capsys.readouterr()
        lines = captured.out.splitlines()
        assert len(lines) == 3
        assert all(len(line.split()) == 20 for line in lines)
        assert 'seed: 5' in captured.err

    def test_simulate_is_reproducible(self, capsys):
        run('--seed', 9, 'simulate', '--source', 'crp:2', '--n', 50, '--trials', 2)
        first = capsys.readouterr().out
        run('--seed', 9, 'simulate', '--source', 'crp:2', '--n', 50, '--trials', 2)
        assert capsys.readouterr().out == first

    def test_simulate_distinct(self, capsys):
        assert run('simulate', '--source', 'uniform:5', '--n', 200, '--trials', 4,
                   '--distinct') == 0
        out = json.loads(capsys.readouterr().out)
        assert out['counts'] == [5, 5, 5, 5]

    def test_report(self, capsys):
        assert run('redundancy', 'report', '--theta', 1, '--pattern', '1 1') == 0
        out = json.loads(capsys.readouterr().out)
        assert out[0]['redundancy_nats'] == pytest.approx(0.693147, abs=1e-6)

    def test_worst(self, capsys):
        assert run('redundancy', 'worst', '--n', 6, '--theta', 1) == 0
        out = json.loads(capsys.readouterr().out)
        assert out['n'] == 6
        assert len(out['pattern'].split()) == 6

    def test_sweep_csv(self, tmp_path):
        dst = tmp_path / 'sweep.csv'
        assert run('redundancy', 'sweep', '--source', 'crp:2', '--n', 32, 64,
                   '--trials', 2, '-o', dst) == 0
        lines = dst.read_text().splitlines()
        assert lines[0] == ','.join(SWEEP_COLUMNS)
        assert len(lines) == 5

    def test_average(self, capsys):
        assert run('redundancy', 'average', '--source', 'uniform:3', '--n', 8,
                   '--trials', 4, '--theta', 1) == 0
        out = json.loads(capsys.readouterr().out)
        assert out['modes'] == {'exact': 4}


class TestOracle(object):

    def test_exact(self, capsys):
        assert run('oracle', 'prob', '--dist', '0.5,0.5', '--pattern', '1 2') == 0
        out = json.loads(capsys.readouterr().out)
        assert out['prob'] == pytest.approx(0.5)

    def test_bad_distribution(self):
        assert run('oracle', 'prob', '--dist', '0.5,0.4', '--pattern', '1 2') == 1

    def test_maxprob(self, capsys):
        assert run('oracle', 'maxprob', '--budget', 1, '--starts', 2,
                   '--pattern', '1 1') == 0
        out = json.loads(capsys.readouterr().out)
        assert out['value'] == pytest.approx(1.0)


class TestVerify(object):

    def test_suites_pass(self, small_config, capsys):
        assert run('--config', small_config, 'verify', '--suite', 'claim',
                   '--suite', 'bell') == 0
        captured = capsys.readouterr()
        assert 'claim' in captured.out and 'bell' in captured.out
        assert 'seed: 11' in captured.err

    def test_unknown_suite_is_a_usage_error(self):
        with pytest.raises(SystemExit) as e:
            run('verify', '--suite', 'nope')
        assert e.value.code == 1

    def test_missing_config(self, tmp_path):
        assert run('--config', tmp_path / 'nope.yaml', 'verify', '--suite', 'claim') == 2
