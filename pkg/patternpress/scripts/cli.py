#!/usr/bin/env python3
"""
Command-line entry point: ``patternpress <command> [options]``.

Artifacts go to stdout (or ``--output``); diagnostics, the echoed seed and
progress bars go to stderr. Exit status is 0 on success, 1 on invalid input
or a failed check, 2 on an I/O error.
"""

import argparse
import contextlib
import json
import logging
import math
import sys
import warnings

import numpy as np
import pandas as pd

from ..coder import CodedPattern, decode, encode
from ..estimators import ESTIMATOR_NAMES, make_estimator
from ..exceptions import DomainError, PatternpressError
from ..math_utils import mean_and_std, nats_to_bits
from ..oracle import envelope_log_bound, exact_log_prob, max_pattern_prob
from ..pattern import (extract_pattern, format_pattern, parse_pattern, profile,
                       read_tokens)
from ..redundancy import (MODES, SUITES, average_redundancy_mc, pattern_redundancy,
                          run_suites, summary_table, worst_case_redundancy)
from ..samplers import (DiscreteDistribution, distinct_count_samples, parse_source,
                        sample_patterns)
from ..utils.config_utils import load_config
from ..utils.parallel import spawn_seeds, worker_count

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ['n', 'm', 'estimator', 'theta', 'alpha', 'redundancy_nats',
                 'bound_nats', 'per_symbol']


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"{type(obj).__name__} is not JSON serializable")


def _write_json(obj, output=None):
    output = output or sys.stdout
    output.write(json.dumps(obj, indent=2, default=_json_default))
    output.write("\n")


@contextlib.contextmanager
def _open_in(path, mode='r'):
    if path in (None, '-'):
        yield sys.stdin.buffer if 'b' in mode else sys.stdin
    else:
        with open(path, mode, **({} if 'b' in mode else {'encoding': 'utf-8'})) as fp:
            yield fp


@contextlib.contextmanager
def _open_out(path, mode='w'):
    if path in (None, '-'):
        yield sys.stdout.buffer if 'b' in mode else sys.stdout
    else:
        with open(path, mode, **({} if 'b' in mode else {'encoding': 'utf-8'})) as fp:
            yield fp


def _read_pattern_lines(args):
    """``--pattern`` if given, else every line of the input file."""
    if getattr(args, 'pattern', None) is not None:
        return [parse_pattern(args.pattern)]
    with _open_in(args.input) as fp:
        lines = fp.read().splitlines()
    patterns = []
    for lineno, line in enumerate(lines, start=1):
        try:
            patterns.append(parse_pattern(line))
        except PatternpressError as e:
            raise DomainError(f"line {lineno}: {e}") from e
    return patterns


def _estimator(args, config, pattern=None):
    return make_estimator(args.estimator, theta=args.theta, alpha=args.alpha,
                          i_max=args.imax, j_max=args.jmax, pattern=pattern,
                          config=config)


def _echo_seed(args):
    print(f"seed: {args.seed}", file=sys.stderr)


def _one_or_many(items, single):
    return items[0] if single and len(items) == 1 else items


# -- pattern ---------------------------------------------------------------

def cmd_pattern_extract(args, config):
    with _open_in(args.input) as fp:
        tokens = read_tokens(fp, whitespace=args.whitespace)
    if args.chars:
        tokens = [c for line in tokens for c in line]
    with _open_out(args.output) as out:
        out.write(format_pattern(extract_pattern(tokens)) + "\n")
    return 0


def _profile_record(pattern):
    record = profile(pattern).to_dict()
    record['first_occurrences'] = [i + 1 for i in pattern.first_occurrences()]
    return record


def cmd_pattern_profile(args, config):
    profiles = [_profile_record(p) for p in _read_pattern_lines(args)]
    _write_json(_one_or_many(profiles, args.pattern is not None))
    return 0


def cmd_pattern_validate(args, config):
    patterns = _read_pattern_lines(args)
    print(f"{len(patterns)} valid pattern(s)", file=sys.stderr)
    return 0


# -- scoring -----------------------------------------------------------------

def cmd_prob(args, config):
    results = []
    for pattern in _read_pattern_lines(args):
        est = _estimator(args, config, pattern)
        ln_q = est.log_prob(pattern)
        results.append({'ln_prob': ln_q, 'bits': nats_to_bits(-ln_q),
                        'n': pattern.n, 'm': pattern.m,
                        'estimator': est.describe()})
    _write_json(_one_or_many(results, args.pattern is not None))
    return 0


# -- coding -------------------------------------------------------------------

def cmd_compress(args, config):
    with _open_in(args.input) as fp:
        lines = fp.read().splitlines()
    if len(lines) != 1:
        raise DomainError(f"compress takes exactly one pattern per file, "
                          f"found {len(lines)} lines")
    pattern = parse_pattern(lines[0])
    est = _estimator(args, config, pattern)
    coded = encode(est, pattern, config['coder']['frequency_bits'])
    with _open_out(args.output, 'wb') as out:
        out.write(coded.to_bytes())
    if logger.isEnabledFor(logging.INFO):
        logger.info("compressed n=%d with %r: %d payload bits (ideal %.2f)",
                    pattern.n, est, coded.payload_bits,
                    nats_to_bits(-est.log_prob(pattern)))
    return 0


def cmd_decompress(args, config):
    with _open_in(args.input, 'rb') as fp:
        data = fp.read()
    guards = config['guards']
    pattern = decode(CodedPattern.from_bytes(data), config['coder']['frequency_bits'],
                     max_n=guards['decode_max_n'],
                     max_components=guards['header_max_components'])
    with _open_out(args.output) as out:
        out.write(format_pattern(pattern) + "\n")
    return 0


# -- simulation ------------------------------------------------------------

def cmd_simulate(args, config):
    _echo_seed(args)
    weight_seed, trial_seed = spawn_seeds(args.seed, 2)
    source = parse_source(args.source, seed=weight_seed)
    if args.distinct:
        counts = distinct_count_samples(source, args.n, args.trials, trial_seed,
                                        workers=args.workers, verbose=args.progress)
        mean, std = mean_and_std(counts)
        _write_json({'source': args.source, 'n': args.n, 'trials': args.trials,
                     'seed': args.seed, 'mean': mean, 'std': std,
                     'counts': counts.tolist()})
        return 0
    patterns = sample_patterns(source, args.n, args.trials, trial_seed,
                               workers=args.workers, verbose=args.progress)
    with _open_out(args.output) as out:
        for p in patterns:
            out.write(format_pattern(p) + "\n")
    return 0


# -- redundancy ------------------------------------------------------------

def cmd_redundancy_report(args, config):
    reports = []
    for pattern in _read_pattern_lines(args):
        reports.append(pattern_redundancy(_estimator(args, config, pattern),
                                          pattern).to_dict())
    _write_json(reports)
    return 0


def cmd_redundancy_worst(args, config):
    est = _estimator(args, config).resolve(args.n)
    report, pattern = worst_case_redundancy(est, args.n)
    out = report.to_dict()
    out['pattern'] = format_pattern(pattern)
    _write_json(out)
    return 0


def _sweep_row(est, report):
    desc = est.describe()
    return {'n': report.n, 'm': report.m, 'estimator': est.name,
            'theta': desc.get('theta', math.nan), 'alpha': desc.get('alpha', math.nan),
            'redundancy_nats': report.redundancy_nats,
            'bound_nats': math.nan if report.bound_nats is None else report.bound_nats,
            'per_symbol': report.per_symbol}


def cmd_redundancy_sweep(args, config):
    _echo_seed(args)
    weight_seed, *seeds = spawn_seeds(args.seed, len(args.n) + 1)
    source = parse_source(args.source, seed=weight_seed)
    rows = []
    for n, child in zip(args.n, seeds):
        patterns = sample_patterns(source, n, args.trials, child,
                                   workers=args.workers, verbose=args.progress)
        for pattern in patterns:
            est = _estimator(args, config, pattern)
            rows.append(_sweep_row(est, pattern_redundancy(est, pattern)))
    table = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    with _open_out(args.output) as out:
        table.to_csv(out, index=False)
    return 0


def cmd_redundancy_average(args, config):
    _echo_seed(args)
    weight_seed, trial_seed = spawn_seeds(args.seed, 2)
    source = parse_source(args.source, seed=weight_seed)
    est = _estimator(args, config).resolve(args.n)
    result = average_redundancy_mc(source, est, args.n, args.trials, trial_seed,
                                   mode=args.mode,
                                   max_terms=config['guards']['exact_max_terms'],
                                   workers=args.workers, verbose=args.progress)
    out = result.to_dict()
    out['seed'] = args.seed
    out['source'] = args.source
    out['estimator'] = est.describe()
    _write_json(out)
    return 0


# -- oracle ------------------------------------------------------------------

def _oracle_distribution(args):
    if args.dist is not None:
        try:
            weights = [float(x) for x in args.dist.split(',')]
        except ValueError:
            raise DomainError(f"--dist must be comma-separated numbers, got {args.dist!r}")
        return DiscreteDistribution(np.asarray(weights))
    source = parse_source(args.source, seed=args.seed)
    if source.distribution is None:
        raise DomainError(f"source {args.source!r} has no explicit distribution")
    return source.distribution


def cmd_oracle_prob(args, config):
    dist = _oracle_distribution(args)
    results = []
    for pattern in _read_pattern_lines(args):
        ln_p = exact_log_prob(dist, pattern, config['guards']['exact_max_terms'])
        envelope = envelope_log_bound(profile(pattern))
        results.append({'pattern': format_pattern(pattern), 'ln_prob': ln_p,
                        'prob': math.exp(ln_p), 'envelope': envelope.bound})
    _write_json(_one_or_many(results, args.pattern is not None))
    return 0


def cmd_oracle_maxprob(args, config):
    _echo_seed(args)
    ocfg = config['oracle']
    results = []
    for pattern in _read_pattern_lines(args):
        value, masses = max_pattern_prob(
            pattern, args.budget,
            diffuse_atoms=args.diffuse_atoms or ocfg['diffuse_atoms'],
            starts=args.starts or ocfg['starts'],
            grid_resolution=ocfg['grid_resolution'], seed=args.seed,
            max_n=config['guards']['maxprob_max_n'], workers=args.workers,
            return_argmax=True)
        results.append({'pattern': format_pattern(pattern), 'value': value,
                        'envelope': envelope_log_bound(profile(pattern)).bound,
                        'atoms': masses[:-1], 'diffuse_mass': masses[-1],
                        'seed': args.seed})
    _write_json(_one_or_many(results, args.pattern is not None))
    return 0


# -- verify ----------------------------------------------------------------

def cmd_verify(args, config):
    _echo_seed(args)
    results = run_suites(args.suite, config=config, seed=args.seed,
                         workers=args.workers, verbose=args.progress)
    print(summary_table(results).to_string(index=False))
    for r in results:
        for failure in r.failures:
            print(f"{r.name}: {failure}", file=sys.stderr)
    return 0 if all(r.passed for r in results) else 1


# -- parser ------------------------------------------------------------------

def _add_estimator_args(p):
    p.add_argument('--estimator', choices=ESTIMATOR_NAMES, default='crp',
                   help='Pattern estimator (default: crp).')
    p.add_argument('--theta', type=float, default=None,
                   help='Strength for crp/py. Default: m / ln n of the pattern '
                        'when one is given, else estimator.theta from the config.')
    p.add_argument('--alpha', type=float, default=None,
                   help='Discount for py and py-mixture.')
    p.add_argument('--imax', type=int, default=None,
                   help='Mixture truncation in i (default: pattern length).')
    p.add_argument('--jmax', type=int, default=None,
                   help='Mixture truncation in j (default: pattern length).')


def _add_pattern_input(p):
    p.add_argument('input', nargs='?', default='-',
                   help='Pattern file, one pattern per line (default: stdin).')
    p.add_argument('--pattern', type=str, default=None,
                   help='A single pattern such as "1 2 1", instead of a file.')


def build_parser():
    parser = _Parser(prog='patternpress',
                     description='Score, compress and simulate patterns of sequences, '
                                 'and measure the redundancy of pattern estimators.')
    parser.add_argument('--config', type=str, default=None,
                        help='Configuration YAML (default: PATTERNPRESS_CONFIG, '
                             'CONFIG.yaml, then CONFIG-default.yaml).')
    parser.add_argument('--seed', type=int, default=None,
                        help='Root seed for randomized commands (default: config seed).')
    parser.add_argument('--threads', type=int, default=None,
                        help='Worker processes (default: PATTERNPRESS_THREADS, '
                             'config threads, or the number of cores).')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='More logging; also shows progress bars.')
    parser.add_argument('-q', '--quiet', action='store_true', help='Errors only.')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p_pattern = sub.add_parser('pattern', help='Extract, profile or validate patterns.')
    pattern_sub = p_pattern.add_subparsers(dest='action', metavar='action')
    pattern_sub.required = True
    p = pattern_sub.add_parser('extract', help='Pattern of a token sequence.')
    p.add_argument('input', nargs='?', default='-', help='Token file (default: stdin).')
    p.add_argument('--output', '-o', default=None)
    p.add_argument('--whitespace', action='store_true',
                   help='Tokens are separated by whitespace (default: one per line).')
    p.add_argument('--chars', action='store_true',
                   help='Every character is a token.')
    p.set_defaults(func=cmd_pattern_extract)
    p = pattern_sub.add_parser('profile', help='Prevalence profile as JSON.')
    _add_pattern_input(p)
    p.set_defaults(func=cmd_pattern_profile)
    p = pattern_sub.add_parser('validate', help='Fail on the first invalid line.')
    _add_pattern_input(p)
    p.set_defaults(func=cmd_pattern_validate)

    p = sub.add_parser('prob', help='Estimator log-probability of patterns.')
    _add_pattern_input(p)
    _add_estimator_args(p)
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser('compress', help='Arithmetic-code one pattern.')
    p.add_argument('input', nargs='?', default='-', help='Pattern file (one line).')
    p.add_argument('--output', '-o', default=None, help='Artifact path (.ptnc).')
    _add_estimator_args(p)
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser('decompress', help='Decode a .ptnc artifact.')
    p.add_argument('input', nargs='?', default='-')
    p.add_argument('--output', '-o', default=None)
    p.set_defaults(func=cmd_decompress)

    p = sub.add_parser('simulate', help='Sample patterns from a source.')
    p.add_argument('--source', required=True,
                   help='Source specifier, e.g. zipf:1.5:1000 or crp:2.')
    p.add_argument('--n', type=int, required=True, help='Pattern length.')
    p.add_argument('--trials', type=int, default=1)
    p.add_argument('--distinct', action='store_true',
                   help='Report distinct-symbol counts instead of patterns.')
    p.add_argument('--output', '-o', default=None)
    p.set_defaults(func=cmd_simulate)

    p_red = sub.add_parser('redundancy', help='Redundancy reports and experiments.')
    red_sub = p_red.add_subparsers(dest='action', metavar='action')
    red_sub.required = True
    p = red_sub.add_parser('report', help='JSON redundancy report per pattern.')
    _add_pattern_input(p)
    _add_estimator_args(p)
    p.set_defaults(func=cmd_redundancy_report)
    p = red_sub.add_parser('worst', help='Worst pattern of a given length.')
    p.add_argument('--n', type=int, required=True)
    _add_estimator_args(p)
    p.set_defaults(func=cmd_redundancy_worst)
    p = red_sub.add_parser('sweep', help='CSV of redundancies over sampled patterns.')
    p.add_argument('--source', required=True)
    p.add_argument('--n', type=int, nargs='+', required=True)
    p.add_argument('--trials', type=int, default=10)
    p.add_argument('--output', '-o', default=None)
    _add_estimator_args(p)
    p.set_defaults(func=cmd_redundancy_sweep)
    p = red_sub.add_parser('average', help='Monte Carlo average redundancy.')
    p.add_argument('--source', required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--trials', type=int, default=100)
    p.add_argument('--mode', choices=MODES, default='auto')
    _add_estimator_args(p)
    p.set_defaults(func=cmd_redundancy_average)

    p_or = sub.add_parser('oracle', help='Exact and maximal pattern probabilities.')
    or_sub = p_or.add_subparsers(dest='action', metavar='action')
    or_sub.required = True
    p = or_sub.add_parser('prob', help='Exact probability under a distribution.')
    _add_pattern_input(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--dist', help='Comma-separated probabilities.')
    group.add_argument('--source', help='An i.i.d. source specifier.')
    p.set_defaults(func=cmd_oracle_prob)
    p = or_sub.add_parser('maxprob', help='Search for the most likely distribution.')
    _add_pattern_input(p)
    p.add_argument('--budget', type=int, default=3, help='Most free atoms.')
    p.add_argument('--starts', type=int, default=None)
    p.add_argument('--diffuse-atoms', type=int, default=None)
    p.set_defaults(func=cmd_oracle_maxprob)

    p = sub.add_parser('verify', help='Run the numerical verification suites.')
    p.add_argument('--suite', action='append', choices=list(SUITES), default=None,
                   help='Suite to run (repeatable; default: all).')
    p.set_defaults(func=cmd_verify)
    return parser


def _configure_logging(args, config):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, str(config['logging']['level']).upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    logging.captureWarnings(True)
    if args.quiet:
        warnings.simplefilter('ignore')


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        _configure_logging(args, config)
        if args.seed is None:
            args.seed = int(config['seed'])
        args.workers = args.threads if args.threads else worker_count(config)
        args.progress = args.verbose > 0
        return args.func(args, config)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (PatternpressError, ValueError, RuntimeError) as e:
        # RuntimeError: unreadable configuration
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
