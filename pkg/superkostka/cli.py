#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:cli.py
@time:2026/10/18

change log:
    2026/10/18  create file, command line front end.

superkostka kpoly --algebra gl:3,3 --lambda "3,1,-2;4,2,-8" --mu "0,0,0;0,0,0"
superkostka kpoly-stab --algebra spo:2n=2,M=5 --lambda "2;1,1" --mu "0;2,1"
superkostka check --suite positivity --samples 50 --seed 1
"""
import argparse
import sys
from typing import List, Optional

from .config import sk_conf
from .core.result import CheckReport
from .exceptions import ParseError
from .io.reader import parse_algebra, parse_weight
from .io.writer import render
from .log_manager import logger
from .tools.kostka_query import KostkaQuery
from .tools.property_check import PropertyCheck

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_CHECK = 3


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument('--format', dest='output_format', choices=['text', 'json'], default='text',
                        help='output format of the result')
    parser.add_argument('--threads', type=int, default=None, help='workers of the Weyl group sums, -1 for all cores')
    parser.add_argument('--log-level', default=None, help='debug, info, warning, error or critical')
    parser.add_argument('--log-file', default=None, help='write the log to this file instead of stderr')
    parser.add_argument('--cache-mb', type=int, default=None, help='memory budget of the partition memo, in MiB')
    parser.add_argument('--shared-cache', action='store_true', help='share one memo between queries and workers')


def _add_weights(parser: argparse.ArgumentParser, *names: str):
    helps = {
        'lambda': 'highest weight, e.g. "3,1,-2;4,2,-8"; half-integers as a/2',
        'mu': 'weight, same syntax as --lambda',
        'gamma': 'g0 highest weight, same syntax as --lambda',
    }
    for name in names:
        parser.add_argument(f'--{name}', dest=name, default=None, help=helps[name])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='superkostka',
                                     description='q-analogs of weight and branching multiplicities for gl(n,m) '
                                                 'and spo(2n,M).')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    commands = {
        'kpoly': ('K_{λ,μ}(q) by the alternating sum', ('lambda', 'mu')),
        'kpoly-stab': ('stabilized K^stab_{λ,μ}(q)', ('lambda', 'mu')),
        'kpoly-cov': ('K_{λ,μ}(q) of a covariant gl(n,m)-module', ('lambda', 'mu')),
        'kpoly-charge': ('K_{λ,μ}(q) of a covariant module by the charge of hook tableaux', ('lambda', 'mu')),
        'kg0': ('K^{g0}_{γ,μ}(q)', ('gamma', 'mu')),
        'branch': ('branching multiplicity m_{λ,γ}, or the g0 decomposition without --gamma', ('lambda', 'gamma')),
        'branch-stab': ('stabilized branching multiplicity', ('lambda', 'gamma')),
        'threshold': ('stabilization threshold k0 of spo(2n,M)', ('lambda', 'mu')),
        'stab-point': ('least k where K_{λ+kω,μ+kω} stops changing', ('lambda', 'mu')),
        'char': ('graded character Σ K_{λ,μ}(q) e^μ', ('lambda',)),
        'dim': ('dimension of a typical module', ('lambda',)),
        'tableaux': ('semistandard hook tableaux with their charge', ('lambda', 'mu')),
    }
    for name, (text, weights) in commands.items():
        sub = subparsers.add_parser(name, help=text)
        sub.add_argument('--algebra', required=True, help='gl:N,M, spo:2n=X,M=Y or spo:X,Y')
        _add_weights(sub, *weights)
        _add_common(sub)
        if name == 'kpoly':
            sub.add_argument('--debug-terms', action='store_true',
                             help='also print the contributing (w, κ) terms of the sum')
        if name == 'kg0':
            sub.add_argument('--shift', choices=['rho_plus', 'rho'], default='rho_plus', help='dot action shift')
        if name == 'char':
            sub.add_argument('--box-low', default=None, help='lower corner of the weight box')
            sub.add_argument('--box-high', default=None, help='upper corner of the weight box')
    check = subparsers.add_parser('check', help='run the property suites')
    check.add_argument('--suite', default='all', choices=list(PropertyCheck.SUITES), help='suite to run')
    check.add_argument('--seed', type=int, default=0, help='seed of the sampled suites')
    check.add_argument('--samples', type=int, default=500, help='pairs per spo family of the positivity suite')
    check.add_argument('--stab-samples', type=int, default=100, help='pairs of the stabilization suite')
    check.add_argument('--max-rank', type=int, default=3, help='largest n and m of the sampled algebras')
    check.add_argument('--max-entry', type=int, default=4, help='largest entry of the sampled weights')
    check.add_argument('--max-boxes', type=int, default=6, help='largest covariant diagram of the charge suite')
    check.add_argument('--conjectures', action='store_true', help='report non-unimodal polynomials of the sweeps')
    check.add_argument('--no-progress', action='store_true', help='hide the progress bars')
    _add_common(check)
    return parser


def _configure(args: argparse.Namespace):
    if args.log_file is not None:
        sk_conf.log_file = args.log_file
    if args.log_level is not None:
        sk_conf.log_level = args.log_level
    if args.threads is not None:
        sk_conf.n_jobs = args.threads
    if args.cache_mb is not None:
        sk_conf.cache_mb = args.cache_mb
    if args.shared_cache:
        sk_conf.shared_cache = True


def _query(args: argparse.Namespace) -> str:
    from .algorithm.qanalogs import WeightBox
    spec = parse_algebra(args.algebra)
    weights = {}
    for name in ('lambda', 'mu', 'gamma'):
        text = getattr(args, name, None)
        weights[name] = parse_weight(text, spec) if text is not None else None
    box = None
    if args.command == 'char' and (args.box_low is not None or args.box_high is not None):
        if args.box_low is None or args.box_high is None:
            raise ParseError('--box-low and --box-high go together', 0)
        box = WeightBox(parse_weight(args.box_low, spec), parse_weight(args.box_high, spec))
    query = KostkaQuery(spec, method=args.command, lam=weights['lambda'], mu=weights['mu'], gamma=weights['gamma'],
                        box=box, shift=getattr(args, 'shift', 'rho_plus'))
    result = query.fit()
    if getattr(args, 'debug_terms', False):
        terms = KostkaQuery(spec, method='kpoly-terms', lam=weights['lambda'], mu=weights['mu']).fit()
        if args.output_format == 'json':
            return render({'polynomial': result, 'terms': terms}, 'json')
        return render(terms) + '\n' + render(result)
    return render(result, args.output_format)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _configure(args)
        if args.command == 'check':
            report: CheckReport = PropertyCheck(
                method=args.suite, seed=args.seed, positivity_samples=args.samples,
                stabilization_samples=args.stab_samples, max_rank=args.max_rank, max_entry=args.max_entry,
                max_boxes=args.max_boxes, conjectures=args.conjectures, progress=not args.no_progress,
            ).fit()
            print(render(report, args.output_format))
            if not report.passed:
                for row in report.failures.itertuples():
                    print(f'mismatch [{row.suite}] {row.case}: {row.detail}', file=sys.stderr)
                return EXIT_CHECK
            return EXIT_OK
        print(_query(args))
        return EXIT_OK
    except ParseError as error:
        logger.error(str(error))
        print(f'parse error: {error}', file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, FileExistsError) as error:
        logger.error(str(error))
        print(f'error: {error}', file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == '__main__':
    sys.exit(main())
