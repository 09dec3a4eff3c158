# Copyright 2020 Vasily Rudchenko - dot2bgraph
# Copyright 2026 gaussquot developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction
from typing import Any, Dict, List, Optional

import sys
import argparse
import math

from gaussquot.census import sector_census
from gaussquot.config import (
    DEFAULT_BUDGET,
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_TOLERANCE,
    CliConfig,
    OutputFormat,
)
from gaussquot.errors import GaussQuotError, PreconditionError
from gaussquot.estimate import kubilyus_estimate, pi3_estimate, round_half_away
from gaussquot.gaussian import AnnularRegion, GaussianInt, Sector, format_angle, parse_angle
from gaussquot.image import scatter2image, scatter_points
from gaussquot.number.primality import classify
from gaussquot.number.sieve import DEFAULT_SEGMENT_SIZE, pi3
from gaussquot.output import format_cell, render, sig10, write_payload
from gaussquot.quotient import QuotientResult, approximate, distance, find_quotient
from gaussquot.tables import CaptionMode, caption_note, census_table_rows, compare_row, table_spec
from gaussquot.utils.spinner import SPINNER_FAIL, SPINNER_OK, set_disabled, sp

CLASSIFY_COLUMNS = ('a', 'b', 'class', 'witness')
CENSUS_COLUMNS = ('rho', 'N', 'K', 'K_rounded')
COMPARE_COLUMNS = ('published_N', 'published_K', 'dN', 'dK')
ESTIMATE_COLUMNS = ('u', 'K', 'K_rounded')
PI3_COLUMNS = ('x', 'pi3', 'estimate', 'ratio')
QUOTIENT_COLUMNS = ('gamma_a', 'gamma_b', 'q', 're_exact', 'im_exact', 're_dec', 'im_dec')
SCATTER_COLUMNS = ('a', 'b', 'class')

class _ArgumentParser(argparse.ArgumentParser):
    ''' Usage errors exit with 1 like every other bad input. '''
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, '{}: error: {}\n'.format(self.prog, message))

def _sector(args) -> Sector:
    return Sector.between(parse_angle(args.alpha), parse_angle(args.beta))

def _sector_meta(sector: Sector) -> str:
    return 'alpha={} beta={}'.format(format_angle(sector.alpha), format_angle(sector.beta))

def _cmd_classify(args, config: CliConfig) -> str:
    g = GaussianInt(args.a, args.b)
    prime_class = classify(g)
    record = {'a': g.a, 'b': g.b}
    record.update(prime_class.to_obj())
    return render(config.output_format, CLASSIFY_COLUMNS, [record])

def _cmd_census(args, config: CliConfig) -> str:
    sector = _sector(args)

    with sp(text='Counting Gaussian primes in {}'.format(sector)) as spinner:
        result = sector_census(
            sector, args.rho,
            budget=config.workload_budget,
            workers=config.threads,
            estimator=config.estimator,
        )
        spinner.ok(SPINNER_OK)

    return render(config.output_format, CENSUS_COLUMNS, [result.to_obj()])

def _cmd_estimate(args, config: CliConfig) -> str:
    sector = _sector(args)
    K = kubilyus_estimate(sector, args.u, config.estimator)
    record = {
        'alpha': format_angle(sector.alpha),
        'beta': format_angle(sector.beta),
        'u': sig10(args.u),
        'K': sig10(K),
        'K_rounded': round_half_away(K),
    }
    return render(config.output_format, ESTIMATE_COLUMNS, [record])

def _cmd_pi3(args, config: CliConfig) -> str:
    if args.x < 0:
        raise PreconditionError('x must be non-negative, got {}.'.format(args.x))

    exact = pi3(args.x, config.sieve_segment_size, config.threads)
    record: Dict[str, Any] = {'x': args.x, 'pi3': exact, 'estimate': None, 'ratio': None}
    if args.x > 2:
        record['estimate'] = sig10(pi3_estimate(args.x))
        record['ratio'] = sig10(exact/(args.x/math.log(args.x)))
    return render(config.output_format, PI3_COLUMNS, [record])

def _cmd_table(args, config: CliConfig) -> str:
    spec = table_spec(args.table, CaptionMode(args.caption_mode), args.spec)

    note = caption_note(spec)
    if note:
        print('Warning: {}'.format(note), file=sys.stderr)

    with sp(text='Building table {}'.format(spec.name)) as spinner:
        rows = census_table_rows(
            spec,
            budget=config.workload_budget,
            workers=config.threads,
            estimator=config.estimator,
            rho_max=args.rho_max,
        )
        spinner.ok(SPINNER_OK)

    columns = CENSUS_COLUMNS + (COMPARE_COLUMNS if args.compare else ())
    records: List[Dict[str, Any]] = []
    skipped: List[Dict[str, Any]] = []
    for row in rows:
        if row.result is None:
            print('Warning: skipped rho={}: {}'.format(sig10(row.rho), row.skipped), file=sys.stderr)
            skipped.append({'rho': sig10(row.rho), 'reason': row.skipped})
            continue

        record = row.result.to_obj()
        comparison = compare_row(spec, row.result) if args.compare else None
        if comparison is not None:
            record.update(comparison.to_obj())
        records.append(record)

    meta = spec.to_obj()
    meta['skipped'] = skipped
    return render(config.output_format, columns, records, meta=meta, comments=[spec.header()])

def _quotient_record(result: QuotientResult) -> Dict[str, Any]:
    record = result.to_obj()
    record['verified'] = True
    return record

def _quotient_trailer(result: QuotientResult) -> List[str]:
    region = result.region
    return ['region={} r={} R={} iterations={} threshold={}'.format(
        region.sector,
        format_cell(region.r),
        format_cell(region.R),
        result.trace.iterations,
        format_cell(sig10(result.trace.threshold)),
    )]

def _cmd_find_quotient(args, config: CliConfig) -> str:
    region = AnnularRegion(_sector(args).opened(), args.r, args.R)

    with sp(text='Searching for a quotient') as spinner:
        result = find_quotient(region, config.search)
        spinner.ok(SPINNER_OK)

    return render(config.output_format, QUOTIENT_COLUMNS, [_quotient_record(result)],
        trailer=_quotient_trailer(result))

def _cmd_approximate(args, config: CliConfig) -> str:
    with sp(text='Approximating {}+{}i'.format(args.re, args.im)) as spinner:
        result = approximate(args.re, args.im, args.eps, config.search)
        spinner.ok(SPINNER_OK)

    record = _quotient_record(result)
    record['abs_error'] = sig10(distance(result, args.re, args.im))
    record['abs_error_squared_exact'] = str(result.value.distance_squared(args.re, args.im))
    return render(config.output_format, QUOTIENT_COLUMNS + ('abs_error',), [record],
        trailer=_quotient_trailer(result))

def _cmd_scatter(args, config: CliConfig) -> str:
    points = scatter_points(args.bound)

    if args.png:
        with sp(text='Drawing {}'.format(args.png)) as spinner:
            try:
                scatter2image(points, args.bound).save(args.png)
            except OSError as e:
                spinner.fail(SPINNER_FAIL)
                raise PreconditionError('Cannot write {}: {}'.format(args.png, e))
            spinner.ok(SPINNER_OK)

    return render(
        config.output_format,
        SCATTER_COLUMNS,
        [p.to_obj() for p in points],
        meta={'bound': args.bound, 'total': len(points)},
        trailer=['total={}'.format(len(points))],
    )

_COMMANDS = {
    'classify': _cmd_classify,
    'census': _cmd_census,
    'estimate': _cmd_estimate,
    'pi3': _cmd_pi3,
    'table': _cmd_table,
    'find-quotient': _cmd_find_quotient,
    'approximate': _cmd_approximate,
    'scatter': _cmd_scatter,
}

def _add_global_args(parser, suppress: bool):
    ''' Global flags, accepted before or after the subcommand.
    Subcommand copies default to SUPPRESS so they do not
    overwrite values given before the subcommand.
    '''
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument('--threads', type=int, default=default(None),
        help='Worker processes for census scans and sieving (default: all cores).')
    parser.add_argument('--budget', type=int, default=default(DEFAULT_BUDGET),
        help='Maximum lattice points a single scan may visit.')
    parser.add_argument('--segment-size', type=int, default=default(DEFAULT_SEGMENT_SIZE),
        help='Sieve segment length.')
    parser.add_argument('-f', '--format', choices=['csv', 'json'], default=default('csv'),
        help='Format of the output.')
    parser.add_argument('--quadrature-tol', type=float, default=default(DEFAULT_TOLERANCE),
        help='Relative tolerance of the log-integral quadrature.')
    parser.add_argument('--max-iterations', type=int, default=default(DEFAULT_MAX_ITERATIONS),
        help='Iteration cap of the quotient search.')
    parser.add_argument('-o', '--output', default=default(None),
        help='Output file to save to.')
    parser.add_argument('-q', '--quiet', action='store_true', default=default(False),
        help='Do not show progress spinners.')

def _add_sector_args(parser):
    parser.add_argument('--alpha', required=True,
        help='Lower angle, e.g. pi/31415, 2pi/47, pi, or decimal radians.')
    parser.add_argument('--beta', required=True,
        help='Upper angle, same grammar as --alpha.')

def _parse_args(argv):
    parser = _ArgumentParser(prog='gaussquot',
        description='gaussquot - Gaussian prime censuses in sectors and explicit quotients of Gaussian primes.')
    _add_global_args(parser, suppress=False)

    subparsers = parser.add_subparsers(dest='command', metavar='command', parser_class=_ArgumentParser)
    subparsers.required = True

    def add(name, help):
        sub = subparsers.add_parser(name, help=help, description=help)
        _add_global_args(sub, suppress=True)
        return sub

    classify_parser = add('classify', 'Classify a Gaussian integer a+bi.')
    classify_parser.add_argument('a', type=int)
    classify_parser.add_argument('b', type=int)

    census_parser = add('census', 'Count Gaussian primes with |z| < rho in a sector.')
    _add_sector_args(census_parser)
    census_parser.add_argument('--rho', type=Fraction, required=True,
        help='Magnitude bound (strict).')

    estimate_parser = add('estimate', 'Main-term estimate of Gaussian primes with norm <= u in a sector.')
    _add_sector_args(estimate_parser)
    estimate_parser.add_argument('--u', type=float, required=True,
        help='Norm bound, at least 2.')

    pi3_parser = add('pi3', 'Count primes = 3 (mod 4) up to x.')
    pi3_parser.add_argument('x', type=int)

    table_parser = add('table', 'Census table for a fixed sector and a list of radii.')
    table_parser.add_argument('table', choices=['fig2a', 'fig2b', 'custom'])
    table_parser.add_argument('--caption-mode', choices=[str(m) for m in CaptionMode],
        default=str(CaptionMode.DERIVED_WIDTH),
        help='fig2a sector: [pi/47, 2pi/47] (derived-width) or [pi/24, 2pi/47] (printed-caption).')
    table_parser.add_argument('--spec',
        help='JSON file with alpha, beta and rho for the custom table.')
    table_parser.add_argument('--compare', action='store_true',
        help='Add the published N and K and the differences to each row.')
    table_parser.add_argument('--rho-max', type=Fraction,
        help='Skip rows with a larger rho.')

    quotient_parser = add('find-quotient', 'Find a quotient of Gaussian primes in an annular sector.')
    _add_sector_args(quotient_parser)
    quotient_parser.add_argument('--r', dest='r', type=float, required=True,
        help='Inner magnitude.')
    quotient_parser.add_argument('--R', dest='R', type=float, required=True,
        help='Outer magnitude.')

    approximate_parser = add('approximate', 'Find a quotient of Gaussian primes within eps of re+im*i.')
    approximate_parser.add_argument('--re', type=float, required=True)
    approximate_parser.add_argument('--im', type=float, required=True)
    approximate_parser.add_argument('--eps', type=float, required=True)

    scatter_parser = add('scatter', 'List Gaussian primes with |a|,|b| <= bound.')
    scatter_parser.add_argument('bound', type=int)
    scatter_parser.add_argument('--png',
        help='Also draw the primes to this image file.')

    return parser.parse_args(argv)

def _cli_config(args) -> CliConfig:
    kwargs: Dict[str, Any] = dict(
        workload_budget=args.budget,
        sieve_segment_size=args.segment_size,
        output_format=OutputFormat(args.format),
        quadrature_tol=args.quadrature_tol,
        max_iterations=args.max_iterations,
    )
    if args.threads is not None:
        kwargs['threads'] = args.threads
    return CliConfig(**kwargs)

def _output(args, text: str):
    if args.output:
        try:
            with open(args.output, 'w') as f:
                write_payload(text, f)
        except OSError as e:
            raise PreconditionError('Cannot write {}: {}'.format(args.output, e))
    else:
        write_payload(text, sys.stdout)

def main(argv: Optional[List[str]] = None) -> int:
    args = _parse_args(sys.argv[1:] if argv is None else argv)
    set_disabled(args.quiet or not sys.stdout.isatty())

    try:
        config = _cli_config(args)
        _output(args, _COMMANDS[args.command](args, config))
    except GaussQuotError as e:
        print('Error: {}'.format(e), file=sys.stderr)
        return e.exit_code

    return 0
