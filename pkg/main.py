#!/usr/bin/env python3
"""
GridCount - counts set partitions of an m x n grid up to the symmetries
of the rectangle (identity, row reflection, column reflection, half-turn).

Subcommands:
  count <m> <n>   B, H, V, R, S, L, C for one grid
  table           the same for every non-square grid up to --max-cells
  verify          formulas vs exhaustive enumeration vs published values
  series <id>     factorial-scaled coefficients of a generating function

Exit codes: 0 ok, 1 usage error, 2 formula/oracle mismatch.
"""

import argparse
import logging
import sys

# Force line-buffered output so progress and results interleave sanely
# when piped.
if hasattr(sys.stdout, 'reconfigure'):
    sys.stdout.reconfigure(line_buffering=True)
if hasattr(sys.stderr, 'reconfigure'):
    sys.stderr.reconfigure(line_buffering=True)

import errata_auditor
import partition_counter as pc
import report_writer
import series_engine as se
from config import config, debug_print
from errors import GridCountError, InternalConsistencyError, ShapeError
from grid_symmetry import GridShape
from partition_oracle import oracle_cap

EXIT_OK       = 0
EXIT_USAGE    = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; 2 is reserved for mismatches here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f'{self.prog}: error: {message}', file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument('--format', choices=report_writer.FORMATS, default='text')
    common.add_argument('--max-cells', type=int, default=None,
                        help='largest cell count for table/verify')
    common.add_argument('--jobs', type=int, default=None,
                        help='worker processes for exhaustive enumeration')
    common.add_argument('--unsafe-cells', type=int, default=None,
                        help='raise the enumeration cap (at most 15)')
    common.add_argument('--debug', action='store_true')

    parser = _Parser(prog='gridcount', description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True

    p = sub.add_parser('count', parents=[common], help='counts for one grid')
    p.add_argument('m', type=int)
    p.add_argument('n', type=int)

    p = sub.add_parser('table', parents=[common], help='counts for every grid up to --max-cells')
    p.add_argument('--include-squares', action='store_true')

    p = sub.add_parser('verify', parents=[common], help='audit formulas against enumeration')
    p.add_argument('--against-paper', action='store_true',
                   help='also compare with the published values in data/paper_table.json')

    p = sub.add_parser('series', parents=[common], help='dump generating function coefficients')
    p.add_argument('series_id', choices=sorted(pc.GENERATING_FUNCTIONS))
    p.add_argument('--order', type=int, default=None, help='truncation order for every variable')
    p.add_argument('--orders', default=None, help='comma-separated order per variable')
    return parser


# ── Commands ──────────────────────────────────────────────────
def cmd_count(args):
    shape = GridShape(args.m, args.n)
    if shape.is_square:
        print(f'warning: {shape}: {report_writer.SQUARE_NOTE}', file=sys.stderr)
    report = pc.count_report(shape)
    print(report_writer.render_report(report, args.format))
    return EXIT_OK


def cmd_table(args):
    bound = int(config.get('table.max_cells', 30))
    max_cells = bound if args.max_cells is None else args.max_cells
    if not 1 <= max_cells <= bound:
        raise UsageError(f'--max-cells must be between 1 and {bound} for table')
    shapes = [s for s in errata_auditor.shapes_up_to(max_cells)
              if args.include_squares or not s.is_square]
    reports = [pc.count_report(s) for s in shapes]
    print(report_writer.render_table(reports, args.format))
    return EXIT_OK


def cmd_verify(args):
    max_cells = args.max_cells if args.max_cells is not None else int(config.get('verify.max_cells', 10))
    if max_cells < 1:
        raise UsageError('--max-cells must be >= 1')
    cap = oracle_cap(args.unsafe_cells)
    findings, tripwires = errata_auditor.audit(
        max_cells, against_paper=args.against_paper, cap=cap, jobs=args.jobs)
    print(report_writer.render_findings(findings, tripwires, args.format))
    if errata_auditor.has_formula_bug(findings):
        return EXIT_MISMATCH
    return EXIT_OK


def _series_orders(args, gf):
    if args.orders is not None:
        try:
            orders = tuple(int(x) for x in args.orders.split(','))
        except ValueError:
            raise UsageError(f'--orders must be comma-separated integers, got {args.orders!r}')
        if len(orders) != len(gf.vars):
            raise UsageError(f'{gf.key} has variables {", ".join(gf.vars)}; '
                             f'give {len(gf.vars)} orders')
    else:
        order = 6 if args.order is None else args.order
        orders = (order,) * len(gf.vars)

    cap = int(config.get('tables.cap', 64))
    limit = int(config.get('series.max_coefficients', 5000))
    size = 1
    for o in orders:
        if not 0 <= o <= cap:
            raise UsageError(f'orders must be between 0 and {cap}')
        size *= o + 1
    if size > limit:
        raise UsageError(f'{size} coefficients requested; the limit is {limit}')
    return orders


def cmd_series(args):
    gf = pc.GENERATING_FUNCTIONS[args.series_id]
    orders = _series_orders(args, gf)
    series = gf.series(orders)
    grid = se.egf_grid(series)
    print(report_writer.render_series(gf, series, grid, args.format))
    return EXIT_OK


COMMANDS = {
    'count':  cmd_count,
    'table':  cmd_table,
    'verify': cmd_verify,
    'series': cmd_series,
}


def _configure(args):
    if args.debug:
        config.set('debug', True)
    if args.jobs is not None and args.jobs < 1:
        raise UsageError('--jobs must be >= 1')
    if args.unsafe_cells is not None:
        hard = int(config.get('oracle.hard_cap', 15))
        if not 0 <= args.unsafe_cells <= hard:
            raise UsageError(f'--unsafe-cells must be between 0 and {hard}')

    # Progress goes to stderr; stdout carries results only.
    logging.basicConfig(stream=sys.stderr, format='%(message)s')
    logging.getLogger('gridcount.verify').setLevel(logging.INFO if args.command == 'verify'
                                                   else logging.WARNING)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        _configure(args)
        debug_print(f'command: {args.command}')
        return COMMANDS[args.command](args)
    except (UsageError, ShapeError) as e:
        print(f'gridcount: error: {e}', file=sys.stderr)
        return EXIT_USAGE
    except InternalConsistencyError as e:
        print(f'gridcount: internal consistency failure: {e}', file=sys.stderr)
        return EXIT_MISMATCH
    except GridCountError as e:
        print(f'gridcount: {e}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
