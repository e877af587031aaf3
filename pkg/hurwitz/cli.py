'''Command line interface of hurwitz.

Exit status: 0 on success (including a datum found *not* realizable), 2 on
invalid input, 3 if a search ran out of budget before it could decide.
Reports go to standard output, log messages to standard error.

'''
import argparse
import collections
import json
import logging
import os
import sys

from hurwitz import __version__, exc, reports
from hurwitz.branch_datum import BranchDatum
from hurwitz.complexity import (
    DEFAULT_D_CAP,
    hyperelliptic_witness,
    m_min_search,
    simple_complexity_search,
)
from hurwitz.partitions import iter_partition_multisets
from hurwitz.realizability import DEFAULT_BUDGET, Status, find_monodromy

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID_INPUT = 2
EXIT_BUDGET_EXHAUSTED = 3

BUDGET_ENV_VAR = 'HURWITZ_BUDGET'

_INPUT_ERRORS = (
    exc.InvalidInputError,
    exc.NoValidGenusError,
    exc.NonHyperbolicError,
    exc.OutOfTheoremRangeError,
    exc.OracleScopeError,
)

_Multiset = collections.namedtuple('_Multiset', 'degree partitions')


# Argument handling ###########################################################

def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        msg = 'expected a positive integer, got {!r}'.format(text)
        raise argparse.ArgumentTypeError(msg)
    return value


def _non_negative_int(text):
    try:
        value = int(text)
    except ValueError:
        value = -1
    if value < 0:
        msg = 'expected a non-negative integer, got {!r}'.format(text)
        raise argparse.ArgumentTypeError(msg)
    return value


def build_parser():
    '''Return the :class:`argparse.ArgumentParser` of the ``hurwitz`` tool.'''
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true',
                        help='print machine readable JSON')
    common.add_argument('--budget', type=_positive_int, default=None,
                        help='node budget per realizability search '
                             '(default: ${} or {})'.format(BUDGET_ENV_VAR,
                                                           DEFAULT_BUDGET))
    common.add_argument('--workers', type=_positive_int, default=1,
                        help='number of worker processes per search')
    common.add_argument('--d-cap', type=_positive_int, default=DEFAULT_D_CAP,
                        help='largest degree tried by simple-complexity')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (repeat for debug output)')
    common.add_argument('-q', '--quiet', action='store_true',
                        help='only log errors')

    datum_args = argparse.ArgumentParser(add_help=False)
    datum_args.add_argument('datum_file', nargs='?',
                            help='JSON file holding the branch datum')
    datum_args.add_argument('--datum', dest='datum_json',
                            help='the branch datum as inline JSON')

    genus_args = argparse.ArgumentParser(add_help=False)
    genus_args.add_argument('genus', type=int,
                            help='genus of the surface (at least 1)')

    parser = argparse.ArgumentParser(
        prog='hurwitz',
        description='Realizability of branch data and exact complexities of '
                    'closed orientable surfaces.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    sub.add_parser('check', parents=[common, datum_args],
                   help='compatibility, simplicity and implied genus')
    sub.add_parser('realize', parents=[common, datum_args],
                   help='search a monodromy witness for a datum')
    sub.add_parser('simple-complexity', parents=[common, genus_args],
                   help='simple complexity: formula and search')
    sub.add_parser('complexity', parents=[common, genus_args],
                   help='complexity via the minimal total length')
    sub.add_parser('witness-hyperelliptic', parents=[common, genus_args],
                   help='the hyperelliptic double cover')
    enumerate_parser = sub.add_parser(
        'enumerate', parents=[common],
        help='stream all multisets of n branching partitions of d with '
             'total length m')
    enumerate_parser.add_argument('d', type=_positive_int)
    enumerate_parser.add_argument('n', type=_non_negative_int)
    enumerate_parser.add_argument('m', type=_non_negative_int)
    return parser


def resolve_budget(args, environ=None):
    '''Return the node budget: ``--budget``, else $HURWITZ_BUDGET, else the
    default.

    Raises:
        InvalidInputError: If the environment variable is no positive
            integer.

    '''
    if args.budget is not None:
        return args.budget
    environ = os.environ if environ is None else environ
    text = environ.get(BUDGET_ENV_VAR)
    if text is None:
        return DEFAULT_BUDGET
    try:
        return _positive_int(text)
    except argparse.ArgumentTypeError as e:
        msg = '${}: {}'.format(BUDGET_ENV_VAR, e)
        raise exc.InvalidInputError(msg) from e


def load_datum(args):
    '''Return the :class:`BranchDatum` given by file or ``--datum``.

    Raises:
        InvalidInputError: If neither or both sources are given, the file
            can't be read or the JSON is malformed.

        InvalidDatumError: If the JSON does not describe a valid datum.

    '''
    if (args.datum_file is None) == (args.datum_json is None):
        msg = 'Give the datum either as a file or via --datum.'
        raise exc.InvalidInputError(msg)
    try:
        if args.datum_json is not None:
            obj = json.loads(args.datum_json)
        else:
            with open(args.datum_file, encoding='utf-8') as f:
                obj = json.load(f)
    except OSError as e:
        raise exc.InvalidInputError(str(e)) from e
    except ValueError as e:
        msg = 'Malformed JSON: {}'.format(e)
        raise exc.InvalidInputError(msg) from e
    return BranchDatum.from_mapping(obj)


def configure_logging(args):
    '''Send log records to standard error at the requested verbosity.'''
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


# Commands ####################################################################
#
# Every command returns a triple (document, text, exit status). The document
# is printed as JSON with --json, the text otherwise.

def _yes_no(flag):
    return 'yes' if flag else 'no'


def _cmd_check(args):
    datum = load_datum(args)
    doc = reports.CheckReportSchema().dump(datum)
    implied = doc['implied_genus']
    text = '\n'.join([
        'datum: {}'.format(datum),
        'compatible: {}'.format(_yes_no(doc['compatible'])),
        'simple: {}'.format(_yes_no(doc['simple'])),
        'total length m: {}'.format(doc['total_length']),
        'implied genus: {}'.format('none' if implied is None else implied),
    ])
    return doc, text, EXIT_OK


def _cmd_realize(args):
    datum = load_datum(args)
    result = find_monodromy(datum, budget=resolve_budget(args),
                            workers=args.workers)
    doc = reports.RealizabilityResultSchema().dump(result)
    lines = [
        'datum: {}'.format(datum),
        'status: {}'.format(result.status.value),
        'nodes explored: {}'.format(result.nodes_explored),
    ]
    if result.witness is not None:
        lines.append('witness:')
        lines.extend('  {}'.format(list(p)) for p in result.witness)
    status = (EXIT_BUDGET_EXHAUSTED if result.status is Status.UNKNOWN else
              EXIT_OK)
    return doc, '\n'.join(lines), status


def _report_lines(report):
    return [
        'genus: {}'.format(report.genus),
        'complexity: {}'.format(report.value),
        'achieved by: {}'.format(report.achieved_by),
        'degree: {}, total length m: {}'.format(report.d_min, report.m_min),
        'minimal: {}'.format(_yes_no(report.minimal)),
    ]


def _cmd_simple_complexity(args):
    report = simple_complexity_search(args.genus, d_cap=args.d_cap,
                                      budget=resolve_budget(args),
                                      workers=args.workers)
    doc = reports.SimpleComplexityReportSchema().dump(report)
    lines = _report_lines(report)
    lines.append('formula 8πg: {}π'.format(doc['formula']['pi_coeff']))
    if not doc['formula_matches']:
        logger.error('search and formula disagree for genus %d',
                     args.genus)
        return doc, '\n'.join(lines), EXIT_FAILURE
    status = EXIT_OK if report.minimal else EXIT_BUDGET_EXHAUSTED
    return doc, '\n'.join(lines), status


def _cmd_complexity(args):
    report = m_min_search(args.genus, budget=resolve_budget(args),
                          workers=args.workers)
    doc = reports.ComplexityReportSchema().dump(report)
    status = EXIT_OK if report.minimal else EXIT_BUDGET_EXHAUSTED
    return doc, '\n'.join(_report_lines(report)), status


def _cmd_witness_hyperelliptic(args):
    pair = hyperelliptic_witness(args.genus)
    doc = reports.HyperellipticSchema().dump(pair)
    text = '\n'.join([
        'datum: {}'.format(pair[0]),
        'witness: {} x {}'.format(len(pair[1]), list(pair[1].perms[0])),
        'verified: {}'.format(_yes_no(doc['verified'])),
    ])
    return doc, text, EXIT_OK


def _cmd_enumerate(args):
    schema = reports.DatumSchema(only=['degree', 'partitions'])
    count = 0
    for partitions in iter_partition_multisets(args.d, args.n, args.m):
        count += 1
        if args.json:
            doc = schema.dump(_Multiset(args.d, partitions))
            print(json.dumps(doc, ensure_ascii=False))
        else:
            print(' '.join(str(p) for p in partitions))
    logger.info('%d multisets', count)
    return None, None, EXIT_OK


_COMMANDS = {
    'check': _cmd_check,
    'realize': _cmd_realize,
    'simple-complexity': _cmd_simple_complexity,
    'complexity': _cmd_complexity,
    'witness-hyperelliptic': _cmd_witness_hyperelliptic,
    'enumerate': _cmd_enumerate,
}


def run(argv=None):
    '''Run the ``hurwitz`` tool and return its exit status.

    Args:
        argv: The command line arguments (without the program name). Defaults
            to ``sys.argv[1:]``.

    '''
    args = build_parser().parse_args(argv)
    configure_logging(args)
    try:
        doc, text, status = _COMMANDS[args.command](args)
    except _INPUT_ERRORS as e:
        logger.error('%s', e)
        return EXIT_INVALID_INPUT
    except exc.SearchExhaustedError as e:
        logger.error('%s', e)
        return EXIT_BUDGET_EXHAUSTED

    if doc is not None:
        if args.json:
            print(json.dumps(doc, indent=2, ensure_ascii=False))
        else:
            print(text)
    return status


def main():
    sys.exit(run())
