#!/usr/bin/env python
# -*- coding: utf-8 -*-

import argparse
import logging
import sys

from pyhindman import constants
from pyhindman.__version__ import __version__
from pyhindman.cli import commands
from pyhindman.commons import exceptions
from pyhindman.commons.enums import CommandEnum
from pyhindman.utils import config as cfg
from pyhindman.utils import strings
from pyhindman.workbench import Workbench

logger = logging.getLogger(__name__)

POLICY_FLAGS = (
    ('bound', 'bound', int, 'evaluation bound B'),
    ('count', 'min_count', int, 'least part size t'),
    ('tail', 'tail_fraction', float, 'tail fraction tau'),
    ('fmax', 'max_part_size', int, 'largest index set size f_max'),
    ('inst', 'instance_bound', int, 'schema instance bound d'))

SEARCH_FLAGS = (
    ('max-nodes', 'max_nodes', int, 'search node budget'),
    ('max-element', 'max_element', int, 'largest sequence entry tried'))

INPUT_ERRORS = (exceptions.ExpressionError, exceptions.ColoringFormatError, exceptions.DomainError,
                exceptions.ConfigurationError, exceptions.FamilyError, ValueError)

SEARCH_FAILURES = (exceptions.SearchError, exceptions.LemmaError)


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError('%s is not a positive integer' % text)
    return value


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON configuration file; flags override it')
    common.add_argument('--jobs', type=_positive, help='worker processes')
    common.add_argument('--verbose', action='store_true', help='log progress on stderr')
    for flag, key, kind, text in POLICY_FLAGS + SEARCH_FLAGS:
        common.add_argument('--%s' % flag, dest=key, type=kind, help=text)
    return common


def build_parser():
    """
    :returns: the `argparse.ArgumentParser` of the command line
    """
    common = _common_parser()
    parser = argparse.ArgumentParser(prog='pyhindman', description='Bounded finite-sums machinery for Hindman\'s theorem')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser(CommandEnum.FS, parents=[common], help='print FS(S) and NS(S)')
    p.add_argument('--set', required=True, help='the sequence, eg. "1,2,4"')

    p = sub.add_parser(CommandEnum.DECIDE, parents=[common], help='decide a set or its complement')
    p.add_argument('--pred', required=True, help='predicate DSL for the set')
    p.add_argument('--size', required=True, type=_positive, help='witness length m')

    p = sub.add_parser(CommandEnum.HINDMAN, parents=[common], help='monochromatic finite-sums witness')
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('--coloring', help='coloring file')
    source.add_argument('--classes', help='color classes as predicates separated by ";"')
    p.add_argument('--size', required=True, type=_positive, help='witness length m')

    p = sub.add_parser(CommandEnum.ITERATED, parents=[common], help='iterated decision of several sets')
    p.add_argument('--preds', required=True, help='predicates separated by ";"')
    p.add_argument('--size', required=True, type=_positive, help='least witness length m')

    p = sub.add_parser(CommandEnum.ORACLE_MINBOUND, parents=[common], help='least N forcing a witness')
    p.add_argument('--colors', required=True, type=_positive, help='number of colors k')
    p.add_argument('--size', required=True, type=_positive, help='witness length m')
    p.add_argument('--max', required=True, type=_positive, help='largest N examined')
    p.add_argument('--no-symmetry', action='store_true', help='do not prune relabeled colorings')

    p = sub.add_parser(CommandEnum.VERIFY, parents=[common], help='check NS(S) inside a color class or a set')
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument('--coloring', help='coloring file')
    target.add_argument('--pred', help='predicate DSL for the set')
    p.add_argument('--witness', required=True, help='the sequence, eg. "2,4"')
    p.add_argument('--color', type=_positive, help='the color class, with --coloring')

    p = sub.add_parser(CommandEnum.CHECK_FAMILY, parents=[common], help='fip and semigroup reports')
    p.add_argument('--builtin', required=True, choices=commands.BUILTIN_FAMILIES)
    return parser


def configuration_from(args):
    """
    The configuration of a run: the --config file (or the defaults) with
    explicit flags applied on top

    :returns: the configuration `dict`
    """
    config = cfg.get_config_from(args.config) if args.config else cfg.get_default_config()
    for _, key, _, _ in POLICY_FLAGS:
        if getattr(args, key) is not None:
            config['policy'][key] = getattr(args, key)
    for _, key, _, _ in SEARCH_FLAGS:
        if getattr(args, key) is not None:
            config['search'][key] = getattr(args, key)
    if args.jobs is not None:
        config['workers']['jobs'] = args.jobs
    return config


def run(argv=None):
    """
    Runs a command line and returns its exit status and report text; input
    errors give an empty report and a message

    :param argv: the arguments, without the program name
    :type argv: list of str
    :returns: tuple (int, str, str): status, stdout text, stderr text
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    workbench = None
    try:
        workbench = Workbench(configuration_from(args))
        report = commands.COMMANDS[args.command](args, workbench)
    except SEARCH_FAILURES as e:
        logger.info('%s ended without a result: %s', args.command, strings.describe_exception(e))
        report = commands.failure_report(args.command, workbench.policy, e)
    except INPUT_ERRORS as e:
        return constants.EXIT_INPUT_ERROR, '', 'pyhindman: error: %s\n' % strings.describe_exception(e)
    return report.status, report.text(), ''


def main(argv=None):
    try:
        status, out, err = run(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors
        return constants.EXIT_INPUT_ERROR if e.code not in (0, None) else constants.EXIT_OK
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == '__main__':
    sys.exit(main())
