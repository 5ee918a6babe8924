#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
One function per subcommand. Each takes the parsed arguments and a
`pyhindman.workbench.Workbench` and returns a `Report`: the exit status and
`key: value` lines in a fixed order, starting with the command and the policy.
"""

from pyhindman import constants
from pyhindman.cli import coloring_io, parsers
from pyhindman.commons import exceptions
from pyhindman.commons.databoxes import Coloring, FipPolicy
from pyhindman.commons.enums import CommandEnum, SideEnum
from pyhindman.family import family as fam
from pyhindman.setexpr import natset, sums
from pyhindman.utils import strings

BUILTIN_FAMILIES = ('frechet', 'trivial', 'evens', 'odds')


class Report:
    """
    A command's textual report

    :param command: a `pyhindman.commons.enums.CommandEnum` value
    :type command: str
    :param policy: the policy in force, echoed first
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    """
    def __init__(self, command, policy):
        assert isinstance(policy, FipPolicy)
        self.status = constants.EXIT_OK
        self.lines = []
        self.add('command', command)
        for key, value in policy.to_dict().items():
            self.add('policy.%s' % key, value)

    def add(self, key, value):
        if isinstance(value, bool):
            value = str(value).lower()
        elif value is None:
            value = '-'
        self.lines.append('%s: %s' % (key, value))
        return self

    def text(self):
        return '\n'.join(self.lines) + '\n'

    def __repr__(self):
        return "<%s.%s - status=%d, lines=%d>" % (__name__, self.__class__.__name__, self.status, len(self.lines))


def builtin_family(name):
    """
    :param name: one of `BUILTIN_FAMILIES`
    :type name: str
    :returns: a `pyhindman.family.family.Family`
    """
    if name == 'frechet':
        return fam.frechet_family()
    if name == 'trivial':
        return fam.trivial_family()
    if name == 'evens':
        return fam.Family(generators=[natset.evens()], provenance=['evens'])
    if name == 'odds':
        return fam.Family(generators=[natset.odds()], provenance=['odds'])
    raise ValueError('Unknown builtin family: %s' % name)


def _sequence(text):
    return strings.increasing_naturals(strings.parse_int_list(text), positive=True)


def _add_tilde(report, key, result):
    report.add('%s.verdict' % key, result.verdict)
    report.add('%s.witness' % key, ' '.join(result.labels) if result.labels else None)
    if result.counterexample is not None:
        report.add('%s.counterexample' % key, result.counterexample)


def _add_fip(report, key, result):
    report.add('%s.verdict' % key, result.verdict)
    if result.witnesses:
        part = result.witnesses[0]
        report.add('%s.part' % key, ' '.join(part.labels) if part.labels else '()')
        report.add('%s.count' % key, part.count)
        report.add('%s.max' % key, part.max_element)


def _add_diagnostics(report, diagnostics):
    report.add('search.nodes', diagnostics.nodes_expanded)
    report.add('search.max_depth', diagnostics.max_depth)
    report.add('search.closures', len(diagnostics.closure_log))
    report.add('search.unclosed', len(diagnostics.unclosed))


def run_fs(args, workbench):
    S = _sequence(args.set)
    report = Report(CommandEnum.FS, workbench.policy)
    report.add('S', strings.format_int_list(S))
    report.add('FS', '%s / NS: %s' % (strings.format_int_list(sums.fs_values(S)),
                                        strings.format_int_list(sums.ns_values(S))))
    return report


def run_decide(args, workbench):
    A = parsers.parse_predicate(args.pred)
    decision = workbench.decide(A, args.size)
    report = Report(CommandEnum.DECIDE, workbench.policy)
    report.add('set', A)
    report.add('size', args.size)
    report.add('side', decision.side)
    if decision.side == SideEnum.A:
        report.add('witness', strings.format_int_list(decision.witness.S))
        report.add('ns', strings.format_int_set(decision.witness.ns))
        report.add('ns_contained', decision.witness.contained)
        for step in decision.outcome.path:
            report.add('path.%d' % step.i, 's=%d F=%s' % (step.s, strings.format_int_set(step.F)))
        _add_tilde(report, 'certificate.A', decision.certificate)
    else:
        _add_fip(report, 'certificate.refutation', decision.outcome.certificate)
        _add_tilde(report, 'certificate.complement', decision.certificate)
    report.add('family.generators', len(decision.family.generators))
    report.add('family.schemas', len(decision.family.schemas))
    _add_diagnostics(report, decision.outcome.diagnostics)
    return report


def _coloring_from(args, workbench):
    if args.coloring is not None:
        return coloring_io.load_coloring(args.coloring)
    classes = parsers.parse_predicates(args.classes)
    return Coloring.symbolic(classes, workbench.policy.bound)


def run_hindman(args, workbench):
    coloring = _coloring_from(args, workbench)
    report = Report(CommandEnum.HINDMAN, workbench.policy)
    report.add('colors', coloring.k)
    report.add('domain', coloring.N)
    report.add('size', args.size)
    witness = workbench.hindman(coloring, args.size)
    report.add('witness', strings.format_int_list(witness.S))
    report.add('color', witness.color)
    report.add('ns', strings.format_int_set(witness.ns))
    report.add('contained', witness.contained)
    report.add('source', witness.source)
    return report


def run_iterated(args, workbench):
    As = parsers.parse_predicates(args.preds)
    witness, V = workbench.iterated(As, args.size)
    report = Report(CommandEnum.ITERATED, workbench.policy)
    report.add('sets', len(As))
    report.add('size', args.size)
    report.add('witness', strings.format_int_list(witness.S))
    report.add('signs', ' '.join('%+d' % b for b in witness.signs))
    for cert in witness.suffixes:
        report.add('suffix.%d' % cert.i, '%s in %sA_%d: %s' % (
            strings.format_int_set(cert.ns), '' if cert.sign > 0 else '-', cert.i, str(cert.contained).lower()))
    for i, cert in enumerate(witness.certificates):
        _add_tilde(report, 'certificate.%d' % i, cert)
    report.add('family.schemas', len(V.schemas))
    return report


def run_oracle_minbound(args, workbench):
    result = workbench.forcing_bound(args.colors, args.size, args.max, symmetry=not args.no_symmetry)
    report = Report(CommandEnum.ORACLE_MINBOUND, workbench.policy)
    report.add('colors', args.colors)
    report.add('size', args.size)
    report.add('max', args.max)
    report.add('bound', result.bound if result.bound is not None else 'none up to %d' % args.max)
    report.add('extremal', result.to_dict()['extremal'])
    extremal = result.extremal_coloring()
    if extremal is not None:
        for color in range(1, extremal.k + 1):
            report.add('extremal.C_%d' % color, strings.format_int_set(extremal.class_set(color).elements))
    return report


def run_verify(args, workbench):
    S = _sequence(args.witness)
    ns = strings.format_int_set(sums.ns_values(S))
    if args.coloring is not None:
        target = coloring_io.load_coloring(args.coloring)
        if args.color is None:
            raise ValueError('--color is required with --coloring')
        name = 'C_%d' % args.color
    else:
        target = parsers.parse_predicate(args.pred)
        name = 'A'
    report = Report(CommandEnum.VERIFY, workbench.policy)
    if workbench.verify(target, S, args.color):
        report.add('verified', 'NS=%s ⊆ %s' % (ns, name))
    else:
        report.add('refuted', 'NS=%s ⊈ %s' % (ns, name))
        report.status = constants.EXIT_NO_WITNESS
    return report


def run_check_family(args, workbench):
    U = builtin_family(args.builtin)
    report = Report(CommandEnum.CHECK_FAMILY, workbench.policy)
    report.add('family', args.builtin)
    fip = workbench.fip(U)
    _add_fip(report, 'fip', fip)
    semigroup = workbench.semigroup(U)
    report.add('semigroup.verdict', semigroup.verdict)
    for entry in semigroup.entries:
        report.add('semigroup.%s' % entry.label, entry.verdict)
    return report


COMMANDS = {
    CommandEnum.FS: run_fs,
    CommandEnum.DECIDE: run_decide,
    CommandEnum.HINDMAN: run_hindman,
    CommandEnum.ITERATED: run_iterated,
    CommandEnum.ORACLE_MINBOUND: run_oracle_minbound,
    CommandEnum.VERIFY: run_verify,
    CommandEnum.CHECK_FAMILY: run_check_family}


def failure_report(command, policy, error):
    """
    Report for a search that ended without a result: exit 2 for
    `NoWitnessAtBound`, 3 otherwise

    """
    report = Report(command, policy)
    report.add('outcome', error.__class__.__name__)
    report.add('reason', str(error))
    if isinstance(error, exceptions.NoWitnessAtBound):
        report.add('oracle_confirmed', error.oracle_confirmed)
        report.status = constants.EXIT_NO_WITNESS
    else:
        report.status = constants.EXIT_BUDGET_EXHAUSTED
        if isinstance(error, exceptions.BudgetExhausted) and error.diagnostics is not None:
            _add_diagnostics(report, error.diagnostics)
    return report
