#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Bounded semi-decisions over families: the finite intersection property,
"X is decided by U" and "X is decided by U+V". Every verdict holds at the
policy it was computed under.
"""

import logging

import numpy as np

from pyhindman.commons.databoxes import FipPolicy
from pyhindman.commons.enums import VerdictEnum
from pyhindman.family import family as fam
from pyhindman.family.index_sets import TildeIndexSet
from pyhindman.family.parts import pack
from pyhindman.family.reports import FipReport, PartWitness, TildeResult
from pyhindman.setexpr import natset

logger = logging.getLogger(__name__)


def _witness(U, table, F, policy):
    count, max_element = table.describe(F)
    return PartWitness(F, U.labels_of(F, policy), count, max_element)


def bounded_fip(U, policy):
    """
    Checks every part U_F with |F| <= f_max on [0, B): the family is verified
    when each part has at least t elements and reaches the tail window, refuted
    when some part (free of finite shadows) is thin, unknown otherwise.

    :param U: the family
    :type U: `pyhindman.family.family.Family`
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :returns: a `pyhindman.family.reports.FipReport`
    """
    assert isinstance(U, fam.Family)
    assert isinstance(policy, FipPolicy)
    table = U.part_table(policy)
    if 'fip' in table.memo:
        return table.memo['fip']

    def thin_real(rows, real):
        return table.thin(rows) & real

    def not_alive(rows, real):
        return ~table.alive(rows)

    F = table.shortlex_least(thin_real)
    if F is not None:
        report = FipReport(VerdictEnum.REFUTED, [_witness(U, table, F, policy)], policy)
    else:
        F = table.shortlex_least(not_alive)
        if F is None:
            report = FipReport(VerdictEnum.VERIFIED, [], policy)
        else:
            report = FipReport(VerdictEnum.UNKNOWN, [_witness(U, table, F, policy)], policy)
    logger.debug('fip of %r: %s', U, report.verdict)
    table.memo['fip'] = report
    return report


def thin_part_with(U, A, policy):
    """
    Shortlex-least F over the items of U such that U_F meets A in a thin set
    (fewer than t elements, none in the tail window); None when there is none

    :returns: tuple of int or None
    """
    table = U.part_table(policy)
    target = pack(A.mask(policy.bound))

    def thin_with_a(rows, real):
        return table.thin(rows & target) & real

    return table.shortlex_least(thin_with_a)


def tilde_in(X, U, policy):
    """
    Looks for the shortlex-least F with U_F nonempty and contained in X on
    [0, B). Refuted when no part is empty below B and each one has an element
    outside X.

    :param X: the set
    :type X: `pyhindman.setexpr.natset.NatSet`
    :param U: the family
    :type U: `pyhindman.family.family.Family`
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :returns: a `pyhindman.family.reports.TildeResult`
    """
    assert isinstance(X, natset.NatSet)
    assert isinstance(U, fam.Family)
    table = U.part_table(policy)
    target = pack(X.mask(policy.bound))
    outside = np.bitwise_not(target)

    def inside(rows, real):
        return rows.any(axis=1) & ~(rows & outside).any(axis=1)

    F = table.shortlex_least(inside)
    if F is not None:
        return TildeResult(VerdictEnum.VERIFIED, F, U.labels_of(F, policy), None, policy)
    counterexample = int(np.flatnonzero(~X.mask(policy.bound))[0])
    if table.has_empty_part():
        return TildeResult(VerdictEnum.UNKNOWN, None, [], counterexample, policy)
    return TildeResult(VerdictEnum.REFUTED, None, [], counterexample, policy)


def recheck_tilde(X, U, result, policy):
    """
    Re-verifies a verified `TildeResult` directly from the set expressions:
    U_F must be nonempty and inside X on [0, B)

    :returns: bool
    """
    if not result.verified:
        return False
    part = fam.family_part(U, result.witness, policy).mask(policy.bound)
    return bool(part.any()) and not bool((part & ~X.mask(policy.bound)).any())


def sum_tilde_in(X, U, V, policy):
    """
    Checks "X is decided by U+V": some part Y of V, nonempty below the n-range
    min(B, d), such that X - n is decided by U for every n in Y below the
    n-range. Refuted when each such Y holds an n whose X - n is refuted and no
    part of V is empty below the n-range.

    :param X: the set
    :type X: `pyhindman.setexpr.natset.NatSet`
    :param U: the family deciding the shifts
    :type U: `pyhindman.family.family.Family`
    :param V: the family supplying Y
    :type V: `pyhindman.family.family.Family`
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :returns: a `pyhindman.family.reports.TildeResult`
    """
    assert isinstance(X, natset.NatSet)
    B = policy.bound
    R = policy.n_range
    decided = TildeIndexSet(X, U, policy).mask(R)
    refuted = np.zeros(R, dtype=bool) if U.part_table(policy).has_empty_part() else ~decided

    window = np.zeros(B, dtype=bool)
    window[:R] = True
    good = np.zeros(B, dtype=bool)
    good[:R] = decided
    bad = np.zeros(B, dtype=bool)
    bad[:R] = refuted
    window, good, bad = pack(window), pack(good), pack(bad)
    table = V.part_table(policy)

    def candidate(rows):
        return (rows & window).any(axis=1)

    def decided_part(rows, real):
        return candidate(rows) & ~(rows & window & np.bitwise_not(good)).any(axis=1)

    F = table.shortlex_least(decided_part)
    if F is not None:
        return TildeResult(VerdictEnum.VERIFIED, F, V.labels_of(F, policy), None, policy, n_range=R)
    counterexample = int(np.flatnonzero(refuted)[0]) if refuted.any() else None
    empty_within = table.any_part(lambda rows, real: ~candidate(rows))
    unrefuted = table.any_part(lambda rows, real: candidate(rows) & ~(rows & bad).any(axis=1))
    if empty_within or unrefuted:
        return TildeResult(VerdictEnum.UNKNOWN, None, [], counterexample, policy, n_range=R)
    return TildeResult(VerdictEnum.REFUTED, None, [], counterexample, policy, n_range=R)
