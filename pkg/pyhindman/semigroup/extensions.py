#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Extension lemmas: ways of enlarging a family so that a set A, or its
complement, becomes decided, while keeping the finite intersection property
at the policy. Each operation re-checks fip on its result; adjoining a set by
membership also re-checks that the result codes a semigroup.
"""

import logging

from pyhindman.commons import exceptions
from pyhindman.commons.enums import VerdictEnum
from pyhindman.family import checks
from pyhindman.family import family as fam
from pyhindman.family.index_sets import TildeIndexSet
from pyhindman.semigroup.semigroup import check_semigroup
from pyhindman.setexpr import natset

logger = logging.getLogger(__name__)


def _checked(result, policy, lemma, semigroup=False):
    report = checks.bounded_fip(result, policy)
    if not report.verified:
        raise exceptions.PostconditionNotWitnessed(
            '%s produced a family whose fip check is %s' % (lemma, report.verdict))
    if semigroup:
        report = check_semigroup(result, policy)
        if not report.verified:
            raise exceptions.PostconditionNotWitnessed(
                '%s produced a family whose semigroup check is %s' % (lemma, report.verdict))
    return result


def extend_after_fip_failure(U, A, policy):
    """
    When some part U_F meets A in a thin set, adjoins the schema
    {A^c - n | n in X or n = 0} with X = {n | U_F - n is decided by U}.

    :param U: the family
    :type U: `pyhindman.family.family.Family`
    :param A: the set
    :type A: `pyhindman.setexpr.natset.NatSet`
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :returns: a `pyhindman.family.family.Family`
    :raises: `PreconditionNotWitnessed` when no part of U meets A thinly;
        `PostconditionNotWitnessed` when the result fails its fip check
    """
    F = checks.thin_part_with(U, A, policy)
    if F is None:
        raise exceptions.PreconditionNotWitnessed('No part of the family meets %s in a thin set' % (A,))
    logger.debug('Part %s meets %s thinly', U.labels_of(F, policy), A)
    index_set = TildeIndexSet(fam.family_part(U, F, policy), U, policy)
    schema = fam.GeneratorSchema(natset.complement(A), index_set, include_zero=True)
    result = fam.append(U, schemas=[schema], note='fip failure of %s' % (A,))
    return _checked(result, policy, 'extend_after_fip_failure')


def extend_after_pair_failure(U, A, Y, policy):
    """
    When Y is decided by U and U + {A, A - n} fails fip for every n in Y (below
    the n-range), adjoins {A^c - n | n in X} with X = {n | Y - n is decided by U}.
    Falls back to `extend_after_fip_failure` when U + {A} already fails.

    :param U: the family
    :type U: `pyhindman.family.family.Family`
    :param A: the set
    :type A: `pyhindman.setexpr.natset.NatSet`
    :param Y: the set of shifts
    :type Y: `pyhindman.setexpr.natset.NatSet`
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :returns: a `pyhindman.family.family.Family`
    :raises: `YNotInFamilyTilde`, `PreconditionNotWitnessed`, `PostconditionNotWitnessed`
    """
    decided = checks.tilde_in(Y, U, policy)
    if not decided.verified:
        raise exceptions.YNotInFamilyTilde('%s is not decided by the family (%s)' % (Y, decided.verdict))
    if checks.bounded_fip(fam.append(U, A), policy).refuted:
        logger.debug('%s already fails against the family', A)
        return extend_after_fip_failure(U, A, policy)
    for n in Y.enumerate(policy.n_range):
        if n == 0:
            continue
        report = checks.bounded_fip(fam.append(U, [A, natset.shift(A, n)]), policy)
        if not report.refuted:
            raise exceptions.PreconditionNotWitnessed(
                'The family with %s and its shift by %d is not refuted (%s)' % (A, n, report.verdict))
    schema = fam.GeneratorSchema(natset.complement(A), TildeIndexSet(Y, U, policy), include_zero=False)
    result = fam.append(U, schemas=[schema], note='pair failures of %s' % (A,))
    return _checked(result, policy, 'extend_after_pair_failure')


def extend_by_membership(U, A, item, policy):
    """
    Adjoins A when A - n is decided by U for every n in a member of U (below
    the n-range).

    :param U: the family
    :type U: `pyhindman.family.family.Family`
    :param A: the set
    :type A: `pyhindman.setexpr.natset.NatSet`
    :param item: a generator index, or a (schema index, n) pair
    :type item: int or tuple
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :returns: a `pyhindman.family.family.Family`
    :raises: `UnknownGeneratorError`, `PreconditionNotWitnessed`, `PostconditionNotWitnessed`
    """
    position = U.position_of(item, policy)
    member = U.items(policy)[position]
    R = policy.n_range
    decided = TildeIndexSet(A, U, policy).mask(R)
    missing = member.mask(R) & ~decided
    if missing.any():
        n = int(missing.nonzero()[0][0])
        raise exceptions.PreconditionNotWitnessed('%s - %d is not decided by the family' % (A, n))
    result = fam.append(U, A, note='membership of %s' % (A,))
    return _checked(result, policy, 'extend_by_membership', semigroup=True)


def extend_by_return_set(U, A, policy, rounds=3):
    """
    Adjoins a subset D of A^c that the enlarged family decides through sums:
    starting from D = A^c, D is replaced by its intersection with
    {n | D - n is decided by U + {D}} until U + {D} passes fip and D is
    decided by (U + {D}) + (U + {D}).

    :param U: the family
    :type U: `pyhindman.family.family.Family`
    :param A: the set
    :type A: `pyhindman.setexpr.natset.NatSet`
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :param rounds: the most candidate sets tried
    :type rounds: int
    :returns: a `pyhindman.family.family.Family`
    :raises: `PreconditionNotWitnessed` when no round succeeds
    """
    D = natset.complement(A)
    for attempt in range(rounds):
        W = fam.append(U, D, note='return set of %s' % (A,))
        fip = checks.bounded_fip(W, policy)
        if not fip.verified:
            raise exceptions.PreconditionNotWitnessed(
                'Return set candidate %d for %s fails fip (%s)' % (attempt, A, fip.verdict))
        if checks.sum_tilde_in(D, W, W, policy).verified:
            logger.debug('Return set of %s found after %d rounds', A, attempt + 1)
            return W
        D = natset.intersect([D, TildeIndexSet(D, W, policy)])
    raise exceptions.PreconditionNotWitnessed('No return set of %s within %d rounds' % (A, rounds))


def closes(V, A, policy):
    """
    Tells whether V has fip and V + {A} is refuted, both at the policy

    :returns: bool
    """
    return checks.bounded_fip(V, policy).verdict == VerdictEnum.VERIFIED and \
        checks.bounded_fip(fam.append(V, A), policy).refuted
