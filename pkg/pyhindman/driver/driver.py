#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Top-level constructions: deciding A against its complement, finite-sums
witnesses for colorings, greedy extraction through a decided family and the
iterated decision over several sets with signs.
"""

import logging

from pyhindman.commons import exceptions
from pyhindman.commons.databoxes import Coloring, SumWitness
from pyhindman.commons.enums import SideEnum, VerdictEnum
from pyhindman.driver.witnesses import Decision, IteratedWitness
from pyhindman.family import checks
from pyhindman.family import family as fam
from pyhindman.family.index_sets import TildeIndexSet
from pyhindman.oracle.oracle import brute_force_witness
from pyhindman.search import searcher
from pyhindman.semigroup import extensions
from pyhindman.semigroup.semigroup import check_semigroup
from pyhindman.setexpr import natset, sums
from pyhindman.utils.workers import ordered_map

logger = logging.getLogger(__name__)


def fs_family_schema(S, policy):
    """
    The schema {NS(S) - n | n in FS(S), n < d}, flagged as a finite shadow of
    the family {FS(S) - n} of an infinite S

    :param S: the witness sequence
    :type S: tuple of int
    :param policy: the policy fixing d
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :returns: a `pyhindman.family.family.GeneratorSchema`
    """
    shifts = [v for v in sums.fs_values(S) if v < policy.instance_bound]
    return fam.GeneratorSchema(sums.nonempty_sums(S), natset.ExplicitFinite(shifts),
                               include_zero=True, finite_shadow=True)


def extend_decide(U, A, m, policy, budget=None):
    """
    Decides A or its complement: a part2 search either finds S with NS(S)
    inside A, and V gets the finite-sums schema of S, or yields a family V0
    refuting A, which is then extended so that A^c becomes decided.

    :param U: the family, with fip at the policy
    :type U: `pyhindman.family.family.Family`
    :param A: the set
    :type A: `pyhindman.setexpr.natset.NatSet`
    :param m: witness length
    :type m: int
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :param budget: search bounds
    :type budget: `pyhindman.commons.databoxes.SearchBudget`
    :returns: a `pyhindman.driver.witnesses.Decision`
    :raises: `BudgetExhausted`
    """
    outcome = searcher.search_part2(U, A, m, policy, budget)
    if outcome.is_witness:
        V = fam.append(U, schemas=[fs_family_schema(outcome.S, policy)],
                       note='finite sums of %s' % (list(outcome.S),))
        certificate = checks.tilde_in(A, V, policy)
        witness = SumWitness(outcome.S, None, outcome.ns_contained, bound=policy.bound)
        logger.info('Decided %s with witness %s', A, outcome.S)
        return Decision(SideEnum.A, V, certificate, witness, outcome)
    V = extensions.extend_after_fip_failure(outcome.V, A, policy)
    certificate = checks.tilde_in(natset.complement(A), V, policy)
    logger.info('Decided the complement of %s', A)
    return Decision(SideEnum.COMPLEMENT, V, certificate, None, outcome)


def galvin_glazer(V, C, m, policy):
    """
    Greedy extraction of S with NS(S) inside C: each next x is the least one
    above the previous with x in C - s for every s in NS(prefix), x in C, and
    C - (s + x) decided by V for every s in FS(prefix).

    :param V: a family deciding C
    :type V: `pyhindman.family.family.Family`
    :param C: the target set
    :type C: `pyhindman.setexpr.natset.NatSet`
    :param m: witness length
    :type m: int
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :returns: a `pyhindman.commons.databoxes.SumWitness`
    :raises: `PreconditionNotWitnessed` when C is not decided by V or V is
        refuted as a semigroup; `ExtractionStuck` when no next element lies below B
    """
    decided = checks.tilde_in(C, V, policy)
    if not decided.verified:
        raise exceptions.PreconditionNotWitnessed('%s is not decided by the family (%s)' % (C, decided.verdict))
    semigroup = check_semigroup(V, policy)
    if semigroup.verdict == VerdictEnum.REFUTED:
        raise exceptions.PreconditionNotWitnessed('The family is refuted as a semigroup')
    returns = TildeIndexSet(C, V, policy)
    prefix = []
    for t in range(m):
        fs = sums.fs_values(prefix)
        start = prefix[-1] + 1 if prefix else 1
        chosen = None
        for x in range(start, policy.bound - fs[-1]):
            if all(C.member(s + x) for s in fs) and all(returns.member(s + x) for s in fs):
                chosen = x
                break
        if chosen is None:
            raise exceptions.ExtractionStuck('No element %d could follow %s below %d' % (t, prefix, policy.bound),
                                             partial=prefix)
        logger.debug('Extraction step %d: %d', t, chosen)
        prefix.append(chosen)
    return SumWitness(prefix, None, sums.first_escape(prefix, C) is None, bound=policy.bound,
                      source='galvin_glazer')


def _explicit_class_witness(args):
    coloring, color, m, policy, budget = args
    try:
        outcome = searcher.search_part2(fam.trivial_family(), coloring.class_set(color), m, policy,
                                        budget, domain=coloring.N)
    except exceptions.NoWitnessAtBound:
        return None, False
    except exceptions.BudgetExhausted:
        return None, True
    return outcome.S, False


def _explicit_witness(coloring, m, policy, budget, jobs):
    tasks = [(coloring, i, m, policy, budget) for i in range(1, coloring.k + 1)]
    if jobs == 1:
        results = (_explicit_class_witness(task) for task in tasks)
    else:
        results = ordered_map(_explicit_class_witness, tasks, jobs)
    exhausted = False
    for color, (S, out_of_budget) in enumerate(results, start=1):
        if S is not None:
            contained = all(coloring.color_of(v) == color for v in sums.ns_values(S))
            return SumWitness(S, color, contained, domain=coloring.N, source='search')
        exhausted = exhausted or out_of_budget
    confirmed = brute_force_witness(coloring, m) is None
    reason = 'search budget ran out' if exhausted else 'every color class was exhausted'
    raise exceptions.NoWitnessAtBound('No witness of length %d with sums in [1..%d]: %s' % (m, coloring.N, reason),
                                      oracle_confirmed=confirmed)


def _symbolic_witness(coloring, m, policy, budget):
    V = fam.trivial_family()
    for color in range(1, coloring.k + 1):
        C = coloring.class_set(color)
        decision = extend_decide(V, C, m, policy, budget)
        if decision.side == SideEnum.A:
            try:
                witness = galvin_glazer(decision.family, C, m, policy)
            except (exceptions.LemmaError, exceptions.ExtractionStuck) as e:
                logger.warning('Extraction for color %d failed (%s), keeping the search witness', color, e)
                witness = decision.witness
            return SumWitness(witness.S, color, witness.verify(C), bound=policy.bound, source=witness.source)
        V = decision.family
    raise exceptions.NoWitnessAtBound('Every color class was decided against at bound %d' % policy.bound)


def hindman_witness(coloring, m, policy, budget=None, jobs=1):
    """
    A monochromatic finite-sums witness of length m. Explicit colorings are
    searched class by class with sums within [1..N]; symbolic colorings run the
    decide-then-continue loop over C_1, C_2, ... and extract the witness with
    `galvin_glazer`. The lowest color index that succeeds is reported.

    :param coloring: the coloring
    :type coloring: `pyhindman.commons.databoxes.Coloring`
    :param m: witness length
    :type m: int
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :param budget: search bounds
    :type budget: `pyhindman.commons.databoxes.SearchBudget`
    :param jobs: worker processes for explicit colorings
    :type jobs: int
    :returns: a `pyhindman.commons.databoxes.SumWitness`
    :raises: `NoWitnessAtBound`, `BudgetExhausted`
    """
    assert isinstance(coloring, Coloring)
    assert isinstance(m, int) and m >= 1
    if coloring.is_explicit:
        return _explicit_witness(coloring, m, policy, budget, jobs)
    return _symbolic_witness(coloring, m, policy, budget)


def iterated_decide(U, As, m, policy, budget=None):
    """
    Finds S and signs b_i with NS of each suffix from s_i inside b_i.A_i, and
    extends U with one finite-sums schema per suffix, so that every b_i.A_i is
    decided by the result.

    :param U: the family, with fip at the policy
    :type U: `pyhindman.family.family.Family`
    :param As: the sets A_i
    :type As: list of `pyhindman.setexpr.natset.NatSet`
    :param m: least witness length
    :type m: int
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :returns: tuple (`pyhindman.driver.witnesses.IteratedWitness`, `pyhindman.family.family.Family`)
    :raises: `BudgetExhausted`
    """
    As = list(As)
    outcome = searcher.search_iterated(U, As, m, policy, budget)
    schemas = [fs_family_schema(outcome.S[i:], policy) for i in range(len(As))]
    V = fam.append(U, schemas=schemas, note='finite sums of the suffixes of %s' % (list(outcome.S),))
    certificates = [checks.tilde_in(natset.signed(A, b), V, policy) for A, b in zip(As, outcome.signs)]
    return IteratedWitness(outcome.S, outcome.signs, outcome.suffixes, certificates), V
