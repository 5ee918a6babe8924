#!/usr/bin/env python
# -*- coding: utf-8 -*-

import logging

from pyhindman.commons.enums import VerdictEnum
from pyhindman.family import checks
from pyhindman.family.family import Family
from pyhindman.family.reports import SemigroupEntry, SemigroupReport, TildeResult

logger = logging.getLogger(__name__)


def _cap_shadow(result, policy):
    # a finite shadow stands for an infinite set: its items are never refuted
    if not result.refuted:
        return result
    return TildeResult(VerdictEnum.UNKNOWN, None, [], result.counterexample, policy, n_range=result.n_range)


def check_semigroup(U, policy):
    """
    Bounded check that U codes a semigroup: U has the finite intersection
    property and every item X of U is decided by U+U. The overall verdict is
    the weakest among the fip verdict and the per-item verdicts. Items coming
    from finite-shadow schemas are capped at Unknown.

    :param U: the family
    :type U: `pyhindman.family.family.Family`
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :returns: a `pyhindman.family.reports.SemigroupReport`
    """
    assert isinstance(U, Family)
    fip = checks.bounded_fip(U, policy)
    labels = U.item_labels(policy)
    real = U.item_real(policy)
    entries = []
    for position, item in enumerate(U.items(policy)):
        result = checks.sum_tilde_in(item, U, U, policy)
        if not real[position]:
            result = _cap_shadow(result, policy)
        logger.debug('%s decided by U+U: %s', labels[position], result.verdict)
        entries.append(SemigroupEntry(position, labels[position], result))
    report = SemigroupReport(fip, entries, policy)
    logger.info('Semigroup check of %r: %s', U, report.verdict)
    return report
