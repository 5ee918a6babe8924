#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pyhindman.commons.databoxes import FipPolicy
from pyhindman.commons.enums import VerdictEnum


class PartWitness:
    """
    A part U_F singled out by a check, described on [0, B).

    :param F: item positions
    :type F: tuple of int
    :param labels: item labels of F
    :type labels: list of str
    :param count: number of elements of U_F below B
    :type count: int
    :param max_element: greatest element of U_F below B, None when it is empty there
    :type max_element: int or None
    """
    def __init__(self, F, labels, count, max_element):
        self.F = tuple(F)
        self.labels = list(labels)
        self.count = count
        self.max_element = max_element

    def to_dict(self):
        return {
            'F': list(self.F),
            'labels': list(self.labels),
            'count': self.count,
            'max_element': self.max_element}

    def __repr__(self):
        return "<%s.%s - F=%s, count=%s, max=%s>" % (__name__, self.__class__.__name__,
                                                     self.labels, self.count, self.max_element)


class FipReport:
    """
    Outcome of a bounded finite-intersection-property check.

    :param verdict: a `pyhindman.commons.enums.VerdictEnum` value
    :type verdict: str
    :param witnesses: the failing (or limiting) parts
    :type witnesses: list of `PartWitness`
    :param policy: the policy the check ran under
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    """
    def __init__(self, verdict, witnesses, policy):
        assert verdict in VerdictEnum.items()
        assert isinstance(policy, FipPolicy)
        if verdict == VerdictEnum.REFUTED:
            assert witnesses and witnesses[0].count < policy.min_count, \
                'A refutation must carry a part with fewer than t elements'
        self.verdict = verdict
        self.witnesses = list(witnesses)
        self.policy = policy

    @property
    def verified(self):
        return self.verdict == VerdictEnum.VERIFIED

    @property
    def refuted(self):
        return self.verdict == VerdictEnum.REFUTED

    def to_dict(self):
        return {
            'verdict': self.verdict,
            'witnesses': [w.to_dict() for w in self.witnesses],
            'policy': self.policy.to_dict()}

    def __repr__(self):
        return "<%s.%s - verdict=%s, witnesses=%s>" % (__name__, self.__class__.__name__,
                                                       self.verdict, len(self.witnesses))


class TildeResult:
    """
    Outcome of a bounded "X is decided by the family" check.

    :param verdict: a `pyhindman.commons.enums.VerdictEnum` value
    :type verdict: str
    :param witness: item positions F of the certifying part, when verified
    :type witness: tuple of int or None
    :param labels: item labels of the witness
    :type labels: list of str
    :param counterexample: an element escaping the target, when refuted
    :type counterexample: int or None
    :param policy: the policy the check ran under
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :param n_range: for sum checks, the shifts n < n_range that were examined
    :type n_range: int or None
    """
    def __init__(self, verdict, witness, labels, counterexample, policy, n_range=None):
        assert verdict in VerdictEnum.items()
        assert isinstance(policy, FipPolicy)
        if verdict == VerdictEnum.VERIFIED:
            assert witness is not None
        self.verdict = verdict
        self.witness = tuple(witness) if witness is not None else None
        self.labels = list(labels)
        self.counterexample = counterexample
        self.policy = policy
        self.n_range = n_range

    @property
    def verified(self):
        return self.verdict == VerdictEnum.VERIFIED

    @property
    def refuted(self):
        return self.verdict == VerdictEnum.REFUTED

    def to_dict(self):
        return {
            'verdict': self.verdict,
            'witness': list(self.witness) if self.witness is not None else None,
            'labels': list(self.labels),
            'counterexample': self.counterexample,
            'n_range': self.n_range,
            'policy': self.policy.to_dict()}

    def __repr__(self):
        return "<%s.%s - verdict=%s, witness=%s>" % (__name__, self.__class__.__name__,
                                                     self.verdict, self.labels)


class SemigroupEntry:
    """
    Verdict of "X is decided by U+U" for one item X of a family

    """
    def __init__(self, position, label, result):
        assert isinstance(result, TildeResult)
        self.position = position
        self.label = label
        self.result = result

    @property
    def verdict(self):
        return self.result.verdict

    def to_dict(self):
        return {
            'position': self.position,
            'label': self.label,
            'verdict': self.result.verdict,
            'witness': self.result.labels,
            'n_range': self.result.n_range}

    def __repr__(self):
        return "<%s.%s - %s: %s>" % (__name__, self.__class__.__name__, self.label, self.verdict)


class SemigroupReport:
    """
    Outcome of a bounded semigroup check: the fip report plus one entry per item.

    :param fip: the fip report of the family
    :type fip: `FipReport`
    :param entries: per-item verdicts
    :type entries: list of `SemigroupEntry`
    :param policy: the policy the check ran under
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    """
    def __init__(self, fip, entries, policy):
        assert isinstance(fip, FipReport)
        self.fip = fip
        self.entries = list(entries)
        self.policy = policy
        self.verdict = VerdictEnum.weakest([fip.verdict] + [e.verdict for e in self.entries])

    @property
    def verified(self):
        return self.verdict == VerdictEnum.VERIFIED

    @property
    def refuted(self):
        return self.verdict == VerdictEnum.REFUTED

    def entries_with(self, verdict):
        return [e for e in self.entries if e.verdict == verdict]

    def to_dict(self):
        return {
            'verdict': self.verdict,
            'fip': self.fip.to_dict(),
            'entries': [e.to_dict() for e in self.entries],
            'policy': self.policy.to_dict()}

    def __repr__(self):
        return "<%s.%s - verdict=%s, items=%d>" % (__name__, self.__class__.__name__,
                                                   self.verdict, len(self.entries))
