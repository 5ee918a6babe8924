#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pyhindman.commons.enums import SideEnum
from pyhindman.setexpr import natset, sums


class Decision:
    """
    The side chosen for a set A, the extended family V and the certificate
    that the chosen side is decided by V.

    :param side: a `pyhindman.commons.enums.SideEnum` value
    :type side: str
    :param family: the extended family V
    :type family: `pyhindman.family.family.Family`
    :param certificate: the chosen side decided by V
    :type certificate: `pyhindman.family.reports.TildeResult`
    :param witness: when side is A, the sequence found
    :type witness: `pyhindman.commons.databoxes.SumWitness` or None
    :param outcome: the search outcome the decision was built from
    """
    def __init__(self, side, family, certificate, witness, outcome):
        assert side in SideEnum.items()
        self.side = side
        self.family = family
        self.certificate = certificate
        self.witness = witness
        self.outcome = outcome

    def to_dict(self):
        return {
            'side': self.side,
            'family': self.family.to_dict(),
            'certificate': self.certificate.to_dict(),
            'witness': self.witness.to_dict() if self.witness is not None else None}

    def __repr__(self):
        return "<%s.%s - side=%s, certificate=%s>" % (__name__, self.__class__.__name__, self.side,
                                                      self.certificate.verdict)


class IteratedWitness:
    """
    S with signs b_i such that NS of each suffix from s_i lies in b_i.A_i.

    :param S: the sequence
    :type S: tuple of int
    :param signs: the signs, one per set
    :type signs: tuple of int
    :param suffixes: exact per-suffix certificates
    :type suffixes: list of `pyhindman.search.outcomes.SuffixCertificate`
    :param certificates: b_i.A_i decided by the extended family, per i
    :type certificates: list of `pyhindman.family.reports.TildeResult`
    """
    def __init__(self, S, signs, suffixes, certificates):
        self.S = tuple(S)
        self.signs = tuple(signs)
        self.suffixes = list(suffixes)
        self.certificates = list(certificates)

    def verify(self, As):
        """
        Re-checks every suffix containment exactly

        :param As: the sets A_i
        :type As: list of `pyhindman.setexpr.natset.NatSet`
        :returns: bool
        """
        for i, (A, b) in enumerate(zip(As, self.signs)):
            if sums.first_escape(self.S[i:], natset.signed(A, b)) is not None:
                return False
        return len(self.signs) == len(As)

    def to_dict(self):
        return {
            'S': list(self.S),
            'signs': list(self.signs),
            'suffixes': [c.to_dict() for c in self.suffixes],
            'certificates': [c.to_dict() for c in self.certificates]}

    def __repr__(self):
        return "<%s.%s - S=%s, signs=%s>" % (__name__, self.__class__.__name__, self.S, self.signs)
