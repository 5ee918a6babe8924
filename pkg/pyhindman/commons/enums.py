#!/usr/bin/env python
# -*- coding: utf-8 -*-


class VerdictEnum:
    """
    Outcomes of bounded semi-decisions. Verdicts are ordered from weakest to
    strongest: a refutation beats an unknown, which beats a verification.

    """
    VERIFIED = 'VerifiedAtBound'
    UNKNOWN = 'Unknown'
    REFUTED = 'RefutedAtBound'

    @classmethod
    def items(cls):
        """
        All values for this enum
        :return: list of str

        """
        return [
            cls.VERIFIED,
            cls.UNKNOWN,
            cls.REFUTED
        ]

    @classmethod
    def weakest(cls, verdicts):
        """
        Combines verdicts: any refutation wins, then any unknown; an empty
        collection is verified.

        :param verdicts: the verdicts to combine
        :type verdicts: iterable of str
        :returns: str
        """
        verdicts = list(verdicts)
        if cls.REFUTED in verdicts:
            return cls.REFUTED
        if cls.UNKNOWN in verdicts:
            return cls.UNKNOWN
        return cls.VERIFIED

    def __repr__(self):
        return "<%s.%s>" % (__name__, self.__class__.__name__)


class SignEnum:
    """
    Signs b selecting a set (+1) or its complement (-1)

    """
    PLUS = 1
    MINUS = -1

    @classmethod
    def items(cls):
        """
        All values for this enum, in the order searches try them
        :return: list of int

        """
        return [
            cls.PLUS,
            cls.MINUS
        ]

    @classmethod
    def symbol(cls, sign):
        return '+' if sign == cls.PLUS else '-'


class SideEnum:
    """
    The two sides a decision can take for a set A

    """
    A = 'A'
    COMPLEMENT = 'A^c'

    @classmethod
    def items(cls):
        return [
            cls.A,
            cls.COMPLEMENT
        ]


class CommandEnum:
    """
    Subcommands of the command-line surface

    """
    FS = 'fs'
    DECIDE = 'decide'
    HINDMAN = 'hindman'
    ITERATED = 'iterated'
    ORACLE_MINBOUND = 'oracle-minbound'
    VERIFY = 'verify'
    CHECK_FAMILY = 'check-family'

    @classmethod
    def items(cls):
        """
        All values for this enum
        :return: list of str

        """
        return [
            cls.FS,
            cls.DECIDE,
            cls.HINDMAN,
            cls.ITERATED,
            cls.ORACLE_MINBOUND,
            cls.VERIFY,
            cls.CHECK_FAMILY
        ]
