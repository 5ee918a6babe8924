#!/usr/bin/env python
# -*- coding: utf-8 -*-


class PyHindmanError(Exception):
    """Generic base class for PyHindman exceptions"""
    pass


class ConfigurationError(PyHindmanError):
    """Generic base class for configuration related errors"""
    pass


class ConfigurationNotFoundError(ConfigurationError):
    """Raised when configuration source file is not available"""
    pass


class ConfigurationParseError(ConfigurationError):
    """Raised on failures in parsing configuration data"""
    pass


class ExpressionError(PyHindmanError):
    """Generic base class for errors in building or reading set expressions"""
    pass


class ExpressionSizeError(ExpressionError):
    """
    Raised when a set expression tree grows beyond the configured number of nodes
    """
    pass


class PredicateSyntaxError(ExpressionError):
    """
    Raised when predicate DSL text cannot be parsed.

    :param message: what went wrong
    :type message: str
    :param column: 1-based column of the offending token
    :type column: int
    """
    def __init__(self, message, column):
        self.column = column
        super().__init__('%s at column %d' % (message, column))


class ZeroModulusError(ExpressionError):
    """Raised when a predicate takes a remainder modulo zero"""
    pass


class ColoringFormatError(PyHindmanError):
    """Raised when a coloring file does not follow the expected format"""
    pass


class DomainError(PyHindmanError):
    """
    Raised when a finite sum falls outside the domain [1..N] of an explicit coloring
    """
    pass


class FamilyError(PyHindmanError):
    """Generic base class for errors in addressing the members of a family"""
    pass


class UnknownIndexError(FamilyError):
    """Raised when an index set names an item the family does not have"""
    pass


class UnknownGeneratorError(FamilyError):
    """Raised when a generator (or schema instance) label does not exist"""
    pass


class LemmaError(PyHindmanError):
    """Generic base class for failures of the extension lemmas"""
    pass


class PreconditionNotWitnessed(LemmaError):
    """
    Raised when the hypothesis of an extension lemma cannot be witnessed at the
    bound of the policy in use
    """
    pass


class PostconditionNotWitnessed(LemmaError):
    """
    Raised when the family an extension lemma would return does not pass the
    bounded fip check under the same policy
    """
    pass


class YNotInFamilyTilde(LemmaError):
    """Raised when the set Y handed to a lemma is not verified to be tilde-in the family"""
    pass


class SearchError(PyHindmanError):
    """Generic base class for search and extraction failures"""
    pass


class BudgetExhausted(SearchError):
    """
    Raised when a bounded search runs out of node budget or element range before
    it can certify either a witness or an extension.

    :param message: what ran out
    :type message: str
    :param diagnostics: the search diagnostics gathered so far
    :type diagnostics: `pyhindman.search.outcomes.SearchDiagnostics`
    """
    def __init__(self, message, diagnostics=None):
        self.diagnostics = diagnostics
        super().__init__(message)


class NoWitnessAtBound(SearchError):
    """
    Raised when no color class yields a finite-sums witness at the bound.

    :param message: details
    :type message: str
    :param oracle_confirmed: `True` when the exhaustive oracle confirms that no
        witness exists, `False` when it found one (the search ran out of budget),
        `None` when no oracle check applies
    :type oracle_confirmed: bool or None
    """
    def __init__(self, message, oracle_confirmed=None):
        self.oracle_confirmed = oracle_confirmed
        super().__init__(message)


class ExtractionStuck(SearchError):
    """
    Raised when the greedy extraction finds no admissible next element below the bound.

    :param message: details
    :type message: str
    :param partial: the sequence extracted so far
    :type partial: tuple of int
    """
    def __init__(self, message, partial=()):
        self.partial = tuple(partial)
        super().__init__(message)
