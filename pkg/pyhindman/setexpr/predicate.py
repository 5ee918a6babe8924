#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Abstract syntax of arithmetic predicates over a single natural variable `n`.
Every node evaluates both on a Python int and on a numpy vector of naturals
(used to build membership masks). Both are exact: vectors stay int64 until an
operation would overflow, then continue as arrays of Python ints.
"""

import numpy as np

from pyhindman.commons import exceptions


ARITHMETIC_OPERATORS = ('+', '-', '*', '%')
COMPARISON_OPERATORS = ('==', '!=', '<', '<=', '>', '>=')
BOOLEAN_OPERATORS = ('&&', '||')

INT64_MAX = np.iinfo(np.int64).max


class PredExpr:
    """
    Base class of predicate AST nodes

    """
    def evaluate(self, n):
        raise NotImplementedError

    def evaluate_array(self, ns):
        raise NotImplementedError

    @property
    def node_count(self):
        raise NotImplementedError

    def __repr__(self):
        return "<%s.%s - %s>" % (__name__, self.__class__.__name__, str(self))


class Variable(PredExpr):

    def evaluate(self, n):
        return n

    def evaluate_array(self, ns):
        return ns

    @property
    def node_count(self):
        return 1

    def __str__(self):
        return 'n'


class Literal(PredExpr):
    """
    A natural number literal

    :param value: the value
    :type value: int
    """
    def __init__(self, value):
        assert isinstance(value, int) and not isinstance(value, bool)
        if value < 0:
            raise ValueError('Literals must be naturals')
        self.value = value

    def evaluate(self, n):
        return self.value

    def evaluate_array(self, ns):
        if self.value > INT64_MAX:
            return np.array(self.value, dtype=object)
        return np.int64(self.value)

    @property
    def node_count(self):
        return 1

    def __str__(self):
        return str(self.value)


class Arithmetic(PredExpr):
    """
    A binary arithmetic node. Subtraction is truncated at 0, and the right
    operand of a remainder must be a nonzero literal.

    :param operator: one of `+`, `-`, `*`, `%`
    :type operator: str
    :param left: left operand
    :type left: `PredExpr`
    :param right: right operand
    :type right: `PredExpr`
    :raises: *ValueError* on unknown operators or non-literal moduli,
        `ZeroModulusError` on a zero modulus
    """
    def __init__(self, operator, left, right):
        assert isinstance(left, PredExpr)
        assert isinstance(right, PredExpr)
        if operator not in ARITHMETIC_OPERATORS:
            raise ValueError('Unknown arithmetic operator: %s' % operator)
        if operator == '%':
            if not isinstance(right, Literal):
                raise ValueError('The right operand of %% must be a literal')
            if right.value == 0:
                raise exceptions.ZeroModulusError('Remainder modulo zero')
        self.operator = operator
        self.left = left
        self.right = right

    def evaluate(self, n):
        a = self.left.evaluate(n)
        b = self.right.evaluate(n)
        if self.operator == '+':
            return a + b
        if self.operator == '-':
            return max(a - b, 0)
        if self.operator == '*':
            return a * b
        return a % b

    def evaluate_array(self, ns):
        a, b = _exact_operands(self.operator, self.left.evaluate_array(ns), self.right.evaluate_array(ns))
        if self.operator == '+':
            return a + b
        if self.operator == '-':
            return np.maximum(a - b, 0)
        if self.operator == '*':
            return a * b
        return a % b

    @property
    def node_count(self):
        return 1 + self.left.node_count + self.right.node_count

    def __str__(self):
        return '(%s %s %s)' % (self.left, self.operator, self.right)


class Comparison(PredExpr):
    """
    Compares two arithmetic expressions

    :param operator: one of `==`, `!=`, `<`, `<=`, `>`, `>=`
    :type operator: str
    """
    def __init__(self, operator, left, right):
        assert isinstance(left, PredExpr)
        assert isinstance(right, PredExpr)
        if operator not in COMPARISON_OPERATORS:
            raise ValueError('Unknown comparison operator: %s' % operator)
        self.operator = operator
        self.left = left
        self.right = right

    def evaluate(self, n):
        return _compare(self.operator, self.left.evaluate(n), self.right.evaluate(n))

    def evaluate_array(self, ns):
        return np.asarray(_compare(self.operator, self.left.evaluate_array(ns), self.right.evaluate_array(ns)),
                          dtype=bool)

    @property
    def node_count(self):
        return 1 + self.left.node_count + self.right.node_count

    def __str__(self):
        return '(%s %s %s)' % (self.left, self.operator, self.right)


class Negation(PredExpr):

    def __init__(self, operand):
        assert isinstance(operand, PredExpr)
        self.operand = operand

    def evaluate(self, n):
        return not self.operand.evaluate(n)

    def evaluate_array(self, ns):
        return np.logical_not(self.operand.evaluate_array(ns))

    @property
    def node_count(self):
        return 1 + self.operand.node_count

    def __str__(self):
        return '!%s' % (self.operand,)


class Connective(PredExpr):
    """
    Boolean conjunction (`&&`) or disjunction (`||`) of two predicates

    """
    def __init__(self, operator, left, right):
        assert isinstance(left, PredExpr)
        assert isinstance(right, PredExpr)
        if operator not in BOOLEAN_OPERATORS:
            raise ValueError('Unknown boolean operator: %s' % operator)
        self.operator = operator
        self.left = left
        self.right = right

    def evaluate(self, n):
        if self.operator == '&&':
            return bool(self.left.evaluate(n)) and bool(self.right.evaluate(n))
        return bool(self.left.evaluate(n)) or bool(self.right.evaluate(n))

    def evaluate_array(self, ns):
        if self.operator == '&&':
            return np.logical_and(self.left.evaluate_array(ns), self.right.evaluate_array(ns))
        return np.logical_or(self.left.evaluate_array(ns), self.right.evaluate_array(ns))

    @property
    def node_count(self):
        return 1 + self.left.node_count + self.right.node_count

    def __str__(self):
        return '(%s %s %s)' % (self.left, self.operator, self.right)


def _exact_operands(operator, a, b):
    """
    Returns the operands of an arithmetic node, promoted to arrays of Python
    ints when the int64 result could overflow. Operands are always naturals.

    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.dtype == object or b.dtype == object:
        return a.astype(object), b.astype(object)
    if operator == '+':
        overflow = np.any(a > INT64_MAX - b)
    elif operator == '*':
        overflow = np.any(b > INT64_MAX // np.maximum(a, 1))
    else:
        overflow = False
    if overflow:
        return a.astype(object), b.astype(object)
    return a, b


def _compare(operator, a, b):
    if operator == '==':
        return a == b
    if operator == '!=':
        return a != b
    if operator == '<':
        return a < b
    if operator == '<=':
        return a <= b
    if operator == '>':
        return a > b
    return a >= b


def residue(modulus, remainder=0):
    """
    The predicate `n % modulus == remainder`

    :param modulus: a positive modulus
    :type modulus: int
    :param remainder: the residue class
    :type remainder: int
    :returns: a `PredExpr`
    """
    return Comparison('==', Arithmetic('%', Variable(), Literal(modulus)), Literal(remainder))
