#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Predicate DSL: boolean combinations of comparisons between arithmetic terms
in the single variable `n`, eg. `n > 5 && n % 3 == 0`. The operators `*` and
`%` share one precedence level with `+` and `-` and fold to the left, so
`n + 1 % 2` reads `(n + 1) % 2`.
"""

import re

from pyhindman.commons import exceptions
from pyhindman.setexpr import natset
from pyhindman.setexpr import predicate as pred

TOKEN_RE = re.compile(r'\s*(?:(\d+)|(&&|\|\||==|!=|<=|>=|[-+*%<>!()n]))')


class Token:

    def __init__(self, kind, text, column):
        self.kind = kind
        self.text = text
        self.column = column

    def __repr__(self):
        return "<%s.%s - %s at %d>" % (__name__, self.__class__.__name__, self.text, self.column)


def tokenize(text):
    """
    Splits DSL text into tokens with their 1-based columns; the list ends with
    an `end` token placed one column past the text

    :param text: the DSL text
    :type text: str
    :returns: list of `Token`
    :raises: `PredicateSyntaxError` on characters outside the DSL
    """
    assert isinstance(text, str)
    tokens = []
    position = 0
    while position < len(text):
        if not text[position:].strip():
            break
        match = TOKEN_RE.match(text, position)
        if match is None:
            offset = len(text[position:]) - len(text[position:].lstrip())
            raise exceptions.PredicateSyntaxError('Unexpected character "%s"' % text[position + offset],
                                                  position + offset + 1)
        if match.group(1) is not None:
            tokens.append(Token('number', match.group(1), match.start(1) + 1))
        else:
            tokens.append(Token('op', match.group(2), match.start(2) + 1))
        position = match.end()
    tokens.append(Token('end', '', len(text) + 1))
    return tokens


class _Parser:

    def __init__(self, tokens):
        self.tokens = tokens
        self.position = 0

    @property
    def current(self):
        return self.tokens[self.position]

    def _accept(self, *texts):
        token = self.current
        if token.kind == 'op' and token.text in texts:
            self.position += 1
            return token
        return None

    def _expect(self, text):
        token = self._accept(text)
        if token is None:
            self._fail('Expected "%s"' % text)
        return token

    def _fail(self, message):
        token = self.current
        found = 'end of input' if token.kind == 'end' else '"%s"' % token.text
        raise exceptions.PredicateSyntaxError('%s, found %s' % (message, found), token.column)

    def expression(self):
        left = self.and_term()
        while self._accept('||'):
            left = pred.Connective('||', left, self.and_term())
        return left

    def and_term(self):
        left = self.unary()
        while self._accept('&&'):
            left = pred.Connective('&&', left, self.unary())
        return left

    def unary(self):
        if self._accept('!'):
            return pred.Negation(self.unary())
        if self.current.kind == 'op' and self.current.text == '(':
            start = self.position
            try:
                self.position += 1
                inner = self.expression()
                self._expect(')')
                return inner
            except exceptions.PredicateSyntaxError as grouped:
                self.position = start
                try:
                    return self.comparison()
                except exceptions.PredicateSyntaxError as compared:
                    raise compared if compared.column >= grouped.column else grouped
        return self.comparison()

    def comparison(self):
        left = self.arithmetic()
        token = self._accept(*pred.COMPARISON_OPERATORS)
        if token is None:
            self._fail('Expected a comparison')
        return pred.Comparison(token.text, left, self.arithmetic())

    def arithmetic(self):
        left = self.atom()
        while True:
            token = self._accept(*pred.ARITHMETIC_OPERATORS)
            if token is None:
                return left
            if token.text == '%' and self.current.kind != 'number':
                self._fail('The modulus must be a number')
            left = pred.Arithmetic(token.text, left, self.atom())

    def atom(self):
        token = self.current
        if token.kind == 'number':
            self.position += 1
            return pred.Literal(int(token.text))
        if self._accept('n'):
            return pred.Variable()
        if self._accept('('):
            inner = self.arithmetic()
            self._expect(')')
            return inner
        self._fail('Expected "n", a number or "("')


def parse_expression(text):
    """
    Parses DSL text into a predicate AST

    :param text: the DSL text
    :type text: str
    :returns: a `pyhindman.setexpr.predicate.PredExpr`
    :raises: `PredicateSyntaxError`, `ZeroModulusError`
    """
    parser = _Parser(tokenize(text))
    expression = parser.expression()
    if parser.current.kind != 'end':
        parser._fail('Unexpected trailing input')
    return expression


def parse_predicate(text):
    """
    Parses DSL text into the set of naturals satisfying it, eg.
    `parse_predicate("n % 2 == 0")` gives the even numbers

    :param text: the DSL text
    :type text: str
    :returns: a `pyhindman.setexpr.natset.Predicate`
    :raises: `PredicateSyntaxError`, `ZeroModulusError`
    """
    return natset.Predicate(parse_expression(text), text=text.strip())


def parse_predicates(text, separator=';'):
    """
    Parses several DSL predicates separated by semicolons

    :returns: list of `pyhindman.setexpr.natset.Predicate`
    """
    parts = text.split(separator)
    if not all(p.strip() for p in parts):
        raise exceptions.PredicateSyntaxError('Empty predicate in list', 1)
    return [parse_predicate(p) for p in parts]
