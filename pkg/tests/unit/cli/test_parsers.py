#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest

from hypothesis import given, settings, strategies as st

from pyhindman.cli import parsers
from pyhindman.commons import exceptions


def _expressions():
    atom = st.one_of(st.just('n'), st.integers(min_value=0, max_value=30).map(str))
    arith = st.recursive(atom, lambda inner: st.one_of(
        st.tuples(inner, st.sampled_from(['+', '-', '*']), inner).map(lambda t: '(%s %s %s)' % t),
        st.tuples(inner, st.integers(min_value=1, max_value=9)).map(lambda t: '(%s %% %d)' % t)), max_leaves=4)
    comparison = st.tuples(arith, st.sampled_from(['==', '!=', '<', '<=', '>', '>=']), arith).map(
        lambda t: '%s %s %s' % t)
    return st.recursive(comparison, lambda inner: st.one_of(
        inner.map(lambda e: '!(%s)' % e),
        st.tuples(inner, st.sampled_from(['&&', '||']), inner).map(lambda t: '(%s) %s (%s)' % t)), max_leaves=4)


class TestParsers(unittest.TestCase):

    def test_evens(self):
        evens = parsers.parse_predicate('n % 2 == 0')
        self.assertTrue(evens.member(4))
        self.assertFalse(evens.member(5))
        self.assertEqual([0, 2, 4], evens.enumerate(6))

    def test_conjunction(self):
        A = parsers.parse_predicate('n > 5 && n % 3 == 0')
        self.assertTrue(A.member(9))
        self.assertFalse(A.member(3))

    def test_precedence(self):
        A = parsers.parse_predicate('n + 1 * 2 == 8 || !(n < 10) && n != 12')
        self.assertTrue(A.member(3))
        self.assertFalse(A.member(4))
        self.assertFalse(A.member(6))
        self.assertTrue(A.member(11))
        self.assertFalse(A.member(12))
        self.assertTrue(parsers.parse_predicate('5 - n == 0').member(7))

    def test_arithmetic_folds_left_at_one_level(self):
        self.assertEqual([1, 3, 5, 7], parsers.parse_predicate('n + 1 % 2 == 0').enumerate(8))
        self.assertEqual('(((n + 1) % 2) == 0)', str(parsers.parse_expression('n + 1 % 2 == 0')))
        self.assertEqual([0, 2, 5], parsers.parse_predicate('n * 2 - 1 % 3 == 0').enumerate(7))
        self.assertEqual([0, 1, 2, 3], parsers.parse_predicate('n - 3 * 5 == 0').enumerate(6))

    def test_parenthesised_arithmetic_and_boolean(self):
        self.assertTrue(parsers.parse_predicate('(n + 1) % 3 == 0').member(5))
        self.assertTrue(parsers.parse_predicate('(n == 1) || (n == 2)').member(2))
        self.assertTrue(parsers.parse_predicate('((n)) >= 3').member(3))

    def test_syntax_errors(self):
        with self.assertRaises(exceptions.PredicateSyntaxError) as ctx:
            parsers.parse_predicate('n %%')
        self.assertEqual(4, ctx.exception.column)
        with self.assertRaises(exceptions.PredicateSyntaxError) as ctx:
            parsers.parse_predicate('n % n == 0')
        self.assertEqual(5, ctx.exception.column)
        with self.assertRaises(exceptions.PredicateSyntaxError) as ctx:
            parsers.parse_predicate('n + 1')
        self.assertEqual(6, ctx.exception.column)
        with self.assertRaises(exceptions.PredicateSyntaxError) as ctx:
            parsers.parse_predicate('n == 1 x')
        self.assertEqual(8, ctx.exception.column)
        with self.assertRaises(exceptions.PredicateSyntaxError):
            parsers.parse_predicate('(n == 1')

    def test_zero_modulus(self):
        self.assertRaises(exceptions.ZeroModulusError, parsers.parse_predicate, 'n % 0 == 1')

    def test_parse_predicates(self):
        As = parsers.parse_predicates('n % 2 == 0; n % 3 == 0')
        self.assertEqual(2, len(As))
        self.assertEqual('n % 3 == 0', As[1].text)
        self.assertRaises(exceptions.PredicateSyntaxError, parsers.parse_predicates, 'n > 1;')

    @settings(max_examples=100, deadline=None)
    @given(_expressions())
    def test_printed_ast_reparses_to_the_same_set(self, text):
        A = parsers.parse_predicate(text)
        again = parsers.parse_predicate(str(A.expression))
        self.assertEqual(list(A.mask(200)), list(again.mask(200)))


if __name__ == "__main__":
    unittest.main()
