#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest
from pyhindman.utils import strings


class TestStringUtils(unittest.TestCase):

    def test_version_tuple_to_str(self):
        self.assertEqual('1.0.0', strings.version_tuple_to_str((1, 0, 0)))
        self.assertEqual('1-2', strings.version_tuple_to_str((1, 2), separator='-'))

    def test_format(self):
        self.assertEqual('1,2,4', strings.format_int_list([1, 2, 4]))
        self.assertEqual('', strings.format_int_list([]))
        self.assertEqual('{2,4,6}', strings.format_int_set((2, 4, 6)))
        self.assertEqual('{}', strings.format_int_set([]))

    def test_parse_int_list(self):
        self.assertEqual([1, 2, 4], strings.parse_int_list('1, 2,4'))
        self.assertEqual([3], strings.parse_int_list('{3}'))
        self.assertEqual([], strings.parse_int_list('  '))
        self.assertRaises(ValueError, strings.parse_int_list, '1,,2')
        self.assertRaises(ValueError, strings.parse_int_list, '1,-2')
        self.assertRaises(AssertionError, strings.parse_int_list, None)

    def test_increasing_naturals(self):
        self.assertEqual((1, 2, 4), strings.increasing_naturals([1, 2, 4]))
        self.assertEqual((0, 3), strings.increasing_naturals([0, 3], positive=False))
        self.assertRaises(ValueError, strings.increasing_naturals, [0, 3])
        self.assertRaises(ValueError, strings.increasing_naturals, [2, 2])
        self.assertRaises(ValueError, strings.increasing_naturals, [3, 1])
        self.assertRaises(AssertionError, strings.increasing_naturals, [True])

    def test_item_label(self):
        self.assertEqual('g1', strings.item_label(1, 2, [(0, 5)]))
        self.assertEqual('s0[5]', strings.item_label(2, 2, [(0, 5)]))

    def test_describe_exception(self):
        self.assertEqual('ValueError: boom', strings.describe_exception(ValueError('boom')))
        self.assertEqual('KeyError', strings.describe_exception(KeyError()))
