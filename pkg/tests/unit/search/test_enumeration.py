#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest

from hypothesis import given, strategies as st

from pyhindman.search import enumeration


class TestEnumeration(unittest.TestCase):

    def test_canonical_finite_set(self):
        self.assertEqual((0,), enumeration.canonical_finite_set(1))
        self.assertEqual((1,), enumeration.canonical_finite_set(2))
        self.assertEqual((0, 1), enumeration.canonical_finite_set(3))
        self.assertEqual((0, 2, 3), enumeration.canonical_finite_set(13))
        self.assertRaises(ValueError, enumeration.canonical_finite_set, 0)

    @given(st.integers(min_value=1, max_value=10 ** 9))
    def test_canonical_index_inverts(self, n):
        self.assertEqual(n, enumeration.canonical_index(enumeration.canonical_finite_set(n)))

    def test_canonical_index_of_empty_set(self):
        self.assertRaises(ValueError, enumeration.canonical_index, ())

    def test_kb_compare(self):
        self.assertEqual(-1, enumeration.kb_compare((1, 2), (1,)))
        self.assertEqual(1, enumeration.kb_compare((), (5,)))
        self.assertEqual(-1, enumeration.kb_compare((1, 9), (2,)))
        self.assertEqual(0, enumeration.kb_compare((3, 4), (3, 4)))

    def test_kb_sort_key(self):
        nodes = [(), (1,), (2,), (1, 3), (1, 2)]
        self.assertEqual([(1, 2), (1, 3), (1,), (2,), ()], sorted(nodes, key=enumeration.kb_sort_key))
        self.assertEqual(sorted(nodes, key=enumeration.kb_key), sorted(nodes, key=enumeration.kb_sort_key))


if __name__ == "__main__":
    unittest.main()
