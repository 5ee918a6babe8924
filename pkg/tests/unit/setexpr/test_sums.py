#!/usr/bin/env python
# -*- coding: utf-8 -*-

import itertools
import unittest

from hypothesis import given, settings, strategies as st

from pyhindman.setexpr import natset, sums


def _by_subsets(S):
    values = set()
    for size in range(1, len(S) + 1):
        for chosen in itertools.combinations(S, size):
            values.add(sum(chosen))
    return sorted(values)


class TestSums(unittest.TestCase):

    def test_fs_and_ns(self):
        self.assertEqual((0, 1, 2, 3), sums.fs_values([1, 2]))
        self.assertEqual((1, 2, 3), sums.ns_values([1, 2]))
        self.assertEqual((0,), sums.fs_values([]))
        self.assertEqual((), sums.ns_values([]))
        self.assertEqual((2, 4, 6), sums.nonempty_sums([2, 4]).elements)
        self.assertEqual((0, 2, 4, 6), sums.finite_sums([2, 4]).elements)

    def test_fs_values_rejects_bad_sequences(self):
        self.assertRaises(ValueError, sums.fs_values, [2, 2])
        self.assertRaises(ValueError, sums.fs_values, [0, 3])

    def test_first_escape(self):
        self.assertIsNone(sums.first_escape([2, 4], natset.evens()))
        self.assertEqual(3, sums.first_escape([1, 2], natset.ExplicitFinite([1, 2])))

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.integers(min_value=1, max_value=10 ** 6), unique=True, max_size=10))
    def test_agrees_with_subset_enumeration(self, elements):
        S = sorted(elements)
        self.assertEqual(_by_subsets(S), list(sums.ns_values(S)))
        self.assertEqual([0] + _by_subsets(S), list(sums.fs_values(S)))


if __name__ == "__main__":
    unittest.main()
