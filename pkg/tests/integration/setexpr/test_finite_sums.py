#!/usr/bin/env python
# -*- coding: utf-8 -*-

import itertools
import unittest

from hypothesis import given, settings, strategies as st

from pyhindman.setexpr import sums


def all_subset_sums(S):
    result = set()
    for r in range(len(S) + 1):
        for combination in itertools.combinations(S, r):
            result.add(sum(combination))
    return sorted(result)


class TestFiniteSumsAgainstSubsets(unittest.TestCase):

    @settings(max_examples=1000, deadline=None)
    @given(st.sets(st.integers(min_value=1, max_value=10 ** 6), max_size=12))
    def test_fs_and_ns_match_subset_enumeration(self, elements):
        S = sorted(elements)
        expected = all_subset_sums(S)
        self.assertEqual(expected, list(sums.finite_sums(S).elements))
        self.assertEqual(expected[1:], list(sums.nonempty_sums(S).elements))
        self.assertEqual(tuple(expected), sums.fs_values(S))


if __name__ == "__main__":
    unittest.main()
