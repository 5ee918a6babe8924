#!/usr/bin/env python
# -*- coding: utf-8 -*-

import random
import unittest

from hypothesis import given, settings, strategies as st

from pyhindman.search.enumeration import kb_sort_key
from pyhindman.search.tree import SearchNode, iter_postorder
from pyhindman.setexpr import natset


def random_tree(rng, size):
    tree = {(): []}
    nodes = [()]
    while len(nodes) < size:
        parent = rng.choice(nodes)
        label = rng.randrange(1, 20)
        if label in tree[parent]:
            continue
        child = parent + (label,)
        tree[parent].append(label)
        tree[child] = []
        nodes.append(child)
    return tree


class TestSearchNode(unittest.TestCase):

    def test_basics(self):
        node = SearchNode((2, 4))
        self.assertEqual(2, node.depth)
        self.assertEqual(4, node.last)
        self.assertEqual(0, SearchNode().last)
        self.assertEqual((0, 2, 4, 6), node.fs())
        self.assertEqual((2, 4, 6), node.ns())
        self.assertEqual((4,), node.suffix(1))

    def test_validation(self):
        self.assertRaises(ValueError, SearchNode, (3, 2))
        self.assertRaises(ValueError, SearchNode, (0, 2))
        self.assertRaises(ValueError, SearchNode, (1,), (1, -1, 1))
        self.assertRaises(AssertionError, SearchNode, (1,), (2,))

    def test_child_and_with_sign(self):
        node = SearchNode(signs=()).with_sign(1)
        child = node.child(3, (0,))
        self.assertEqual((3,), child.seq)
        self.assertEqual((1,), child.signs)
        self.assertEqual(((1, (0,)),), child.satisfied_constraints)
        self.assertEqual(SearchNode((3,), (1,)), child)
        self.assertNotEqual(SearchNode((3,)), child)

    def test_shifted_intersection(self):
        node = SearchNode((2, 4))
        A = node.shifted_intersection(natset.evens())
        self.assertEqual([0, 2, 4], A.enumerate(5))
        odds = natset.odds()
        self.assertIs(odds, SearchNode().shifted_intersection(odds))


class TestPostorder(unittest.TestCase):

    def test_small_tree(self):
        tree = {(): [2, 1], (1,): [5], (2,): [], (1, 5): []}
        self.assertEqual([(1, 5), (1,), (2,), ()], list(iter_postorder(lambda s: tree[s])))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32), st.integers(min_value=1, max_value=500))
    def test_kb_order_is_increasing_child_postorder(self, seed, size):
        tree = random_tree(random.Random(seed), size)
        self.assertEqual(sorted(tree, key=kb_sort_key), list(iter_postorder(lambda s: tree[s])))


if __name__ == "__main__":
    unittest.main()
