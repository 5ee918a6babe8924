#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest

from pyhindman.commons.databoxes import SumWitness
from pyhindman.setexpr import natset


class TestSumWitness(unittest.TestCase):

    def test_verify_and_to_dict(self):
        witness = SumWitness([2, 4], 2, True, domain=6)
        self.assertEqual((2, 4, 6), witness.ns)
        self.assertTrue(witness.verify(natset.evens()))
        self.assertFalse(witness.verify(natset.ExplicitFinite([2, 4])))
        d = witness.to_dict()
        self.assertEqual([2, 4], d['S'])
        self.assertEqual([2, 4, 6], d['ns'])
        self.assertEqual('search', d['source'])

    def test_equality(self):
        self.assertEqual(SumWitness([2, 4], 2, True), SumWitness((2, 4), 2, True, source='oracle'))
        self.assertNotEqual(SumWitness([2, 4], 2, True), SumWitness([2, 4], 1, True))
        self.assertRaises(ValueError, SumWitness, [4, 2], 1, True)


if __name__ == "__main__":
    unittest.main()
