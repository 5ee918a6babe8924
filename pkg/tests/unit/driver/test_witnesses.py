#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest

from pyhindman.driver.witnesses import IteratedWitness
from pyhindman.setexpr import natset


class TestIteratedWitness(unittest.TestCase):

    def test_verify(self):
        As = [natset.evens(), natset.multiples(3)]
        self.assertTrue(IteratedWitness((2, 6, 12, 18), (1, 1), [], []).verify(As))
        self.assertFalse(IteratedWitness((2, 6, 12, 18), (1, -1), [], []).verify(As))
        self.assertFalse(IteratedWitness((2, 6, 12, 18), (1,), [], []).verify(As))


if __name__ == "__main__":
    unittest.main()
