#!/usr/bin/env python
# -*- coding: utf-8 -*-

import itertools
import unittest

from pyhindman.commons import exceptions
from pyhindman.commons.databoxes import Coloring, FipPolicy, SearchBudget
from pyhindman.driver import driver
from pyhindman.oracle import oracle


class TestDriverAgainstOracle(unittest.TestCase):

    policy = FipPolicy(1000, 8, 0.5, 3, 16)
    budget = SearchBudget(20000, 64)

    def test_every_coloring_of_ten(self):
        found = 0
        for colors in itertools.product((1, 2), repeat=10):
            coloring = Coloring.explicit(colors, 2)
            expected = oracle.brute_force_witness(coloring, 2)
            try:
                witness = driver.hindman_witness(coloring, 2, self.policy, self.budget)
            except exceptions.NoWitnessAtBound as e:
                self.assertIsNone(expected, colors)
                self.assertTrue(e.oracle_confirmed)
                continue
            self.assertIsNotNone(expected, colors)
            self.assertTrue(oracle.verify_witness(coloring, witness.S, witness.color), colors)
            self.assertLessEqual(sum(witness.S), 10)
            found += 1
        self.assertEqual(2 ** 10, found)

    def test_jobs_do_not_change_the_witness(self):
        for colors in itertools.islice(itertools.product((1, 2, 3), repeat=9), 0, 3 ** 9, 97):
            coloring = Coloring.explicit(colors, 3)
            try:
                sequential = driver.hindman_witness(coloring, 2, self.policy, self.budget, jobs=1)
            except exceptions.NoWitnessAtBound:
                self.assertRaises(exceptions.NoWitnessAtBound, driver.hindman_witness,
                                  coloring, 2, self.policy, self.budget, 4)
                continue
            parallel = driver.hindman_witness(coloring, 2, self.policy, self.budget, jobs=4)
            self.assertEqual(sequential.to_dict(), parallel.to_dict())


if __name__ == "__main__":
    unittest.main()
