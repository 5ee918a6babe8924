#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest

from pyhindman.commons.databoxes import FipPolicy
from pyhindman.driver import driver
from pyhindman.family import family as fam
from pyhindman.setexpr import natset, sums
from pyhindman.utils import config as cfg


class TestIterated(unittest.TestCase):

    def test_evens_and_multiples_of_three(self):
        config = cfg.get_default_config()
        policy = cfg.policy_from(config)
        budget = cfg.search_budget_from(config)
        As = [natset.evens(), natset.multiples(3)]
        witness, V = driver.iterated_decide(fam.trivial_family(), As, 4, policy, budget)
        self.assertGreaterEqual(len(witness.S), 4)
        self.assertEqual(2, len(witness.signs))
        for i, (A, b) in enumerate(zip(As, witness.signs)):
            self.assertIsNone(sums.first_escape(witness.S[i:], natset.signed(A, b)))
        self.assertTrue(witness.verify(As))
        self.assertTrue(all(c.verified for c in witness.certificates))
        self.assertEqual(2, len(V.schemas))

    def test_three_sets(self):
        policy = FipPolicy(1000, 8, 0.5, 3, 16)
        As = [natset.multiples(2), natset.multiples(3, 1), natset.Tail(40)]
        witness, _ = driver.iterated_decide(fam.trivial_family(), As, 4, policy)
        self.assertTrue(witness.verify(As))


if __name__ == "__main__":
    unittest.main()
