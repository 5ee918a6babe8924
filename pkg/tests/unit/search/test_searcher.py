#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest

from pyhindman.commons import exceptions
from pyhindman.commons.databoxes import FipPolicy, SearchBudget
from pyhindman.commons.enums import VerdictEnum
from pyhindman.family import family as fam
from pyhindman.search import outcomes, searcher
from pyhindman.setexpr import natset


class TestSearcher(unittest.TestCase):

    policy = FipPolicy(1000, 8, 0.5, 3, 16)
    budget = SearchBudget(20000, 64)

    def test_part1_odds(self):
        outcome = searcher.search_part1(fam.trivial_family(), natset.odds(), 2, self.policy, self.budget)
        self.assertTrue(outcome.is_witness)
        self.assertEqual((2, 4), outcome.S)
        self.assertIsNone(outcome.ns_contained)
        self.assertEqual(VerdictEnum.VERIFIED, outcome.node_fip.verdict)
        self.assertEqual(VerdictEnum.UNKNOWN, outcome.shadow_fip.verdict)
        self.assertTrue(outcome.verify(fam.trivial_family(), natset.odds()))

    def test_part2_evens(self):
        outcome = searcher.search_part2(fam.trivial_family(), natset.evens(), 2, self.policy, self.budget)
        self.assertEqual((2, 4), outcome.S)
        self.assertEqual((2, 4, 6), outcome.ns)
        self.assertTrue(outcome.ns_contained)
        self.assertEqual([(1, 2, (0,), ()), (2, 4, (1,), (1,))],
                         [(p.i, p.s, p.F, p.skipped) for p in outcome.path])
        self.assertTrue(outcome.verify(fam.trivial_family(), natset.evens()))

    def test_witness_with_an_escaping_ns_does_not_verify(self):
        outcome = searcher.search_part2(fam.trivial_family(), natset.evens(), 2, self.policy, self.budget)
        outcome.ns_contained = False
        self.assertFalse(outcome.verify(fam.trivial_family(), natset.evens()))
        escaping = outcomes.Witness((1, 3), None, [], False, None, None, [], self.policy, None)
        self.assertFalse(escaping.verify(fam.trivial_family(), natset.odds()))
        contained = outcomes.Witness((2, 4), None, [], True, None, None, [], self.policy, None)
        self.assertTrue(contained.verify(fam.trivial_family(), natset.evens()))

    def test_part2_odds_closes_its_tree(self):
        outcome = searcher.search_part2(fam.trivial_family(), natset.odds(), 2, self.policy, self.budget)
        self.assertFalse(outcome.is_witness)
        self.assertTrue(outcome.certificate.refuted)
        self.assertTrue(outcome.verify(natset.odds()))
        self.assertEqual([((), 'return_set')], outcome.diagnostics.closure_log)
        self.assertEqual([], outcome.diagnostics.unclosed)

    def test_refuted_root(self):
        U = fam.Family(generators=[natset.evens()])
        outcome = searcher.search_part2(U, natset.odds(), 3, self.policy, self.budget)
        self.assertFalse(outcome.is_witness)
        self.assertIs(U, outcome.V)
        self.assertEqual(0, outcome.diagnostics.nodes_expanded)

    def test_family_must_pass_fip(self):
        U = fam.Family(generators=[natset.evens(), natset.odds()])
        with self.assertRaises(exceptions.PreconditionNotWitnessed):
            searcher.search_part1(U, natset.evens(), 2, self.policy, self.budget)

    def test_budget(self):
        with self.assertRaises(exceptions.BudgetExhausted) as ctx:
            searcher.search_part2(fam.trivial_family(), natset.evens(), 3, self.policy, SearchBudget(1, 64))
        self.assertEqual(2, ctx.exception.diagnostics.nodes_expanded)

    def test_candidate_window_widens_before_giving_up(self):
        outcome = searcher.search_part2(fam.trivial_family(), natset.Tail(77), 2, self.policy, self.budget)
        self.assertTrue(outcome.is_witness)
        self.assertEqual((77, 78), outcome.S)
        self.assertEqual([128], outcome.diagnostics.windows)
        self.assertTrue(outcome.verify(fam.trivial_family(), natset.Tail(77)))

    def test_explicit_domain(self):
        outcome = searcher.search_part2(fam.trivial_family(), natset.ExplicitFinite([2, 4, 6]), 2,
                                        self.policy, self.budget, domain=6)
        self.assertEqual((2, 4), outcome.S)
        self.assertIsNone(outcome.node_fip)
        with self.assertRaises(exceptions.NoWitnessAtBound):
            searcher.search_part2(fam.trivial_family(), natset.ExplicitFinite([1, 3, 5]), 2,
                                  self.policy, self.budget, domain=6)

    def test_iterated(self):
        As = [natset.evens(), natset.multiples(3)]
        outcome = searcher.search_iterated(fam.trivial_family(), As, 4, self.policy, self.budget)
        self.assertEqual((2, 6, 12, 18), outcome.S)
        self.assertEqual((1, 1), outcome.signs)
        self.assertEqual([True, True], [c.contained for c in outcome.suffixes])
        self.assertTrue(outcome.verify(fam.trivial_family(), As))

    def test_iterated_uses_negative_signs(self):
        As = [natset.ExplicitFinite([1])]
        outcome = searcher.search_iterated(fam.trivial_family(), As, 2, self.policy, self.budget)
        self.assertEqual((-1,), outcome.signs)
        self.assertTrue(outcome.verify(fam.trivial_family(), As))


if __name__ == "__main__":
    unittest.main()
