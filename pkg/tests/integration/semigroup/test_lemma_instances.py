#!/usr/bin/env python
# -*- coding: utf-8 -*-

import unittest

from hypothesis import given, settings, strategies as st

from pyhindman.commons import exceptions
from pyhindman.commons.databoxes import FipPolicy
from pyhindman.family import checks
from pyhindman.family import family as fam
from pyhindman.semigroup import extensions
from pyhindman.semigroup.semigroup import check_semigroup
from pyhindman.setexpr import natset

POLICY = FipPolicy(1000, 8, 0.5, 3, 16)

# elements below tau * B, so that a small set is thin at the policy
BELOW_TAIL = int(POLICY.tail_fraction * POLICY.bound) - 1

BASE_FAMILIES = (fam.trivial_family, fam.frechet_family,
                 lambda: fam.Family(generators=[natset.naturals(), natset.Tail(1)]))


def geometric(start, bound):
    elements = []
    value = start
    while value < bound:
        elements.append(value)
        value *= 2
    return natset.ExplicitFinite(elements)


class TestLemmaInstances(unittest.TestCase):

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(BASE_FAMILIES),
           st.sets(st.integers(min_value=0, max_value=BELOW_TAIL), max_size=POLICY.min_count - 1))
    def test_extend_after_fip_failure(self, base, elements):
        A = natset.ExplicitFinite(sorted(elements))
        V = extensions.extend_after_fip_failure(base(), A, POLICY)
        self.assertTrue(checks.bounded_fip(V, POLICY).verified)
        self.assertTrue(checks.tilde_in(natset.complement(A), V, POLICY).verified)

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(BASE_FAMILIES), st.integers(min_value=2, max_value=12),
           st.integers(min_value=0, max_value=11))
    def test_extend_after_fip_failure_rejects_thick_sets(self, base, modulus, remainder):
        A = natset.multiples(modulus, remainder % modulus)
        with self.assertRaises(exceptions.PreconditionNotWitnessed):
            extensions.extend_after_fip_failure(base(), A, POLICY)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=1, max_value=63), st.sampled_from([1000, 2000, 4000]))
    def test_extend_after_pair_failure(self, start, bound):
        policy = POLICY.replace(bound=bound)
        A = geometric(start, bound)
        V = extensions.extend_after_pair_failure(fam.trivial_family(), A, natset.naturals(), policy)
        self.assertTrue(checks.bounded_fip(V, policy).verified)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=2, max_value=10), st.integers(min_value=0, max_value=9))
    def test_extend_after_pair_failure_rejects_residues(self, modulus, remainder):
        A = natset.multiples(modulus, remainder % modulus)
        with self.assertRaises(exceptions.PreconditionNotWitnessed):
            extensions.extend_after_pair_failure(fam.trivial_family(), A, natset.naturals(), POLICY)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=0, max_value=POLICY.instance_bound - 1),
           st.integers(min_value=0, max_value=POLICY.instance_bound - 1))
    def test_extend_by_membership(self, start, n):
        V = extensions.extend_by_membership(fam.frechet_family(), natset.Tail(start), (0, n), POLICY)
        self.assertTrue(checks.bounded_fip(V, POLICY).verified)
        self.assertTrue(check_semigroup(V, POLICY).verified)
        self.assertEqual(1, len(V.generators))

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=2, max_value=10), st.integers(min_value=0, max_value=POLICY.instance_bound - 1))
    def test_extend_by_membership_rejects_residues(self, modulus, n):
        with self.assertRaises(exceptions.PreconditionNotWitnessed):
            extensions.extend_by_membership(fam.frechet_family(), natset.multiples(modulus), (0, n), POLICY)


if __name__ == "__main__":
    unittest.main()
