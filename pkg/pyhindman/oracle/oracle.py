#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exhaustive ground truth for small instances. Nothing here depends on the
search or driver code; sums are recomputed from scratch over all subsets.
"""

import itertools

from pyhindman.commons import exceptions
from pyhindman.commons.databoxes import Coloring, SumWitness
from pyhindman.setexpr import natset
from pyhindman.utils import strings


def subset_sums_by_index(S):
    """
    Every nonempty subset of S, by index set, with its sum

    :param S: the sequence
    :type S: iterable of int
    :returns: dict mapping frozenset of indices to int
    """
    S = tuple(S)
    result = {}
    for size in range(1, len(S) + 1):
        for F in itertools.combinations(range(len(S)), size):
            result[frozenset(F)] = sum(S[i] for i in F)
    return result


def all_subset_sums(S):
    """
    The sorted distinct nonempty subset sums of S, by explicit enumeration of
    all 2^|S| - 1 nonempty subsets

    :returns: list of int
    """
    return sorted(set(subset_sums_by_index(S).values()))


def verify_witness(target, S, color=None):
    """
    Exact check that every nonempty subset sum of S lies in the target: a set,
    or a color class of a coloring

    :param target: a `NatSet`, or a `Coloring` together with `color`
    :param S: strictly increasing positive naturals
    :type S: iterable of int
    :param color: the color class, for colorings
    :type color: int
    :returns: bool
    :raises: `DomainError` when a sum falls outside an explicit coloring's domain
    """
    S = strings.increasing_naturals(S, positive=True)
    values = all_subset_sums(S)
    if isinstance(target, Coloring):
        assert color is not None, 'A color is needed to check against a coloring'
        if target.is_explicit and values and values[-1] > target.N:
            raise exceptions.DomainError('Sum %d lies outside [1..%d]' % (values[-1], target.N))
        return all(target.color_of(v) == color for v in values)
    assert isinstance(target, natset.NatSet)
    return all(target.member(v) for v in values)


def _monochromatic(colors, S):
    first = colors[S[0]]
    return all(colors[v] == first for v in all_subset_sums(S))


def brute_force_witness(coloring, m):
    """
    Lexicographically first increasing S of length m whose nonempty sums are all
    at most N and share one color; None proves there is none

    :param coloring: an explicit coloring
    :type coloring: `pyhindman.commons.databoxes.Coloring`
    :param m: the length of S
    :type m: int
    :returns: a `pyhindman.commons.databoxes.SumWitness` or None
    """
    assert isinstance(coloring, Coloring) and coloring.is_explicit
    assert isinstance(m, int) and m >= 1
    N = coloring.N
    colors = (None,) + coloring.assignment
    for S in itertools.combinations(range(1, N + 1), m):
        if sum(S) > N:
            continue
        if _monochromatic(colors, S):
            return SumWitness(S, colors[S[0]], True, domain=N, source='oracle')
    return None
