#!/usr/bin/env python
# -*- coding: utf-8 -*-

import functools

_AFTER_EVERY_LABEL = float('inf')


def canonical_finite_set(n):
    """
    F_n, the n-th finite set of naturals: the positions of the set bits of n.
    F_1 = {0}, F_2 = {1}, F_3 = {0, 1}, ...; every finite set is F_n for
    exactly one n >= 1, except the empty set, and is contained in F_m for
    infinitely many m.

    :param n: the index
    :type n: int
    :returns: tuple of int, increasing
    :raises: *ValueError* when n < 1
    """
    assert isinstance(n, int) and not isinstance(n, bool)
    if n < 1:
        raise ValueError('Finite sets are enumerated from index 1')
    return tuple(i for i in range(n.bit_length()) if n >> i & 1)


def canonical_index(F):
    """
    The index n with canonical_finite_set(n) == F

    :param F: a nonempty finite set of naturals
    :type F: iterable of int
    :returns: int
    """
    n = sum(1 << i for i in set(F))
    if n == 0:
        raise ValueError('The empty set has no index')
    return n


def kb_key(seq):
    """
    Sort key realising the Kleene-Brouwer order: a sequence precedes its
    prefixes, and otherwise the first differing entry decides.

    :param seq: a finite sequence of naturals
    :type seq: iterable of int
    :returns: tuple
    """
    return tuple(seq) + (_AFTER_EVERY_LABEL,)


def kb_compare(sigma, tau):
    """
    Compares two finite sequences in the Kleene-Brouwer order

    :returns: -1 when sigma precedes tau, 1 when it follows, 0 when they are equal
    """
    a, b = kb_key(sigma), kb_key(tau)
    return (a > b) - (a < b)


kb_sort_key = functools.cmp_to_key(kb_compare)
