#!/usr/bin/env python
# -*- coding: utf-8 -*-

import itertools
import logging

from pyhindman.commons.databoxes import Coloring
from pyhindman.oracle import oracle
from pyhindman.utils.workers import ordered_map

logger = logging.getLogger(__name__)


class ForcingResult:
    """
    The least N such that every k-coloring of [1..N] has a monochromatic NS(S)
    with |S| = m and sums at most N, with the lexicographically least
    witness-free coloring of [1..N-1]. When no N up to `n_max` forces a
    witness, `bound` is None and `extremal` is witness-free on [1..n_max].

    :param k: number of colors
    :type k: int
    :param m: witness length
    :type m: int
    :param n_max: the largest N examined
    :type n_max: int
    :param bound: the forcing bound, or None
    :type bound: int or None
    :param extremal: colors of 1, 2, ... of the extremal coloring
    :type extremal: tuple of int
    """
    def __init__(self, k, m, n_max, bound, extremal):
        self.k = k
        self.m = m
        self.n_max = n_max
        self.bound = bound
        self.extremal = tuple(extremal)

    @property
    def none_up_to(self):
        return self.bound is None

    def extremal_coloring(self):
        """
        :returns: the extremal `pyhindman.commons.databoxes.Coloring`, None when it is empty
        """
        if not self.extremal:
            return None
        return Coloring.explicit(self.extremal, self.k)

    def verify(self):
        """
        Re-checks both halves of the claim by exhaustive enumeration: the
        extremal coloring is witness-free, and every coloring of [1..bound]
        has a witness

        :returns: bool
        """
        extremal = self.extremal_coloring()
        if extremal is not None and oracle.brute_force_witness(extremal, self.m) is not None:
            return False
        if self.bound is None:
            return len(self.extremal) == self.n_max
        if len(self.extremal) != self.bound - 1:
            return False
        for colors in itertools.product(range(1, self.k + 1), repeat=self.bound):
            if oracle.brute_force_witness(Coloring.explicit(colors, self.k), self.m) is None:
                return False
        return True

    def to_dict(self):
        return {
            'k': self.k,
            'm': self.m,
            'n_max': self.n_max,
            'bound': self.bound,
            'extremal': ''.join(str(c) for c in self.extremal)}

    def __repr__(self):
        bound = 'none up to %d' % self.n_max if self.bound is None else str(self.bound)
        return "<%s.%s - k=%d, m=%d, bound=%s>" % (__name__, self.__class__.__name__, self.k, self.m, bound)


def distinct_partitions(total, m, minimum=1):
    """
    Strictly increasing m-tuples of naturals >= minimum summing to `total`

    :returns: generator of tuple
    """
    if m == 1:
        if total >= minimum:
            yield (total,)
        return
    first = minimum
    while m * first + m * (m - 1) // 2 <= total:
        for rest in distinct_partitions(total - first, m - 1, first + 1):
            yield (first,) + rest
        first += 1


def _closes_witness(colors, j, partitions):
    for S in partitions[j]:
        c = colors[S[0]]
        if all(colors[v] == c for v in oracle.all_subset_sums(S)):
            return True
    return False


def first_free_coloring(k, m, N, prefix=(), symmetry=True):
    """
    Lexicographically least k-coloring of [1..N] extending `prefix` with no
    monochromatic NS(S), |S| = m, sums at most N. Colors are tried in
    increasing order; with `symmetry`, a color is only used once every smaller
    color has been, which fixes the color of 1 to 1.

    :returns: tuple of int or None
    """
    partitions = {j: list(distinct_partitions(j, m)) for j in range(1, N + 1)}
    colors = [None]
    for j, c in enumerate(prefix, start=1):
        colors.append(c)
        if _closes_witness(colors, j, partitions):
            return None

    def extend(j):
        if j > N:
            return True
        highest = max(colors[1:], default=0)
        options = range(1, min(k, highest + 1) + 1) if symmetry else range(1, k + 1)
        for c in options:
            colors.append(c)
            if not _closes_witness(colors, j, partitions) and extend(j + 1):
                return True
            colors.pop()
        return False

    if extend(len(colors)):
        return tuple(colors[1:])
    return None


def _branch(args):
    return first_free_coloring(*args)


def _first_free(k, m, N, symmetry, jobs):
    if jobs == 1 or N < 2:
        return first_free_coloring(k, m, N, (), symmetry)
    firsts = [1] if symmetry else range(1, k + 1)
    prefixes = [(a, b) for a in firsts for b in range(1, k + 1) if not symmetry or b <= 2]
    for found in ordered_map(_branch, [(k, m, N, p, symmetry) for p in prefixes], jobs):
        if found is not None:
            return found
    return None


def min_forcing_bound(k, m, n_max, symmetry=True, jobs=1):
    """
    The least N <= n_max forcing a monochromatic NS(S), |S| = m, in every
    k-coloring of [1..N]

    :param k: number of colors
    :type k: int
    :param m: witness length
    :type m: int
    :param n_max: the largest N to examine
    :type n_max: int
    :param symmetry: prune colorings equivalent under relabeling of colors
    :type symmetry: bool
    :param jobs: worker processes, branching on the color of 2
    :type jobs: int
    :returns: a `ForcingResult`
    """
    for value in (k, m, n_max):
        assert isinstance(value, int) and value >= 1
    previous = ()
    for N in range(1, n_max + 1):
        free = _first_free(k, m, N, symmetry, jobs)
        if free is None:
            logger.info('Every %d-coloring of [1..%d] has a witness of length %d', k, N, m)
            return ForcingResult(k, m, n_max, N, previous)
        logger.debug('Witness-free coloring of [1..%d]: %s', N, free)
        previous = free
    return ForcingResult(k, m, n_max, None, previous)
