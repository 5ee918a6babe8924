#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Symbolic subsets of the naturals. A `NatSet` is an immutable expression tree
that answers exact membership queries and yields numpy membership masks over
an initial segment [0, B).
"""

import numpy as np

from pyhindman.commons import exceptions
from pyhindman.config import DEFAULT_CONFIG
from pyhindman.setexpr import predicate as pred
from pyhindman.utils import strings

MAX_NODES = DEFAULT_CONFIG['expression']['max_nodes']


class NatSet:
    """
    Base class of set expressions. Subclasses implement `member` and
    `_compute_mask`; masks are cached per instance on the longest bound asked.

    """
    node_count = 1

    def member(self, n):
        """
        Tells whether natural `n` belongs to this set

        :param n: a natural
        :type n: int
        :returns: bool
        """
        raise NotImplementedError

    def mask(self, bound):
        """
        Membership mask of this set over [0, bound)

        :param bound: the bound
        :type bound: int
        :returns: a read-only numpy boolean vector of length `bound`
        """
        assert isinstance(bound, (int, np.integer)) and bound >= 0
        bound = int(bound)
        cached = self.__dict__.get('_mask')
        if cached is None or len(cached) < bound:
            cached = np.asarray(self._compute_mask(bound), dtype=bool)
            cached.setflags(write=False)
            self.__dict__['_mask'] = cached
        return cached[:bound]

    def enumerate(self, bound):
        """
        The elements of this set below `bound`, increasing

        :param bound: the bound
        :type bound: int
        :returns: list of int
        """
        return [int(n) for n in np.flatnonzero(self.mask(bound))]

    def _compute_mask(self, bound):
        return np.fromiter((self.member(n) for n in range(bound)), dtype=bool, count=bound)

    def __repr__(self):
        return "<%s.%s - %s>" % (__name__, self.__class__.__name__, str(self))


class ExplicitFinite(NatSet):
    """
    A finite set given by its strictly increasing elements

    :param elements: the elements
    :type elements: iterable of int
    :raises: *ValueError* when elements are not strictly increasing naturals
    """
    def __init__(self, elements):
        self.elements = strings.increasing_naturals(elements, positive=False)
        self._members = frozenset(self.elements)

    def member(self, n):
        return n in self._members

    def _compute_mask(self, bound):
        result = np.zeros(bound, dtype=bool)
        inside = np.array([e for e in self.elements if e < bound], dtype=np.intp)
        result[inside] = True
        return result

    def __str__(self):
        return strings.format_int_set(self.elements)


class Tail(NatSet):
    """
    The tail [k, infinity)

    :param k: the least element
    :type k: int
    """
    def __init__(self, k):
        assert isinstance(k, int) and not isinstance(k, bool)
        if k < 0:
            raise ValueError('Tails start at a natural')
        self.k = k

    def member(self, n):
        return n >= self.k

    def _compute_mask(self, bound):
        return np.arange(bound) >= self.k

    def __str__(self):
        return '[%d,inf)' % self.k


class Predicate(NatSet):
    """
    The set of naturals satisfying a predicate AST

    :param expression: the predicate
    :type expression: `pyhindman.setexpr.predicate.PredExpr`
    :param text: optional source text, used only for printing
    :type text: str
    """
    def __init__(self, expression, text=None):
        assert isinstance(expression, pred.PredExpr)
        self.expression = expression
        self.text = text
        self.node_count = 1 + expression.node_count
        _check_size(self)

    def member(self, n):
        return bool(self.expression.evaluate(int(n)))

    def _compute_mask(self, bound):
        values = self.expression.evaluate_array(np.arange(bound, dtype=np.int64))
        return np.broadcast_to(np.asarray(values, dtype=bool), (bound,)).copy()

    def __str__(self):
        return '{n | %s}' % (self.text if self.text is not None else self.expression)


class Shift(NatSet):
    """
    The shift X - n, that is {m | m + n in X}

    """
    def __init__(self, inner, n):
        assert isinstance(inner, NatSet)
        assert isinstance(n, int) and not isinstance(n, bool) and n >= 0
        self.inner = inner
        self.n = n
        self.node_count = 1 + inner.node_count
        _check_size(self)

    def member(self, m):
        return self.inner.member(m + self.n)

    def _compute_mask(self, bound):
        return self.inner.mask(bound + self.n)[self.n:]

    def __str__(self):
        return '(%s - %d)' % (self.inner, self.n)


class Complement(NatSet):

    def __init__(self, inner):
        assert isinstance(inner, NatSet)
        self.inner = inner
        self.node_count = 1 + inner.node_count
        _check_size(self)

    def member(self, n):
        return not self.inner.member(n)

    def _compute_mask(self, bound):
        return np.logical_not(self.inner.mask(bound))

    def __str__(self):
        return '~%s' % (self.inner,)


class Intersection(NatSet):
    """
    The intersection of a list of sets; the empty list denotes all naturals

    """
    def __init__(self, members):
        self.members = tuple(members)
        for m in self.members:
            assert isinstance(m, NatSet)
        self.node_count = 1 + sum(m.node_count for m in self.members)
        _check_size(self)

    def member(self, n):
        return all(m.member(n) for m in self.members)

    def _compute_mask(self, bound):
        result = np.ones(bound, dtype=bool)
        for m in self.members:
            result &= m.mask(bound)
        return result

    def __str__(self):
        if not self.members:
            return 'N'
        return '(' + ' & '.join(str(m) for m in self.members) + ')'


class Union(NatSet):
    """
    The union of a list of sets; the empty list denotes the empty set

    """
    def __init__(self, members):
        self.members = tuple(members)
        for m in self.members:
            assert isinstance(m, NatSet)
        self.node_count = 1 + sum(m.node_count for m in self.members)
        _check_size(self)

    def member(self, n):
        return any(m.member(n) for m in self.members)

    def _compute_mask(self, bound):
        result = np.zeros(bound, dtype=bool)
        for m in self.members:
            result |= m.mask(bound)
        return result

    def __str__(self):
        if not self.members:
            return '{}'
        return '(' + ' | '.join(str(m) for m in self.members) + ')'


class FiniteSums(NatSet):
    """
    FS(base): every sum of a finite subset of `base`, 0 included

    :param base: strictly increasing naturals, each at least 1
    :type base: iterable of int
    :raises: *ValueError* when the base is not strictly increasing or holds 0
    """
    def __init__(self, base):
        self.base = strings.increasing_naturals(base, positive=True)
        self.sums = subset_sums(self.base)
        self._members = frozenset(self.sums)

    def member(self, n):
        return n in self._members

    def _compute_mask(self, bound):
        result = np.zeros(bound, dtype=bool)
        result[np.array([s for s in self.sums if s < bound], dtype=np.intp)] = True
        return result

    def __str__(self):
        return 'FS%s' % strings.format_int_set(self.base)


def subset_sums(base):
    """
    Sorted distinct sums of all subsets of `base`, the empty sum 0 included

    :param base: naturals
    :type base: iterable of int
    :returns: tuple of int
    """
    sums = {0}
    for s in base:
        sums |= {x + s for x in sums}
    return tuple(sorted(sums))


def _check_size(natset, limit=None):
    limit = MAX_NODES if limit is None else limit
    if natset.node_count > limit:
        raise exceptions.ExpressionSizeError(
            'Set expression has %d nodes, the limit is %d' % (natset.node_count, limit))


def check_size(natset, limit):
    """
    Raises `ExpressionSizeError` when `natset` has more than `limit` nodes

    :param natset: the set expression
    :type natset: `NatSet`
    :param limit: the node limit
    :type limit: int
    """
    _check_size(natset, limit)


def naturals():
    return Tail(0)


def empty():
    return ExplicitFinite(())


def multiples(k, remainder=0):
    """
    The residue class {n | n % k == remainder}

    """
    return Predicate(pred.residue(k, remainder))


def evens():
    return multiples(2)


def odds():
    return multiples(2, 1)


def member(X, n):
    assert isinstance(X, NatSet)
    assert isinstance(n, int) and n >= 0
    return X.member(n)


def enumerate(X, bound):
    """
    The elements of X below `bound`, strictly increasing

    """
    assert isinstance(X, NatSet)
    return X.enumerate(bound)


def shift(X, n):
    """
    The set {m | m + n in X}

    :param X: the set
    :type X: `NatSet`
    :param n: the shift
    :type n: int
    :returns: a `NatSet`
    """
    assert isinstance(X, NatSet)
    assert isinstance(n, int) and not isinstance(n, bool) and n >= 0
    if n == 0:
        return X
    if isinstance(X, Tail):
        return Tail(max(X.k - n, 0))
    if isinstance(X, ExplicitFinite):
        return ExplicitFinite([e - n for e in X.elements if e >= n])
    if isinstance(X, Shift):
        return Shift(X.inner, X.n + n)
    return Shift(X, n)


def complement(X):
    assert isinstance(X, NatSet)
    if isinstance(X, Complement):
        return X.inner
    return Complement(X)


def intersect(Xs):
    """
    The intersection of the supplied sets; N for an empty list

    :param Xs: the sets
    :type Xs: list of `NatSet`
    :returns: a `NatSet`
    """
    Xs = list(Xs)
    if len(Xs) == 1:
        return Xs[0]
    return Intersection(Xs)


def union(Xs):
    Xs = list(Xs)
    if len(Xs) == 1:
        return Xs[0]
    return Union(Xs)


def signed(A, b):
    """
    b.A: the set itself when b is +1, its complement when b is -1

    """
    if b == 1:
        return A
    if b == -1:
        return complement(A)
    raise ValueError('Signs are +1 or -1, got %s' % (b,))
