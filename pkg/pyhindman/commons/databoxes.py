#!/usr/bin/env python
# -*- coding: utf-8 -*-

import math

import numpy as np

from pyhindman.commons import exceptions
from pyhindman.setexpr import natset, sums
from pyhindman.utils import strings


class FipPolicy:
    """
    Databox class holding the bounds under which "infinite", "tilde-in" and the
    universally quantified lemma premises are checked.

    :param bound: the evaluation bound B: naturals in [0, B) are scanned
    :type bound: int
    :param min_count: t, the least number of elements a part needs at bound
    :type min_count: int
    :param tail_fraction: tau, a part must reach [tau*B, B) to count as alive
    :type tail_fraction: float
    :param max_part_size: f_max, the largest index set F that is checked
    :type max_part_size: int
    :param instance_bound: d, schema instances are taken for n < d
    :type instance_bound: int
    :raises: *AssertionError* on wrong types, *ValueError* on out-of-range values
    """
    def __init__(self, bound, min_count, tail_fraction, max_part_size, instance_bound):
        for value in (bound, min_count, max_part_size, instance_bound):
            assert isinstance(value, int) and not isinstance(value, bool)
        assert isinstance(tail_fraction, (int, float))
        if bound < 1:
            raise ValueError('bound must be at least 1')
        if min_count < 1:
            raise ValueError('min_count must be at least 1')
        if not 0 < tail_fraction <= 1:
            raise ValueError('tail_fraction must lie in (0, 1]')
        if max_part_size < 1:
            raise ValueError('max_part_size must be at least 1')
        if instance_bound < 1:
            raise ValueError('instance_bound must be at least 1')
        self.bound = bound
        self.min_count = min_count
        self.tail_fraction = float(tail_fraction)
        self.max_part_size = max_part_size
        self.instance_bound = instance_bound

    @property
    def tail_start(self):
        """
        First natural of the tail window [tau*B, B)

        :returns: int
        """
        return int(math.ceil(self.tail_fraction * self.bound))

    @property
    def n_range(self):
        """
        Range min(B, d) over which "for each n in X" premises are checked

        :returns: int
        """
        return min(self.bound, self.instance_bound)

    def replace(self, **overrides):
        values = self.to_dict()
        values.update(overrides)
        return FipPolicy.from_dict(values)

    def as_tuple(self):
        return (self.bound, self.min_count, self.tail_fraction, self.max_part_size, self.instance_bound)

    @classmethod
    def from_dict(cls, the_dict):
        assert isinstance(the_dict, dict)
        try:
            return FipPolicy(the_dict['bound'], the_dict['min_count'], the_dict['tail_fraction'],
                             the_dict['max_part_size'], the_dict['instance_bound'])
        except KeyError as e:
            raise ValueError('Missing policy key: %s' % e)

    def to_dict(self):
        return {
            'bound': self.bound,
            'min_count': self.min_count,
            'tail_fraction': self.tail_fraction,
            'max_part_size': self.max_part_size,
            'instance_bound': self.instance_bound}

    def __eq__(self, other):
        return isinstance(other, FipPolicy) and self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return "<%s.%s - B=%s t=%s tau=%s f_max=%s d=%s>" % (
            __name__, self.__class__.__name__, self.bound, self.min_count, self.tail_fraction,
            self.max_part_size, self.instance_bound)


class SearchBudget:
    """
    Databox class bounding the backtracking searches.

    :param max_nodes: the most tree nodes a search may expand
    :type max_nodes: int
    :param max_element: children are first drawn from (max(sigma), max_element); an
        exhausted tree is retried with the window doubled, up to the policy bound
    :type max_element: int
    :param closure_rounds: rounds allowed to the return-set closure of dead ends
    :type closure_rounds: int
    """
    def __init__(self, max_nodes, max_element, closure_rounds=3):
        for value in (max_nodes, max_element, closure_rounds):
            assert isinstance(value, int) and not isinstance(value, bool)
        if max_nodes < 1:
            raise ValueError('max_nodes must be at least 1')
        if max_element < 2:
            raise ValueError('max_element must be at least 2')
        if closure_rounds < 1:
            raise ValueError('closure_rounds must be at least 1')
        self.max_nodes = max_nodes
        self.max_element = max_element
        self.closure_rounds = closure_rounds

    def replace(self, **overrides):
        values = self.to_dict()
        values.update(overrides)
        return SearchBudget.from_dict(values)

    @classmethod
    def from_dict(cls, the_dict):
        assert isinstance(the_dict, dict)
        try:
            return SearchBudget(the_dict['max_nodes'], the_dict['max_element'],
                                the_dict.get('closure_rounds', 3))
        except KeyError as e:
            raise ValueError('Missing search budget key: %s' % e)

    def to_dict(self):
        return {
            'max_nodes': self.max_nodes,
            'max_element': self.max_element,
            'closure_rounds': self.closure_rounds}

    def __eq__(self, other):
        return isinstance(other, SearchBudget) and self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash((self.max_nodes, self.max_element, self.closure_rounds))

    def __repr__(self):
        return "<%s.%s - max_nodes=%s max_element=%s closure_rounds=%s>" % (
            __name__, self.__class__.__name__, self.max_nodes, self.max_element, self.closure_rounds)


class Coloring:
    """
    A finite coloring with colors 1..k. Explicit colorings assign a color to
    each of 1..N; symbolic colorings give k color classes as set expressions,
    checked to be disjoint and to cover [1, bound).

    :param k: the number of colors
    :type k: int
    :param assignment: explicit mode: the colors of 1..N, in order
    :type assignment: iterable of int
    :param classes: symbolic mode: the color classes C_1..C_k
    :type classes: iterable of `pyhindman.setexpr.natset.NatSet`
    :param bound: symbolic mode: the bound the classes are checked up to
    :type bound: int
    :raises: *ValueError* on colors out of range, overlapping or missing classes
    """
    def __init__(self, k, assignment=None, classes=None, bound=None):
        assert isinstance(k, int) and k >= 1
        assert (assignment is None) != (classes is None), 'Give either an assignment or classes'
        self.k = k
        self.assignment = None
        self.classes = None
        self.bound = bound
        if assignment is not None:
            self.assignment = tuple(assignment)
            for c in self.assignment:
                assert isinstance(c, int)
                if not 1 <= c <= k:
                    raise ValueError('Color %d is out of range 1..%d' % (c, k))
        else:
            self.classes = tuple(classes)
            if len(self.classes) != k:
                raise ValueError('Expected %d classes, got %d' % (k, len(self.classes)))
            assert isinstance(bound, int) and bound >= 2
            counts = np.zeros(bound, dtype=np.int64)
            for c in self.classes:
                assert isinstance(c, natset.NatSet)
                counts += c.mask(bound)
            counts = counts[1:]
            if (counts > 1).any():
                raise ValueError('Color classes overlap at %d' % (int(np.flatnonzero(counts > 1)[0]) + 1))
            if (counts == 0).any():
                raise ValueError('Color classes miss %d' % (int(np.flatnonzero(counts == 0)[0]) + 1))

    @classmethod
    def explicit(cls, assignment, k=None):
        assignment = tuple(assignment)
        if k is None:
            k = max(assignment) if assignment else 1
        return cls(k, assignment=assignment)

    @classmethod
    def symbolic(cls, classes, bound):
        classes = tuple(classes)
        return cls(len(classes), classes=classes, bound=bound)

    @property
    def is_explicit(self):
        return self.assignment is not None

    @property
    def N(self):
        """
        Domain size of an explicit coloring, None for symbolic ones

        """
        return len(self.assignment) if self.is_explicit else None

    def color_of(self, n):
        """
        The color of a positive natural

        :param n: the natural
        :type n: int
        :returns: int
        :raises: `DomainError` when n lies outside the domain
        """
        if self.is_explicit:
            if not 1 <= n <= len(self.assignment):
                raise exceptions.DomainError('%d lies outside [1..%d]' % (n, len(self.assignment)))
            return self.assignment[n - 1]
        if n < 1:
            raise exceptions.DomainError('Colorings color positive naturals only')
        for i, c in enumerate(self.classes, start=1):
            if c.member(n):
                return i
        raise exceptions.DomainError('%d lies in no color class' % n)

    def class_set(self, i):
        """
        The color class C_i as a set expression

        :param i: the color, 1-based
        :type i: int
        :returns: a `pyhindman.setexpr.natset.NatSet`
        """
        if not 1 <= i <= self.k:
            raise ValueError('Color %d is out of range 1..%d' % (i, self.k))
        if self.is_explicit:
            return natset.ExplicitFinite([n for n, c in enumerate(self.assignment, start=1) if c == i])
        return self.classes[i - 1]

    def to_text(self):
        """
        The coloring file text: a "colors k" line, then one digit per element

        :returns: str
        """
        assert self.is_explicit, 'Only explicit colorings have a file format'
        return 'colors %d\n%s\n' % (self.k, ''.join(str(c) for c in self.assignment))

    def __repr__(self):
        if self.is_explicit:
            return "<%s.%s - k=%d, N=%d>" % (__name__, self.__class__.__name__, self.k, self.N)
        return "<%s.%s - k=%d, symbolic up to %d>" % (__name__, self.__class__.__name__, self.k, self.bound)


class SumWitness:
    """
    A strictly increasing S whose nonempty sums NS(S) all lie in one color class
    (or target set), with the exact certificate.

    :param S: the sequence
    :type S: iterable of int
    :param color: the color index, None for a plain target set
    :type color: int or None
    :param contained: result of the exact NS(S) containment check
    :type contained: bool
    :param domain: N of an explicit coloring, else None
    :type domain: int or None
    :param bound: the evaluation bound B in force, else None
    :type bound: int or None
    :param source: which construction produced it
    :type source: str
    """
    def __init__(self, S, color, contained, domain=None, bound=None, source='search'):
        self.S = strings.increasing_naturals(S, positive=True)
        self.color = color
        self.contained = contained
        self.domain = domain
        self.bound = bound
        self.source = source

    @property
    def ns(self):
        return sums.ns_values(self.S)

    def verify(self, target):
        """
        Re-checks NS(S) inside the target by direct membership

        :param target: the color class
        :type target: `pyhindman.setexpr.natset.NatSet`
        :returns: bool
        """
        return sums.first_escape(self.S, target) is None

    def to_dict(self):
        return {
            'S': list(self.S),
            'color': self.color,
            'ns': list(self.ns),
            'contained': self.contained,
            'domain': self.domain,
            'bound': self.bound,
            'source': self.source}

    def __eq__(self, other):
        return isinstance(other, SumWitness) and (self.S, self.color) == (other.S, other.color)

    def __hash__(self):
        return hash((self.S, self.color))

    def __repr__(self):
        return "<%s.%s - S=%s, color=%s>" % (__name__, self.__class__.__name__, self.S, self.color)
