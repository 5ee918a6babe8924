#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pyhindman.commons.enums import SignEnum
from pyhindman.setexpr import natset, sums
from pyhindman.utils import strings


class SearchNode:
    """
    A node of a search tree: a strictly increasing sequence of positive
    naturals, the signs chosen so far (iterated searches only) and the
    canonical finite sets F_i whose parts the entries were drawn from.

    :param seq: the sequence
    :type seq: iterable of int
    :param signs: the signs b_i, or None outside iterated searches
    :type signs: iterable of int or None
    :param satisfied_constraints: (i, F_i) pairs whose memberships were checked
    :type satisfied_constraints: iterable of tuple
    """
    def __init__(self, seq=(), signs=None, satisfied_constraints=()):
        self.seq = strings.increasing_naturals(seq, positive=True)
        if signs is not None:
            signs = tuple(signs)
            for b in signs:
                assert b in SignEnum.items(), 'Signs are +1 or -1'
            if len(signs) > len(self.seq) + 1:
                raise ValueError('At most one sign may run ahead of the sequence')
        self.signs = signs
        self.satisfied_constraints = tuple(satisfied_constraints)

    @property
    def depth(self):
        return len(self.seq)

    @property
    def last(self):
        return self.seq[-1] if self.seq else 0

    def child(self, s, F=None):
        """
        The node extended by s; signs are carried over unchanged

        :param s: the next entry, greater than the last
        :type s: int
        :param F: the canonical finite set s was drawn from
        :type F: tuple of int
        :returns: a `SearchNode`
        """
        constraints = self.satisfied_constraints
        if F is not None:
            constraints = constraints + ((self.depth + 1, tuple(F)),)
        return SearchNode(self.seq + (s,), self.signs, constraints)

    def with_sign(self, b):
        signs = (self.signs or ()) + (b,)
        return SearchNode(self.seq, signs, self.satisfied_constraints)

    def fs(self):
        """
        FS of the sequence, 0 included

        :returns: tuple of int
        """
        return sums.fs_values(self.seq)

    def ns(self):
        return sums.ns_values(self.seq)

    def suffix(self, i):
        """
        The entries from position i on (0-based)

        :returns: tuple of int
        """
        return self.seq[i:]

    def shifted_intersection(self, A):
        """
        The set of s with A - m containing s for every m in FS(seq), that is
        the intersection of the shifts of A by FS(seq)

        :param A: the set
        :type A: `pyhindman.setexpr.natset.NatSet`
        :returns: a `pyhindman.setexpr.natset.NatSet`
        """
        return natset.intersect([natset.shift(A, m) for m in self.fs()])

    def __eq__(self, other):
        return isinstance(other, SearchNode) and (self.seq, self.signs) == (other.seq, other.signs)

    def __hash__(self):
        return hash((self.seq, self.signs))

    def __repr__(self):
        signs = '' if self.signs is None else ', signs=%s' % (self.signs,)
        return "<%s.%s - seq=%s%s>" % (__name__, self.__class__.__name__, self.seq, signs)


def iter_postorder(children, root=()):
    """
    Depth-first post-order traversal of a finite tree of sequences, children
    visited in increasing label order

    :param children: maps a sequence (tuple) to its child labels
    :type children: callable
    :param root: the root sequence
    :type root: tuple
    :returns: generator of tuple
    """
    stack = [(tuple(root), iter(sorted(children(tuple(root)))))]
    while stack:
        node, pending = stack[-1]
        label = next(pending, None)
        if label is None:
            stack.pop()
            yield node
        else:
            child = node + (label,)
            stack.append((child, iter(sorted(children(child)))))
