#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pyhindman.setexpr import natset
from pyhindman.utils import strings


def fs_values(S):
    """
    FS(S) as a sorted tuple: all subset sums of S, 0 (the empty sum) included

    :param S: strictly increasing naturals, each at least 1
    :type S: iterable of int
    :returns: tuple of int
    :raises: *ValueError* when S is not strictly increasing or holds 0
    """
    return natset.subset_sums(strings.increasing_naturals(S, positive=True))


def ns_values(S):
    """
    NS(S) as a sorted tuple: FS(S) without 0

    """
    return fs_values(S)[1:]


def finite_sums(S):
    """
    The explicit finite set FS(S)

    :param S: strictly increasing naturals, each at least 1
    :type S: iterable of int
    :returns: a `pyhindman.setexpr.natset.ExplicitFinite`
    """
    return natset.ExplicitFinite(fs_values(S))


def nonempty_sums(S):
    """
    The explicit finite set NS(S) = FS(S) \\ {0}

    :param S: strictly increasing naturals, each at least 1
    :type S: iterable of int
    :returns: a `pyhindman.setexpr.natset.ExplicitFinite`
    """
    return natset.ExplicitFinite(ns_values(S))


def first_escape(S, target):
    """
    The least element of NS(S) outside `target`, or None when NS(S) is
    contained in it. The check is exact.

    :param S: strictly increasing naturals, each at least 1
    :type S: iterable of int
    :param target: the set to test against
    :type target: `pyhindman.setexpr.natset.NatSet`
    :returns: int or None
    """
    for value in ns_values(S):
        if not target.member(value):
            return value
    return None
