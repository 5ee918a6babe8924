#!/usr/bin/env python
# -*- coding: utf-8 -*-

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from pyhindman.commons.databoxes import FipPolicy
from pyhindman.setexpr import natset

# shifts evaluated per vectorised batch
BATCH = 1024


class TildeIndexSet(natset.NatSet):
    """
    The lazily evaluated set {n | X - n is decided by U at the policy}, that is
    the shifts n for which some nonempty part U_F lies inside X - n on [0, B).
    Verdicts are computed in batches of shifts and memoised.

    :param target: the set X
    :type target: `pyhindman.setexpr.natset.NatSet`
    :param family: the family U
    :type family: `pyhindman.family.family.Family`
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    """
    def __init__(self, target, family, policy):
        assert isinstance(target, natset.NatSet)
        assert isinstance(policy, FipPolicy)
        self.target = target
        self.family = family
        self.policy = policy
        self.node_count = 1 + target.node_count
        self._known = np.zeros(0, dtype=bool)

    def _extend(self, bound):
        have = len(self._known)
        if bound <= have:
            return
        bound = max(bound, 2 * have)
        B = self.policy.bound
        table = self.family.part_table(self.policy)
        windows = sliding_window_view(self.target.mask(B + bound), B)
        verdicts = [self._known]
        for start in range(have, bound, BATCH):
            stop = min(start + BATCH, bound)
            targets = np.packbits(windows[start:stop], axis=1)
            verdicts.append(table.contained_any(targets))
        self._known = np.concatenate(verdicts)

    def member(self, n):
        self._extend(n + 1)
        return bool(self._known[n])

    def _compute_mask(self, bound):
        self._extend(bound)
        return self._known[:bound].copy()

    def __getstate__(self):
        state = self.__dict__.copy()
        state.pop('_mask', None)
        return state

    def __str__(self):
        return '{n | (%s - n) decided by family}' % (self.target,)
