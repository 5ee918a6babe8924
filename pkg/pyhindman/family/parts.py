#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Bit-packed tables of the parts U_F (|F| <= f_max) of a family, restricted to
[0, B). Items with equal masks are merged first, then parts are built level by
level (a level-k part is a level-(k-1) part intersected with one more item) and
deduplicated, except for the last level, which is streamed in blocks.
"""

import itertools

import numpy as np

POPCOUNT = np.array([bin(i).count('1') for i in range(256)], dtype=np.int64)

# bytes processed per vectorised containment step
CHUNK_BYTES = 1 << 25


def pack(mask):
    """
    Packs a boolean vector into bytes, most significant bit first

    :param mask: the mask
    :type mask: numpy bool array
    :returns: numpy uint8 array
    """
    return np.packbits(np.asarray(mask, dtype=bool))


def popcount(rows):
    """
    Number of set bits of each packed row

    :param rows: a 2D uint8 array
    :returns: numpy int array
    """
    return POPCOUNT[rows].sum(axis=1)


class PartTable:
    """
    Parts of a family at a policy.

    :param items: the family items, in item order
    :type items: list of `pyhindman.setexpr.natset.NatSet`
    :param real: for each item, whether it counts towards fip refutations
    :type real: list of bool
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    """
    def __init__(self, items, real, policy):
        assert len(items) == len(real)
        self.policy = policy
        self.bound = policy.bound
        self.width = (self.bound + 7) // 8
        self.item_rows = np.array([pack(item.mask(self.bound)) for item in items],
                                  dtype=np.uint8).reshape(len(items), self.width)
        self.item_real = np.array(real, dtype=bool)
        self.full_row = pack(np.ones(self.bound, dtype=bool))
        self.tail_row = pack(np.arange(self.bound) >= policy.tail_start)

        class_of = {}
        class_rows = []
        class_real = []
        for row, is_real in zip(self.item_rows, self.item_real):
            key = row.tobytes()
            if key in class_of:
                c = class_of[key]
                class_real[c] = class_real[c] or bool(is_real)
            else:
                class_of[key] = len(class_rows)
                class_rows.append(row)
                class_real.append(bool(is_real))
        self.class_rows = np.array(class_rows, dtype=np.uint8).reshape(len(class_rows), self.width)
        self.class_real = np.array(class_real, dtype=bool)
        self._levels = None
        self._has_empty = None
        self.memo = {}

    @property
    def size(self):
        return len(self.item_rows)

    def levels(self):
        """
        Deduplicated parts first reached at levels 0 .. f_max - 1, as a list of
        (rows, real) pairs

        :returns: list of tuple
        """
        if self._levels is None:
            seen = {self.full_row.tobytes(): True}
            levels = [(self.full_row[None, :].copy(), np.array([True]))]
            for _ in range(1, self.policy.max_part_size):
                new_rows = []
                new_real = []
                for rows, real in self._products(*levels[-1]):
                    for row, is_real in zip(rows, real):
                        key = row.tobytes()
                        known = seen.get(key)
                        if known is None or (is_real and not known):
                            seen[key] = bool(is_real) or bool(known)
                            new_rows.append(row)
                            new_real.append(bool(is_real))
                levels.append((np.array(new_rows, dtype=np.uint8).reshape(len(new_rows), self.width),
                               np.array(new_real, dtype=bool)))
            self._levels = levels
        return self._levels

    def _products(self, rows, real):
        if not len(rows):
            return
        for c in range(len(self.class_rows)):
            yield rows & self.class_rows[c], real & self.class_real[c]

    def blocks(self):
        """
        Yields (k, rows, real) blocks covering every part with |F| <= f_max, by
        increasing k; every part with |F| = k not seen at lower levels is in a
        level-k block

        """
        levels = self.levels()
        for k, (rows, real) in enumerate(levels):
            if len(rows):
                yield k, rows, real
        for rows, real in self._products(*levels[-1]):
            yield len(levels), rows, real

    def first_level(self, predicate):
        """
        The least k such that some part with |F| = k satisfies `predicate`

        :param predicate: maps (rows, real) to a boolean vector
        :type predicate: callable
        :returns: int or None
        """
        for k, rows, real in self.blocks():
            if predicate(rows, real).any():
                return k
        return None

    def any_part(self, predicate):
        return self.first_level(predicate) is not None

    def row_of(self, F):
        """
        Packed mask of U_F

        :param F: item positions
        :type F: tuple of int
        :returns: numpy uint8 array
        """
        if not F:
            return self.full_row
        return np.bitwise_and.reduce(self.item_rows[list(F)], axis=0)

    def find_part(self, predicate, k):
        """
        Shortlex-least F with |F| >= k whose part satisfies `predicate`; `k`
        is meant to come from `first_level`

        :returns: tuple of int or None
        """
        for size in range(k, self.policy.max_part_size + 1):
            for F in itertools.combinations(range(self.size), size):
                row = self.row_of(F)
                is_real = bool(self.item_real[list(F)].all()) if F else True
                if predicate(row[None, :], np.array([is_real]))[0]:
                    return F
        return None

    def shortlex_least(self, predicate):
        """
        Shortlex-least F with |F| <= f_max whose part satisfies `predicate`

        :returns: tuple of int or None
        """
        k = self.first_level(predicate)
        if k is None:
            return None
        return self.find_part(predicate, k)

    def has_empty_part(self):
        """
        Whether some part is empty on [0, B)

        :returns: bool
        """
        if self._has_empty is None:
            self._has_empty = self.any_part(lambda rows, real: ~rows.any(axis=1))
        return self._has_empty

    def thin(self, rows):
        """
        Parts with fewer than t elements and none in the tail window

        :returns: numpy bool array
        """
        return (popcount(rows) < self.policy.min_count) & ~(rows & self.tail_row).any(axis=1)

    def alive(self, rows):
        """
        Parts with at least t elements and some element in the tail window

        :returns: numpy bool array
        """
        return (popcount(rows) >= self.policy.min_count) & (rows & self.tail_row).any(axis=1)

    def contained_any(self, targets):
        """
        For each packed target row, whether some nonempty part is contained in it

        :param targets: 2D uint8 array, one packed target per row
        :type targets: numpy array
        :returns: numpy bool array
        """
        targets = np.asarray(targets, dtype=np.uint8).reshape(-1, self.width)
        found = np.zeros(len(targets), dtype=bool)
        outside = np.bitwise_not(targets)
        for _, rows, _ in self.blocks():
            rows = rows[rows.any(axis=1)]
            pending = np.flatnonzero(~found)
            if not len(pending):
                break
            if not len(rows):
                continue
            step = max(1, CHUNK_BYTES // (len(rows) * self.width))
            for start in range(0, len(pending), step):
                chosen = pending[start:start + step]
                escapes = (rows[None, :, :] & outside[chosen][:, None, :]).any(axis=2)
                found[chosen] |= ~escapes.all(axis=1)
        return found

    def describe(self, F):
        """
        (count, max element) of U_F on [0, B); max element is None for an empty part

        :returns: tuple
        """
        elements = np.flatnonzero(np.unpackbits(self.row_of(F))[:self.bound])
        return len(elements), (int(elements[-1]) if len(elements) else None)

    def __repr__(self):
        return "<%s.%s - items=%d, distinct=%d, bound=%d>" % (
            __name__, self.__class__.__name__, self.size, len(self.class_rows), self.bound)
