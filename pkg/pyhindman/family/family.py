#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pyhindman.commons import exceptions
from pyhindman.commons.databoxes import FipPolicy
from pyhindman.family.parts import PartTable
from pyhindman.setexpr import natset
from pyhindman.utils import strings


class GeneratorSchema:
    """
    A finite description of the generators {body - n | n in index_set}, plus
    body itself when `include_zero` is set.

    :param body: the set being shifted
    :type body: `pyhindman.setexpr.natset.NatSet`
    :param index_set: the admissible shifts
    :type index_set: `pyhindman.setexpr.natset.NatSet`
    :param include_zero: whether n = 0 is admissible regardless of `index_set`
    :type include_zero: bool
    :param finite_shadow: marks schemas whose body is a finite truncation of an
        infinite set (NS(S) for a finite witness S); parts involving them are
        never counted as fip refutations
    :type finite_shadow: bool
    """
    def __init__(self, body, index_set, include_zero=False, finite_shadow=False):
        assert isinstance(body, natset.NatSet)
        assert isinstance(index_set, natset.NatSet)
        assert isinstance(include_zero, bool)
        assert isinstance(finite_shadow, bool)
        self.body = body
        self.index_set = index_set
        self.include_zero = include_zero
        self.finite_shadow = finite_shadow
        self._instances = {}

    def admits(self, n):
        """
        Tells whether body - n is an instance of this schema

        :param n: the shift
        :type n: int
        :returns: bool
        """
        return (n == 0 and self.include_zero) or self.index_set.member(n)

    def admitted_below(self, d):
        """
        The admissible shifts n < d, increasing

        :param d: the instantiation bound
        :type d: int
        :returns: list of int
        """
        admitted = self.index_set.enumerate(d)
        if self.include_zero and (not admitted or admitted[0] != 0):
            admitted.insert(0, 0)
        return admitted

    def instance(self, n):
        """
        The generator body - n

        :param n: an admissible shift
        :type n: int
        :returns: a `pyhindman.setexpr.natset.NatSet`
        :raises: `UnknownIndexError` when n is not admissible
        """
        if n not in self._instances:
            if not self.admits(n):
                raise exceptions.UnknownIndexError('Shift %d is not admitted by %s' % (n, self))
            self._instances[n] = natset.shift(self.body, n)
        return self._instances[n]

    def to_dict(self):
        return {
            'body': str(self.body),
            'index_set': str(self.index_set),
            'include_zero': self.include_zero,
            'finite_shadow': self.finite_shadow}

    def __str__(self):
        zero = ' + {0}' if self.include_zero else ''
        return '%s - n, n in %s%s' % (self.body, self.index_set, zero)

    def __repr__(self):
        return "<%s.%s - %s%s>" % (__name__, self.__class__.__name__, str(self),
                                   ' (finite shadow)' if self.finite_shadow else '')


class TailSchema(GeneratorSchema):
    """
    The schema of tails: its instance at n is [n, infinity) instead of a shift

    :param index_set: the admissible n
    :type index_set: `pyhindman.setexpr.natset.NatSet`
    """
    def __init__(self, index_set, include_zero=True):
        super().__init__(natset.naturals(), index_set, include_zero=include_zero)

    def instance(self, n):
        if n not in self._instances:
            if not self.admits(n):
                raise exceptions.UnknownIndexError('Shift %d is not admitted by %s' % (n, self))
            self._instances[n] = natset.Tail(n)
        return self._instances[n]

    def __str__(self):
        zero = ' + {0}' if self.include_zero else ''
        return '[n,inf), n in %s%s' % (self.index_set, zero)


class Family:
    """
    An ordered list of generator sets and generator schemas. At a policy with
    instantiation bound d, the items of the family are its generators followed
    by the instances body - n (n < d) of each schema in turn; item positions
    are stable under appends.

    :param generators: the generator sets
    :type generators: iterable of `pyhindman.setexpr.natset.NatSet`
    :param schemas: the generator schemas
    :type schemas: iterable of `GeneratorSchema`
    :param provenance: lineage notes
    :type provenance: iterable of str
    """
    def __init__(self, generators=(), schemas=(), provenance=()):
        self.generators = tuple(generators)
        self.schemas = tuple(schemas)
        self.provenance = tuple(provenance)
        for g in self.generators:
            assert isinstance(g, natset.NatSet)
        for s in self.schemas:
            assert isinstance(s, GeneratorSchema)
        self._layouts = {}
        self._tables = {}

    def instances(self, policy):
        """
        The (schema index, n) pairs of schema instances at a policy, in pairing order

        :param policy: the policy
        :type policy: `pyhindman.commons.databoxes.FipPolicy`
        :returns: list of tuple
        """
        assert isinstance(policy, FipPolicy)
        d = policy.instance_bound
        if d not in self._layouts:
            self._layouts[d] = [(j, n) for j, schema in enumerate(self.schemas)
                                for n in schema.admitted_below(d)]
        return self._layouts[d]

    def items(self, policy):
        """
        The member sets of the family at a policy, in item order

        :returns: list of `pyhindman.setexpr.natset.NatSet`
        """
        return list(self.generators) + [self.schemas[j].instance(n) for j, n in self.instances(policy)]

    def item_labels(self, policy):
        """
        Labels of the items at a policy: "g<i>" for generators, "s<j>[<n>]" for
        schema instances

        :returns: list of str
        """
        return ['g%d' % i for i in range(len(self.generators))] + \
               ['s%d[%d]' % pair for pair in self.instances(policy)]

    def item_real(self, policy):
        """
        For each item, whether it counts towards fip refutations (schema
        instances of finite shadows do not)

        :returns: list of bool
        """
        return [True] * len(self.generators) + \
               [not self.schemas[j].finite_shadow for j, _ in self.instances(policy)]

    def size(self, policy):
        return len(self.generators) + len(self.instances(policy))

    def labels_of(self, F, policy):
        """
        Labels of the items named by an index set

        :param F: item positions
        :type F: tuple of int
        :returns: list of str
        """
        instances = self.instances(policy)
        return [strings.item_label(i, len(self.generators), instances) for i in F]

    def position_of(self, item, policy):
        """
        Item position of a generator index or of a (schema index, n) pair

        :param item: `int` generator index or `tuple` (schema index, n)
        :returns: int
        :raises: `UnknownGeneratorError` when the family has no such item
        """
        if isinstance(item, int) and not isinstance(item, bool):
            if 0 <= item < len(self.generators):
                return item
            raise exceptions.UnknownGeneratorError('No generator with index %d' % item)
        pair = tuple(item)
        instances = self.instances(policy)
        if pair in instances:
            return len(self.generators) + instances.index(pair)
        raise exceptions.UnknownGeneratorError('No schema instance %s below the instantiation bound' % (pair,))

    def part_table(self, policy):
        """
        The table of parts U_F, |F| <= f_max, at a policy (computed once)

        :returns: a `pyhindman.family.parts.PartTable`
        """
        if policy not in self._tables:
            self._tables[policy] = PartTable(self.items(policy), self.item_real(policy), policy)
        return self._tables[policy]

    def to_dict(self):
        return {
            'generators': [str(g) for g in self.generators],
            'schemas': [s.to_dict() for s in self.schemas],
            'provenance': list(self.provenance)}

    def __getstate__(self):
        state = self.__dict__.copy()
        state['_tables'] = {}
        return state

    def __repr__(self):
        return "<%s.%s - generators=%d, schemas=%d>" % (
            __name__, self.__class__.__name__, len(self.generators), len(self.schemas))


def trivial_family():
    """
    The family {N}

    :returns: a `Family`
    """
    return Family(generators=[natset.naturals()], provenance=['trivial'])


def frechet_family():
    """
    The family of all tails [k, infinity), as a single schema over N

    :returns: a `Family`
    """
    return Family(schemas=[TailSchema(natset.naturals())], provenance=['frechet'])


def family_part(U, F, policy):
    """
    U_F, the intersection of the items of U named by F; F = () gives N

    :param U: the family
    :type U: `Family`
    :param F: item positions
    :type F: iterable of int
    :param policy: the policy fixing schema instances
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :returns: a `pyhindman.setexpr.natset.NatSet`
    :raises: `UnknownIndexError` when F names a position U does not have
    """
    items = U.items(policy)
    chosen = []
    for i in F:
        if not 0 <= i < len(items):
            raise exceptions.UnknownIndexError('Family has no item at position %s' % (i,))
        chosen.append(items[i])
    if not chosen:
        return natset.naturals()
    return natset.intersect(chosen)


def append(U, generators=(), schemas=(), note=None, max_nodes=None):
    """
    A new family with the supplied generators and schemas appended to U's;
    U is left unchanged.

    :param U: the family
    :type U: `Family`
    :param generators: a set or a list of sets
    :type generators: `NatSet` or iterable of `NatSet`
    :param schemas: a schema or a list of schemas
    :type schemas: `GeneratorSchema` or iterable of `GeneratorSchema`
    :param note: a provenance note
    :type note: str
    :param max_nodes: expression-size limit for the new sets
    :type max_nodes: int
    :returns: a `Family`
    :raises: `ExpressionSizeError` when a new set is too large
    """
    assert isinstance(U, Family)
    if isinstance(generators, natset.NatSet):
        generators = [generators]
    if isinstance(schemas, GeneratorSchema):
        schemas = [schemas]
    generators = list(generators)
    schemas = list(schemas)
    if max_nodes is not None:
        for g in generators:
            natset.check_size(g, max_nodes)
        for s in schemas:
            natset.check_size(s.body, max_nodes)
            natset.check_size(s.index_set, max_nodes)
    provenance = U.provenance + ((note,) if note else ())
    return Family(U.generators + tuple(generators), U.schemas + tuple(schemas), provenance)
