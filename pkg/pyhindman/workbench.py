#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pyhindman import constants
from pyhindman.driver import driver
from pyhindman.family import checks
from pyhindman.family import family as fam
from pyhindman.oracle import forcing, oracle
from pyhindman.search import searcher
from pyhindman.semigroup.semigroup import check_semigroup
from pyhindman.setexpr import natset
from pyhindman.utils import config as cfg


class Workbench:

    """
    Entry point class binding the library's constructions to one configuration:
    every call runs under the same `FipPolicy`, search budget, expression size
    limit and number of worker processes.

    :param config: the configuration dictionary (if not provided, a default one will be used)
    :type config: dict
    """
    def __init__(self, config=None):
        if config is None:
            self.config = cfg.get_default_config()
        else:
            assert isinstance(config, dict)
            self.config = config
        self._policy = cfg.policy_from(self.config)
        self._budget = cfg.search_budget_from(self.config)

    @property
    def configuration(self):
        """
        Returns the configuration dict for the workbench

        :returns: `dict`

        """
        return self.config

    @property
    def version(self):
        """
        Returns the current version of the PyHindman library

        :returns: `tuple`

        """
        return constants.PYHINDMAN_VERSION

    @property
    def policy(self):
        """
        :returns: the `pyhindman.commons.databoxes.FipPolicy` in force
        """
        return self._policy

    @property
    def budget(self):
        """
        :returns: the `pyhindman.commons.databoxes.SearchBudget` in force
        """
        return self._budget

    @property
    def jobs(self):
        return self.config['workers']['jobs']

    def _checked(self, X):
        natset.check_size(X, self.config['expression']['max_nodes'])
        return X

    def fip(self, U):
        """
        Bounded fip report of a family

        :param U: the family
        :type U: `pyhindman.family.family.Family`
        :returns: a `pyhindman.family.reports.FipReport`
        """
        return checks.bounded_fip(U, self._policy)

    def semigroup(self, U):
        """
        Bounded semigroup report of a family

        :returns: a `pyhindman.family.reports.SemigroupReport`
        """
        return check_semigroup(U, self._policy)

    def search(self, A, m, U=None, part=searcher.PART2):
        """
        Runs a part1 or part2 search for A over U (the trivial family by default)

        :returns: a `pyhindman.search.outcomes.Witness` or `pyhindman.search.outcomes.Extension`
        """
        U = U if U is not None else fam.trivial_family()
        run = searcher.search_part1 if part == searcher.PART1 else searcher.search_part2
        return run(U, self._checked(A), m, self._policy, self._budget)

    def decide(self, A, m, U=None):
        """
        Decides A or its complement over U (the trivial family by default)

        :returns: a `pyhindman.driver.witnesses.Decision`
        """
        U = U if U is not None else fam.trivial_family()
        return driver.extend_decide(U, self._checked(A), m, self._policy, self._budget)

    def hindman(self, coloring, m):
        """
        A monochromatic finite-sums witness of length m for a coloring

        :returns: a `pyhindman.commons.databoxes.SumWitness`
        """
        if not coloring.is_explicit:
            for C in coloring.classes:
                self._checked(C)
        return driver.hindman_witness(coloring, m, self._policy, self._budget, self.jobs)

    def iterated(self, As, m, U=None):
        """
        Iterated decision of the sets As with signs

        :returns: tuple (`pyhindman.driver.witnesses.IteratedWitness`, `pyhindman.family.family.Family`)
        """
        U = U if U is not None else fam.trivial_family()
        return driver.iterated_decide(U, [self._checked(A) for A in As], m, self._policy, self._budget)

    def forcing_bound(self, k, m, n_max, symmetry=True):
        """
        The least N forcing a monochromatic witness of length m in every
        k-coloring of [1..N], up to n_max

        :returns: a `pyhindman.oracle.forcing.ForcingResult`
        """
        return forcing.min_forcing_bound(k, m, n_max, symmetry=symmetry, jobs=self.jobs)

    def verify(self, target, S, color=None):
        """
        Exact containment of NS(S) in a set or a color class

        :returns: bool
        """
        return oracle.verify_witness(target, S, color)

    def __repr__(self):
        return "<%s.%s - policy=%s>" % (__name__, self.__class__.__name__, self._policy.as_tuple())
