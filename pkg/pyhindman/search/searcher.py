#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Bounded depth-first searches over trees of increasing sequences. Children are
tried smallest first (and, in iterated searches, sign +1 before -1), so the
first witness found is canonical. Dead ends are closed in backtracking order,
which is the Kleene-Brouwer order of the explored tree, by enlarging the
accumulated family. A tree that is exhausted without a witness or a closed
root is searched again with a doubled candidate window, up to the bound B.
"""

import logging

from pyhindman.commons import exceptions
from pyhindman.commons.databoxes import FipPolicy, SearchBudget
from pyhindman.commons.enums import SignEnum
from pyhindman.config import DEFAULT_CONFIG
from pyhindman.family import checks
from pyhindman.family import family as fam
from pyhindman.search.enumeration import canonical_finite_set
from pyhindman.search.outcomes import Extension, PathStep, SearchDiagnostics, SuffixCertificate, Witness
from pyhindman.search.tree import SearchNode
from pyhindman.semigroup import extensions
from pyhindman.setexpr import natset, sums

logger = logging.getLogger(__name__)

PART1 = 'part1'
PART2 = 'part2'
ITERATED = 'iterated'


def default_budget():
    return SearchBudget.from_dict(DEFAULT_CONFIG['search'])


class Searcher:
    """
    Runs one search over the tree of a family U.

    :param U: the family whose parts U_{F_i} the entries s_i are drawn from
    :type U: `pyhindman.family.family.Family`
    :param policy: the policy of every fip check
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :param budget: node and element bounds
    :type budget: `pyhindman.commons.databoxes.SearchBudget`
    :param domain: when set, sums must stay within [1..domain] and fip node
        conditions are not evaluated
    :type domain: int or None
    """
    def __init__(self, U, policy, budget=None, domain=None):
        assert isinstance(U, fam.Family)
        assert isinstance(policy, FipPolicy)
        budget = budget if budget is not None else default_budget()
        assert isinstance(budget, SearchBudget)
        if domain is not None:
            assert isinstance(domain, int) and domain >= 0
        self.U = U
        self.policy = policy
        self.budget = budget
        self.domain = domain
        self.item_count = U.size(policy)
        self.diagnostics = SearchDiagnostics()
        self.window = budget.max_element
        self._regions = {}

    # tree shape

    def _tick(self, depth):
        self.diagnostics.visit(depth)
        if self.diagnostics.nodes_expanded > self.budget.max_nodes:
            raise exceptions.BudgetExhausted('Node budget of %d exhausted' % self.budget.max_nodes,
                                             diagnostics=self.diagnostics)

    def _region(self, i):
        if i not in self._regions:
            F = canonical_finite_set(i)
            inside = [j for j in F if j < self.item_count]
            skipped = tuple(j for j in F if j >= self.item_count)
            if skipped:
                self.diagnostics.skipped_indices.append((i, skipped))
            self._regions[i] = (fam.family_part(self.U, inside, self.policy), F, skipped)
        return self._regions[i]

    def _candidates(self, node, part):
        if self.domain is not None:
            upper = self.domain - sum(node.seq) + 1
        else:
            upper = self.window
        return [s for s in range(node.last + 1, upper) if part.member(s)]

    def _path(self, node):
        path = []
        for i, s in enumerate(node.seq, start=1):
            _, F, skipped = self._region(i)
            path.append(PathStep(i, s, F, skipped))
        return path

    # node conditions

    def _shifts_fip(self, sets_and_sums):
        shifted = [natset.shift(A, m) for A, values in sets_and_sums for m in values]
        return checks.bounded_fip(fam.append(self.U, shifted), self.policy)

    def _admissible(self, mode, A, child):
        s = child.seq[-1]
        if mode == PART2:
            parent_fs = sums.fs_values(child.seq[:-1])
            if not all(A.member(s + x) for x in parent_fs):
                return False
        if self.domain is not None:
            return True
        return self._shifts_fip([(A, child.fs())]).verified

    def _admissible_iterated(self, As, child):
        s = child.seq[-1]
        signed = [natset.signed(A, b) for A, b in zip(As, child.signs)]
        for j, target in enumerate(signed):
            if j >= child.depth:
                break
            if not all(target.member(s + x) for x in sums.fs_values(child.seq[j:-1])):
                return False
        if self.domain is not None:
            return True
        pairs = [(target, sums.fs_values(child.seq[j:])) for j, target in enumerate(signed) if j < child.depth]
        return self._shifts_fip(pairs).verified

    # dead ends

    def _close(self, mode, A, node, V):
        A_sigma = node.shifted_intersection(A)
        if checks.bounded_fip(fam.append(V, A_sigma), self.policy).refuted:
            self.diagnostics.closure_log.append((node.seq, 'refuted'))
            return V, True
        part, _, _ = self._region(node.depth + 1)
        regions = [part, natset.Tail(node.last + 1)]
        if mode == PART2:
            regions.append(A_sigma)
        attempts = (
            ('pair_failure', lambda: extensions.extend_after_pair_failure(
                V, A_sigma, natset.intersect(regions), self.policy)),
            ('return_set', lambda: extensions.extend_by_return_set(
                V, A_sigma, self.policy, self.budget.closure_rounds)),
        )
        for step, attempt in attempts:
            try:
                W = attempt()
            except (exceptions.LemmaError, exceptions.FamilyError) as e:
                logger.debug('Closure step %s at %s failed: %s', step, node.seq, e)
                continue
            if extensions.closes(W, A_sigma, self.policy):
                self.diagnostics.closure_log.append((node.seq, step))
                return W, True
        logger.debug('Dead end %s left open', node.seq)
        self.diagnostics.unclosed.append(node.seq)
        return V, False

    # traversal

    def _explore(self, mode, A, m, node, V):
        if node.depth == m:
            return node, V
        part, F, _ = self._region(node.depth + 1)
        for s in self._candidates(node, part):
            self._tick(node.depth + 1)
            child = node.child(s, F)
            if not self._admissible(mode, A, child):
                continue
            found, V = self._explore(mode, A, m, child, V)
            if found is not None:
                return found, V
        if self.domain is None and node.depth > 0:
            V, _ = self._close(mode, A, node, V)
        return None, V

    def _explore_iterated(self, As, length, node):
        if node.depth == length:
            return node
        i = node.depth + 1
        part, F, _ = self._region(i)
        signs = SignEnum.items() if i <= len(As) else [None]
        for b in signs:
            base = node.with_sign(b) if b is not None else node
            for s in self._candidates(node, part):
                self._tick(i)
                child = base.child(s, F)
                if not self._admissible_iterated(As, child):
                    continue
                found = self._explore_iterated(As, length, child)
                if found is not None:
                    return found
        return None

    def _require_fip(self):
        if self.domain is not None:
            return
        report = checks.bounded_fip(self.U, self.policy)
        if not report.verified:
            raise exceptions.PreconditionNotWitnessed('The search family fails its fip check (%s)' % report.verdict)

    def _extension(self, V, A):
        certificate = checks.bounded_fip(fam.append(V, A), self.policy)
        if not certificate.refuted:
            raise exceptions.BudgetExhausted('The accumulated family does not refute the target set',
                                             diagnostics=self.diagnostics)
        return Extension(V, certificate, self.policy, self.diagnostics)

    def _witness(self, mode, A, node):
        S = node.seq
        node_fip = shadow_fip = None
        if self.domain is None:
            node_fip = self._shifts_fip([(A, node.fs())])
            shadow = fam.GeneratorSchema(sums.nonempty_sums(S), sums.finite_sums(S), finite_shadow=True)
            shadow_fip = checks.bounded_fip(fam.append(self.U, schemas=[shadow]), self.policy)
        contained = (sums.first_escape(S, A) is None) if mode == PART2 else None
        return Witness(S, None, self._path(node), contained, node_fip, shadow_fip, [], self.policy, self.diagnostics)

    def run(self, mode, A, m):
        """
        Runs a part1 or part2 search for a sequence of length m

        :returns: a `Witness` or an `Extension`
        :raises: `BudgetExhausted`; `NoWitnessAtBound` when an explicit-domain
            search exhausts its tree
        """
        assert mode in (PART1, PART2)
        assert isinstance(A, natset.NatSet)
        assert isinstance(m, int) and m >= 1
        self._require_fip()
        root = SearchNode()
        if self.domain is None:
            report = checks.bounded_fip(fam.append(self.U, A), self.policy)
            if report.refuted:
                return Extension(self.U, report, self.policy, self.diagnostics)
            if not report.verified:
                V, closed = self._close(mode, A, root, self.U)
                if not closed:
                    raise exceptions.BudgetExhausted('The root fails its condition and cannot be closed',
                                                     diagnostics=self.diagnostics)
                return self._extension(V, A)
        while True:
            found, V = self._explore(mode, A, m, root, self.U)
            if found is not None:
                logger.info('%s search found %s', mode, found.seq)
                return self._witness(mode, A, found)
            if self.domain is not None:
                raise exceptions.NoWitnessAtBound('No sequence of length %d with sums in [1..%d]' % (m, self.domain))
            V, closed = self._close(mode, A, root, V)
            if closed:
                logger.info('%s search closed its tree with %d dead ends', mode, len(self.diagnostics.closure_log))
                return self._extension(V, A)
            if not self._widen():
                raise exceptions.BudgetExhausted('The search tree is exhausted but its root cannot be closed',
                                                 diagnostics=self.diagnostics)

    def _widen(self):
        """
        Doubles the candidate window, up to the policy bound, and forgets the
        dead ends of the narrower tree

        :returns: False when the window already reaches the bound
        """
        ceiling = max(self.policy.bound, self.budget.max_element)
        if self.domain is not None or self.window >= ceiling:
            return False
        self.window = min(2 * self.window, ceiling)
        self.diagnostics.widen(self.window)
        logger.debug('Candidate window widened to %d', self.window)
        return True

    def run_iterated(self, As, m):
        """
        Runs an iterated search for a sequence of length max(m, len(As)) with
        one sign per set

        :returns: a `Witness`
        :raises: `BudgetExhausted`
        """
        As = list(As)
        assert As, 'At least one set is needed'
        assert isinstance(m, int) and m >= 1
        self._require_fip()
        length = max(m, len(As))
        found = self._explore_iterated(As, length, SearchNode(signs=()))
        while found is None:
            if not self._widen():
                raise exceptions.BudgetExhausted('The iterated search tree is exhausted without a witness',
                                                 diagnostics=self.diagnostics)
            found = self._explore_iterated(As, length, SearchNode(signs=()))
        logger.info('Iterated search found %s with signs %s', found.seq, found.signs)
        suffixes = []
        for j, b in enumerate(found.signs):
            suffix = found.seq[j:]
            target = natset.signed(As[j], b)
            suffixes.append(SuffixCertificate(j, b, suffix, sums.ns_values(suffix),
                                              sums.first_escape(suffix, target) is None))
        node_fip = None
        if self.domain is None:
            node_fip = self._shifts_fip([(natset.signed(A, b), sums.fs_values(found.seq[j:]))
                                         for j, (A, b) in enumerate(zip(As, found.signs))])
        return Witness(found.seq, found.signs, self._path(found), None, node_fip, None, suffixes,
                       self.policy, self.diagnostics)


def search_part1(U, A, m, policy, budget=None, domain=None):
    """
    Searches for S of length m, drawn from the parts U_{F_i}, such that
    U + {A - n | n in FS(S)} passes fip; on exhaustion, closes the tree into
    a family V with fip refuting V + {A}

    :param U: the family
    :type U: `pyhindman.family.family.Family`
    :param A: the set
    :type A: `pyhindman.setexpr.natset.NatSet`
    :param m: target length
    :type m: int
    :param policy: the policy
    :type policy: `pyhindman.commons.databoxes.FipPolicy`
    :param budget: search bounds
    :type budget: `pyhindman.commons.databoxes.SearchBudget`
    :param domain: optional explicit domain N
    :type domain: int
    :returns: a `pyhindman.search.outcomes.Witness` or `pyhindman.search.outcomes.Extension`
    :raises: `BudgetExhausted`
    """
    return Searcher(U, policy, budget, domain).run(PART1, A, m)


def search_part2(U, A, m, policy, budget=None, domain=None):
    """
    As `search_part1`, with the extra node condition NS(sigma) inside A, checked
    exactly

    :returns: a `pyhindman.search.outcomes.Witness` or `pyhindman.search.outcomes.Extension`
    :raises: `BudgetExhausted`; `NoWitnessAtBound` in explicit-domain mode
    """
    return Searcher(U, policy, budget, domain).run(PART2, A, m)


def search_iterated(U, As, m, policy, budget=None, domain=None):
    """
    Searches for S and signs b_i with NS of the suffix from s_i inside b_i.A_i
    for each i, plus fip of U + {b_i.A_i - n | n in FS(suffix_i)}

    :returns: a `pyhindman.search.outcomes.Witness`
    :raises: `BudgetExhausted`
    """
    return Searcher(U, policy, budget, domain).run_iterated(As, m)
