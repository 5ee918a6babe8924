#!/usr/bin/env python
# -*- coding: utf-8 -*-

from pyhindman.family import checks
from pyhindman.family import family as fam
from pyhindman.setexpr import natset, sums


class PathStep:
    """
    One step of a witness path: entry s_i was drawn from the part named by the
    canonical finite set F_i; `skipped` lists the positions of F_i beyond the
    family's items.

    """
    def __init__(self, i, s, F, skipped=()):
        self.i = i
        self.s = s
        self.F = tuple(F)
        self.skipped = tuple(skipped)

    def to_dict(self):
        return {'i': self.i, 's': self.s, 'F': list(self.F), 'skipped': list(self.skipped)}

    def __repr__(self):
        return "<%s.%s - s_%d=%d from F=%s>" % (__name__, self.__class__.__name__, self.i, self.s, self.F)


class SuffixCertificate:
    """
    Exact check that NS of the suffix from position i lies in b_i.A_i

    """
    def __init__(self, i, sign, suffix, ns, contained):
        self.i = i
        self.sign = sign
        self.suffix = tuple(suffix)
        self.ns = tuple(ns)
        self.contained = contained

    def to_dict(self):
        return {'i': self.i, 'sign': self.sign, 'suffix': list(self.suffix),
                'ns': list(self.ns), 'contained': self.contained}

    def __repr__(self):
        return "<%s.%s - i=%d, sign=%+d, contained=%s>" % (__name__, self.__class__.__name__,
                                                           self.i, self.sign, self.contained)


class SearchDiagnostics:
    """
    Bookkeeping of a search run: nodes expanded, deepest level reached, indices
    of canonical finite sets that fell outside the family, the dead ends closed
    (in backtracking order), the dead ends that could not be closed and the
    wider candidate windows retried after an exhausted tree.

    """
    def __init__(self):
        self.nodes_expanded = 0
        self.max_depth = 0
        self.skipped_indices = []
        self.closure_log = []
        self.unclosed = []
        self.windows = []

    def widen(self, window):
        self.windows.append(window)
        self.closure_log = []
        self.unclosed = []

    def visit(self, depth):
        self.nodes_expanded += 1
        self.max_depth = max(self.max_depth, depth)

    def to_dict(self):
        return {
            'nodes_expanded': self.nodes_expanded,
            'max_depth': self.max_depth,
            'skipped_indices': [list(s) for s in self.skipped_indices],
            'closure_log': [(list(seq), step) for seq, step in self.closure_log],
            'unclosed': [list(seq) for seq in self.unclosed],
            'windows': list(self.windows)}

    def __repr__(self):
        return "<%s.%s - nodes=%d, max_depth=%d, closures=%d, unclosed=%d>" % (
            __name__, self.__class__.__name__, self.nodes_expanded, self.max_depth,
            len(self.closure_log), len(self.unclosed))


class Witness:
    """
    A search ended with a sequence S of the target length.

    :param S: the sequence
    :type S: tuple of int
    :param signs: the signs b_i of an iterated search, else None
    :type signs: tuple of int or None
    :param path: the path certificate
    :type path: list of `PathStep`
    :param ns_contained: exact NS(S) containment in A (None when the search
        did not require it)
    :type ns_contained: bool or None
    :param node_fip: fip report of U + {A - n | n in FS(S)} (None in explicit-domain mode)
    :type node_fip: `pyhindman.family.reports.FipReport`
    :param shadow_fip: fip report of U + {NS(S) - n | n in FS(S)}
    :type shadow_fip: `pyhindman.family.reports.FipReport`
    :param suffixes: per-suffix certificates of iterated searches
    :type suffixes: list of `SuffixCertificate`
    :param policy: the policy
    :param diagnostics: a `SearchDiagnostics`
    """
    is_witness = True

    def __init__(self, S, signs, path, ns_contained, node_fip, shadow_fip, suffixes, policy, diagnostics):
        self.S = tuple(S)
        self.signs = tuple(signs) if signs is not None else None
        self.path = list(path)
        self.ns_contained = ns_contained
        self.node_fip = node_fip
        self.shadow_fip = shadow_fip
        self.suffixes = list(suffixes)
        self.policy = policy
        self.diagnostics = diagnostics

    @property
    def ns(self):
        return sums.ns_values(self.S)

    def verify(self, U, targets):
        """
        Re-checks the certificates: NS containments exactly, fip reports under
        the recorded policy. A recorded NS containment must hold, so a witness
        carrying `ns_contained=False` never verifies.

        :param U: the family the search ran over
        :type U: `pyhindman.family.family.Family`
        :param targets: the set A, or the list of sets A_i of an iterated search
        :returns: bool
        """
        if self.signs is None:
            if self.ns_contained is not None and \
                    not (self.ns_contained and sums.first_escape(self.S, targets) is None):
                return False
            if self.node_fip is not None:
                shifted = [natset.shift(targets, m) for m in sums.fs_values(self.S)]
                again = checks.bounded_fip(fam.append(U, shifted), self.policy)
                if again.verdict != self.node_fip.verdict:
                    return False
            return True
        for cert in self.suffixes:
            target = natset.signed(targets[cert.i], cert.sign)
            if (sums.first_escape(cert.suffix, target) is None) != cert.contained or not cert.contained:
                return False
        return True

    def to_dict(self):
        return {
            'S': list(self.S),
            'signs': list(self.signs) if self.signs is not None else None,
            'ns': list(self.ns),
            'ns_contained': self.ns_contained,
            'path': [p.to_dict() for p in self.path],
            'node_fip': self.node_fip.verdict if self.node_fip is not None else None,
            'shadow_fip': self.shadow_fip.verdict if self.shadow_fip is not None else None,
            'suffixes': [c.to_dict() for c in self.suffixes],
            'diagnostics': self.diagnostics.to_dict()}

    def __repr__(self):
        return "<%s.%s - S=%s, signs=%s>" % (__name__, self.__class__.__name__, self.S, self.signs)


class Extension:
    """
    A search ended with a family V having fip and refuting V + {A}.

    :param V: the family
    :type V: `pyhindman.family.family.Family`
    :param certificate: fip report of V + {A}, refuted
    :type certificate: `pyhindman.family.reports.FipReport`
    :param policy: the policy
    :param diagnostics: a `SearchDiagnostics`
    """
    is_witness = False

    def __init__(self, V, certificate, policy, diagnostics):
        assert certificate.refuted
        self.V = V
        self.certificate = certificate
        self.policy = policy
        self.diagnostics = diagnostics

    def verify(self, A):
        """
        Re-checks fip of V and the refutation of V + {A} under the recorded policy

        :returns: bool
        """
        return checks.bounded_fip(self.V, self.policy).verified and \
            checks.bounded_fip(fam.append(self.V, A), self.policy).refuted

    def to_dict(self):
        return {
            'V': self.V.to_dict(),
            'certificate': self.certificate.to_dict(),
            'diagnostics': self.diagnostics.to_dict()}

    def __repr__(self):
        return "<%s.%s - V=%r>" % (__name__, self.__class__.__name__, self.V)
