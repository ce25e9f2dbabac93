############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
############################################################

import collections
import logging

import numpy as np

from ModNetCommon import InvalidParameterError, InvalidDimensionError, UndefinedCorrelationError, DataError
from ensembles import as_symmetric
from spectral import modularity, normalized_modularity, CENTERED_L1
from distributions import NormalLimit, GumbelCoherence, PValue, check_level, check_law_dimension, \
    standard_normal_quantile, standard_normal_cdf
import netio

log = logging.getLogger('modnet.lib')

MODULARITY_I = 'modularity1'
MODULARITY_II = 'modularity2'
LARGEST_EIGENVALUE = 'eigenvalue'
ENTRYWISE_MAXIMUM = 'entrywise'

METHODS = (MODULARITY_I, MODULARITY_II, LARGEST_EIGENVALUE, ENTRYWISE_MAXIMUM)

METHOD_TITLES = {
    MODULARITY_I: "Modularity Test I",
    MODULARITY_II: "Modularity Test II",
    LARGEST_EIGENVALUE: "Largest Eigenvalue Test",
    ENTRYWISE_MAXIMUM: "Entrywise Maximum Test"
}

MIN_SPLIT = 4


class TestResult(object):
    """
    Outcome of one test: reject <=> statistic > critical_value.
    """

    # Not a unittest case.
    __test__ = False

    def __init__(self, test_name, statistic, critical_value, p_value, alpha, n, law, notes=None):
        self.test_name = test_name
        self.statistic = float(statistic)
        self.critical_value = float(critical_value)
        self.p_value = p_value
        self.alpha = float(alpha)
        self.reject = bool(self.statistic > self.critical_value)
        self.n = int(n)
        self.law = law
        self.notes = list(notes or [])

    def to_dict(self):
        return collections.OrderedDict([
            ("test", self.test_name),
            ("statistic", self.statistic),
            ("critical_value", self.critical_value),
            ("p_value", self.p_value.to_json()),
            ("alpha", self.alpha),
            ("reject", self.reject),
            ("n", self.n),
            ("law", self.law),
            ("notes", list(self.notes))
        ])

    def __repr__(self):
        return "TestResult(%s, statistic=%.6g, p=%s, reject=%s)" % \
               (self.test_name, self.statistic, str(self.p_value), self.reject)


def _decomposition(w, md):
    if md is None:
        return modularity(w)
    return md


def modularity_test_i(w, alpha, md=None, literal=False):
    """
    Normalized modularity (Q - 2 n^(1/2) |u_1|_1^2) / n against the
    normal limit N(0, 2(1 - 2/pi)^2).

    :param w: SymmetricMatrix
    :param alpha: Level.
    :param md: Optional ModularityDecomposition of w, to avoid recomputing it.
    :param literal: Use the standard normal quantile Phi^-1(1 - alpha)
        as critical value instead of the limit law's quantile.
    :return: TestResult
    """

    check_level(alpha, "alpha")
    w = as_symmetric(w)
    md = _decomposition(w, md)
    statistic = normalized_modularity(md, CENTERED_L1).value

    if literal:
        critical = standard_normal_quantile(1.0 - alpha)
        p_value = PValue(1.0 - standard_normal_cdf(statistic))
        law = {"law": "standard-normal"}
    else:
        limit = NormalLimit()
        critical = limit.quantile(1.0 - alpha)
        p_value = limit.pvalue(statistic)
        law = limit.describe()

    return TestResult(MODULARITY_I, statistic, critical, p_value, alpha, md.n, law, md.notes)


def modularity_test_ii(w, alpha, f, md=None):
    """
    Same statistic as modularity_test_i() against the convolution law F
    built for this dimension.
    """

    check_level(alpha, "alpha")
    w = as_symmetric(w)
    check_law_dimension(f, w.n)
    md = _decomposition(w, md)
    statistic = normalized_modularity(md, CENTERED_L1).value

    return TestResult(MODULARITY_II, statistic, f.quantile(1.0 - alpha), f.pvalue(statistic),
                      alpha, md.n, f.describe(), md.notes)


def largest_eigenvalue_test(w, alpha, tw1, md=None):
    """
    n^(1/6) (lambda_1 - 2 n^(1/2)) against TW1.
    """

    check_level(alpha, "alpha")
    w = as_symmetric(w)
    n = w.n

    if md is not None:
        statistic = md.tw_statistic
        notes = md.notes
    else:
        lambda1 = np.linalg.eigvalsh(w.entries)[-1]
        statistic = n ** (1.0 / 6.0) * (lambda1 - 2.0 * np.sqrt(n))
        notes = []

    return TestResult(LARGEST_EIGENVALUE, statistic, tw1.quantile(1.0 - alpha), tw1.pvalue(statistic),
                      alpha, n, tw1.describe(), notes)


def coherence(w, matrix="covariance"):
    """
    Largest off-diagonal |entry| of the covariance (or correlation)
    matrix of the rows of W, the columns being the observations.

    :return: T_n
    """

    entries = as_symmetric(w).entries

    if matrix == "correlation":
        spread = np.std(entries, axis=1)
        constant = np.flatnonzero(spread == 0)
        if len(constant) > 0:
            raise UndefinedCorrelationError("Column %d is constant; correlation is undefined." %
                                            constant[0], column=int(constant[0]))
        c = np.corrcoef(entries)
    elif matrix == "covariance":
        c = np.cov(entries)
    else:
        raise InvalidParameterError("Unknown coherence matrix '%s'" % matrix)

    np.fill_diagonal(c, 0.0)
    return float(np.max(np.abs(c)))


def entrywise_max_test(w, alpha, matrix="covariance"):
    """
    n T_n^2 - 4 log n + log log n against the Gumbel coherence law.
    """

    check_level(alpha, "alpha")
    w = as_symmetric(w)
    n = w.n
    if n < 3:
        raise InvalidDimensionError("Entrywise maximum test needs n >= 3, got %d" % n)

    t_n = coherence(w, matrix)
    statistic = n * t_n ** 2 - 4.0 * np.log(n) + np.log(np.log(n))
    limit = GumbelCoherence()
    law = limit.describe()
    law["matrix"] = matrix

    return TestResult(ENTRYWISE_MAXIMUM, statistic, limit.quantile(1.0 - alpha), limit.pvalue(statistic),
                      alpha, n, law)


class TestSuite(object):
    """
    The four tests with their reference laws and settings, so
    callers only pick a method name.
    """

    __test__ = False

    def __init__(self, alpha=0.05, tw1=None, laws=None, literal_normal=False,
                 entrywise_matrix="covariance"):
        check_level(alpha, "alpha")
        self.alpha = alpha
        self.tw1 = tw1
        self.laws = laws
        self.literal_normal = literal_normal
        self.entrywise_matrix = entrywise_matrix

    def run(self, method, w, md=None):
        """
        :param method: One of METHODS.
        :param w: SymmetricMatrix
        :param md: Optional ModularityDecomposition of w.
        :return: TestResult
        """

        if method == MODULARITY_I:
            return modularity_test_i(w, self.alpha, md=md, literal=self.literal_normal)

        if method == MODULARITY_II:
            if self.laws is None:
                raise InvalidParameterError("Modularity Test II needs convolution laws.")
            w = as_symmetric(w)
            return modularity_test_ii(w, self.alpha, self.laws.get(w.n), md=md)

        if method == LARGEST_EIGENVALUE:
            if self.tw1 is None:
                raise InvalidParameterError("Largest Eigenvalue Test needs a TW1 table.")
            return largest_eigenvalue_test(w, self.alpha, self.tw1, md=md)

        if method == ENTRYWISE_MAXIMUM:
            return entrywise_max_test(w, self.alpha, matrix=self.entrywise_matrix)

        raise InvalidParameterError("Unknown test '%s', expected one of %s" % (method, ", ".join(METHODS)))

    def run_all(self, w, md=None, methods=METHODS):
        w = as_symmetric(w)
        if md is None:
            md = modularity(w)
        return collections.OrderedDict((m, self.run(m, w, md)) for m in methods)


class CommunityTree(object):
    """
    Node of a recursive split. ``members`` are indices into the
    root matrix; children (0 or 2) split the members by the sign of
    the top eigenvector, zero-sign members stay with this node.
    """

    def __init__(self, path, members, labels, depth, test=None, companions=None, notes=None):
        self.path = path
        self.members = np.asarray(members, dtype=int)
        self.labels = labels
        self.depth = depth
        self.test = test
        self.companions = companions or collections.OrderedDict()
        self.children = []
        self.zero_members = np.array([], dtype=int)
        self.notes = list(notes or [])

    @property
    def size(self):
        return len(self.members)

    def leaves(self):
        if not self.children:
            return [self]
        found = []
        for child in self.children:
            found.extend(child.leaves())
        return found

    def walk(self):
        yield self
        for child in self.children:
            for node in child.walk():
                yield node

    def membership(self, n):
        """
        Leaf label per root index; members left at an inner node
        (zero sign) get that node's path.
        """

        labels = [None] * n
        for node in self.walk():
            if not node.children:
                for i in node.members:
                    labels[i] = node.path
            for i in node.zero_members:
                labels[i] = node.path
        return labels

    def to_dict(self):
        names = self.labels if self.labels is not None else [int(i) for i in self.members]
        return collections.OrderedDict([
            ("path", self.path),
            ("depth", self.depth),
            ("size", self.size),
            ("members", list(names)),
            ("test", None if self.test is None else self.test.to_dict()),
            ("companions", collections.OrderedDict((k, v.to_dict()) for k, v in self.companions.items())),
            ("notes", list(self.notes)),
            ("children", [child.to_dict() for child in self.children])
        ])


def recursive_split(w, alpha=0.05, max_depth=3, test=MODULARITY_I, suite=None, min_split=MIN_SPLIT,
                    companions=()):
    """
    Tests w; on rejection splits the members by sgn(u_1), recenters
    and rescales each part and tests it again, down to max_depth.

    :param w: SymmetricMatrix, n >= 4.
    :param alpha: Level, used when no suite is given.
    :param max_depth: Depth below which no more splits are made.
    :param test: Method name, see METHODS.
    :param suite: TestSuite; the default has no TW1 table.
    :param min_split: Smallest node that is tested and split.
    :param companions: Extra methods run and reported at every node.
    :return: CommunityTree
    """

    w = as_symmetric(w)
    if w.n < min_split:
        raise InvalidDimensionError("Recursive split needs n >= %d, got %d" % (min_split, w.n))
    if max_depth < 0:
        raise InvalidParameterError("max_depth must be non-negative, got %d" % max_depth)

    if suite is None:
        suite = TestSuite(alpha=alpha)

    def grow(node, matrix):
        md = modularity(matrix)
        node.test = suite.run(test, matrix, md)
        for method in companions:
            if method == test:
                continue
            try:
                node.companions[method] = suite.run(method, matrix, md)
            except UndefinedCorrelationError as e:
                node.notes.append("%s not run: %s" % (method, str(e)))
        node.notes.extend(md.notes)

        log.debug("Node %s: n=%d %s" % (node.path, node.size, repr(node.test)))

        if not node.test.reject or node.depth >= max_depth:
            return node

        signs = md.sign_vector
        node.zero_members = node.members[signs == 0]

        for k, side in enumerate((signs > 0, signs < 0), 1):
            members = node.members[side]
            path = "%s.%d" % (node.path, k)
            labels = None if w.labels is None else [w.labels[i] for i in members]
            child = CommunityTree(path, members, labels, node.depth + 1)

            if len(members) < min_split:
                child.notes.append("too small to test: %d member(s), need %d" % (len(members), min_split))
                node.children.append(child)
                continue

            try:
                sub = netio.normalize_offdiagonal(w.submatrix(members))
            except DataError as e:
                child.notes.append("not tested: %s" % str(e))
                node.children.append(child)
                continue

            node.children.append(grow(child, sub))

        return node

    root = CommunityTree("1", np.arange(w.n), w.labels, 0)
    return grow(root, w)


def community_composition(tree, groups):
    """
    Share of each group among the members of every node.

    :param tree: CommunityTree
    :param groups: Group label per root index (e.g. party).
    :return: OrderedDict path -> {group: fraction}
    """

    composition = collections.OrderedDict()
    for node in tree.walk():
        counts = collections.Counter(str(groups[i]) for i in node.members)
        total = float(sum(counts.values()))
        composition[node.path] = collections.OrderedDict(
            (g, counts[g] / total) for g in sorted(counts))
    return composition
