import unittest

import numpy as np

from ModNetCommon import InvalidParameterError, InvalidDimensionError, LawMismatchError, \
    UndefinedCorrelationError
from ensembles import Seed, SymmetricMatrix, sample_goe, sample_spiked, make_balanced_spike
from spectral import modularity, normalized_modularity
from distributions import NormalLimit, GumbelCoherence, LawCache, convolution_f
from hypotests import TestResult, TestSuite, modularity_test_i, modularity_test_ii, largest_eigenvalue_test, \
    entrywise_max_test, coherence, recursive_split, community_composition, METHODS, MODULARITY_I, \
    MODULARITY_II, LARGEST_EIGENVALUE, ENTRYWISE_MAXIMUM
from distributions import PValue
from tests import small_tw1


def planted(n, scale, seed):
    """
    Balanced two-block spike without heterogeneity, beta = scale sqrt(n).
    """
    beta, u, d = make_balanced_spike(n, seed)
    return sample_spiked((scale * beta, u, np.zeros(n)), n, seed)


class TestResultTest(unittest.TestCase):

    def test_reject_is_strict(self):
        self.assertFalse(TestResult("t", 1.0, 1.0, PValue(0.05), 0.05, 10, {}).reject)
        self.assertTrue(TestResult("t", 1.0 + 1e-12, 1.0, PValue(0.05), 0.05, 10, {}).reject)

    def test_to_dict(self):
        d = TestResult("t", 2.0, 1.0, PValue(1e-5, bound=True), 0.05, 10, {"law": "x"}).to_dict()
        self.assertEqual(d["p_value"], "<1e-05")
        self.assertTrue(d["reject"])


class ModularityTestITest(unittest.TestCase):

    def test_statistic_and_critical_value(self):
        w = sample_goe(100, Seed(1))
        result = modularity_test_i(w, 0.05)
        self.assertAlmostEqual(result.statistic, normalized_modularity(modularity(w)).value)
        self.assertAlmostEqual(result.critical_value, NormalLimit().quantile(0.95))
        self.assertEqual(result.n, 100)

    def test_literal_normal(self):
        result = modularity_test_i(sample_goe(30, Seed(1)), 0.05, literal=True)
        self.assertAlmostEqual(result.critical_value, 1.6448536269514722, places=10)
        self.assertEqual(result.law["law"], "standard-normal")

    def test_reuses_decomposition(self):
        w = sample_goe(30, Seed(2))
        md = modularity(w)
        self.assertEqual(modularity_test_i(w, 0.1, md=md).statistic, modularity_test_i(w, 0.1).statistic)

    def test_alpha(self):
        w = sample_goe(10, Seed(0))
        self.assertRaises(InvalidParameterError, modularity_test_i, w, 0.0)
        self.assertRaises(InvalidParameterError, modularity_test_i, w, 1.5)

    def test_strong_spike_rejects(self):
        result = modularity_test_i(planted(200, 4.0, Seed(3)), 0.05)
        self.assertTrue(result.reject)

    def test_scale_equivariance(self):
        w = sample_goe(20, Seed(17))
        md = modularity(w)
        scaled = modularity(w.scaled(3.0))
        self.assertAlmostEqual(scaled.q, 3.0 * md.q, places=9)
        self.assertAlmostEqual(scaled.lambda1, 3.0 * md.lambda1, places=9)


class ReferenceLawTestsTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.tw1 = small_tw1()

    def test_modularity_ii(self):
        w = sample_goe(60, Seed(4))
        f = convolution_f(60, 5000, self.tw1, Seed(4))
        result = modularity_test_ii(w, 0.05, f)
        self.assertAlmostEqual(result.critical_value, f.quantile(0.95))
        self.assertEqual(result.test_name, MODULARITY_II)

    def test_law_mismatch(self):
        f = convolution_f(100, 2000, self.tw1, Seed(4))
        self.assertRaises(LawMismatchError, modularity_test_ii, sample_goe(50, Seed(4)), 0.05, f)

    def test_largest_eigenvalue(self):
        w = sample_goe(80, Seed(5))
        result = largest_eigenvalue_test(w, 0.05, self.tw1)
        lambda1 = np.linalg.eigvalsh(w.entries)[-1]
        self.assertAlmostEqual(result.statistic, 80 ** (1.0 / 6.0) * (lambda1 - 2.0 * np.sqrt(80)))
        self.assertAlmostEqual(result.statistic, largest_eigenvalue_test(w, 0.05, self.tw1,
                                                                         md=modularity(w)).statistic)

    def test_huge_diagonal_rejects(self):
        result = largest_eigenvalue_test(SymmetricMatrix(np.diag([1e6, 1.0, 0.0, -1.0])), 0.05, self.tw1)
        self.assertTrue(result.reject)
        self.assertTrue(result.p_value.bound)

    def test_suite(self):
        suite = TestSuite(alpha=0.05, tw1=self.tw1, laws=LawCache(self.tw1, Seed(6), m=2000))
        results = suite.run_all(sample_goe(40, Seed(6)))
        self.assertEqual(list(results.keys()), list(METHODS))
        for name, result in results.items():
            self.assertEqual(result.test_name, name)
            self.assertEqual(result.n, 40)


class EntrywiseTest(unittest.TestCase):

    def test_statistic(self):
        w = sample_goe(50, Seed(7))
        t = coherence(w)
        result = entrywise_max_test(w, 0.05)
        self.assertAlmostEqual(result.statistic, 50 * t ** 2 - 4 * np.log(50) + np.log(np.log(50)))
        self.assertAlmostEqual(result.critical_value, GumbelCoherence().quantile(0.95))

    def test_coherence(self):
        w = sample_goe(20, Seed(8))
        c = np.corrcoef(w.entries)
        np.fill_diagonal(c, 0)
        self.assertAlmostEqual(coherence(w, "correlation"), np.abs(c).max())
        c = np.cov(w.entries)
        np.fill_diagonal(c, 0)
        self.assertAlmostEqual(coherence(w), np.abs(c).max())

    def test_constant_column(self):
        entries = sample_goe(6, Seed(9)).entries.copy()
        entries[0, :] = 0.0
        entries[:, 0] = 0.0
        self.assertRaises(UndefinedCorrelationError, entrywise_max_test, SymmetricMatrix(entries), 0.05,
                          matrix="correlation")
        self.assertTrue(np.isfinite(entrywise_max_test(SymmetricMatrix(entries), 0.05).statistic))

    def test_null_size(self):
        # At n = 50 the size is about 0.17, well above alpha.
        reps = 400
        rejections = [entrywise_max_test(sample_goe(50, Seed(30, i)), 0.05).reject for i in range(reps)]
        se = np.sqrt(0.172 * (1 - 0.172) / reps)
        self.assertAlmostEqual(np.mean(rejections), 0.172, delta=3 * se + 0.015)
        self.assertGreater(np.mean(rejections), 0.05 + 2 * se)

    def test_too_small(self):
        self.assertRaises(InvalidDimensionError, entrywise_max_test, sample_goe(2, Seed(0)), 0.05)

    def test_unknown_matrix(self):
        self.assertRaises(InvalidParameterError, coherence, sample_goe(5, Seed(0)), "kendall")


class SuiteTest(unittest.TestCase):

    def test_missing_laws(self):
        suite = TestSuite(alpha=0.05)
        w = sample_goe(10, Seed(0))
        self.assertRaises(InvalidParameterError, suite.run, MODULARITY_II, w)
        self.assertRaises(InvalidParameterError, suite.run, LARGEST_EIGENVALUE, w)
        self.assertRaises(InvalidParameterError, suite.run, "bogus", w)

    def test_entrywise_matrix(self):
        suite = TestSuite(alpha=0.05)
        self.assertEqual(suite.run(ENTRYWISE_MAXIMUM, sample_goe(10, Seed(0))).law["matrix"], "covariance")
        suite = TestSuite(alpha=0.05, entrywise_matrix="correlation")
        self.assertEqual(suite.run(ENTRYWISE_MAXIMUM, sample_goe(10, Seed(0))).law["matrix"], "correlation")


class RecursiveSplitTest(unittest.TestCase):

    def test_planted_halves(self):
        n = 200
        w = planted(n, 4.0, Seed(10))
        tree = recursive_split(w, alpha=0.05, max_depth=1)

        self.assertTrue(tree.test.reject)
        self.assertEqual([child.path for child in tree.children], ["1.1", "1.2"])

        labels = tree.membership(n)
        truth = np.array([1] * (n // 2) + [2] * (n // 2))
        found = np.array([int(label.split(".")[1]) for label in labels])
        agreement = np.mean(found == truth)
        self.assertGreaterEqual(max(agreement, 1.0 - agreement), 0.95)

        for child in tree.children:
            self.assertEqual(child.depth, 1)
            self.assertEqual(child.children, [])

    def test_null_does_not_split(self):
        w = sample_goe(30, Seed(11))
        tree = recursive_split(w, alpha=1e-6)
        self.assertFalse(tree.test.reject)
        self.assertEqual(tree.leaves(), [tree])
        self.assertEqual(tree.membership(30), ["1"] * 30)

    def test_depth_limit(self):
        tree = recursive_split(planted(100, 4.0, Seed(12)), alpha=0.05, max_depth=0)
        self.assertTrue(tree.test.reject)
        self.assertEqual(tree.children, [])

    def test_small_children(self):
        # Two blocks of 3 cannot be tested again.
        block = np.kron(np.array([[1.0, -1.0], [-1.0, 1.0]]), np.ones((3, 3))) * 10.0
        w = SymmetricMatrix(block + sample_goe(6, Seed(13)).entries * 0.1)
        tree = recursive_split(w, alpha=0.05, max_depth=2, min_split=4)
        self.assertEqual(len(tree.children), 2)
        for child in tree.children:
            self.assertIsNone(child.test)
            self.assertTrue(child.notes[0].startswith("too small"))

    def test_constant_child(self):
        # The first block's off-diagonal entries are all 1, so it cannot be rescaled.
        v = np.repeat([1.0, -1.0], 6)
        entries = np.outer(v, v)
        entries[6:, 6:] += sample_goe(6, Seed(17)).entries * 0.1
        np.fill_diagonal(entries, 0.0)

        tree = recursive_split(SymmetricMatrix(entries), alpha=0.05, max_depth=1, min_split=4)
        self.assertTrue(tree.test.reject)
        self.assertEqual(len(tree.children), 2)

        by_first = {tuple(child.members)[0]: child for child in tree.children}
        constant, varied = by_first[0], by_first[6]
        self.assertEqual(list(constant.members), list(range(6)))
        self.assertIsNone(constant.test)
        self.assertTrue(constant.notes[0].startswith("not tested"))
        self.assertEqual(constant.children, [])
        self.assertIsNotNone(varied.test)
        self.assertEqual(tree.to_dict()["children"][0]["path"], "1.1")

    def test_companion_on_constant_row(self):
        entries = np.array(planted(40, 4.0, Seed(18)).entries)
        entries[0, :] = 0.0
        entries[:, 0] = 0.0
        suite = TestSuite(alpha=0.05, entrywise_matrix="correlation")

        tree = recursive_split(SymmetricMatrix(entries), max_depth=0, suite=suite,
                               companions=[ENTRYWISE_MAXIMUM])
        self.assertIsNotNone(tree.test)
        self.assertNotIn(ENTRYWISE_MAXIMUM, tree.companions)
        self.assertTrue(any(note.startswith("entrywise not run") for note in tree.notes))

    def test_companions(self):
        tree = recursive_split(planted(60, 4.0, Seed(14)), alpha=0.05, max_depth=1,
                               companions=[MODULARITY_I, ENTRYWISE_MAXIMUM])
        for node in tree.walk():
            self.assertEqual(list(node.companions.keys()), [ENTRYWISE_MAXIMUM])

    def test_labels_and_dict(self):
        n = 40
        labels = ["m%d" % i for i in range(n)]
        w = SymmetricMatrix(planted(n, 4.0, Seed(15)).entries, labels=labels)
        tree = recursive_split(w, alpha=0.05, max_depth=1)
        d = tree.to_dict()
        self.assertEqual(d["path"], "1")
        self.assertEqual(d["size"], n)
        self.assertEqual(sorted(d["children"][0]["members"] + d["children"][1]["members"]), sorted(labels))

    def test_too_small_root(self):
        self.assertRaises(InvalidDimensionError, recursive_split, sample_goe(3, Seed(0)))


class CompositionTest(unittest.TestCase):

    def test_composition(self):
        n = 40
        tree = recursive_split(planted(n, 4.0, Seed(16)), alpha=0.05, max_depth=1)
        groups = ["D"] * (n // 2) + ["R"] * (n // 2)
        composition = community_composition(tree, groups)
        self.assertEqual(composition["1"], {"D": 0.5, "R": 0.5})
        for path in ("1.1", "1.2"):
            shares = composition[path]
            self.assertAlmostEqual(sum(shares.values()), 1.0)
            self.assertGreaterEqual(max(shares.values()), 0.9)


if __name__ == '__main__':
    unittest.main()
