import unittest

import numpy as np

from ModNetCommon import InvalidParameterError, InvalidDimensionError
from ensembles import Seed, SymmetricMatrix, EnsembleSpec, STREAM_SPIKE, sample_goe, sample_wigner_exp, \
    sample_er_adjacency, sample_correlation_null, sample_spiked, make_balanced_spike, sample_ensemble, \
    correlation_sample_count, as_symmetric


def offdiagonal(w):
    return w.entries[np.triu_indices(w.n, 1)]


class SeedTest(unittest.TestCase):

    def test_same_seed_same_stream(self):
        a = Seed(7, 3).rng().standard_normal(5)
        b = Seed(7, 3).rng().standard_normal(5)
        self.assertTrue(np.array_equal(a, b))

    def test_replicates_and_streams_differ(self):
        a = Seed(7, 3).rng().standard_normal(5)
        self.assertFalse(np.array_equal(a, Seed(7, 4).rng().standard_normal(5)))
        self.assertFalse(np.array_equal(a, Seed(7, 3, STREAM_SPIKE).rng().standard_normal(5)))
        self.assertFalse(np.array_equal(a, Seed(8, 3).rng().standard_normal(5)))

    def test_derived_seeds(self):
        seed = Seed(5)
        self.assertEqual(seed.for_replicate(9), Seed(5, 9, 0))
        self.assertEqual(seed.with_stream(STREAM_SPIKE).for_replicate(2), Seed(5, 2, STREAM_SPIKE))

    def test_invalid_root(self):
        self.assertRaises(InvalidParameterError, Seed, -1)
        self.assertRaises(InvalidParameterError, Seed, 2 ** 64)
        self.assertRaises(InvalidParameterError, Seed, 1, -2)


class SymmetricMatrixTest(unittest.TestCase):

    def test_valid(self):
        w = SymmetricMatrix([[0, 1], [1, 0]], labels=["a", "b"])
        self.assertEqual(w.n, 2)
        self.assertEqual(w.labels, ["a", "b"])
        self.assertTrue(np.array_equal(np.asarray(w), [[0, 1], [1, 0]]))

    def test_read_only(self):
        w = SymmetricMatrix(np.eye(3))
        with self.assertRaises(ValueError):
            w.entries[0, 1] = 2.0

    def test_input_is_copied(self):
        a = np.eye(2)
        w = SymmetricMatrix(a)
        a[0, 0] = 5.0
        self.assertEqual(w.entries[0, 0], 1.0)

    def test_not_square(self):
        self.assertRaises(InvalidDimensionError, SymmetricMatrix, np.zeros((2, 3)))

    def test_empty(self):
        self.assertRaises(InvalidDimensionError, SymmetricMatrix, np.zeros((0, 0)))

    def test_not_symmetric(self):
        self.assertRaises(InvalidParameterError, SymmetricMatrix, [[0, 1], [2, 0]])

    def test_not_finite(self):
        self.assertRaises(InvalidParameterError, SymmetricMatrix, [[0, np.nan], [np.nan, 0]])

    def test_label_count(self):
        self.assertRaises(InvalidDimensionError, SymmetricMatrix, np.eye(2), ["a"])

    def test_submatrix(self):
        w = SymmetricMatrix.from_upper(np.arange(16.0).reshape(4, 4), np.zeros(4), labels="abcd")
        sub = w.submatrix([1, 3])
        self.assertEqual(sub.labels, ["b", "d"])
        self.assertEqual(sub.entries[0, 1], 7.0)
        self.assertEqual(sub.entries[1, 0], 7.0)

    def test_as_symmetric(self):
        w = SymmetricMatrix(np.eye(2))
        self.assertIs(as_symmetric(w), w)
        self.assertEqual(as_symmetric([[1, 2], [2, 1]]).n, 2)


class SamplerTest(unittest.TestCase):

    def test_goe_deterministic(self):
        a = sample_goe(30, Seed(1, 2))
        b = sample_goe(30, Seed(1, 2))
        self.assertTrue(np.array_equal(a.entries, b.entries))
        self.assertFalse(np.array_equal(a.entries, sample_goe(30, Seed(1, 3)).entries))

    def test_goe_moments(self):
        w = sample_goe(400, Seed(3))
        off = offdiagonal(w)
        self.assertAlmostEqual(off.mean(), 0.0, delta=0.02)
        self.assertAlmostEqual(off.var(), 1.0, delta=0.03)
        self.assertAlmostEqual(np.diag(w.entries).var(), 2.0, delta=0.5)

    def test_goe_dimension(self):
        self.assertRaises(InvalidDimensionError, sample_goe, 0, Seed(0))

    def test_wigner_exp_moments(self):
        w = sample_wigner_exp(400, Seed(4))
        off = offdiagonal(w)
        self.assertAlmostEqual(off.mean(), 0.0, delta=0.02)
        self.assertAlmostEqual(off.var(), 1.0, delta=0.05)
        self.assertGreaterEqual(off.min(), -1.0)

    def test_er_standardized(self):
        p = 0.3
        w = sample_er_adjacency(300, p, Seed(5))
        off = offdiagonal(w)
        values = np.unique(np.round(off, 12))
        self.assertEqual(len(values), 2)
        self.assertAlmostEqual(off.mean(), 0.0, delta=0.03)
        self.assertAlmostEqual(off.var(), 1.0, delta=0.05)

    def test_er_probability(self):
        self.assertRaises(InvalidParameterError, sample_er_adjacency, 10, 0.0, Seed(0))
        self.assertRaises(InvalidParameterError, sample_er_adjacency, 10, 1.0, Seed(0))

    def test_correlation_null(self):
        n = 20
        N = correlation_sample_count(n)
        w = sample_correlation_null(n, N, Seed(6))
        self.assertTrue(np.all(np.diag(w.entries) == 0))
        off = offdiagonal(w)
        self.assertAlmostEqual(off.var(), 1.0, delta=0.35)
        self.assertLess(np.abs(off).max(), np.sqrt(N))

    def test_correlation_null_blocks(self):
        # Sample counts above one block of draws.
        w = sample_correlation_null(3, 2000000, Seed(6))
        self.assertTrue(np.all(np.abs(offdiagonal(w)) < 6.0))

    def test_correlation_sample_count(self):
        self.assertEqual(correlation_sample_count(20), 1789)
        self.assertEqual(correlation_sample_count(100), 100000)

    def test_balanced_spike(self):
        beta, u, d = make_balanced_spike(6, Seed(0))
        self.assertAlmostEqual(beta, np.sqrt(6))
        self.assertAlmostEqual(np.linalg.norm(u), 1.0, places=14)
        self.assertTrue(np.all(u[:3] > 0) and np.all(u[3:] < 0))
        self.assertTrue(np.all(np.abs(d) <= np.sqrt(6)))

    def test_balanced_spike_odd(self):
        self.assertRaises(InvalidParameterError, make_balanced_spike, 5, Seed(0))

    def test_spiked_without_noise(self):
        beta, u, d = make_balanced_spike(8, Seed(2))
        w = sample_spiked((beta, u, d), 8, Seed(2), noise=False)
        expected = beta * np.outer(u, u) + np.diag(d)
        self.assertTrue(np.allclose(w.entries, expected, atol=1e-14))

    def test_spiked_noise_is_goe(self):
        beta, u, d = make_balanced_spike(8, Seed(2))
        w = sample_spiked((beta, u, d), 8, Seed(2, 4))
        signal = sample_spiked((beta, u, d), 8, Seed(2, 4), noise=False)
        self.assertTrue(np.allclose(w.entries - signal.entries, sample_goe(8, Seed(2, 4)).entries))

    def test_spike_not_unit(self):
        self.assertRaises(InvalidParameterError, EnsembleSpec, 'spiked', 2, beta=1.0,
                          u=np.array([1.0, 1.0]), d=np.zeros(2))


class EnsembleSpecTest(unittest.TestCase):

    def test_unknown_kind(self):
        self.assertRaises(InvalidParameterError, EnsembleSpec, 'cauchy', 10)

    def test_defaults(self):
        self.assertAlmostEqual(EnsembleSpec.default_for('er', 16).p, 0.5)
        self.assertEqual(EnsembleSpec.default_for('corr', 20).N, 1789)
        spec = EnsembleSpec.default_for('spiked', 10, Seed(3))
        self.assertAlmostEqual(spec.beta, np.sqrt(10))

    def test_dispatch(self):
        spec = EnsembleSpec('goe', 12)
        self.assertTrue(np.array_equal(sample_ensemble(spec, Seed(9)).entries,
                                       sample_goe(12, Seed(9)).entries))
        for kind in ('exp', 'er', 'corr', 'spiked'):
            w = sample_ensemble(EnsembleSpec.default_for(kind, 12, Seed(9)), Seed(9))
            self.assertEqual(w.n, 12)


if __name__ == '__main__':
    unittest.main()
