############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
############################################################

"""
Seeded Monte Carlo runners for the calibration, power,
decorrelation and comparison studies.

Every replicate draws from its own Seed(root, index, stream), so
the reports do not depend on the number of threads.
"""

import collections
import logging

import numpy as np

from ModNetCommon import InvalidParameterError
from ModNetWorker import Worker
from ensembles import Seed, EnsembleSpec, STREAM_SPIKE, ENSEMBLE_KINDS, \
    sample_ensemble, sample_spiked, sample_goe, make_balanced_spike, check_dimension
from spectral import modularity, normalized_modularity, CENTERED_L1, CENTERED_4_OVER_PI, RAW_OVER_N
from distributions import NormalLimit, check_level
from hypotests import TestSuite, METHODS, MODULARITY_II

log = logging.getLogger('modnet.lib')

CALIBRATION_N = (50, 100, 500, 1000, 2000, 5000)
CALIBRATION_ALPHAS = (0.01, 0.05, 0.25, 0.50, 0.75, 0.95, 0.99)
POWER_N = (50, 100, 200, 400, 600, 800)
CORRELATION_N = (50, 100, 500, 1000)
COMPARISON_N = (50, 100, 150, 200)
COMPARISON_PERCENTILES = (5, 25, 50, 75, 95)
COMPARISON_VARIANTS = (RAW_OVER_N, CENTERED_L1, CENTERED_4_OVER_PI)

CALIBRATION_MIN_REPS = 100
POWER_MIN_REPS = 100
CORRELATION_MIN_REPS = 1000
COMPARISON_MIN_REPS = 500

SCATTER_CAP = 5000


def standard_error(p, reps):
    """
    Monte Carlo standard error sqrt(p (1 - p) / reps).
    """
    p = np.asarray(p, dtype=float)
    return np.sqrt(p * (1.0 - p) / reps)


def _check_reps(reps, minimum):
    if reps is None or int(reps) != reps or reps < minimum:
        raise InvalidParameterError("Need at least %d replicates, got %s" % (minimum, reps))


def _check_n_values(n_values, minimum=2):
    n_values = [int(n) for n in n_values]
    if not n_values:
        raise InvalidParameterError("Need at least one dimension.")
    for n in n_values:
        check_dimension(n, minimum)
    return n_values


def _worker(worker):
    if worker is None:
        return Worker(threads=1, name="harness")
    return worker


class CalibrationReport(object):
    """
    cells[i, j] = fraction of replicates at n_values[i] whose
    statistic exceeds the reference law's 1 - alphas[j] quantile,
    the rejection rate of the level alphas[j] test.
    """

    def __init__(self, ensemble, n_values, alphas, reps, law, cells, seed, quantiles=None):
        self.ensemble = ensemble
        self.n_values = list(n_values)
        self.alphas = list(alphas)
        self.reps = int(reps)
        self.law = law
        self.cells = np.asarray(cells, dtype=float)
        self.seed = int(seed)
        self.quantiles = None if quantiles is None else np.asarray(quantiles, dtype=float)

    @property
    def standard_errors(self):
        return standard_error(self.cells, self.reps)

    def cell(self, n, alpha):
        return float(self.cells[self.n_values.index(n), self.alphas.index(alpha)])

    def to_rows(self):
        rows = []
        se = self.standard_errors
        for i, n in enumerate(self.n_values):
            for j, alpha in enumerate(self.alphas):
                row = collections.OrderedDict([
                    ("ensemble", self.ensemble),
                    ("law", self.law),
                    ("n", n),
                    ("alpha", alpha),
                    ("reps", self.reps),
                    ("probability", float(self.cells[i, j])),
                    ("se", float(se[i, j]))
                ])
                if self.quantiles is not None:
                    row["quantile"] = float(self.quantiles[i, j])
                rows.append(row)
        return rows

    def to_dict(self):
        return collections.OrderedDict([
            ("study", "calibration"),
            ("ensemble", self.ensemble),
            ("law", self.law),
            ("n_values", self.n_values),
            ("alphas", self.alphas),
            ("reps", self.reps),
            ("seed", self.seed),
            ("cells", self.cells.tolist()),
            ("standard_errors", self.standard_errors.tolist()),
            ("quantiles", None if self.quantiles is None else self.quantiles.tolist())
        ])


class PowerReport(object):
    """
    powers[i, k] = rejection rate of methods[k] at n_values[i].
    """

    def __init__(self, n_values, methods, reps, alpha, powers, seed, beta_scale=1.0, heterogeneity=True):
        self.n_values = list(n_values)
        self.methods = list(methods)
        self.reps = int(reps)
        self.alpha = float(alpha)
        self.powers = np.asarray(powers, dtype=float)
        self.seed = int(seed)
        self.beta_scale = float(beta_scale)
        self.heterogeneity = bool(heterogeneity)

    @property
    def standard_errors(self):
        return standard_error(self.powers, self.reps)

    def power(self, n, method):
        return float(self.powers[self.n_values.index(n), self.methods.index(method)])

    def to_rows(self):
        rows = []
        se = self.standard_errors
        for i, n in enumerate(self.n_values):
            for k, method in enumerate(self.methods):
                rows.append(collections.OrderedDict([
                    ("n", n),
                    ("method", method),
                    ("alpha", self.alpha),
                    ("beta_scale", self.beta_scale),
                    ("reps", self.reps),
                    ("rejection_rate", float(self.powers[i, k])),
                    ("se", float(se[i, k]))
                ]))
        return rows

    def to_dict(self):
        return collections.OrderedDict([
            ("study", "power"),
            ("n_values", self.n_values),
            ("methods", self.methods),
            ("alpha", self.alpha),
            ("beta_scale", self.beta_scale),
            ("heterogeneity", self.heterogeneity),
            ("reps", self.reps),
            ("seed", self.seed),
            ("powers", self.powers.tolist()),
            ("standard_errors", self.standard_errors.tolist())
        ])


class CorrelationReport(object):

    def __init__(self, n_values, reps, cor_ab, cor_q_lambda, l1_ratio, seed, scatter=None):
        self.n_values = list(n_values)
        self.reps = int(reps)
        self.cor_ab = np.asarray(cor_ab, dtype=float)
        self.cor_q_lambda = np.asarray(cor_q_lambda, dtype=float)
        self.l1_ratio = np.asarray(l1_ratio, dtype=float)
        self.seed = int(seed)
        # n -> array of (Q/n, n^(1/6) lambda_1) pairs.
        self.scatter = scatter or collections.OrderedDict()

    def to_rows(self):
        return [collections.OrderedDict([
            ("n", n),
            ("reps", self.reps),
            ("cor_ab", float(self.cor_ab[i])),
            ("cor_q_lambda", float(self.cor_q_lambda[i])),
            ("mean_l1_ratio", float(self.l1_ratio[i]))
        ]) for i, n in enumerate(self.n_values)]

    def scatter_rows(self):
        rows = []
        for n, points in self.scatter.items():
            for q, lam in points:
                rows.append(collections.OrderedDict([("n", n), ("q_over_n", float(q)),
                                                     ("tw_statistic", float(lam))]))
        return rows

    def to_dict(self):
        return collections.OrderedDict([
            ("study", "correlation"),
            ("n_values", self.n_values),
            ("reps", self.reps),
            ("seed", self.seed),
            ("cor_ab", self.cor_ab.tolist()),
            ("cor_q_lambda", self.cor_q_lambda.tolist()),
            ("mean_l1_ratio", self.l1_ratio.tolist()),
            ("scatter", collections.OrderedDict((str(n), np.asarray(p).tolist())
                                                for n, p in self.scatter.items()))
        ])


class ComparisonReport(object):
    """
    quantiles[(model, variant)] is an array over n_values of the
    COMPARISON_PERCENTILES of that statistic; model is 'null' or
    'spiked'.
    """

    def __init__(self, n_values, reps, beta_scale, quantiles, seed, percentiles=COMPARISON_PERCENTILES):
        self.n_values = list(n_values)
        self.reps = int(reps)
        self.beta_scale = float(beta_scale)
        self.quantiles = quantiles
        self.seed = int(seed)
        self.percentiles = list(percentiles)

    def median(self, model, variant, n):
        row = self.quantiles[(model, variant)][self.n_values.index(n)]
        return float(row[self.percentiles.index(50)])

    def to_rows(self):
        rows = []
        for (model, variant), table in self.quantiles.items():
            for i, n in enumerate(self.n_values):
                row = collections.OrderedDict([("n", n), ("model", model), ("statistic", variant),
                                               ("reps", self.reps)])
                for pct, value in zip(self.percentiles, table[i]):
                    row["p%02d" % pct] = float(value)
                rows.append(row)
        return rows

    def to_dict(self):
        return collections.OrderedDict([
            ("study", "comparison"),
            ("n_values", self.n_values),
            ("reps", self.reps),
            ("beta_scale", self.beta_scale),
            ("seed", self.seed),
            ("percentiles", self.percentiles),
            ("quantiles", [collections.OrderedDict([("model", model), ("statistic", variant),
                                                    ("values", np.asarray(table).tolist())])
                           for (model, variant), table in self.quantiles.items()])
        ])


def _ensemble_factory(ensemble, seed, params=None):
    params = dict(params or {})

    if callable(ensemble):
        return ensemble

    if ensemble not in ENSEMBLE_KINDS:
        raise InvalidParameterError("Unknown ensemble '%s', expected one of %s" %
                                    (ensemble, ", ".join(ENSEMBLE_KINDS)))

    def make(n):
        if ensemble == 'er' and params.get("p") is not None:
            return EnsembleSpec('er', n, p=params["p"])
        if ensemble == 'corr' and params.get("N") is not None:
            return EnsembleSpec('corr', n, N=params["N"])
        if ensemble == 'spiked' and params.get("beta_scale") is not None:
            beta, u, d = make_balanced_spike(n, seed.with_stream(STREAM_SPIKE))
            return EnsembleSpec('spiked', n, beta=params["beta_scale"] * beta, u=u, d=d)
        return EnsembleSpec.default_for(ensemble, n, seed)

    return make


def run_calibration(ensemble, n_values=CALIBRATION_N, alphas=CALIBRATION_ALPHAS, reps=2000, law="f",
                    seed=0, worker=None, laws=None, params=None):
    """
    Rejection rates pr(statistic > q_(1 - alpha)) of the normalized
    modularity (Q - 2 n^(1/2) |u_1|_1^2) / n, q_(1 - alpha) being the
    upper alpha critical value of the reference law.

    :param ensemble: Ensemble kind ('goe', 'exp', 'er', 'corr', 'spiked')
        or a function n -> EnsembleSpec.
    :param n_values: Dimensions.
    :param alphas: Levels.
    :param reps: Replicates per dimension, at least 100.
    :param law: 'normal' (NormalLimit) or 'f' (ConvolutionF per n).
    :param seed: Root seed.
    :param worker: ModNetWorker.Worker
    :param laws: distributions.LawCache, needed for law 'f'.
    :param params: Optional overrides: p (er), N (corr), beta_scale (spiked).
    :return: CalibrationReport
    """

    _check_reps(reps, CALIBRATION_MIN_REPS)
    n_values = _check_n_values(n_values)
    for alpha in alphas:
        check_level(alpha, "alpha")

    if law == "f" and laws is None:
        raise InvalidParameterError("Calibration against F needs convolution laws.")
    if law not in ("normal", "f"):
        raise InvalidParameterError("Unknown law '%s', expected normal or f" % law)

    worker = _worker(worker)
    root = Seed(seed)
    make_spec = _ensemble_factory(ensemble, root, params)
    name = ensemble if isinstance(ensemble, str) else getattr(ensemble, "__name__", "custom")

    cells = np.zeros((len(n_values), len(alphas)))
    quantiles = np.zeros((len(n_values), len(alphas)))

    for i, n in enumerate(n_values):
        spec = make_spec(n)
        reference = NormalLimit() if law == "normal" else laws.get(n)
        q = np.array([float(reference.quantile(1.0 - a)) for a in alphas])

        log.info("Calibration: %s n=%d reps=%d law=%s" % (name, n, reps, law))

        def replicate(index):
            w = sample_ensemble(spec, root.for_replicate(index))
            return normalized_modularity(modularity(w), CENTERED_L1).value

        statistics = np.array(worker.map(replicate, range(reps)))

        cells[i] = [(statistics > qa).mean() for qa in q]
        quantiles[i] = q

    return CalibrationReport(name, n_values, alphas, reps, law, cells, seed, quantiles)


def spike_for_replicate(n, root, index, beta_scale=1.0, heterogeneity=True):
    """
    Balanced two-community spike of one replicate: beta = beta_scale
    sqrt(n); heterogeneity d drawn from the replicate's spike stream,
    or zero.

    :return: (beta, u, d)
    """

    beta, u, d = make_balanced_spike(n, Seed(root.root, index, STREAM_SPIKE))
    if not heterogeneity:
        d = np.zeros(n)
    return beta_scale * beta, u, d


def run_power_study(n_values=POWER_N, alpha=0.05, reps=2000, seed=0, suite=None, worker=None,
                    beta_scale=1.0, heterogeneity=True, methods=METHODS):
    """
    Rejection rates of the tests under the spiked model
    beta u u^T + diag(d) + GOE with a balanced two-block u.

    beta_scale=0 with heterogeneity=False is the GOE null, so the
    same runner gives the type I error of every method.

    :param n_values: Even dimensions.
    :param alpha: Level.
    :param reps: Replicates per dimension, at least 100.
    :param seed: Root seed.
    :param suite: hypotests.TestSuite with a TW1 law and convolution laws.
    :param worker: ModNetWorker.Worker
    :param beta_scale: beta = beta_scale sqrt(n).
    :param heterogeneity: Draw d_i ~ Uniform[-sqrt(n), sqrt(n)], else d = 0.
    :param methods: Methods to run.
    :return: PowerReport
    """

    _check_reps(reps, POWER_MIN_REPS)
    n_values = _check_n_values(n_values, minimum=4)
    check_level(alpha, "alpha")

    if suite is None:
        suite = TestSuite(alpha=alpha)
    elif suite.alpha != alpha:
        raise InvalidParameterError("Test suite level %g differs from alpha %g" % (suite.alpha, alpha))

    worker = _worker(worker)
    root = Seed(seed)
    methods = list(methods)
    powers = np.zeros((len(n_values), len(methods)))

    for i, n in enumerate(n_values):
        if n % 2 != 0:
            raise InvalidParameterError("Power study needs even dimensions, got %d" % n)

        # Build the per-n law up front rather than inside the pool.
        if suite.laws is not None and MODULARITY_II in methods:
            suite.laws.get(n)

        log.info("Power: n=%d reps=%d beta_scale=%g" % (n, reps, beta_scale))

        def replicate(index):
            spike = spike_for_replicate(n, root, index, beta_scale, heterogeneity)
            w = sample_spiked(spike, n, root.for_replicate(index))
            md = modularity(w)
            return [suite.run(method, w, md).reject for method in methods]

        rejections = np.array(worker.map(replicate, range(reps)), dtype=float)
        powers[i] = rejections.mean(axis=0)

    return PowerReport(n_values, methods, reps, alpha, powers, seed, beta_scale, heterogeneity)


def run_correlation_study(n_values=CORRELATION_N, reps=5000, seed=0, worker=None, scatter_cap=SCATTER_CAP):
    """
    Under the GOE: cor(A_n, B_n), cor(Q/n, n^(1/6)(lambda_1 - 2 sqrt(n)))
    and the mean of |u_1|_1^2 / n per dimension.

    :param n_values: Dimensions.
    :param reps: Replicates per dimension, at least 1000.
    :param seed: Root seed.
    :param worker: ModNetWorker.Worker
    :param scatter_cap: (Q/n, TW statistic) pairs kept per n for plotting.
    :return: CorrelationReport
    """

    _check_reps(reps, CORRELATION_MIN_REPS)
    n_values = _check_n_values(n_values)

    worker = _worker(worker)
    root = Seed(seed)

    cor_ab = np.zeros(len(n_values))
    cor_q_lambda = np.zeros(len(n_values))
    l1_ratio = np.zeros(len(n_values))
    scatter = collections.OrderedDict()

    for i, n in enumerate(n_values):
        log.info("Correlation: n=%d reps=%d" % (n, reps))

        def replicate(index):
            md = modularity(sample_goe(n, root.for_replicate(index)))
            return md.a_n, md.b_n, md.q / n, md.tw_statistic, md.l1norm_sq / n

        values = np.array(worker.map(replicate, range(reps)))

        cor_ab[i] = np.corrcoef(values[:, 0], values[:, 1])[0, 1]
        cor_q_lambda[i] = np.corrcoef(values[:, 2], values[:, 3])[0, 1]
        l1_ratio[i] = values[:, 4].mean()
        scatter[n] = values[:min(scatter_cap, reps), 2:4]

    return CorrelationReport(n_values, reps, cor_ab, cor_q_lambda, l1_ratio, seed, scatter)


def run_comparison_study(n_values=COMPARISON_N, reps=3000, beta_scale=2.0, seed=0, worker=None):
    """
    Percentiles of Q/n and of the two centered statistics under the
    GOE null and under the spiked model with beta = beta_scale sqrt(n).
    Both models share each replicate's noise matrix.

    :return: ComparisonReport
    """

    _check_reps(reps, COMPARISON_MIN_REPS)
    n_values = _check_n_values(n_values, minimum=4)

    worker = _worker(worker)
    root = Seed(seed)

    tables = collections.OrderedDict(((model, variant), np.zeros((len(n_values), len(COMPARISON_PERCENTILES))))
                                     for model in ("null", "spiked") for variant in COMPARISON_VARIANTS)

    for i, n in enumerate(n_values):
        if n % 2 != 0:
            raise InvalidParameterError("Comparison study needs even dimensions, got %d" % n)

        log.info("Comparison: n=%d reps=%d beta_scale=%g" % (n, reps, beta_scale))

        def replicate(index):
            noise = root.for_replicate(index)
            spike = spike_for_replicate(n, root, index, beta_scale)
            null = modularity(sample_goe(n, noise))
            alternative = modularity(sample_spiked(spike, n, noise))
            return [normalized_modularity(md, v).value for md in (null, alternative)
                    for v in COMPARISON_VARIANTS]

        values = np.array(worker.map(replicate, range(reps)))

        for k, key in enumerate(tables):
            tables[key][i] = np.percentile(values[:, k], COMPARISON_PERCENTILES)

    return ComparisonReport(n_values, reps, beta_scale, tables, seed)
