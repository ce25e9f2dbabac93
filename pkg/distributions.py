############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
############################################################

"""
Reference laws for the modularity statistics.

* NormalLimit: N(0, 2(1 - 2/pi)^2), the limit of (Q - 2 n^(1/2) |u_1|_1^2) / n.
* TW1Law: Tracy-Widom (beta = 1) as an (x, cdf) grid: the exact table
  shipped in share/tw1_table.txt, or one tabulated from a Monte Carlo run.
* ConvolutionF: NormalLimit + (2/pi) n^(-1/6) TW1, sampled for one n.
* GumbelCoherence: limit of the largest off-diagonal sample covariance.
"""

import logging
import re
import threading

import numpy as np
from scipy import stats
from scipy.linalg import eigh_tridiagonal

from ModNetCommon import InvalidParameterError, LawMismatchError, DataError, FormatError
from ensembles import Seed, STREAM_LAW, STREAM_TW1, sample_goe, check_dimension

log = logging.getLogger('modnet.lib')

# Smallest and largest probability returned by tail extrapolation.
TAIL_CLAMP = 1e-6

TW1_MIN_REPLICATES = 10000
TW1_MIN_DIMENSION = 500

CONVOLUTION_DEFAULT_M = 100000
CONVOLUTION_MIN_M = 1000


def standard_normal_cdf(x):
    return stats.norm.cdf(x)


def standard_normal_quantile(p):
    return stats.norm.ppf(p)


def check_level(p, name="probability"):
    if p is None or not (0.0 < p < 1.0):
        raise InvalidParameterError("%s must lie in (0, 1), got %s" % (name, p))


class PValue(object):
    """
    A p-value, either exact or only known to be below ``value``
    (the statistic fell beyond the resolution of a tabulated law).
    """

    def __init__(self, value, bound=False):
        self.value = float(value)
        self.bound = bool(bound)

    def __float__(self):
        return self.value

    def __str__(self):
        if self.bound:
            return "<%.0e" % self.value if self.value < 1e-3 else "<%.4g" % self.value
        return "%.6g" % self.value

    def __repr__(self):
        return "PValue(%s)" % str(self)

    def below(self, alpha):
        """
        True when the p-value is known to be smaller than ``alpha``.
        """
        if self.bound:
            return self.value <= alpha
        return self.value < alpha

    def to_json(self):
        if self.bound:
            return str(self)
        return self.value


class NormalLimit(object):
    """
    N(0, sigma^2) with sigma = sqrt(2) (1 - 2/pi).
    """

    name = "normal"
    sigma = np.sqrt(2.0) * (1.0 - 2.0 / np.pi)

    def cdf(self, x):
        return standard_normal_cdf(np.asarray(x, dtype=float) / self.sigma)

    def sf(self, x):
        return stats.norm.sf(np.asarray(x, dtype=float) / self.sigma)

    def quantile(self, p):
        return self.sigma * standard_normal_quantile(p)

    def pvalue(self, x):
        return PValue(self.sf(x))

    def sample(self, rng, size):
        return self.sigma * rng.standard_normal(size)

    def describe(self):
        return {"law": self.name, "sigma": self.sigma}


def normal_limit_cdf(x):
    """
    Phi(x / (sqrt(2) (1 - 2/pi))).
    """
    return NormalLimit().cdf(x)


class EmpiricalLaw(object):
    """
    Empirical distribution of a sorted sample.

    cdf is right-continuous; quantile(p) is the order statistic
    of rank ceil(p m), clamped to [1, m].
    """

    name = "empirical"

    def __init__(self, samples):
        samples = np.asarray(samples, dtype=float)
        if samples.ndim != 1 or len(samples) == 0:
            raise InvalidParameterError("Empirical law needs a non-empty sample vector.")
        if np.any(np.diff(samples) < 0):
            raise InvalidParameterError("Empirical law needs sorted samples.")
        samples.setflags(write=False)
        self.samples = samples

    @property
    def m(self):
        return len(self.samples)

    def cdf(self, x):
        return np.searchsorted(self.samples, x, side='right') / float(self.m)

    def sf(self, x):
        return 1.0 - self.cdf(x)

    def quantile(self, p):
        p = np.asarray(p, dtype=float)
        rank = np.clip(np.ceil(p * self.m).astype(int), 1, self.m)
        return self.samples[rank - 1]

    def pvalue(self, x):
        exceed = self.m - np.searchsorted(self.samples, x, side='right')
        if exceed == 0:
            return PValue(1.0 / self.m, bound=True)
        return PValue(exceed / float(self.m))

    def mean(self):
        return float(np.mean(self.samples))


def ecdf_and_quantile(samples):
    """
    :param samples: Sorted, non-empty vector.
    :return: EmpiricalLaw
    """
    return EmpiricalLaw(samples)


class TW1Law(object):
    """
    Tracy-Widom law tabulated as a grid of (x, cdf) pairs.

    Between grid points the cdf is interpolated linearly. Beyond the
    grid it decays exponentially, with rates taken from the outermost
    grid cells, and is clamped to [1e-6, 1 - 1e-6] unless the grid
    itself reaches further.
    """

    name = "tw1"

    def __init__(self, xs, ps, provenance=None, tail_cells=10):
        xs = np.asarray(xs, dtype=float)
        ps = np.asarray(ps, dtype=float)

        if len(xs) != len(ps) or len(xs) < 3:
            raise InvalidParameterError("TW1 grid needs at least 3 matching (x, cdf) pairs.")
        if np.any(np.diff(xs) <= 0) or np.any(np.diff(ps) <= 0):
            raise InvalidParameterError("TW1 grid must be strictly increasing in x and cdf.")
        if ps[0] <= 0.0 or ps[-1] >= 1.0:
            raise InvalidParameterError("TW1 grid probabilities must lie in (0, 1).")

        xs.setflags(write=False)
        ps.setflags(write=False)
        self.xs = xs
        self.ps = ps
        self.provenance = dict(provenance or {})

        k = min(tail_cells, len(xs) - 1)
        self.lower_scale = (xs[k] - xs[0]) / np.log(ps[k] / ps[0])
        self.upper_scale = (xs[-1] - xs[-1 - k]) / np.log((1.0 - ps[-1 - k]) / (1.0 - ps[-1]))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        inside = np.interp(x, self.xs, self.ps)
        with np.errstate(over='ignore'):
            lower = self.ps[0] * np.exp((x - self.xs[0]) / self.lower_scale)
            upper = 1.0 - (1.0 - self.ps[-1]) * np.exp(-(x - self.xs[-1]) / self.upper_scale)
        value = np.where(x < self.xs[0], np.maximum(lower, min(TAIL_CLAMP, self.ps[0])),
                         np.where(x > self.xs[-1], np.minimum(upper, max(1.0 - TAIL_CLAMP, self.ps[-1])), inside))
        if value.ndim == 0:
            return float(value)
        return value

    def sf(self, x):
        return 1.0 - self.cdf(x)

    def quantile(self, p):
        p = np.clip(np.asarray(p, dtype=float), TAIL_CLAMP, 1.0 - TAIL_CLAMP)
        inside = np.interp(p, self.ps, self.xs)
        lower = self.xs[0] + self.lower_scale * np.log(p / self.ps[0])
        upper = self.xs[-1] - self.upper_scale * np.log((1.0 - p) / (1.0 - self.ps[-1]))
        value = np.where(p < self.ps[0], lower, np.where(p > self.ps[-1], upper, inside))
        if value.ndim == 0:
            return float(value)
        return value

    def pvalue(self, x):
        if x > self.xs[-1]:
            return PValue(1.0 - self.ps[-1], bound=True)
        return PValue(1.0 - self.cdf(x))

    def sample(self, rng, size):
        """
        Inverse-cdf sampling.
        """
        return self.quantile(rng.random(size))

    def mean(self):
        if "mean" in self.provenance:
            return float(self.provenance["mean"])
        u = (np.arange(100000) + 0.5) / 100000.0
        return float(np.mean(self.quantile(u)))

    def describe(self):
        info = {"law": self.name, "grid_points": len(self.xs)}
        info.update(self.provenance)
        return info


def largest_eigenvalue_goe(n, seed, method="tridiagonal"):
    """
    Largest eigenvalue of one GOE draw.

    'tridiagonal' draws the symmetric tridiagonal matrix with N(0, 2)
    diagonal and chi_{n-1}, ..., chi_1 off-diagonal, whose eigenvalues
    have the joint law of the GOE eigenvalues; only the top one is
    computed. 'dense' samples the full matrix.
    """

    if method == "tridiagonal":
        rng = seed.rng()
        diagonal = np.sqrt(2.0) * rng.standard_normal(n)
        off = np.sqrt(rng.chisquare(np.arange(n - 1, 0, -1, dtype=float)))
        top = eigh_tridiagonal(diagonal, off, eigvals_only=True,
                               select='i', select_range=(n - 1, n - 1))
        return float(top[0])

    if method == "dense":
        return float(np.linalg.eigvalsh(sample_goe(n, seed).entries)[-1])

    raise InvalidParameterError("Unknown TW1 generation method '%s'" % method)


def tw1_samples(m, n_gen, seed, method="tridiagonal", worker=None):
    """
    m draws of n^(1/6) (lambda_1 - 2 n^(1/2)) at n = n_gen.
    """

    seed = seed.with_stream(STREAM_TW1)
    scale = n_gen ** (1.0 / 6.0)
    centre = 2.0 * np.sqrt(n_gen)

    def one(index):
        return scale * (largest_eigenvalue_goe(n_gen, seed.for_replicate(index), method) - centre)

    if worker is None:
        values = [one(i) for i in range(m)]
    else:
        values = worker.map(one, range(m))

    return np.array(values)


def build_tw1_table(m, n_gen, seed, method="tridiagonal", grid_size=2001, worker=None):
    """
    Tabulates TW1 from m GOE draws of dimension n_gen.

    :param m: Number of draws, at least 10^4.
    :param n_gen: Dimension, at least 500.
    :param seed: Seed
    :param method: 'tridiagonal' or 'dense'.
    :param grid_size: Number of grid probabilities in [1e-4, 1 - 1e-4].
    :param worker: Optional ModNetWorker.Worker.
    :return: TW1Law
    """

    if m < TW1_MIN_REPLICATES:
        raise InvalidParameterError("TW1 table needs m >= %d draws, got %d" % (TW1_MIN_REPLICATES, m))
    if n_gen < TW1_MIN_DIMENSION:
        raise InvalidParameterError("TW1 table needs n_gen >= %d, got %d" % (TW1_MIN_DIMENSION, n_gen))

    log.info("Generating TW1 table: m=%d n_gen=%d seed=%d method=%s" % (m, n_gen, seed.root, method))

    samples = np.sort(tw1_samples(m, n_gen, seed, method=method, worker=worker))
    empirical = EmpiricalLaw(samples)

    ps = np.linspace(1e-4, 1.0 - 1e-4, grid_size)
    xs = empirical.quantile(ps)
    keep = np.concatenate(([True], np.diff(xs) > 0))

    provenance = {
        "m": int(m),
        "n_gen": int(n_gen),
        "seed": int(seed.root),
        "method": method,
        "mean": float(np.mean(samples)),
        "sd": float(np.std(samples, ddof=1))
    }

    return TW1Law(xs[keep], ps[keep], provenance)


def save_tw1_table(law, path):
    """
    Plain text: one header line with the generation metadata,
    then one 'x cdf' pair per line.
    """

    header = " ".join("%s=%s" % (k, law.provenance[k]) for k in sorted(law.provenance))
    with open(path, "w") as f:
        f.write("# tw1 %s\n" % header)
        f.write("# x cdf\n")
        for x, p in zip(law.xs, law.ps):
            f.write("%.17g %.17g\n" % (x, p))

    log.info("TW1 table written to %s" % path)


def load_tw1_table(path):
    """
    Reads a table written by save_tw1_table().

    :return: TW1Law
    """

    provenance = {}
    xs = []
    ps = []

    try:
        f = open(path)
    except IOError as e:
        raise DataError("Could not open TW1 table %s: %s" % (path, str(e)))

    with f:
        for line_num, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue

            if line.startswith("#"):
                for key, value in re.findall(r'(\w+)=(\S+)', line):
                    provenance[key] = _header_value(value)
                continue

            parts = line.split()
            if len(parts) != 2:
                raise FormatError("TW1 table %s line %d: expected 'x cdf', got '%s'" % (path, line_num, line))
            try:
                xs.append(float(parts[0]))
                ps.append(float(parts[1]))
            except ValueError:
                raise FormatError("TW1 table %s line %d: not numeric: '%s'" % (path, line_num, line))

    log.debug("Loaded TW1 table %s (%d points)" % (path, len(xs)))

    return TW1Law(xs, ps, provenance)


def _header_value(text):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    return text


class ConvolutionF(EmpiricalLaw):
    """
    Sorted Monte Carlo draws of Z + (2/pi) n^(-1/6) T with
    Z ~ NormalLimit and T ~ TW1, for one dimension n.
    """

    name = "f"

    def __init__(self, n, samples):
        EmpiricalLaw.__init__(self, samples)
        self.n = int(n)

    def describe(self):
        return {"law": self.name, "n": self.n, "m": self.m}


def convolution_f(n, m, tw1, seed):
    """
    Draws m values of the convolution law for dimension n.

    Reference runs use m = CONVOLUTION_DEFAULT_M (10^5, the
    convolution_m setting). Smaller m down to CONVOLUTION_MIN_M is
    accepted for quick runs and tests; below that the tail quantiles
    are too coarse to be used.

    :param n: Dimension the law approximates.
    :param m: Number of draws, at least CONVOLUTION_MIN_M.
    :param tw1: TW1Law
    :param seed: Seed
    :return: ConvolutionF
    """

    check_dimension(n)
    if m < CONVOLUTION_MIN_M:
        raise InvalidParameterError("Convolution law needs m >= %d draws, got %d" % (CONVOLUTION_MIN_M, m))

    rng = seed.rng()
    z = NormalLimit().sample(rng, m)
    t = tw1.sample(rng, m)
    samples = np.sort(z + (2.0 / np.pi) * n ** (-1.0 / 6.0) * t)

    return ConvolutionF(n, samples)


class LawCache(object):
    """
    One ConvolutionF per dimension, built on first request.
    """

    def __init__(self, tw1, seed, m=CONVOLUTION_DEFAULT_M):
        self.tw1 = tw1
        self.seed = seed
        self.m = m
        self.laws = {}
        self.lock = threading.Lock()

    def get(self, n):
        with self.lock:
            if n not in self.laws:
                log.debug("Building convolution law for n=%d (m=%d)" % (n, self.m))
                seed = Seed(self.seed.root, int(n), STREAM_LAW)
                self.laws[n] = convolution_f(n, self.m, self.tw1, seed)
            return self.laws[n]


def check_law_dimension(law, n):
    if isinstance(law, ConvolutionF) and law.n != n:
        raise LawMismatchError("Convolution law was built for n=%d, matrix has n=%d" % (law.n, n))


class GumbelCoherence(object):
    """
    exp(-K exp(-y/2)), K = (8 pi)^(-1/2): limit of
    n T_n^2 - 4 log n + log log n for the largest off-diagonal
    entry T_n of the sample covariance of a Wigner matrix.
    """

    name = "gumbel"
    k = 1.0 / np.sqrt(8.0 * np.pi)

    def cdf(self, y):
        return np.exp(-self.k * np.exp(-np.asarray(y, dtype=float) / 2.0))

    def sf(self, y):
        return -np.expm1(-self.k * np.exp(-np.asarray(y, dtype=float) / 2.0))

    def quantile(self, p):
        check_level(p)
        return -2.0 * np.log(-np.log(p) / self.k)

    def pvalue(self, y):
        return PValue(self.sf(y))

    def describe(self):
        return {"law": self.name, "k": self.k}


def gumbel_coherence_cdf(y):
    return GumbelCoherence().cdf(y)


def gumbel_coherence_quantile(p):
    return GumbelCoherence().quantile(p)
