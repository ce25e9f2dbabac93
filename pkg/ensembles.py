############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
############################################################

import logging
from dataclasses import dataclass

import numpy as np

from ModNetCommon import InvalidParameterError, InvalidDimensionError

log = logging.getLogger('modnet.lib')

# Independent random streams of one replicate.
STREAM_NOISE = 0
STREAM_SPIKE = 1
STREAM_LAW = 2
STREAM_TW1 = 3

ENSEMBLE_KINDS = ('goe', 'exp', 'er', 'corr', 'spiked')

# Normal draws held in memory at once by sample_correlation_null().
CORRELATION_BLOCK = 2 ** 22


@dataclass(frozen=True)
class Seed:
    """
    Root seed plus replicate index. Every (root, replicate_index,
    stream) triple yields its own generator, independent of the
    order or thread in which replicates are run.
    """

    root: int
    replicate_index: int = 0
    stream: int = STREAM_NOISE

    def __post_init__(self):
        if self.root < 0 or self.root >= 2 ** 64:
            raise InvalidParameterError("Seed root must be a 64-bit unsigned integer, got %s" % self.root)
        if self.replicate_index < 0:
            raise InvalidParameterError("Replicate index must be non-negative, got %s" %
                                        self.replicate_index)

    def rng(self):
        sequence = np.random.SeedSequence(int(self.root),
                                          spawn_key=(int(self.replicate_index), int(self.stream)))
        return np.random.default_rng(sequence)

    def for_replicate(self, index):
        return Seed(self.root, index, self.stream)

    def with_stream(self, stream):
        return Seed(self.root, self.replicate_index, stream)


class SymmetricMatrix(object):
    """
    Dense real symmetric n x n edge-weight matrix.

    Entries are stored read-only. Construction checks that the
    matrix is square, finite and exactly symmetric.
    """

    def __init__(self, entries, labels=None):
        entries = np.array(entries, dtype=float)

        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InvalidDimensionError("Expected a square matrix, got shape %s" % str(entries.shape))

        if entries.shape[0] == 0:
            raise InvalidDimensionError("Matrix dimension must be positive.")

        if not np.all(np.isfinite(entries)):
            raise InvalidParameterError("Matrix has non-finite entries.")

        if not np.array_equal(entries, entries.T):
            raise InvalidParameterError("Matrix is not symmetric.")

        if labels is not None:
            labels = [str(l) for l in labels]
            if len(labels) != entries.shape[0]:
                raise InvalidDimensionError("Got %d labels for a %d x %d matrix." %
                                            (len(labels), entries.shape[0], entries.shape[0]))

        entries.setflags(write=False)
        self.entries = entries
        self.labels = labels

    @property
    def n(self):
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.entries
        return self.entries.astype(dtype)

    def __repr__(self):
        return "SymmetricMatrix(n=%d)" % self.n

    @staticmethod
    def from_upper(upper, diagonal, labels=None):
        """
        Builds a symmetric matrix by mirroring the strict upper
        triangle of ``upper`` and placing ``diagonal`` on the diagonal.

        :param upper: n x n array, only the strict upper triangle is read.
        :param diagonal: Vector of length n.
        :param labels: Optional member labels.
        :return: SymmetricMatrix
        """

        w = np.triu(np.asarray(upper, dtype=float), 1)
        w = w + w.T
        np.fill_diagonal(w, diagonal)
        return SymmetricMatrix(w, labels=labels)

    def submatrix(self, members):
        members = np.asarray(members, dtype=int)
        labels = None
        if self.labels is not None:
            labels = [self.labels[i] for i in members]
        return SymmetricMatrix(self.entries[np.ix_(members, members)], labels=labels)

    def scaled(self, c):
        return SymmetricMatrix(self.entries * c, labels=self.labels)


def as_symmetric(w):
    """
    Accepts a SymmetricMatrix or anything array-like that is exactly
    symmetric.
    """

    if isinstance(w, SymmetricMatrix):
        return w
    return SymmetricMatrix(w)


class EnsembleSpec(object):
    """
    A random-matrix model and its parameters.

    kind is one of 'goe', 'exp' (Wigner with centered Exp(1) entries),
    'er' (standardized Erdos-Renyi adjacency, parameter p),
    'corr' (scaled sample correlation, parameter N) and
    'spiked' (beta u u^T + diag(d) + GOE, parameters beta, u, d).
    """

    def __init__(self, kind, n, p=None, N=None, beta=None, u=None, d=None):
        if kind not in ENSEMBLE_KINDS:
            raise InvalidParameterError("Unknown ensemble '%s', expected one of %s" %
                                        (kind, ", ".join(ENSEMBLE_KINDS)))
        check_dimension(n)

        self.kind = kind
        self.n = int(n)
        self.p = p
        self.N = N
        self.beta = beta
        self.u = None if u is None else np.asarray(u, dtype=float)
        self.d = None if d is None else np.asarray(d, dtype=float)

        if kind == 'er':
            check_probability(p)
        elif kind == 'corr':
            if N is None or int(N) < 2:
                raise InvalidParameterError("Correlation ensemble needs N >= 2, got %s" % N)
            self.N = int(N)
        elif kind == 'spiked':
            check_spike(self.n, beta, self.u, self.d)

    @staticmethod
    def default_for(kind, n, seed=None):
        """
        Ensemble with the parameters used in the universality and
        power studies: p = n^(-1/4), N = round(n^(5/2)) and a balanced
        two-block spike with beta = sqrt(n).

        :param kind: Ensemble kind.
        :param n: Dimension.
        :param seed: Seed for the spike heterogeneity (kind 'spiked' only).
        """

        if kind == 'er':
            return EnsembleSpec(kind, n, p=n ** -0.25)
        if kind == 'corr':
            return EnsembleSpec(kind, n, N=correlation_sample_count(n))
        if kind == 'spiked':
            if seed is None:
                seed = Seed(0)
            beta, u, d = make_balanced_spike(n, seed.with_stream(STREAM_SPIKE))
            return EnsembleSpec(kind, n, beta=beta, u=u, d=d)
        return EnsembleSpec(kind, n)

    def describe(self):
        params = {"kind": self.kind, "n": self.n}
        if self.kind == 'er':
            params["p"] = self.p
        elif self.kind == 'corr':
            params["N"] = self.N
        elif self.kind == 'spiked':
            params["beta"] = self.beta
        return params

    def __repr__(self):
        return "EnsembleSpec(%s)" % ", ".join("%s=%s" % kv for kv in sorted(self.describe().items()))


def check_dimension(n, minimum=1):
    if n is None or int(n) != n or n < minimum:
        raise InvalidDimensionError("Dimension must be an integer >= %d, got %s" % (minimum, n))


def check_probability(p):
    if p is None or not (0.0 < p < 1.0):
        raise InvalidParameterError("Probability must lie in (0, 1), got %s" % p)


def check_spike(n, beta, u, d):
    if beta is None or u is None or d is None:
        raise InvalidParameterError("Spiked ensemble needs beta, u and d.")
    if u.shape != (n,) or d.shape != (n,):
        raise InvalidDimensionError("Spike vectors must have length %d, got u %s and d %s" %
                                    (n, str(u.shape), str(d.shape)))
    if abs(np.linalg.norm(u) - 1.0) > 1e-12:
        raise InvalidParameterError("Spike direction must be a unit vector, |u| = %.15g" %
                                    np.linalg.norm(u))


def correlation_sample_count(n):
    """
    N = n^(5/2), rounded half to even.
    """

    return int(round(n ** 2.5))


def sample_goe(n, seed):
    """
    Gaussian Orthogonal Ensemble: N(0, 1) off the diagonal,
    N(0, 2) on the diagonal.

    :param n: Dimension.
    :param seed: Seed
    :return: SymmetricMatrix
    """

    check_dimension(n)
    rng = seed.rng()
    g = rng.standard_normal((n, n))
    return SymmetricMatrix.from_upper(g, np.sqrt(2.0) * np.diag(g))


def sample_wigner_exp(n, seed):
    """
    Wigner matrix with centered exponential entries: E - 1 off the
    diagonal, sqrt(2)(E - 1) on the diagonal, E ~ Exp(1). First two
    moments match the GOE.
    """

    check_dimension(n)
    rng = seed.rng()
    e = rng.standard_exponential((n, n)) - 1.0
    return SymmetricMatrix.from_upper(e, np.sqrt(2.0) * np.diag(e))


def sample_er_adjacency(n, p, seed):
    """
    Standardized Erdos-Renyi adjacency: (B - p) / sqrt(p(1 - p)) with
    B ~ Bernoulli(p) off the diagonal. The diagonal gets the same
    construction scaled by sqrt(2) to match the GOE diagonal variance.
    """

    check_dimension(n)
    check_probability(p)
    rng = seed.rng()
    b = (rng.random((n, n)) < p).astype(float)
    z = (b - p) / np.sqrt(p * (1.0 - p))
    return SymmetricMatrix.from_upper(z, np.sqrt(2.0) * np.diag(z))


def sample_correlation_null(n, N, seed):
    """
    sqrt(N) (R_n - I_n) where R_n is the sample correlation matrix of
    N independent draws from the standard n-variate normal.
    The diagonal is exactly zero.
    """

    check_dimension(n, minimum=2)
    if N is None or int(N) < 2:
        raise InvalidParameterError("Sample count N must be >= 2, got %s" % N)

    N = int(N)
    rng = seed.rng()

    # Draws are accumulated in blocks of rows.
    block = max(1, CORRELATION_BLOCK // n)
    total = np.zeros(n)
    gram = np.zeros((n, n))
    done = 0
    while done < N:
        rows = min(block, N - done)
        x = rng.standard_normal((rows, n))
        total += x.sum(axis=0)
        gram += x.T @ x
        done += rows

    cov = gram - np.outer(total, total) / N
    scale = np.sqrt(np.diag(cov))
    r = cov / np.outer(scale, scale)
    # Mirror to remove rounding asymmetry of the product.
    r = np.triu(r, 1)
    r = r + r.T
    return SymmetricMatrix(np.sqrt(N) * r)


def sample_spiked(spec, n, seed, noise=True):
    """
    beta u u^T + diag(d) + Z with Z a GOE draw from ``seed``.

    :param spec: EnsembleSpec of kind 'spiked', or a (beta, u, d) tuple.
    :param n: Dimension.
    :param seed: Seed of the GOE component.
    :param noise: False leaves Z out (rank-one checks).
    :return: SymmetricMatrix
    """

    if isinstance(spec, EnsembleSpec):
        beta, u, d = spec.beta, spec.u, spec.d
    else:
        beta, u, d = spec
        u = np.asarray(u, dtype=float)
        d = np.asarray(d, dtype=float)

    check_dimension(n)
    check_spike(n, beta, u, d)

    signal = beta * np.outer(u, u)
    signal = np.triu(signal, 1)
    signal = signal + signal.T
    np.fill_diagonal(signal, beta * u * u + d)

    if not noise:
        return SymmetricMatrix(signal)

    z = sample_goe(n, seed).entries
    return SymmetricMatrix(signal + z)


def make_balanced_spike(n, seed):
    """
    Two communities of equal size: u has n/2 coordinates n^(-1/2)
    followed by n/2 coordinates -n^(-1/2), beta = sqrt(n) and the
    heterogeneity d_i ~ Uniform[-sqrt(n), sqrt(n)].

    :param n: Even dimension.
    :param seed: Seed for d.
    :return: (beta, u, d)
    """

    check_dimension(n, minimum=2)
    if n % 2 != 0:
        raise InvalidParameterError("Balanced spike needs an even dimension, got %d" % n)

    root_n = np.sqrt(n)
    u = np.full(n, 1.0 / root_n)
    u[n // 2:] = -1.0 / root_n
    d = seed.rng().uniform(-root_n, root_n, size=n)
    return float(root_n), u, d


def sample_ensemble(spec, seed):
    """
    Draws one matrix from ``spec``.

    :param spec: EnsembleSpec
    :param seed: Seed
    :return: SymmetricMatrix
    """

    if spec.kind == 'goe':
        return sample_goe(spec.n, seed)
    if spec.kind == 'exp':
        return sample_wigner_exp(spec.n, seed)
    if spec.kind == 'er':
        return sample_er_adjacency(spec.n, spec.p, seed)
    if spec.kind == 'corr':
        return sample_correlation_null(spec.n, spec.N, seed)
    if spec.kind == 'spiked':
        return sample_spiked(spec, spec.n, seed)

    raise InvalidParameterError("Unknown ensemble '%s'" % spec.kind)
