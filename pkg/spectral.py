############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
############################################################

import logging

import numpy as np
from numpy.linalg import LinAlgError
from scipy.optimize import brentq

from ModNetCommon import InvalidParameterError, InvalidDimensionError, NumericalError
from ensembles import as_symmetric

log = logging.getLogger('modnet.lib')

# Normalized statistic variants.
CENTERED_L1 = 'centered_l1'            # (Q - 2 n^(1/2) |u_1|_1^2) / n
CENTERED_4_OVER_PI = 'centered_4pi'    # (Q - n^(3/2) 4 / pi) / n
RAW_OVER_N = 'raw'                     # Q / n

VARIANTS = (CENTERED_L1, CENTERED_4_OVER_PI, RAW_OVER_N)

# Relative gap under which lambda_1 counts as repeated.
DEGENERACY_TOL = 1e-9


class SpectralDecomposition(object):
    """
    Eigenvalues in non-increasing order and the matching orthonormal
    eigenvectors (column i goes with eigenvalue i).
    """

    def __init__(self, eigenvalues, eigenvectors):
        eigenvalues = np.array(eigenvalues, dtype=float)
        eigenvectors = np.array(eigenvectors, dtype=float)
        eigenvalues.setflags(write=False)
        eigenvectors.setflags(write=False)
        self.eigenvalues = eigenvalues
        self.eigenvectors = eigenvectors

    @property
    def n(self):
        return len(self.eigenvalues)

    @property
    def lambda1(self):
        return float(self.eigenvalues[0])

    @property
    def u1(self):
        return self.eigenvectors[:, 0]

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.T


class ModularityDecomposition(object):
    """
    Modularity Q of the sign split given by the top eigenvector and
    its decomposition Q = A_n + B_n with B_n = lambda_1 |u_1|_1^2 and
    A_n = sum_{i>=2} lambda_i (sgn(u_1)^T u_i)^2.
    """

    def __init__(self, q, a_n, b_n, lambda1, l1norm_sq, n, sign_vector, notes=None):
        self.q = float(q)
        self.a_n = float(a_n)
        self.b_n = float(b_n)
        self.lambda1 = float(lambda1)
        self.l1norm_sq = float(l1norm_sq)
        self.n = int(n)
        sign_vector = np.array(sign_vector, dtype=int)
        sign_vector.setflags(write=False)
        self.sign_vector = sign_vector
        self.notes = list(notes or [])

    @property
    def tw_statistic(self):
        """
        n^(1/6) (lambda_1 - 2 n^(1/2)), the Tracy-Widom scaling.
        """
        return self.n ** (1.0 / 6.0) * (self.lambda1 - 2.0 * np.sqrt(self.n))

    @property
    def degenerate(self):
        return any(note.startswith("degenerate") for note in self.notes)

    def normalized(self, variant=CENTERED_L1):
        return normalized_modularity(self, variant).value

    def to_dict(self):
        return {
            "q": self.q,
            "a_n": self.a_n,
            "b_n": self.b_n,
            "lambda1": self.lambda1,
            "l1norm_sq": self.l1norm_sq,
            "n": self.n,
            "notes": list(self.notes)
        }


class NormalizedStatistic(object):

    def __init__(self, variant, value):
        if variant not in VARIANTS:
            raise InvalidParameterError("Unknown variant '%s'" % variant)
        if not np.isfinite(value):
            raise NumericalError("Normalized statistic is not finite.", {"variant": variant})
        self.variant = variant
        self.value = float(value)

    def __float__(self):
        return self.value

    def __repr__(self):
        return "NormalizedStatistic(%s, %.6g)" % (self.variant, self.value)


def orient(vectors):
    """
    Flips every column so that its entry of largest absolute value
    is positive. Ties go to the lowest index.
    """

    vectors = np.array(vectors, dtype=float)
    idx = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[idx, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def eigendecompose_symmetric(w):
    """
    Full eigendecomposition of a symmetric matrix.

    :param w: SymmetricMatrix or symmetric array.
    :return: SpectralDecomposition, eigenvalues non-increasing.
    """

    entries = np.asarray(w, dtype=float)

    if not np.all(np.isfinite(entries)):
        raise InvalidParameterError("Matrix has non-finite entries.")

    try:
        values, vectors = np.linalg.eigh(entries)
    except LinAlgError as e:
        raise NumericalError("Symmetric eigensolver did not converge: %s" % str(e),
                             {"n": entries.shape[0],
                              "frobenius": float(np.linalg.norm(entries)),
                              "finite": bool(np.all(np.isfinite(entries)))})

    # eigh returns ascending order.
    values = values[::-1]
    vectors = orient(vectors[:, ::-1])

    return SpectralDecomposition(values, vectors)


def sign_vector(u):
    """
    Coordinate-wise sign in {-1, 0, +1}; exact zeros stay 0.
    """

    return np.sign(np.asarray(u, dtype=float)).astype(int)


def modularity(w):
    """
    Modularity of the split by the signs of the top eigenvector,
    Q = sgn(u_1)^T W sgn(u_1), and its A_n / B_n decomposition.

    :param w: SymmetricMatrix, n >= 2.
    :return: ModularityDecomposition
    """

    w = as_symmetric(w)
    n = w.n
    if n < 2:
        raise InvalidDimensionError("Modularity needs n >= 2, got %d" % n)

    sd = eigendecompose_symmetric(w)
    notes = []

    frobenius = float(np.linalg.norm(w.entries))
    if sd.eigenvalues[0] - sd.eigenvalues[1] <= DEGENERACY_TOL * frobenius:
        message = "degenerate top eigenvalue: lambda_1 = %.12g repeats, u_1 is not unique" % sd.lambda1
        log.warning(message)
        notes.append(message)

    u1 = sd.u1
    s = sign_vector(u1).astype(float)

    q = s @ w.entries @ s
    projections = (sd.eigenvectors.T @ s) ** 2
    l1norm_sq = np.sum(np.abs(u1)) ** 2
    b_n = sd.lambda1 * l1norm_sq
    a_n = np.sum(sd.eigenvalues[1:] * projections[1:])

    log.debug("modularity(): n=%d Q=%.6g A_n=%.6g B_n=%.6g" % (n, q, a_n, b_n))

    return ModularityDecomposition(q, a_n, b_n, sd.lambda1, l1norm_sq, n,
                                   s.astype(int), notes=notes)


def normalized_modularity(md, variant=CENTERED_L1):
    """
    :param md: ModularityDecomposition
    :param variant: CENTERED_L1, CENTERED_4_OVER_PI or RAW_OVER_N.
    :return: NormalizedStatistic
    """

    n = float(md.n)

    if variant == CENTERED_L1:
        value = (md.q - 2.0 * np.sqrt(n) * md.l1norm_sq) / n
    elif variant == CENTERED_4_OVER_PI:
        value = (md.q - n ** 1.5 * 4.0 / np.pi) / n
    elif variant == RAW_OVER_N:
        value = md.q / n
    else:
        raise InvalidParameterError("Unknown variant '%s', expected one of %s" %
                                    (variant, ", ".join(VARIANTS)))

    return NormalizedStatistic(variant, value)


def semicircle_cdf(x):
    """
    Distribution function of the semicircle density
    (2 pi)^-1 sqrt(4 - x^2) on [-2, 2].
    """

    x = np.clip(x, -2.0, 2.0)
    return 0.5 + x * np.sqrt(4.0 - x * x) / (4.0 * np.pi) + np.arcsin(x / 2.0) / np.pi


def classical_locations(n):
    """
    gamma_1 < ... < gamma_n with semicircle_cdf(gamma_j) = j / n.

    The semicircle is symmetric, so with this (right endpoint)
    convention gamma_j = -gamma_(n-j) for 1 <= j < n, 1-indexed, and
    gamma_n = 2 has no mirror image.

    :param n: Dimension.
    :return: numpy array of length n; gamma_n = 2.
    """

    if n is None or int(n) != n or n < 1:
        raise InvalidDimensionError("Dimension must be a positive integer, got %s" % n)

    n = int(n)
    gammas = np.empty(n)
    for j in range(1, n):
        target = j / float(n)
        gammas[j - 1] = brentq(lambda x: semicircle_cdf(x) - target, -2.0, 2.0,
                               xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
    gammas[n - 1] = 2.0

    return gammas
