############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
############################################################

import collections
import csv
import io
import logging

import numpy as np
import pandas as pd
import simplejson as json

from ModNetCommon import DataError, FormatError, ParseError, EmptyDataError, InvalidParameterError
from ensembles import SymmetricMatrix, as_symmetric

log = logging.getLogger('modnet.lib')

# Larger asymmetry than this is reported when a matrix is read.
ASYMMETRY_TOL = 1e-8

VOTE_CODES = {
    "y": 1.0, "yes": 1.0, "yea": 1.0, "aye": 1.0, "+": 1.0,
    "n": -1.0, "no": -1.0, "nay": -1.0, "-": -1.0,
    "abstain": np.nan, "present": np.nan, "not voting": np.nan, "nv": np.nan, "": np.nan
}

REPORT_VERSION = 1


class RawObservations(object):
    """
    Observations (rows) of members (columns), NaN where missing.
    """

    def __init__(self, values, labels, groups=None, dropped=None, provenance=None):
        self.values = np.asarray(values, dtype=float)
        self.labels = list(labels)
        self.groups = None if groups is None else list(groups)
        self.dropped = list(dropped or [])
        self.provenance = list(provenance or [])

    @property
    def missing(self):
        return np.isnan(self.values)

    @property
    def n_members(self):
        return self.values.shape[1]

    @property
    def n_observations(self):
        return self.values.shape[0]


class NormalizedNetwork(object):
    """
    Network ready for testing: zero diagonal, off-diagonal
    entries centered and scaled to mean 0 and variance 1.
    """

    def __init__(self, matrix, provenance, labels=None, groups=None, raw=None):
        self.matrix = matrix
        self.provenance = list(provenance)
        self.labels = labels
        self.groups = groups
        self.raw = raw


def _cell(text, row, col):
    try:
        return float(text)
    except ValueError:
        raise ParseError("Non-numeric cell '%s' at row %d, column %d." % (text, row, col), row=row, col=col)


def load_matrix_csv(path, warnings=None):
    """
    Reads a square numeric CSV matrix with an optional header row
    of member labels. A slightly asymmetric matrix is replaced by
    (W + W^T) / 2.

    :param path: File name.
    :param warnings: Optional list that receives warning messages.
    :return: SymmetricMatrix
    """

    log.debug("load_matrix_csv(): %s" % path)

    with open(path, newline='') as f:
        rows = [row for row in csv.reader(f) if len(row) > 0 and any(c.strip() for c in row)]

    if not rows:
        raise FormatError("Empty matrix file: %s" % path)

    labels = None
    first = rows[0]
    try:
        [float(c) for c in first]
    except ValueError:
        labels = [c.strip() for c in first]
        rows = rows[1:]

    n = len(rows)
    if n == 0:
        raise FormatError("Matrix file %s has a header but no rows." % path)

    values = np.empty((n, n))
    for i, row in enumerate(rows):
        if len(row) != n:
            raise FormatError("Matrix is not square: row %d has %d cells, expected %d." % (i + 1, len(row), n))
        for j, text in enumerate(row):
            values[i, j] = _cell(text.strip(), i + 1, j + 1)

    if labels is not None and len(labels) != n:
        raise FormatError("Header has %d labels for a %d x %d matrix." % (len(labels), n, n))

    if not np.all(np.isfinite(values)):
        raise ParseError("Matrix file %s has non-finite entries." % path)

    asymmetry = float(np.max(np.abs(values - values.T)))
    if asymmetry > 0:
        values = (values + values.T) / 2.0
        if asymmetry > ASYMMETRY_TOL:
            message = "Matrix %s was not symmetric (max |W - W^T| = %.3g); using (W + W^T)/2." % \
                      (path, asymmetry)
            log.warning(message)
            if warnings is not None:
                warnings.append(message)

    return SymmetricMatrix(values, labels=labels)


def save_matrix_csv(w, path, digits=17):
    """
    Writes a matrix so that load_matrix_csv() reads back the same
    values bit for bit.
    """

    w = as_symmetric(w)
    fmt = "%%.%dg" % digits

    with open(path, "w", newline='') as f:
        writer = csv.writer(f, lineterminator="\n")
        if w.labels is not None:
            writer.writerow(w.labels)
        for row in w.entries:
            writer.writerow([fmt % v for v in row])


def encode_votes(cell):
    """
    Yea/nay style votes to +1/-1, abstentions to missing,
    numbers pass through.
    """

    if cell is None:
        return np.nan
    if isinstance(cell, float) and np.isnan(cell):
        return np.nan

    text = str(cell).strip()
    try:
        return float(text)
    except ValueError:
        pass

    key = text.lower()
    if key in VOTE_CODES:
        return VOTE_CODES[key]

    raise ValueError(text)


def load_observations_csv(path, missing_token="?", members="columns", label_column=None,
                          header=True, missing_fraction=0.5):
    """
    Reads an observation table and drops members with more than
    ``missing_fraction`` of their observations missing.

    :param path: File name.
    :param missing_token: Cell text that marks a missing observation.
    :param members: 'columns' (one column per member) or 'rows'
        (one row per member, e.g. one row per representative). Row members
        are named by the row labels when every data line has one more
        field than the header, and row1, row2, ... otherwise.
    :param label_column: Column holding a group label per member
        (members='rows' only); it is removed from the observations.
    :param header: First line holds column names.
    :param missing_fraction: Drop threshold.
    :return: RawObservations
    """

    log.debug("load_observations_csv(): %s" % path)

    if members not in ("columns", "rows"):
        raise InvalidParameterError("members must be 'columns' or 'rows', got '%s'" % members)

    try:
        frame = pd.read_csv(path, header=0 if header else None, dtype=str,
                            na_values=[missing_token], keep_default_na=False,
                            skipinitialspace=True)
    except pd.errors.EmptyDataError:
        raise EmptyDataError("No data in %s" % path)
    except pd.errors.ParserError as e:
        raise FormatError("Could not parse %s: %s" % (path, str(e)))

    groups = None
    if label_column is not None:
        if members != "rows":
            raise InvalidParameterError("label_column needs members='rows'.")
        key = _column_key(frame, label_column)
        groups = [str(g) for g in frame[key].tolist()]
        frame = frame.drop(columns=[key])

    encoded = np.empty(frame.shape)
    for j, column in enumerate(frame.columns):
        for i, cell in enumerate(frame[column].tolist()):
            try:
                encoded[i, j] = encode_votes(cell)
            except ValueError:
                raise ParseError("Cannot read cell '%s' at row %d, column %d of %s." %
                                 (cell, i + 1, j + 1, path), row=i + 1, col=j + 1)

    if members == "rows":
        values = encoded.T
        if isinstance(frame.index, pd.RangeIndex):
            labels = ["row%d" % (i + 1) for i in range(encoded.shape[0])]
        else:
            labels = [str(i) for i in frame.index]
    else:
        values = encoded
        labels = [str(c) for c in frame.columns]

    provenance = ["read %s: %d observations of %d members" % (path, values.shape[0], values.shape[1])]

    missing = np.isnan(values).mean(axis=0) if values.shape[0] > 0 else np.ones(values.shape[1])
    keep = missing <= missing_fraction
    dropped = [labels[j] for j in np.flatnonzero(~keep)]

    if dropped:
        message = "dropped %d member(s) with more than %g%% missing: %s" % \
                  (len(dropped), 100 * missing_fraction, ", ".join(dropped))
        log.info(message)
        provenance.append(message)

    if not np.any(keep):
        raise EmptyDataError("All members of %s have more than %g%% missing observations." %
                             (path, 100 * missing_fraction))

    values = values[:, keep]
    labels = [labels[j] for j in np.flatnonzero(keep)]
    if groups is not None:
        groups = [groups[j] for j in np.flatnonzero(keep)]

    return RawObservations(values, labels, groups=groups, dropped=dropped, provenance=provenance)


def _column_key(frame, column):
    if column in frame.columns:
        return column
    try:
        return frame.columns[int(column)]
    except (ValueError, IndexError):
        raise InvalidParameterError("No column '%s' in observation table." % column)


def normalize_offdiagonal(w):
    """
    Centers and scales the off-diagonal entries (pooled) to mean 0
    and variance 1 and sets the diagonal to 0.

    :param w: SymmetricMatrix, n >= 2.
    :return: SymmetricMatrix with the same labels.
    """

    w = as_symmetric(w)
    if w.n < 2:
        raise DataError("Cannot normalize a 1 x 1 matrix.")

    iu = np.triu_indices(w.n, 1)
    values = w.entries[iu]
    spread = values.std()
    if spread == 0 or not np.isfinite(spread):
        raise DataError("Off-diagonal entries are constant; cannot rescale.")

    upper = np.zeros((w.n, w.n))
    upper[iu] = (values - values.mean()) / spread
    return SymmetricMatrix.from_upper(upper, np.zeros(w.n), labels=w.labels)


def normalize_network(w, labels=None, groups=None, provenance=None):
    """
    Normalized network from an already computed (correlation) matrix.
    """

    w = as_symmetric(w)
    if labels is not None:
        w = SymmetricMatrix(w.entries, labels=labels)

    steps = list(provenance or [])
    steps.append("off-diagonal centered and scaled (pooled), diagonal set to 0")

    return NormalizedNetwork(normalize_offdiagonal(w), steps, labels=w.labels, groups=groups, raw=w)


def build_correlation_network(obs, min_periods=3):
    """
    Pairwise-complete Pearson correlations between members, then
    normalize_offdiagonal().

    :param obs: RawObservations
    :param min_periods: Fewest shared observations for a correlation.
    :return: NormalizedNetwork
    """

    provenance = list(obs.provenance)
    frame = pd.DataFrame(obs.values, columns=obs.labels)

    counts = frame.notna().sum(axis=0).values
    spread = frame.std(axis=0, skipna=True).values
    usable = (counts >= min_periods) & np.isfinite(spread) & (spread > 0)

    for j in np.flatnonzero(~usable):
        message = "excluded member %s: zero variance or fewer than %d observations" % (obs.labels[j],
                                                                                        min_periods)
        log.warning(message)
        provenance.append(message)

    if usable.sum() < 2:
        raise EmptyDataError("Fewer than 2 members left to correlate.")

    frame = frame.loc[:, usable]
    labels = [obs.labels[j] for j in np.flatnonzero(usable)]
    groups = None if obs.groups is None else [obs.groups[j] for j in np.flatnonzero(usable)]

    corr = frame.corr(method="pearson", min_periods=min_periods).values
    undefined = ~np.isfinite(corr)
    if np.any(undefined):
        message = "%d member pair(s) share too few observations; correlation set to 0" % \
                  (int(undefined.sum()) // 2)
        log.warning(message)
        provenance.append(message)
        corr[undefined] = 0.0

    provenance.append("pairwise-complete Pearson correlation of %d members" % len(labels))
    raw = SymmetricMatrix.from_upper(corr, np.ones(len(labels)), labels=labels)

    return normalize_network(raw, groups=groups, provenance=provenance)


def _plain(value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError("Object of type %s is not JSON serializable" % type(value).__name__)


def format_report(results, rows, fmt="json", meta=None):
    """
    Renders a report.

    :param results: JSON-ready structure of the results.
    :param rows: List of flat dicts, one per CSV row.
    :param fmt: 'json' or 'csv'.
    :param meta: Dict with 'seed', 'inputs' and 'warnings'.
    :return: Text.
    """

    meta = meta or {}

    if fmt == "json":
        document = collections.OrderedDict([
            ("version", REPORT_VERSION),
            ("seed", meta.get("seed")),
            ("inputs", meta.get("inputs", {})),
            ("results", results),
            ("warnings", list(meta.get("warnings", [])))
        ])
        return json.dumps(document, indent=2, ignore_nan=True, default=_plain) + "\n"

    if fmt == "csv":
        buf = io.StringIO()
        if rows:
            fields = []
            for row in rows:
                for key in row:
                    if key not in fields:
                        fields.append(key)
            writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow(dict((k, _csv_value(v)) for k, v in row.items()))
        return buf.getvalue()

    raise InvalidParameterError("Unknown format '%s', expected csv or json" % fmt)


def _csv_value(value):
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, np.integer):
        return int(value)
    return value


def write_report(results, rows, path, fmt="json", meta=None):
    text = format_report(results, rows, fmt, meta)
    with open(path, "w", newline='') as f:
        f.write(text)
    log.info("Report written to %s" % path)
    return text
