# -*- coding: utf-8 -*-
"""
    IlliqDep.api.ingest
    ~~~~~~~~~~~~~~~~~~~

    CSV ingestion of daily log-returns.

    Accepted layouts: a single column of returns, or ``date,return`` rows;
    either may start with a header line. Reported row numbers count the
    non-blank lines of the file from 1, header included.

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['read_returns', ]


import logging
import os.path
import re

import pandas as pd

import IlliqDep.error as error

from ..binarize import ReturnSeries

logger = logging.getLogger(__name__)


def _is_number(text):
    try:
        float(text)
    except (TypeError, ValueError):
        return False
    return True


_MISSING = frozenset(['na', 'n/a', 'nan', 'null', 'none', 'inf', 'infinity'])


def _is_label(text):
    # a column name: starts with a letter and is neither a number nor a
    # missing value marker
    if not isinstance(text, str):
        return False
    text = text.strip()
    return (re.match(r"[A-Za-z_]", text) is not None
            and text.lower() not in _MISSING and not _is_number(text))


def _load_table(path):
    try:
        table = pd.read_csv(path, header=None, dtype=str,
                            skip_blank_lines=True, skipinitialspace=True)
    except (IOError, OSError) as e:
        raise error.InvalidInput("cannot read %s: %s" % (path, e),
                                 path=str(path))
    except pd.errors.EmptyDataError:
        raise error.InvalidInput("no returns in %s" % path, path=str(path))
    except pd.errors.ParserError as e:
        raise error.InvalidInput("malformed CSV %s: %s" % (path, e),
                                 path=str(path))
    if table.shape[1] > 2:
        raise error.InvalidInput(
            "expected 1 or 2 columns, found %d" % table.shape[1],
            path=str(path))
    return table


def read_returns(path, source_id=None):
    """
    :param path: CSV file with one return per row.

    Optional arguments:

    :param source_id: label of the series, defaults to the file name.

    :returns: ``ReturnSeries``.

    :raises error.InvalidInput: on an unreadable file, a non-numeric return
        or an invalid date (``err.row`` names the line), or unordered dates.
    """
    table = _load_table(path)
    # row numbers of the surviving lines, 1-based
    rows = table.index.to_numpy() + 1

    values = table.iloc[:, -1]
    has_header = table.shape[0] > 0 and all(
        _is_label(cell) for cell in table.iloc[0])
    if has_header:
        table, rows, values = table.iloc[1:], rows[1:], values.iloc[1:]
    if table.shape[0] == 0:
        raise error.InvalidInput("no returns in %s" % path, path=str(path))

    returns = pd.to_numeric(values, errors='coerce')
    bad = returns.isna().to_numpy()
    if bad.any():
        i = int(bad.argmax())
        raise error.InvalidInput(
            "non-numeric return %r at row %d" % (values.iloc[i], rows[i]),
            row=int(rows[i]), path=str(path))

    timestamps = None
    if table.shape[1] == 2:
        dates = pd.to_datetime(table.iloc[:, 0], errors='coerce')
        bad = dates.isna().to_numpy()
        if bad.any():
            i = int(bad.argmax())
            raise error.InvalidInput(
                "invalid date %r at row %d" % (table.iloc[i, 0], rows[i]),
                row=int(rows[i]), path=str(path))
        timestamps = [d.date().isoformat() for d in dates]

    source_id = source_id or os.path.basename(str(path))
    try:
        series = ReturnSeries(returns.to_numpy(dtype=float), timestamps,
                              source_id)
    except error.InvalidInput as e:
        index = e.to_dict().get('index')
        if index is None:
            raise
        raise error.InvalidInput("%s (row %d)" % (e, rows[index]),
                                 row=int(rows[index]), path=str(path))

    logger.info("read %d returns from %s", len(series), path)
    return series
