# -*- coding: utf-8 -*-
"""
    IlliqDep.api.report
    ~~~~~~~~~~~~~~~~~~~

    Serialization of analysis and simulation outputs: JSON documents with
    sorted keys and CSV tables written through ``pandas``.

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['write_json',
           'load_report',
           'write_profile_csv',
           'write_probability_csv',
           'write_cusum_csv', ]


import json
import logging

import numpy as np
import pandas as pd

import IlliqDep.error as error

logger = logging.getLogger(__name__)


def write_json(path, data):
    """
    Writes ``data`` with sorted keys, so equal data gives equal bytes.
    """
    try:
        with open(path, "w") as f:
            json.dump(data, f, indent=2, sort_keys=True)
            f.write("\n")
    except (IOError, OSError) as e:
        raise error.InvalidInput("cannot write %s: %s" % (path, e),
                                 path=str(path))
    logger.debug("wrote %s", path)
    return path


def load_report(path):
    """
    :param path: ``report.json`` written by ``analyze``.

    :returns: the report ``dict``.

    :raises error.InvalidInput: if the file is unreadable or carries an
        unsupported ``schema_version``.
    """
    # import locally to allow override
    from . import REPORT_SCHEMA_VERSION

    try:
        with open(path) as f:
            data = json.load(f)
    except (IOError, OSError, ValueError) as e:
        raise error.InvalidInput("cannot load report %s: %s" % (path, e),
                                 path=str(path))
    version = data.get('schema_version') if isinstance(data, dict) else None
    if version != REPORT_SCHEMA_VERSION:
        raise error.InvalidInput(
            "unsupported report schema %r" % (version, ), path=str(path))
    return data


def _write_frame(path, frame):
    try:
        frame.to_csv(path, index=False, float_format="%.10g")
    except (IOError, OSError) as e:
        raise error.InvalidInput("cannot write %s: %s" % (path, e),
                                 path=str(path))
    logger.debug("wrote %s", path)
    return path


def write_profile_csv(path, profile):
    """
    Columns ``lag,component,lower_bound,upper_bound,exceeds``; ``exceeds``
    is ``1`` where the component lies outside its bounds.
    """
    return _write_frame(path, pd.DataFrame({
        'lag': profile.lags,
        'component': profile.components,
        'lower_bound': profile.lower_bounds,
        'upper_bound': profile.upper_bounds,
        'exceeds': profile.exceedances().astype(int), }))


def write_probability_csv(path, bits, p_hat, clipped):
    """
    Columns ``t,a,p_hat,clipped`` with ``t = 1..n``.

    :param clipped: flags of the estimates the smoother clipped, as kept
        by ``ProbabilityEstimate.clipped``.
    """
    bits = np.asarray(bits, dtype=int)
    clipped = np.asarray(clipped, dtype=bool)
    if clipped.size != bits.size:
        raise error.InvalidInput("clip flags do not match the series",
                                 n=bits.size)
    return _write_frame(path, pd.DataFrame({
        't': np.arange(1, bits.size + 1),
        'a': bits,
        'p_hat': np.asarray(p_hat, dtype=float),
        'clipped': clipped.astype(int), }))


def write_cusum_csv(path, trajectory):
    """
    Columns ``u,value``.
    """
    return _write_frame(path, pd.DataFrame({
        'u': trajectory.u_grid,
        'value': trajectory.values, }))
