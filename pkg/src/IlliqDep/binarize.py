# -*- coding: utf-8 -*-
"""
    IlliqDep.binarize
    ~~~~~~~~~~~~~~~~~

    Conversion of a return series into the trade/no-trade indicator
    sequence: ``a_t = 0`` on a day with a zero return, ``1`` otherwise.

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['ReturnSeries', 'BinarySeries', 'binarize', 'sample_mean', ]


import logging

import numpy as np

import IlliqDep.error as error

logger = logging.getLogger(__name__)


def _frozen(values, dtype):
    array = np.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


class ReturnSeries(object):
    """
    Ordered log-returns of one asset, optionally dated.
    """

    @property
    def values(self):
        """
        read-only ``numpy`` array of returns.
        """
        return self.__values

    @property
    def timestamps(self):
        """
        ``tuple`` of strictly increasing dates, or ``None``.
        """
        return self.__timestamps

    @property
    def source_id(self):
        """
        free-text label of the data source.
        """
        return self.__source_id

    # private properties
    __slots__ = ['__values', '__timestamps', '__source_id', ]

    def __init__(self, values, timestamps=None, source_id=""):
        """
        :param values: sequence of real numbers (log-returns).

        Optional arguments:

        :param timestamps: sequence of dates (anything ordered), same length
            as ``values``.
        :param source_id: label of the data source.

        :raises error.InvalidInput: if ``values`` is empty, holds a
            non-finite entry, or ``timestamps`` is misaligned / unordered.
        """
        try:
            values = _frozen(values, float)
        except (TypeError, ValueError) as e:
            raise error.InvalidInput("returns must be real numbers: %s" % e)
        if values.ndim != 1 or values.size == 0:
            raise error.InvalidInput("returns must be a non-empty sequence")

        bad = np.flatnonzero(~np.isfinite(values))
        if bad.size:
            raise error.InvalidInput(
                "non-finite return at index %d" % bad[0], index=int(bad[0]))

        if timestamps is not None:
            timestamps = tuple(timestamps)
            if len(timestamps) != values.size:
                raise error.InvalidInput(
                    "timestamps and returns differ in length")
            for i in range(1, len(timestamps)):
                if not timestamps[i - 1] < timestamps[i]:
                    raise error.InvalidInput(
                        "timestamps not strictly increasing at index %d" % i,
                        index=i)

        self.__values = values
        self.__timestamps = timestamps
        self.__source_id = source_id or ""
        pass  # void return

    def __len__(self):
        return self.__values.size

    pass


class BinarySeries(object):
    """
    The trade/no-trade sequence ``(a_t)`` with its provenance.
    """

    @property
    def bits(self):
        """
        read-only ``numpy`` array of ``0`` / ``1`` (``int8``).
        """
        return self.__bits

    @property
    def n(self):
        return self.__bits.size

    @property
    def threshold(self):
        """
        zero-detection tolerance used when the series was built.
        """
        return self.__threshold

    @property
    def source_id(self):
        return self.__source_id

    # private properties
    __slots__ = ['__bits', '__threshold', '__source_id', ]

    def __init__(self, bits, threshold=0.0, source_id=""):
        """
        :param bits: sequence of ``0`` / ``1`` of length at least 2.

        Optional arguments:

        :param threshold: non-negative zero-detection tolerance.
        :param source_id: label of the data source.

        :raises error.InvalidInput: if ``bits`` is shorter than 2 or holds
            anything other than ``0`` and ``1``.
        """
        raw = np.asarray(bits)
        if raw.ndim != 1 or raw.size < 2:
            raise error.InvalidInput("a binary series needs at least 2 bits")
        if not np.all((raw == 0) | (raw == 1)):
            raise error.InvalidInput("bits must be 0 or 1")
        if not threshold >= 0:
            raise error.InvalidInput("threshold must be non-negative")

        self.__bits = _frozen(raw, np.int8)
        self.__threshold = float(threshold)
        self.__source_id = source_id or ""
        pass  # void return

    def __len__(self):
        return self.__bits.size

    def complement(self):
        """
        :returns: the relabelled series ``1 - a_t``.
        """
        return BinarySeries(1 - self.__bits, self.__threshold,
                            self.__source_id)

    pass


def binarize(returns, threshold=None):
    """
    :param returns: ``ReturnSeries`` (or any sequence of returns).

    Optional arguments:

    :param threshold: non-negative tolerance; ``|r_t| <= threshold`` counts
        as no trade. Defaults to ``api.DEFAULT_THRESHOLD`` (exactly zero).

    :returns: the ``BinarySeries`` with ``a_t = 0`` iff ``|r_t| <= threshold``.

    :raises error.InvalidInput: on invalid returns or a negative threshold.
    """
    # import locally to allow override
    from .api import DEFAULT_THRESHOLD

    if threshold is None:
        threshold = DEFAULT_THRESHOLD
    if not threshold >= 0:
        raise error.InvalidInput("threshold must be non-negative",
                                 threshold=threshold)
    if not isinstance(returns, ReturnSeries):
        returns = ReturnSeries(returns)

    bits = (np.abs(returns.values) > threshold).astype(np.int8)
    logger.debug("binarized %d returns from %r, %d trades",
                 bits.size, returns.source_id, int(bits.sum()))
    return BinarySeries(bits, threshold, returns.source_id)


def sample_mean(series):
    """
    :returns: ``n^{-1} sum a_t``, the share of trading days.
    """
    bits = series.bits if isinstance(series, BinarySeries) else \
        np.asarray(series)
    if bits.size == 0:
        raise error.InvalidInput("empty series")
    return float(np.mean(bits))
