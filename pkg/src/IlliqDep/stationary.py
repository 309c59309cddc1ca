# -*- coding: utf-8 -*-
"""
    IlliqDep.stationary
    ~~~~~~~~~~~~~~~~~~~

    Dependence statistics of the trade/no-trade sequence when the trade
    probability is constant: the sample-mean-centered covariances, the
    dependence profile (an ACF-like plot for a categorical series) and the
    chi-square portmanteau test.

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['Variant',
           'DependenceProfile',
           'TestReport',
           'gamma_hat',
           'dependence_profile_stationary',
           'portmanteau_stationary', ]


import enum
import logging
import math

import numpy as np

import IlliqDep.error as error

from .binarize import BinarySeries
from .distributions import chi2_quantile, chi2_sf, gaussian_quantile

logger = logging.getLogger(__name__)


class Variant(enum.Enum):
    """
    Which probability the dependence statistics are centered on.
    """
    STATIONARY = "stationary"
    ORACLE = "oracle-adaptive"
    FEASIBLE = "feasible-adaptive"


class DependenceProfile(object):
    """
    Per-lag normalized covariances with the data needed to draw their
    Gaussian confidence bounds.
    """

    @property
    def lags(self):
        """
        ``numpy`` array ``1..m``.
        """
        return self.__lags

    @property
    def components(self):
        """
        ``numpy`` array of the per-lag ratios ``gamma(h) / gamma(0)``.
        """
        return self.__components

    @property
    def scale(self):
        """
        ``sqrt(n / omega)``; ``scale * component`` is asymptotically N(0,1).
        """
        return math.sqrt(self.__n / self.__omega)

    @property
    def variant(self):
        return self.__variant

    @property
    def n(self):
        return self.__n

    @property
    def omega(self):
        """
        variance correction (``1`` for the stationary variant).
        """
        return self.__omega

    @property
    def level(self):
        """
        coverage of the confidence bounds.
        """
        return self.__level

    @property
    def bound(self):
        """
        half-width of the confidence band, e.g. ``1.96 * sqrt(omega / n)``.
        """
        return gaussian_quantile(0.5 + 0.5 * self.__level) / self.scale

    @property
    def lower_bounds(self):
        return np.full(self.__lags.size, -self.bound)

    @property
    def upper_bounds(self):
        return np.full(self.__lags.size, self.bound)

    # private properties
    __slots__ = ['__lags', '__components', '__variant', '__n', '__omega',
                 '__level', ]

    def __init__(self, components, variant, n, omega=1.0, level=None):
        """
        :param components: per-lag ratios for lags ``1..m``.
        :param variant: ``Variant`` (or its string value).
        :param n: sample size.

        Optional arguments:

        :param omega: positive variance correction.
        :param level: coverage of the bounds, defaults to
            ``api.BOUND_LEVEL``.

        :raises error.InvalidInput: if ``omega`` is not positive or no
            component is given.
        """
        # import locally to allow override
        from .api import BOUND_LEVEL

        components = np.array(components, dtype=float)
        if components.ndim != 1 or components.size == 0:
            raise error.InvalidInput("a profile needs at least one lag")
        if not omega > 0:
            raise error.InvalidInput("omega must be positive", omega=omega)
        if not n > 0:
            raise error.InvalidInput("sample size must be positive", n=n)
        components.setflags(write=False)

        lags = np.arange(1, components.size + 1)
        lags.setflags(write=False)

        self.__lags = lags
        self.__components = components
        self.__variant = Variant(variant)
        self.__n = int(n)
        self.__omega = float(omega)
        self.__level = float(BOUND_LEVEL if level is None else level)
        pass  # void return

    @property
    def m(self):
        return self.__components.size

    def statistic(self, m=None):
        """
        :returns: ``n / omega * sum_{h <= m} component_h ** 2``.
        """
        m = self.m if m is None else m
        if not 1 <= m <= self.m:
            raise error.InvalidLag("test lags exceed the profile", m=m)
        head = self.__components[:m]
        return float(self.__n / self.__omega * np.dot(head, head))

    def exceedances(self):
        """
        :returns: boolean array, ``True`` where a component lies outside
            its confidence band.
        """
        return np.abs(self.__components) > self.bound

    def truncate(self, m):
        """
        :returns: a profile restricted to lags ``1..m``.
        """
        if not 1 <= m <= self.m:
            raise error.InvalidLag("cannot truncate beyond the profile", m=m)
        return DependenceProfile(self.__components[:m], self.__variant,
                                 self.__n, self.__omega, self.__level)

    def to_dict(self):
        return {'variant': self.__variant.value,
                'n': self.__n,
                'omega': self.__omega,
                'scale': self.scale,
                'level': self.__level,
                'bound': self.bound,
                'lags': self.__lags.tolist(),
                'components': self.__components.tolist(), }

    @classmethod
    def from_dict(cls, data):
        return cls(data['components'], data['variant'], data['n'],
                   data.get('omega', 1.0), data.get('level'))

    pass


class TestReport(object):
    """
    Outcome of a portmanteau test at level ``alpha``.
    """

    # not a unittest case
    __test__ = False

    @property
    def statistic(self):
        return self.__statistic

    @property
    def df(self):
        return self.__df

    @property
    def alpha(self):
        return self.__alpha

    @property
    def critical_value(self):
        return self.__critical_value

    @property
    def p_value(self):
        return self.__p_value

    @property
    def reject(self):
        """
        ``True`` iff the statistic exceeds the critical value.
        """
        return self.__statistic > self.__critical_value

    @property
    def variant(self):
        return self.__variant

    @property
    def warnings(self):
        """
        ``tuple`` of human-readable notes (e.g. clipped probabilities).
        """
        return self.__warnings

    # private properties
    __slots__ = ['__statistic', '__df', '__alpha', '__critical_value',
                 '__p_value', '__variant', '__warnings', ]

    def __init__(self, statistic, df, alpha, variant, warnings=()):
        """
        :param statistic: non-negative test statistic.
        :param df: degrees of freedom ``m``.
        :param alpha: level in ``(0, 1)``.
        :param variant: ``Variant`` (or its string value).

        :raises error.InvalidInput: if ``alpha`` is outside ``(0, 1)``.
        """
        if not 0.0 < alpha < 1.0:
            raise error.InvalidInput("alpha must be in (0, 1)", alpha=alpha)
        self.__statistic = float(statistic)
        self.__df = int(df)
        self.__alpha = float(alpha)
        self.__critical_value = chi2_quantile(self.__df, 1.0 - self.__alpha)
        self.__p_value = chi2_sf(self.__statistic, self.__df)
        self.__variant = Variant(variant)
        self.__warnings = tuple(warnings)
        pass  # void return

    def to_dict(self):
        return {'variant': self.__variant.value,
                'statistic': self.__statistic,
                'df': self.__df,
                'alpha': self.__alpha,
                'critical_value': self.__critical_value,
                'p_value': self.__p_value,
                'reject': self.reject,
                'warnings': list(self.__warnings), }

    pass


# shared helpers

def _as_bits(series):
    if isinstance(series, BinarySeries):
        return series.bits.astype(float)
    return BinarySeries(series).bits.astype(float)


def _check_lag(h, n):
    if isinstance(h, bool) or int(h) != h or not 0 <= h <= n - 1:
        raise error.InvalidLag("lag %r outside 0..%d" % (h, n - 1), h=h, n=n)
    return int(h)


def _check_max_lag(m, n):
    if isinstance(m, bool) or int(m) != m or not 1 <= m < n:
        raise error.InvalidLag("max lag %r outside 1..%d" % (m, n - 1),
                               m=m, n=n)
    return int(m)


def _lagged_sums(x, y, m):
    # sum_{t > h} x_t * y_{t - h} for h = 0..m
    return np.array([np.dot(x[h:], y[:x.size - h]) for h in range(m + 1)])


def _portmanteau(profile, m, alpha, warnings=()):
    return TestReport(profile.statistic(m), m, alpha, profile.variant,
                      warnings)


# operations

def gamma_hat(series, h):
    """
    :param series: ``BinarySeries``.
    :param h: lag, ``0 <= h <= n - 1``.

    :returns: ``n^{-1} sum_{t=h+1}^{n} (a_t - abar)(a_{t-h} - abar)``.

    :raises error.InvalidLag: if ``h`` is out of range.
    """
    bits = _as_bits(series)
    h = _check_lag(h, bits.size)
    x = bits - bits.mean()
    return float(np.dot(x[h:], x[:x.size - h]) / x.size)


def dependence_profile_stationary(series, m, level=None):
    """
    :param series: ``BinarySeries``.
    :param m: largest lag, ``1 <= m < n``.

    Optional arguments:

    :param level: coverage of the confidence bounds.

    :returns: ``DependenceProfile`` with components
        ``gamma_hat(h) / gamma_hat(0)``, ``omega = 1``.

    :raises error.DegenerateSeries: if the series is constant.
    """
    bits = _as_bits(series)
    n = bits.size
    m = _check_max_lag(m, n)

    x = bits - bits.mean()
    sums = _lagged_sums(x, x, m)
    if not sums[0] > 0:
        raise error.DegenerateSeries("constant trade indicator", n=n)
    return DependenceProfile(sums[1:] / sums[0], Variant.STATIONARY, n,
                             1.0, level)


def portmanteau_stationary(series, m, alpha=None):
    """
    :param series: ``BinarySeries``.
    :param m: number of lags tested.

    Optional arguments:

    :param alpha: level, defaults to ``api.DEFAULT_ALPHA``.

    :returns: ``TestReport`` for ``n * sum component_h ** 2`` against the
        chi-square quantile with ``m`` degrees of freedom.
    """
    # import locally to allow override
    from .api import DEFAULT_ALPHA

    alpha = DEFAULT_ALPHA if alpha is None else alpha
    profile = dependence_profile_stationary(series, m)
    report = _portmanteau(profile, m, alpha)
    logger.debug("stationary portmanteau m=%d stat=%.4f p=%.4g",
                 m, report.statistic, report.p_value)
    return report
