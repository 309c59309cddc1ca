# -*- coding: utf-8 -*-
"""
    IlliqDep.analyzer
    ~~~~~~~~~~~~~~~~~

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['AnalysisReport', 'Analyzer', ]


import logging

import numpy as np

import IlliqDep.error as error

from .adaptive import (
    CusumTrajectory,
    cusum_trajectory,
    portmanteau_feasible,
    profile_feasible, )
from .binarize import BinarySeries, ReturnSeries, binarize, sample_mean
from .kernel import KernelSmoother
from .stationary import (
    DependenceProfile,
    TestReport,
    dependence_profile_stationary,
    portmanteau_stationary, )

logger = logging.getLogger(__name__)


class AnalysisReport(object):
    """
    Outcome of one series analysis: both dependence profiles, both tests,
    the probability estimate and optional CUSUM trajectories.
    """

    @property
    def source_id(self):
        return self.__data['source_id']

    @property
    def n(self):
        return self.__data['n']

    @property
    def a_bar(self):
        return self.__data['a_bar']

    @property
    def probability(self):
        """
        ``dict`` summary of the kernel estimate.
        """
        return self.__data['probability']

    @property
    def parameters(self):
        return self.__data['parameters']

    @property
    def bits(self):
        return self.__data['bits']

    @property
    def p_hat(self):
        return self.__data['p_hat']

    @property
    def clipped(self):
        """
        ``bool`` array, ``True`` where ``p_hat`` was clipped.
        """
        return self.__data['clipped']

    @property
    def stationary_profile(self):
        return self.__data['stationary_profile']

    @property
    def stationary_test(self):
        return self.__data['stationary_test']

    @property
    def feasible_profile(self):
        return self.__data['feasible_profile']

    @property
    def feasible_test(self):
        return self.__data['feasible_test']

    @property
    def cusum(self):
        """
        ``tuple`` of ``CusumTrajectory``.
        """
        return self.__data['cusum']

    # private properties
    __slots__ = ['__data', ]

    def __init__(self, **kwds):
        self.__data = kwds
        pass  # void return

    def summary(self):
        """
        :returns: one line with the source, ``n`` and ``a_bar`` to two
            decimals.
        """
        return "%s  n=%d  a_bar=%.2f" % (self.source_id or "-", self.n,
                                         self.a_bar)

    def to_dict(self):
        # import locally to allow override
        from .api import REPORT_SCHEMA_VERSION

        return {'schema_version': REPORT_SCHEMA_VERSION,
                'source_id': self.source_id,
                'n': self.n,
                'a_bar': self.a_bar,
                'parameters': dict(self.parameters),
                'probability': dict(self.probability),
                'series': {'a': np.asarray(self.bits).tolist(),
                           'p_hat': np.asarray(self.p_hat).tolist(),
                           'clipped': np.asarray(self.clipped).tolist()},
                'stationary': {'profile': self.stationary_profile.to_dict(),
                               'test': self.stationary_test.to_dict()},
                'feasible': {'profile': self.feasible_profile.to_dict(),
                             'test': self.feasible_test.to_dict()},
                'cusum': [c.to_dict() for c in self.cusum], }

    @classmethod
    def from_dict(cls, data):
        """
        :raises error.InvalidInput: if an entry is missing.
        """
        def test(entry):
            return TestReport(entry['statistic'], entry['df'], entry['alpha'],
                              entry['variant'], entry.get('warnings', ()))

        try:
            return cls(
                source_id=data['source_id'],
                n=data['n'],
                a_bar=data['a_bar'],
                parameters=data['parameters'],
                probability=data['probability'],
                bits=np.asarray(data['series']['a'], dtype=int),
                p_hat=np.asarray(data['series']['p_hat'], dtype=float),
                clipped=np.asarray(data['series']['clipped'], dtype=bool),
                stationary_profile=DependenceProfile.from_dict(
                    data['stationary']['profile']),
                stationary_test=test(data['stationary']['test']),
                feasible_profile=DependenceProfile.from_dict(
                    data['feasible']['profile']),
                feasible_test=test(data['feasible']['test']),
                cusum=tuple(CusumTrajectory(c['h'], c['u'], c['values'],
                                            c['n'])
                            for c in data.get('cusum', ())))
        except (KeyError, TypeError) as e:
            raise error.InvalidInput("malformed report: missing %s" % e)

    pass


class Analyzer(object):
    """
    Runs the complete workflow on one series: binarize, estimate the trade
    probability, then compute the stationary and the feasible adaptive
    profiles and tests side by side.
    """

    @property
    def max_lag(self):
        return self.__max_lag

    @property
    def test_lags(self):
        return self.__test_lags

    @property
    def alpha(self):
        return self.__alpha

    @property
    def threshold(self):
        return self.__threshold

    @property
    def smoother(self):
        return self.__smoother

    @property
    def cusum_lags(self):
        return self.__cusum_lags

    # private properties
    __slots__ = ['__max_lag', '__test_lags', '__alpha', '__threshold',
                 '__smoother', '__cusum_lags', '__grid_size', ]

    def __init__(self, max_lag=None, test_lags=None, alpha=None,
                 threshold=None, smoother=None, cusum_lags=(),
                 grid_size=None):
        """
        Optional arguments:

        :param max_lag: lags of the dependence profiles, defaults to
            ``api.DEFAULT_PLOT_LAGS``.
        :param test_lags: lags of the portmanteau tests, defaults to
            ``api.DEFAULT_TEST_LAGS``.
        :param alpha: test level, defaults to ``api.DEFAULT_ALPHA``.
        :param threshold: zero-detection tolerance.
        :param smoother: ``KernelSmoother``, defaults to the rate-default
            Epanechnikov smoother.
        :param cusum_lags: lags whose CUSUM trajectories are computed.
        :param grid_size: CUSUM grid size.

        :raises error.InvalidLag: if ``test_lags`` exceeds ``max_lag``.
        """
        # import locally to allow override
        from .api import DEFAULT_ALPHA, DEFAULT_PLOT_LAGS, DEFAULT_TEST_LAGS

        self.__max_lag = int(DEFAULT_PLOT_LAGS if max_lag is None else max_lag)
        self.__test_lags = int(DEFAULT_TEST_LAGS if test_lags is None
                               else test_lags)
        if self.__test_lags < 1 or self.__max_lag < 1:
            raise error.InvalidLag("lags must be positive",
                                   m=self.__test_lags)
        if self.__test_lags > self.__max_lag:
            raise error.InvalidLag("test lags exceed the profile lags",
                                   m=self.__test_lags)
        self.__alpha = DEFAULT_ALPHA if alpha is None else alpha
        self.__threshold = threshold
        self.__smoother = smoother or KernelSmoother()
        self.__cusum_lags = tuple(int(h) for h in cusum_lags)
        self.__grid_size = grid_size
        pass  # void return

    def __call__(self, data):
        """
        :param data: ``ReturnSeries``, or a ready ``BinarySeries``.

        :returns: ``AnalysisReport``.

        :raises error.IlliqDepError: on degenerate or too short series.
        """
        if isinstance(data, BinarySeries):
            series = data
        else:
            if not isinstance(data, ReturnSeries):
                data = ReturnSeries(data)
            series = binarize(data, self.__threshold)
        n = len(series)

        max_lag = self.__max_lag
        if max_lag >= n:
            logger.warning("profile lags reduced from %d to %d for n=%d",
                           max_lag, n - 1, n)
            max_lag = n - 1

        estimate = self.__smoother(series)
        stationary = dependence_profile_stationary(series, max_lag)
        feasible = profile_feasible(series, estimate, max_lag)
        stationary_test = portmanteau_stationary(series, self.__test_lags,
                                                 self.__alpha)
        feasible_test = portmanteau_feasible(series, estimate,
                                             self.__test_lags, self.__alpha)
        cusum = tuple(cusum_trajectory(series, estimate, h, self.__grid_size)
                      for h in self.__cusum_lags)

        report = AnalysisReport(
            source_id=series.source_id,
            n=n,
            a_bar=sample_mean(series),
            parameters={'max_lag': max_lag,
                        'test_lags': self.__test_lags,
                        'alpha': self.__alpha,
                        'threshold': series.threshold, },
            probability=estimate.summary(),
            bits=series.bits,
            p_hat=estimate.p_hat,
            clipped=estimate.clipped,
            stationary_profile=stationary,
            stationary_test=stationary_test,
            feasible_profile=feasible,
            feasible_test=feasible_test,
            cusum=cusum)
        logger.info("analyzed %s", report.summary())
        return report

    pass
