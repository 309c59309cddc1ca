# -*- coding: utf-8 -*-
"""
    IlliqDep.adaptive
    ~~~~~~~~~~~~~~~~~

    Dependence statistics that stay valid when the trade probability moves
    over time. Each observation is centered on its own probability ``p_t``
    (known for the oracle variant, kernel-estimated for the feasible one),
    and the portmanteau statistic is rescaled by a heteroskedasticity
    correction ``omega``.

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['OracleProbabilities',
           'CusumTrajectory',
           'gamma_tilde',
           'omega_hat',
           'profile_oracle',
           'portmanteau_oracle',
           'profile_feasible',
           'portmanteau_feasible',
           'cusum_trajectory', ]


import logging
import math

import numpy as np

import IlliqDep.error as error

from .kernel import ProbabilityEstimate
from .stationary import (
    DependenceProfile,
    Variant,
    _as_bits,
    _check_lag,
    _check_max_lag,
    _lagged_sums,
    _portmanteau, )

logger = logging.getLogger(__name__)


class OracleProbabilities(object):
    """
    Known trade probabilities ``p_t`` in ``(0, 1)``, one per observation.
    """

    @property
    def p(self):
        return self.__p

    __slots__ = ['__p', ]

    def __init__(self, p):
        """
        :raises error.InvalidInput: if some ``p_t`` is outside ``(0, 1)``.
        """
        p = np.array(p, dtype=float)
        if p.ndim != 1 or p.size == 0:
            raise error.InvalidInput("probabilities must be a 1-d sequence")
        if not np.all((p > 0.0) & (p < 1.0)):
            raise error.InvalidInput("probabilities must lie in (0, 1)")
        p.setflags(write=False)
        self.__p = p
        pass  # void return

    def __len__(self):
        return self.__p.size

    pass


class CusumTrajectory(object):
    """
    Partial sums ``gamma_tilde(h, u)`` of centered lagged products over an
    evenly spaced grid of sample fractions ``u``.
    """

    @property
    def h(self):
        return self.__h

    @property
    def u_grid(self):
        return self.__u_grid

    @property
    def values(self):
        return self.__values

    @property
    def n(self):
        return self.__n

    @property
    def sup(self):
        """
        ``sup_u |gamma_tilde(h, u)|`` over the grid.
        """
        return float(np.max(np.abs(self.__values)))

    @property
    def scaled_sup(self):
        """
        ``sqrt(n) * sup``, the scale of the Gaussian-process limit.
        """
        return math.sqrt(self.__n) * self.sup

    __slots__ = ['__h', '__u_grid', '__values', '__n', ]

    def __init__(self, h, u_grid, values, n):
        self.__h = int(h)
        self.__u_grid = np.asarray(u_grid, dtype=float)
        self.__values = np.asarray(values, dtype=float)
        self.__n = int(n)
        pass  # void return

    def to_dict(self):
        return {'h': self.__h, 'n': self.__n, 'sup': self.sup,
                'scaled_sup': self.scaled_sup,
                'u': self.__u_grid.tolist(),
                'values': self.__values.tolist(), }

    pass


# shared helpers

def _probabilities(p):
    # unwrap any accepted probability container into a float array
    if isinstance(p, ProbabilityEstimate):
        return p.p_hat
    if isinstance(p, OracleProbabilities):
        return p.p
    return OracleProbabilities(p).p


def _residuals(series, p):
    bits = _as_bits(series)
    probs = _probabilities(p)
    if probs.size != bits.size:
        raise error.InvalidInput(
            "probabilities (%d) and series (%d) differ in length"
            % (probs.size, bits.size), n=bits.size)
    return bits - probs


def _denominator(n, h):
    # h = 0 uses n, matching the variance in the omega display
    return float(n if h == 0 else n - h)


def _omega(e):
    squares = e * e
    n = e.size
    denominator = (squares.sum() / n) ** 2
    if not denominator > 0:
        raise error.DegenerateSeries("zero residual variance", n=n)
    return float(np.dot(squares[1:], squares[:-1]) / n / denominator)


def _profile(e, m, variant, level):
    n = e.size
    m = _check_max_lag(m, n)
    sums = _lagged_sums(e, e, m)
    gammas = sums / np.array([_denominator(n, h) for h in range(m + 1)])
    if not gammas[0] > 0:
        raise error.DegenerateSeries("zero residual variance", n=n)
    return DependenceProfile(gammas[1:] / gammas[0], variant, n,
                             _omega(e), level)


def _clip_warnings(p):
    if isinstance(p, ProbabilityEstimate) and p.clip_count:
        return ("%d of %d probability estimates clipped to [%g, 1 - %g]"
                % (p.clip_count, len(p), p.epsilon, p.epsilon), )
    return ()


# operations

def gamma_tilde(series, p, h, u=1.0):
    """
    :param series: ``BinarySeries``.
    :param p: ``OracleProbabilities``, ``ProbabilityEstimate`` or a
        sequence of probabilities.
    :param h: lag, ``0 <= h <= n - 1``.

    Optional arguments:

    :param u: sample fraction in ``(0, 1]``.

    :returns: ``(n - h)^{-1} sum_{t=h+1}^{[nu]} e_t e_{t-h}`` with
        ``e_t = a_t - p_t`` (denominator ``n`` when ``h = 0``).

    :raises error.InvalidInput: on mismatched lengths or ``u`` outside
        ``(0, 1]``.
    """
    e = _residuals(series, p)
    n = e.size
    h = _check_lag(h, n)
    if not 0.0 < u <= 1.0:
        raise error.InvalidInput("u must lie in (0, 1]", u=u)
    stop = int(math.floor(n * u + 1e-9))
    if stop <= h:
        return 0.0
    return float(np.dot(e[h:stop], e[:stop - h]) / _denominator(n, h))


def omega_hat(series, p):
    """
    :returns: ``n^{-1} sum_{t>=2} e_t^2 e_{t-1}^2 / (n^{-1} sum e_t^2)^2``.

    :raises error.DegenerateSeries: if every residual is zero.
    """
    return _omega(_residuals(series, p))


def profile_oracle(series, p, m, level=None):
    """
    :param series: ``BinarySeries``.
    :param p: known probabilities.
    :param m: largest lag.

    :returns: ``DependenceProfile`` with components
        ``gamma_tilde(h, 1) / gamma_tilde(0, 1)`` and ``omega = omega_hat``.

    :raises error.DegenerateSeries: if ``gamma_tilde(0, 1) = 0``.
    """
    return _profile(_residuals(series, p), m, Variant.ORACLE, level)


def portmanteau_oracle(series, p, m, alpha=None):
    """
    :returns: ``TestReport`` for ``n / omega_hat * sum component_h ** 2``.
    """
    # import locally to allow override
    from .api import DEFAULT_ALPHA

    alpha = DEFAULT_ALPHA if alpha is None else alpha
    return _portmanteau(profile_oracle(series, p, m), m, alpha)


def profile_feasible(series, estimate, m, level=None):
    """
    :param series: ``BinarySeries``.
    :param estimate: ``ProbabilityEstimate`` computed from ``series``.
    :param m: largest lag.

    :returns: ``DependenceProfile`` centered on the (clipped) kernel
        estimates, ``omega`` computed the same way.

    :raises error.DegenerateSeries: if the series never or always trades,
        or every estimate is clipped.
    """
    if not isinstance(estimate, ProbabilityEstimate):
        raise error.InvalidInput("feasible profile needs a kernel estimate")
    bits = _as_bits(series)
    if bits.size and bits.min() == bits.max():
        raise error.DegenerateSeries("series never or always trades",
                                     n=bits.size)
    if estimate.clip_count == len(estimate):
        raise error.DegenerateSeries("every probability estimate is clipped",
                                     n=bits.size)
    return _profile(_residuals(series, estimate), m, Variant.FEASIBLE, level)


def portmanteau_feasible(series, estimate, m, alpha=None):
    """
    :returns: ``TestReport`` of the feasible adaptive portmanteau test; its
        ``warnings`` mention clipped probability estimates.
    """
    # import locally to allow override
    from .api import DEFAULT_ALPHA

    alpha = DEFAULT_ALPHA if alpha is None else alpha
    profile = profile_feasible(series, estimate, m)
    report = _portmanteau(profile, m, alpha, _clip_warnings(estimate))
    logger.debug("feasible portmanteau m=%d omega=%.4f stat=%.4f p=%.4g",
                 m, profile.omega, report.statistic, report.p_value)
    return report


def cusum_trajectory(series, p, h, grid_size=None):
    """
    :param series: ``BinarySeries``.
    :param p: known or estimated probabilities.
    :param h: lag.

    Optional arguments:

    :param grid_size: number of grid points ``u = k / grid_size``, at
        least 2; defaults to ``api.DEFAULT_GRID_SIZE``.

    :returns: ``CusumTrajectory``; a diagnostic only, no test attached.
    """
    # import locally to allow override
    from .api import DEFAULT_GRID_SIZE

    grid_size = DEFAULT_GRID_SIZE if grid_size is None else grid_size
    if isinstance(grid_size, bool) or int(grid_size) != grid_size or \
            grid_size < 2:
        raise error.InvalidInput("grid size must be an integer >= 2",
                                 grid_size=grid_size)
    e = _residuals(series, p)
    n = e.size
    h = _check_lag(h, n)

    # partial[k] = sum of the first k products e_t e_{t-h}, t = h+1..h+k
    partial = np.concatenate(([0.0], np.cumsum(e[h:] * e[:n - h])))
    u_grid = np.arange(1, int(grid_size) + 1) / float(grid_size)
    stops = np.floor(n * u_grid + 1e-9).astype(int)
    counts = np.clip(stops - h, 0, n - h)
    values = partial[counts] / _denominator(n, h)
    return CusumTrajectory(h, u_grid, values, n)
