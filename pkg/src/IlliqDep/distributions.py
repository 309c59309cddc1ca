# -*- coding: utf-8 -*-
"""
    IlliqDep.distributions
    ~~~~~~~~~~~~~~~~~~~~~~

    Chi-square CDF / quantile and the standard Gaussian quantile used by the
    portmanteau tests and the plotted confidence bounds.

    The regularized incomplete gamma function follows the classic
    series / continued-fraction split (Numerical Recipes, chapter 6).

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['Chi2Params',
           'chi2_cdf',
           'chi2_sf',
           'chi2_quantile',
           'gaussian_cdf',
           'gaussian_quantile', ]


import math
import sys

import IlliqDep.error as error

# convergence controls of the incomplete gamma expansions
_EPS = 1e-16
_TINY = sys.float_info.min / sys.float_info.epsilon
_MAX_ITERATIONS = 10000


class Chi2Params(object):
    """
    Degrees of freedom of a chi-square law.
    """

    @property
    def df(self):
        return self.__df

    @property
    def shape(self):
        """
        shape ``df / 2`` of the underlying gamma law.
        """
        return 0.5 * self.__df

    __slots__ = ['__df', ]

    def __init__(self, df):
        """
        :raises error.InvalidInput: if ``df`` is not a positive integer.
        """
        if isinstance(df, bool) or int(df) != df or df < 1:
            raise error.InvalidInput(
                "degrees of freedom must be a positive integer", df=df)
        self.__df = int(df)
        pass  # void return

    pass


def _gamma_series(a, x):
    # lower regularized P(a, x) by its power series; good for x < a + 1
    if x == 0.0:
        return 0.0
    ap = a
    term = total = 1.0 / a
    for _ in range(_MAX_ITERATIONS):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            return total * math.exp(-x + a * math.log(x) - math.lgamma(a))
    raise error.IlliqDepError("incomplete gamma series did not converge",
                              a=a, x=x)


def _gamma_fraction(a, x):
    # upper regularized Q(a, x) by Lentz's continued fraction; x >= a + 1
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITERATIONS):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h
    raise error.IlliqDepError("incomplete gamma fraction did not converge",
                              a=a, x=x)


def _check_x(x):
    if not x >= 0.0:
        raise error.InvalidInput("chi-square argument must be non-negative",
                                 x=x)
    return float(x)


def chi2_cdf(x, df):
    """
    :param x: non-negative real.
    :param df: positive integer degrees of freedom.

    :returns: ``P(chi2_df <= x)``, i.e. the regularized lower incomplete
        gamma ``P(df / 2, x / 2)``.

    :raises error.InvalidInput: on negative ``x`` or invalid ``df``.
    """
    a, x = Chi2Params(df).shape, _check_x(x) / 2.0
    if math.isinf(x):
        return 1.0
    if x < a + 1.0:
        return _gamma_series(a, x)
    return 1.0 - _gamma_fraction(a, x)


def chi2_sf(x, df):
    """
    :returns: ``P(chi2_df > x)`` computed without cancellation in the tail.
    """
    a, x = Chi2Params(df).shape, _check_x(x) / 2.0
    if math.isinf(x):
        return 0.0
    if x < a + 1.0:
        return 1.0 - _gamma_series(a, x)
    return _gamma_fraction(a, x)


def chi2_quantile(df, q):
    """
    :param df: positive integer degrees of freedom.
    :param q: probability in ``(0, 1)``.

    :returns: ``x`` with ``chi2_cdf(x, df) = q``, found by bracketing and
        bisection down to floating point resolution.

    :raises error.InvalidInput: if ``q`` is outside ``(0, 1)``.
    """
    params = Chi2Params(df)
    if not 0.0 < q < 1.0:
        raise error.InvalidInput("quantile level must be in (0, 1)", q=q)

    # bracket [lo, hi] with cdf(lo) <= q <= cdf(hi)
    lo, hi = 0.0, float(max(params.df, 1))
    while chi2_cdf(hi, params.df) < q:
        lo, hi = hi, 2.0 * hi

    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if chi2_cdf(mid, params.df) < q:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def gaussian_cdf(z):
    """
    :returns: standard normal ``P(Z <= z)``.
    """
    return 0.5 * math.erfc(-z / math.sqrt(2.0))


# rational approximation coefficients of the inverse normal CDF (Acklam)
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)
_P_LOW = 0.02425


def _tail(p):
    t = math.sqrt(-2.0 * math.log(p))
    return (((((_C[0] * t + _C[1]) * t + _C[2]) * t + _C[3]) * t + _C[4])
            * t + _C[5]) / \
        ((((_D[0] * t + _D[1]) * t + _D[2]) * t + _D[3]) * t + 1.0)


def gaussian_quantile(q):
    """
    :param q: probability in ``(0, 1)``.

    :returns: ``z`` with ``gaussian_cdf(z) = q`` (rational approximation
        followed by one Halley refinement step).

    :raises error.InvalidInput: if ``q`` is outside ``(0, 1)``.
    """
    if not 0.0 < q < 1.0:
        raise error.InvalidInput("quantile level must be in (0, 1)", q=q)
    if q == 0.5:
        return 0.0

    if q < _P_LOW:
        z = _tail(q)
    elif q > 1.0 - _P_LOW:
        z = -_tail(1.0 - q)
    else:
        s = q - 0.5
        r = s * s
        z = (((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4])
             * r + _A[5]) * s / \
            (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4])
             * r + 1.0)

    # Halley step
    e = gaussian_cdf(z) - q
    u = e * math.sqrt(2.0 * math.pi) * math.exp(0.5 * z * z)
    return z - u / (1.0 + 0.5 * z * u)
