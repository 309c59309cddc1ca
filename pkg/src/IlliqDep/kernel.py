# -*- coding: utf-8 -*-
"""
    IlliqDep.kernel
    ~~~~~~~~~~~~~~~

    Leave-one-out kernel estimation of the time-varying trade probability
    ``P(a_t = 1)``:

    .. math::

        \\hat p_t = \\sum_i w_{ti} a_i, \\quad
        w_{ti} = K_{ti} / \\sum_j K_{tj}, \\quad
        K_{ti} = K((t - i) / nb)\\ (t \\neq i), \\quad K_{tt} = 0.

    Kernels are supported on ``[-1, 1]``; near both ends of the sample the
    weights renormalize over the one-sided window.

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['KernelFamily',
           'BandwidthRule',
           'KernelSpec',
           'ProbabilityEstimate',
           'KernelSmoother',
           'default_bandwidth',
           'estimate_probability', ]


import enum
import logging
import math

import numpy as np

import IlliqDep.error as error

from .binarize import BinarySeries

logger = logging.getLogger(__name__)

# smallest sample for the rate-default bandwidth
MIN_SAMPLE = 10


class KernelFamily(enum.Enum):
    """
    Compactly supported kernels integrating to one on ``[-1, 1]``.

    ``UNIFORM`` is discontinuous at the support edges; it is admitted for
    comparison although the consistency argument asks for a continuous
    kernel.
    """
    EPANECHNIKOV = "epanechnikov"
    TRIANGULAR = "triangular"
    UNIFORM = "uniform"

    def __call__(self, z):
        """
        :returns: kernel values at ``z`` (``numpy`` array).
        """
        z = np.abs(np.asarray(z, dtype=float))
        inside = z <= 1.0
        if self is KernelFamily.EPANECHNIKOV:
            values = 0.75 * (1.0 - z * z)
        elif self is KernelFamily.TRIANGULAR:
            values = 1.0 - z
        else:
            values = np.full(z.shape, 0.5)
        return np.where(inside, values, 0.0)

    @property
    def peak(self):
        """
        ``sup K``, the bound ``R`` of the kernel.
        """
        return float(self(0.0))


class BandwidthRule(enum.Enum):
    EXPLICIT = "explicit"
    RATE_DEFAULT = "rate-default"


def default_bandwidth(n, c=1.0):
    """
    :param n: sample size, at least 10.

    Optional arguments:

    :param c: positive constant.

    :returns: ``c * n ** (-1/3)``, which satisfies ``n b^4 -> 0`` and
        ``1 / (n b^2) -> 0``.

    :raises error.SampleTooSmall: if ``n < 10``.
    :raises error.InvalidInput: if ``c`` is not positive.
    """
    if n < MIN_SAMPLE:
        raise error.SampleTooSmall(
            "rate-default bandwidth needs n >= %d" % MIN_SAMPLE, n=n)
    if not c > 0:
        raise error.InvalidInput("bandwidth constant must be positive", c=c)
    return c * float(n) ** (-1.0 / 3.0)


class KernelSpec(object):
    """
    Kernel family and bandwidth ``b`` in ``(0, 1)``.
    """

    @property
    def family(self):
        return self.__family

    @property
    def bandwidth(self):
        return self.__bandwidth

    @property
    def bandwidth_rule(self):
        return self.__rule

    # private properties
    __slots__ = ['__family', '__bandwidth', '__rule', ]

    def __init__(self, family, bandwidth, bandwidth_rule=BandwidthRule.EXPLICIT):
        """
        :param family: ``KernelFamily`` (or its string value).
        :param bandwidth: real in ``(0, 1)``.

        Optional arguments:

        :param bandwidth_rule: how ``bandwidth`` was chosen.

        :raises error.InvalidInput: on an unknown family or a bandwidth
            outside ``(0, 1)``.
        """
        try:
            self.__family = KernelFamily(family)
        except ValueError:
            raise error.InvalidInput("unknown kernel %r" % (family, ),
                                     kernel=family)
        if not 0.0 < bandwidth < 1.0:
            raise error.InvalidInput("bandwidth must lie in (0, 1)",
                                     bandwidth=bandwidth)
        self.__bandwidth = float(bandwidth)
        self.__rule = BandwidthRule(bandwidth_rule)
        pass  # void return

    @classmethod
    def rate_default(cls, n, family=KernelFamily.EPANECHNIKOV, c=1.0):
        """
        :returns: spec with ``b = c * n ** (-1/3)``.
        """
        return cls(family, default_bandwidth(n, c), BandwidthRule.RATE_DEFAULT)

    def to_dict(self):
        return {'family': self.__family.value,
                'bandwidth': self.__bandwidth,
                'bandwidth_rule': self.__rule.value, }

    pass


class ProbabilityEstimate(object):
    """
    Per-time kernel estimates of ``P(a_t = 1)``, clipped away from 0 and 1.
    """

    @property
    def p_hat(self):
        """
        clipped estimates (``numpy`` array of length ``n``).
        """
        return self.__p_hat

    @property
    def unclipped(self):
        """
        raw weighted means before clipping.
        """
        return self.__unclipped

    @property
    def clipped(self):
        """
        boolean flags, ``True`` where the raw estimate was clipped.
        """
        return self.__clipped

    @property
    def spec(self):
        return self.__spec

    @property
    def epsilon(self):
        return self.__epsilon

    # private properties
    __slots__ = ['__p_hat', '__unclipped', '__clipped', '__spec',
                 '__epsilon', ]

    def __init__(self, unclipped, spec, epsilon=None):
        """
        :param unclipped: raw estimates.
        :param spec: ``KernelSpec`` used.

        Optional arguments:

        :param epsilon: clipping margin, defaults to ``api.CLIP_EPSILON``.
        """
        # import locally to allow override
        from .api import CLIP_EPSILON

        eps = CLIP_EPSILON if epsilon is None else float(epsilon)
        raw = np.array(unclipped, dtype=float)
        flags = (raw < eps) | (raw > 1.0 - eps)
        p_hat = np.clip(raw, eps, 1.0 - eps)
        for array in (raw, flags, p_hat):
            array.setflags(write=False)

        self.__unclipped = raw
        self.__clipped = flags
        self.__p_hat = p_hat
        self.__spec = spec
        self.__epsilon = eps
        pass  # void return

    def __len__(self):
        return self.__p_hat.size

    @property
    def clip_count(self):
        return int(self.__clipped.sum())

    def summary(self):
        """
        :returns: ``dict`` with the kernel, bandwidth and clip count.
        """
        data = self.__spec.to_dict()
        data.update({'n': len(self), 'clip_count': self.clip_count,
                     'clip_epsilon': self.__epsilon})
        return data

    pass


def _leave_one_out_weights(spec, n):
    # kernel values at offsets -L..L with the centre removed
    half_width = int(math.floor(n * spec.bandwidth))
    offsets = np.arange(-half_width, half_width + 1)
    k = spec.family(offsets / (n * spec.bandwidth))
    k[half_width] = 0.0
    return k, half_width


def estimate_probability(series, spec):
    """
    :param series: ``BinarySeries``.
    :param spec: ``KernelSpec``.

    :returns: ``ProbabilityEstimate`` with
        ``p_hat[t] = sum_i w_ti a_i`` (``w_tt = 0``).

    :raises error.BandwidthTooSmall: if some ``t`` has no neighbour with
        positive weight.
    """
    bits = series.bits if isinstance(series, BinarySeries) else \
        BinarySeries(series).bits
    bits = bits.astype(float)
    n = bits.size

    k, half_width = _leave_one_out_weights(spec, n)
    window = slice(half_width, half_width + n)
    mass = np.convolve(np.ones(n), k, mode="full")[window]
    if not np.all(mass > 0):
        raise error.BandwidthTooSmall(
            "kernel window empty for n*b=%.3f" % (n * spec.bandwidth),
            n=n, bandwidth=spec.bandwidth)
    total = np.convolve(bits, k, mode="full")[window]

    estimate = ProbabilityEstimate(total / mass, spec)
    if estimate.clip_count:
        logger.warning("%d of %d probability estimates clipped",
                       estimate.clip_count, n)
    return estimate


class KernelSmoother(object):
    """
    Estimates the trade probability of any series with one kernel policy:
    either a fixed bandwidth or the rate default ``c * n ** (-1/3)``
    evaluated at each series' own length.
    """

    @property
    def family(self):
        return self.__family

    @property
    def bandwidth(self):
        """
        explicit bandwidth, or ``None`` for the rate default.
        """
        return self.__bandwidth

    @property
    def constant(self):
        return self.__constant

    # private properties
    __slots__ = ['__family', '__bandwidth', '__constant', ]

    def __init__(self, family=None, bandwidth=None, constant=None):
        """
        Optional arguments:

        :param family: kernel name or ``KernelFamily``, defaults to
            ``api.DEFAULT_KERNEL``.
        :param bandwidth: explicit bandwidth in ``(0, 1)``.
        :param constant: rate-default constant ``c``, defaults to
            ``api.DEFAULT_BANDWIDTH_CONSTANT``.

        :raises error.InvalidInput: on an unknown kernel or a bad bandwidth.
        """
        # import locally to allow override
        from .api import DEFAULT_BANDWIDTH_CONSTANT, DEFAULT_KERNEL

        try:
            self.__family = KernelFamily(family or DEFAULT_KERNEL)
        except ValueError:
            raise error.InvalidInput("unknown kernel %r" % (family, ),
                                     kernel=family)
        if bandwidth is not None and not 0.0 < bandwidth < 1.0:
            raise error.InvalidInput("bandwidth must lie in (0, 1)",
                                     bandwidth=bandwidth)
        self.__bandwidth = bandwidth
        self.__constant = float(DEFAULT_BANDWIDTH_CONSTANT
                                if constant is None else constant)
        pass  # void return

    def spec(self, n):
        """
        :returns: the ``KernelSpec`` applied to a series of length ``n``.
        """
        if self.__bandwidth is not None:
            return KernelSpec(self.__family, self.__bandwidth)
        return KernelSpec.rate_default(n, self.__family, self.__constant)

    def __call__(self, series):
        """
        :param series: ``BinarySeries``.
        :returns: its ``ProbabilityEstimate``.
        """
        spec = self.spec(len(series))
        logger.debug("smoothing n=%d with %s b=%.5f", len(series),
                     spec.family.value, spec.bandwidth)
        return estimate_probability(series, spec)

    pass
