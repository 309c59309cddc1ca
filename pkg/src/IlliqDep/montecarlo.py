# -*- coding: utf-8 -*-
"""
    IlliqDep.montecarlo
    ~~~~~~~~~~~~~~~~~~~

    Simulation designs and the experiment runner measuring rejection
    frequencies of the portmanteau tests and per-lag confidence-bound
    exceedance frequencies of the dependence profiles.

    Replication ``r`` at sample size ``n`` draws from its own counter-based
    substream ``Philox(SeedSequence(seed, spawn_key=(n, r)))``, so the
    outcome does not depend on how replications are spread over workers.

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['ProbabilityPath',
           'IndepConstant',
           'IndepPath',
           'ProductOneDependent',
           'SimulationSpec',
           'SimulationResult',
           'case2_path',
           'dgp_from_dict',
           'replication_stream',
           'simulate_series',
           'run_experiment',
           'oracle_feasible_gaps',
           'format_rejection_table',
           'format_exceedance_table', ]


import concurrent.futures
import json
import logging
import math
import time

import numpy as np

import IlliqDep.error as error

from ._compat import THREADS
from .adaptive import OracleProbabilities, profile_feasible, profile_oracle
from .binarize import BinarySeries
from .distributions import chi2_quantile
from .kernel import KernelSmoother
from .stationary import Variant, dependence_profile_stationary

logger = logging.getLogger(__name__)

# midpoint grid used for the integrals over (0, 1]
_QUADRATURE_POINTS = 100000

# largest admissible seed
_SEED_LIMIT = 2 ** 64


class ProbabilityPath(object):
    """
    Deterministic trade probability ``g(u)`` on ``u`` in ``(0, 1]``, with
    values strictly inside ``(0, 1)`` and finitely many Lipschitz pieces.

    Build instances with ``constant``, ``piecewise_linear``, ``step`` or
    ``tabulated``.
    """

    CONSTANT = "constant"
    PIECEWISE_LINEAR = "piecewise_linear"
    STEP = "step"
    TABULATED = "tabulated"

    @property
    def kind(self):
        return self.__kind

    @property
    def params(self):
        """
        ``dict`` of the constructor arguments (JSON friendly).
        """
        return dict(self.__params)

    # private properties
    __slots__ = ['__kind', '__params', '__evaluator', ]

    def __init__(self, kind, params, evaluator):
        self.__kind = kind
        self.__params = params
        self.__evaluator = evaluator
        pass  # void return

    @staticmethod
    def _check_levels(values, what):
        values = np.asarray(values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise error.InvalidInput("%s must be a non-empty list" % what)
        if not np.all((values > 0.0) & (values < 1.0)):
            raise error.InvalidInput("%s must lie in (0, 1)" % what)
        return values

    @classmethod
    def constant(cls, level):
        """
        :raises error.InvalidInput: if ``level`` is outside ``(0, 1)``.
        """
        level = float(cls._check_levels([level], "level")[0])
        return cls(cls.CONSTANT, {'level': level},
                   lambda u: np.full(np.shape(u), level))

    @classmethod
    def piecewise_linear(cls, knots):
        """
        :param knots: ``[(u, value), ...]`` with ``u`` strictly increasing
            from ``0`` to ``1``; linear interpolation in between.
        """
        knots = [(float(u), float(v)) for u, v in knots]
        if len(knots) < 2:
            raise error.InvalidInput("a linear path needs two knots or more")
        us = np.array([u for u, _ in knots])
        values = cls._check_levels([v for _, v in knots], "knot values")
        if us[0] != 0.0 or us[-1] != 1.0 or np.any(np.diff(us) <= 0):
            raise error.InvalidInput(
                "knot positions must increase strictly from 0 to 1")
        return cls(cls.PIECEWISE_LINEAR, {'knots': [list(k) for k in knots]},
                   lambda u: np.interp(u, us, values))

    @classmethod
    def step(cls, breaks, levels):
        """
        :param breaks: strictly increasing break points inside ``(0, 1)``.
        :param levels: one level per piece (``len(breaks) + 1``); piece
            ``i`` covers ``(breaks[i-1], breaks[i]]``.
        """
        breaks = np.asarray([float(b) for b in breaks])
        levels = cls._check_levels(levels, "step levels")
        if levels.size != breaks.size + 1:
            raise error.InvalidInput("a step path needs one level per piece")
        if breaks.size and (breaks[0] <= 0.0 or breaks[-1] >= 1.0 or
                            np.any(np.diff(breaks) <= 0)):
            raise error.InvalidInput(
                "break points must increase strictly inside (0, 1)")
        return cls(cls.STEP,
                   {'breaks': breaks.tolist(), 'levels': levels.tolist()},
                   lambda u: levels[np.searchsorted(breaks, u, side='left')])

    @classmethod
    def tabulated(cls, values):
        """
        :param values: ``g(k / K)`` for ``k = 1..K``; constant on each cell
            ``((k - 1) / K, k / K]``.
        """
        values = cls._check_levels(values, "tabulated values")
        size = values.size

        def evaluate(u):
            index = np.ceil(np.asarray(u, dtype=float) * size - 1e-9) - 1
            return values[np.clip(index, 0, size - 1).astype(int)]

        return cls(cls.TABULATED, {'values': values.tolist()}, evaluate)

    def __call__(self, u):
        """
        :param u: scalar or array of fractions in ``(0, 1]``.
        :returns: ``g(u)`` (``float`` for a scalar argument).
        """
        values = self.__evaluator(np.asarray(u, dtype=float))
        return float(values) if np.ndim(values) == 0 else values

    def probabilities(self, n):
        """
        :returns: ``g(t / n)`` for ``t = 1..n``.
        """
        return np.asarray(self(np.arange(1, n + 1) / float(n)), dtype=float)

    def _grid(self):
        u = (np.arange(_QUADRATURE_POINTS) + 0.5) / _QUADRATURE_POINTS
        return np.asarray(self(u), dtype=float)

    def omega(self):
        """
        :returns: ``int g^2 (1 - g)^2 / (int g (1 - g))^2``, the limit of
            ``omega_hat`` when ``a_t`` is independent with probability
            ``g(t / n)``.
        """
        g = self._grid()
        variance = g * (1.0 - g)
        return float(np.mean(variance ** 2) / np.mean(variance) ** 2)

    def spurious_covariance(self):
        """
        :returns: ``int g^2 - (int g)^2``, the limit of the mean-centered
            covariance at every positive lag for independent ``a_t``.
        """
        g = self._grid()
        return float(np.mean(g * g) - np.mean(g) ** 2)

    def spurious_ratio(self):
        """
        :returns: the limit of every stationary profile component,
            ``spurious_covariance / (gbar (1 - gbar))``.
        """
        mean = float(np.mean(self._grid()))
        return self.spurious_covariance() / (mean * (1.0 - mean))

    def to_dict(self):
        data = {'kind': self.__kind}
        data.update(self.__params)
        return data

    @classmethod
    def from_dict(cls, data):
        """
        :param data: ``dict`` written by ``to_dict`` or the string
            ``"case2"``.
        :raises error.InvalidSpec: on an unknown kind.
        """
        if data == "case2":
            return case2_path()
        try:
            kind = data['kind']
            if kind == cls.CONSTANT:
                return cls.constant(data['level'])
            if kind == cls.PIECEWISE_LINEAR:
                return cls.piecewise_linear(data['knots'])
            if kind == cls.STEP:
                return cls.step(data['breaks'], data['levels'])
            if kind == cls.TABULATED:
                return cls.tabulated(data['values'])
        except (KeyError, TypeError) as e:
            raise error.InvalidSpec("malformed path: %s" % e, field="dgp.path")
        except error.InvalidInput as e:
            raise error.InvalidSpec(str(e), field="dgp.path")
        raise error.InvalidSpec("unknown path kind %r" % (kind, ),
                                field="dgp.path")

    pass


def case2_path():
    """
    :returns: the time-varying path ``0.4`` on ``(0, 0.4]``, ``2u - 0.4`` on
        ``(0.4, 0.6]`` and ``0.8`` on ``(0.6, 1]``.
    """
    return ProbabilityPath.piecewise_linear(
        [(0.0, 0.4), (0.4, 0.4), (0.6, 0.8), (1.0, 0.8)])


# data generating processes

class IndepConstant(object):
    """
    Independent ``a_t ~ Bernoulli(p)``.
    """

    KIND = "indep_constant"

    @property
    def p(self):
        return self.__path.params['level']

    __slots__ = ['__path', ]

    def __init__(self, p):
        self.__path = ProbabilityPath.constant(p)
        pass  # void return

    def probabilities(self, n):
        return self.__path.probabilities(n)

    def simulate(self, n, rng):
        return (rng.random(n) < self.probabilities(n)).astype(np.int8)

    def to_dict(self):
        return {'kind': self.KIND, 'p': self.p}

    pass


class IndepPath(object):
    """
    Independent ``a_t ~ Bernoulli(g(t / n))``.
    """

    KIND = "indep_path"

    @property
    def path(self):
        return self.__path

    __slots__ = ['__path', ]

    def __init__(self, path):
        if not isinstance(path, ProbabilityPath):
            path = ProbabilityPath.from_dict(path)
        self.__path = path
        pass  # void return

    def probabilities(self, n):
        return self.__path.probabilities(n)

    def simulate(self, n, rng):
        return (rng.random(n) < self.probabilities(n)).astype(np.int8)

    def to_dict(self):
        return {'kind': self.KIND, 'path': self.__path.to_dict()}

    pass


class ProductOneDependent(object):
    """
    ``a_t = d_t d_{t-1}`` with iid ``d_t ~ Bernoulli(p_dot)``: 1-dependent,
    with constant ``P(a_t = 1) = p_dot ** 2``.
    """

    KIND = "product_one_dependent"

    @property
    def p_dot(self):
        return self.__p_dot

    __slots__ = ['__p_dot', ]

    def __init__(self, p_dot):
        if not 0.0 < p_dot < 1.0:
            raise error.InvalidInput("p_dot must lie in (0, 1)", p_dot=p_dot)
        self.__p_dot = float(p_dot)
        pass  # void return

    def probabilities(self, n):
        return np.full(n, self.__p_dot ** 2)

    def simulate(self, n, rng):
        d = rng.random(n + 1) < self.__p_dot
        return (d[1:] & d[:-1]).astype(np.int8)

    def to_dict(self):
        return {'kind': self.KIND, 'p_dot': self.__p_dot}

    pass


_DGPS = dict((cls.KIND, cls) for cls in (IndepConstant, IndepPath,
                                        ProductOneDependent))


def dgp_from_dict(data):
    """
    :param data: ``{"kind": ..., <parameters>}``.
    :raises error.InvalidSpec: on an unknown kind or bad parameters.
    """
    if not isinstance(data, dict) or data.get('kind') not in _DGPS:
        raise error.InvalidSpec(
            "dgp kind must be one of %s" % ", ".join(sorted(_DGPS)),
            field="dgp")
    params = dict((k, v) for k, v in data.items() if k != 'kind')
    try:
        return _DGPS[data['kind']](**params)
    except error.InvalidSpec:
        raise
    except error.InvalidInput as e:
        raise error.InvalidSpec(str(e), field="dgp")
    except TypeError as e:
        raise error.InvalidSpec("bad dgp parameters: %s" % e, field="dgp")


def replication_stream(seed, n, replication):
    """
    :returns: ``numpy.random.Generator`` for one replication.
    """
    sequence = np.random.SeedSequence(seed, spawn_key=(n, replication))
    return np.random.Generator(np.random.Philox(sequence))


def simulate_series(dgp, n, rng):
    """
    :param dgp: ``IndepConstant``, ``IndepPath`` or ``ProductOneDependent``.
    :param n: sample size.
    :param rng: ``numpy.random.Generator``.
    :returns: ``BinarySeries`` of length ``n``.
    """
    return BinarySeries(dgp.simulate(n, rng))


class SimulationSpec(object):
    """
    One experiment: a design, the sample sizes, the number of replications
    and what to tally.
    """

    @property
    def dgp(self):
        return self.__dgp

    @property
    def sizes(self):
        """
        ``tuple`` of sample sizes.
        """
        return self.__sizes

    @property
    def replications(self):
        return self.__replications

    @property
    def m(self):
        """
        number of lags in the portmanteau tests.
        """
        return self.__m

    @property
    def alpha(self):
        return self.__alpha

    @property
    def seed(self):
        return self.__seed

    @property
    def tests(self):
        """
        ``tuple`` of ``Variant``.
        """
        return self.__tests

    @property
    def lag_report(self):
        return self.__lag_report

    @property
    def kernel(self):
        return self.__kernel

    @property
    def bandwidth_constant(self):
        return self.__bandwidth_constant

    @property
    def max_lag(self):
        """
        largest lag any profile is computed to.
        """
        return max((self.__m, ) + self.__lag_report)

    # private properties
    __slots__ = ['__dgp', '__sizes', '__replications', '__m', '__alpha',
                 '__seed', '__tests', '__lag_report', '__kernel',
                 '__bandwidth_constant', ]

    def __init__(self, dgp, n, replications, m, seed, alpha=None,
                 tests=None, lag_report=(), kernel=None,
                 bandwidth_constant=None):
        """
        :param dgp: design object or its ``dict``.
        :param n: sample size or list of sample sizes.
        :param replications: positive number of replications ``N``.
        :param m: lags in the portmanteau tests.
        :param seed: integer in ``[0, 2**64)``.

        Optional arguments:

        :param alpha: test level, defaults to ``api.DEFAULT_ALPHA``.
        :param tests: variant names, defaults to all three.
        :param lag_report: lags whose bound exceedances are tallied.
        :param kernel: kernel of the feasible variant.
        :param bandwidth_constant: rate-default constant of the feasible
            variant.

        :raises error.InvalidSpec: naming the offending ``field``.
        """
        # import locally to allow override
        from .api import (
            DEFAULT_ALPHA,
            DEFAULT_BANDWIDTH_CONSTANT,
            DEFAULT_KERNEL, )

        self.__dgp = dgp if hasattr(dgp, 'simulate') else dgp_from_dict(dgp)

        sizes = n if isinstance(n, (list, tuple)) else [n]
        if not sizes or not all(_is_int(v) and v >= 2 for v in sizes):
            raise error.InvalidSpec("n must be integers >= 2", field="n")
        self.__sizes = tuple(int(v) for v in sizes)

        if not _is_int(replications) or replications < 1:
            raise error.InvalidSpec("replications must be an integer >= 1",
                                    field="replications")
        self.__replications = int(replications)

        if not _is_int(m) or not 1 <= m < min(self.__sizes):
            raise error.InvalidSpec("m must satisfy 1 <= m < n", field="m")
        self.__m = int(m)

        alpha = DEFAULT_ALPHA if alpha is None else alpha
        if not isinstance(alpha, (int, float)) or not 0.0 < alpha < 1.0:
            raise error.InvalidSpec("alpha must lie in (0, 1)", field="alpha")
        self.__alpha = float(alpha)

        if not _is_int(seed) or not 0 <= seed < _SEED_LIMIT:
            raise error.InvalidSpec("seed must be a 64-bit unsigned integer",
                                    field="seed")
        self.__seed = int(seed)

        try:
            tests = [v.value for v in Variant] if tests is None else tests
            self.__tests = tuple(sorted(set(Variant(v) for v in tests),
                                        key=_variant_order))
        except (TypeError, ValueError):
            raise error.InvalidSpec(
                "tests must name variants among %s"
                % ", ".join(v.value for v in Variant), field="tests")
        if not self.__tests:
            raise error.InvalidSpec("no test requested", field="tests")

        if not all(_is_int(h) and 1 <= h < min(self.__sizes)
                   for h in lag_report):
            raise error.InvalidSpec("report lags must satisfy 1 <= h < n",
                                    field="lag_report")
        self.__lag_report = tuple(sorted(set(int(h) for h in lag_report)))

        self.__kernel = kernel or DEFAULT_KERNEL
        self.__bandwidth_constant = float(
            DEFAULT_BANDWIDTH_CONSTANT if bandwidth_constant is None
            else bandwidth_constant)
        if not self.__bandwidth_constant > 0:
            raise error.InvalidSpec("bandwidth constant must be positive",
                                    field="bandwidth_constant")
        try:
            KernelSmoother(self.__kernel, constant=self.__bandwidth_constant)
        except error.InvalidInput as e:
            raise error.InvalidSpec(str(e), field="kernel")
        pass  # void return

    def smoother(self):
        return KernelSmoother(self.__kernel, constant=self.__bandwidth_constant)

    def replace(self, **kwds):
        """
        :returns: a copy with the given config entries replaced.
        """
        data = self.to_dict()
        data.update(kwds)
        return SimulationSpec.from_dict(data)

    def to_dict(self):
        return {'dgp': self.__dgp.to_dict(),
                'n': list(self.__sizes),
                'replications': self.__replications,
                'm': self.__m,
                'alpha': self.__alpha,
                'seed': self.__seed,
                'tests': [v.value for v in self.__tests],
                'lag_report': list(self.__lag_report),
                'kernel': self.__kernel,
                'bandwidth_constant': self.__bandwidth_constant, }

    @classmethod
    def from_dict(cls, data):
        """
        :raises error.InvalidSpec: on missing or unknown entries.
        """
        if not isinstance(data, dict):
            raise error.InvalidSpec("config must be a JSON object",
                                    field="(root)")
        known = ('dgp', 'n', 'replications', 'm', 'alpha', 'seed', 'tests',
                 'lag_report', 'kernel', 'bandwidth_constant', 'name',
                 'description', )
        for key in data:
            if key not in known:
                raise error.InvalidSpec("unknown entry %r" % key, field=key)
        for key in ('dgp', 'n', 'replications', 'm', 'seed'):
            if key not in data:
                raise error.InvalidSpec("missing entry %r" % key, field=key)
        return cls(data['dgp'], data['n'], data['replications'], data['m'],
                   data['seed'], alpha=data.get('alpha'),
                   tests=data.get('tests'),
                   lag_report=data.get('lag_report', ()),
                   kernel=data.get('kernel'),
                   bandwidth_constant=data.get('bandwidth_constant'))

    @classmethod
    def from_file(cls, path):
        """
        :param path: JSON config file.
        :raises error.InvalidSpec: if the file is unreadable or invalid.
        """
        try:
            with open(path) as f:
                data = json.load(f)
        except (IOError, OSError) as e:
            raise error.InvalidSpec("cannot read config: %s" % e,
                                    field="(file)", path=str(path))
        except ValueError as e:
            raise error.InvalidSpec("config is not valid JSON: %s" % e,
                                    field="(file)", path=str(path))
        return cls.from_dict(data)

    pass


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _variant_order(variant):
    return list(Variant).index(variant)


class SimulationResult(object):
    """
    Rejection and exceedance frequencies (percent) per sample size.
    """

    @property
    def spec(self):
        return self.__spec

    @property
    def rows(self):
        """
        ``list`` of ``{'n', 'rejections', 'exceedances'}`` per sample size;
        ``rejections[variant]`` is a percentage and
        ``exceedances[variant][lag]`` too.
        """
        return self.__rows

    @property
    def runtime(self):
        """
        wall-clock seconds.
        """
        return self.__runtime

    @property
    def seed(self):
        return self.__spec.seed

    __slots__ = ['__spec', '__rows', '__runtime', ]

    def __init__(self, spec, rows, runtime=0.0):
        self.__spec = spec
        self.__rows = rows
        self.__runtime = float(runtime)
        pass  # void return

    def rejection(self, n, variant):
        """
        :returns: rejection frequency (percent) of ``variant`` at ``n``.
        """
        return self.__row(n)['rejections'][Variant(variant).value]

    def exceedance(self, n, variant, lag):
        """
        :returns: bound exceedance frequency (percent) at ``lag``.
        """
        return self.__row(n)['exceedances'][Variant(variant).value][lag]

    def __row(self, n):
        for row in self.__rows:
            if row['n'] == n:
                return row
        raise KeyError(n)

    def to_dict(self, include_runtime=False):
        """
        :param include_runtime: add the (non-reproducible) wall-clock time.
        """
        rows = []
        for row in self.__rows:
            rows.append({
                'n': row['n'],
                'rejections': dict(row['rejections']),
                'exceedances': dict(
                    (variant, dict((str(lag), value)
                                   for lag, value in lags.items()))
                    for variant, lags in row['exceedances'].items()), })
        data = {'spec': self.__spec.to_dict(),
                'seed': self.__spec.seed,
                'replications': self.__spec.replications,
                'results': rows, }
        if include_runtime:
            data['runtime'] = self.__runtime
        return data

    pass


# replication engine

def _profile(variant, series, oracle, smoother, max_lag):
    if variant is Variant.STATIONARY:
        return dependence_profile_stationary(series, max_lag)
    if variant is Variant.ORACLE:
        return profile_oracle(series, oracle, max_lag)
    return profile_feasible(series, smoother(series), max_lag)


def _replicate_chunk(payload):
    # runs replications [start, stop) at one n; returns integer tallies
    spec_data, n, start, stop = payload
    spec = SimulationSpec.from_dict(spec_data)
    smoother = spec.smoother()
    oracle = OracleProbabilities(spec.dgp.probabilities(n))
    critical = chi2_quantile(spec.m, 1.0 - spec.alpha)
    lags = np.array(spec.lag_report, dtype=int)

    rejections = dict((v.value, 0) for v in spec.tests)
    exceedances = dict((v.value, np.zeros(lags.size, dtype=int))
                       for v in spec.tests)
    for r in range(start, stop):
        series = simulate_series(spec.dgp, n, replication_stream(spec.seed, n, r))
        for variant in spec.tests:
            try:
                profile = _profile(variant, series, oracle, smoother,
                                   spec.max_lag)
            except error.IlliqDepError as e:
                raise error.IlliqDepError(
                    "replication %d at n=%d failed: %s" % (r, n, e),
                    replication=r, n=n, variant=variant.value)
            if profile.statistic(spec.m) > critical:
                rejections[variant.value] += 1
            if lags.size:
                exceedances[variant.value] += profile.exceedances()[lags - 1]
    return rejections, dict((k, v.tolist()) for k, v in exceedances.items())


def _chunks(replications, count):
    bounds = np.linspace(0, replications, count + 1).astype(int)
    return [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def _workers(requested):
    workers = 1 if requested is None else int(requested)
    if workers < 1:
        raise error.InvalidInput("worker count must be positive",
                                 workers=requested)
    if THREADS is not None and workers > THREADS:
        logger.warning("capping %d workers to ILLIQDEP_THREADS=%d",
                       workers, THREADS)
        workers = THREADS
    return workers


def run_experiment(spec, workers=None):
    """
    :param spec: ``SimulationSpec``.

    Optional arguments:

    :param workers: worker processes (default 1), capped by
        ``ILLIQDEP_THREADS``.

    :returns: ``SimulationResult``, identical for any worker count.

    :raises error.IlliqDepError: if any replication fails.
    """
    workers = _workers(workers)
    began = time.perf_counter()
    spec_data = spec.to_dict()

    jobs = []
    for n in spec.sizes:
        for start, stop in _chunks(spec.replications, workers * 4):
            jobs.append((spec_data, n, start, stop))

    if workers == 1:
        outcomes = [_replicate_chunk(job) for job in jobs]
    else:
        with concurrent.futures.ProcessPoolExecutor(workers) as pool:
            outcomes = list(pool.map(_replicate_chunk, jobs))

    rows = []
    for n in spec.sizes:
        rejections = dict((v.value, 0) for v in spec.tests)
        exceedances = dict((v.value, [0] * len(spec.lag_report))
                           for v in spec.tests)
        for job, (rej, exc) in zip(jobs, outcomes):
            if job[1] != n:
                continue
            for key in rejections:
                rejections[key] += rej[key]
                exceedances[key] = [a + b for a, b in
                                    zip(exceedances[key], exc[key])]
        scale = 100.0 / spec.replications
        rows.append({
            'n': n,
            'rejections': dict((k, v * scale) for k, v in rejections.items()),
            'exceedances': dict(
                (k, dict(zip(spec.lag_report, (c * scale for c in v))))
                for k, v in exceedances.items()), })

    runtime = time.perf_counter() - began
    logger.debug("experiment with %d x %d replications took %.2fs "
                 "on %d worker(s)", len(spec.sizes), spec.replications,
                 runtime, workers)
    return SimulationResult(spec, rows, runtime)


def oracle_feasible_gaps(dgp, n, replications, m, seed, smoother=None):
    """
    :returns: ``numpy`` array, per replication, of
        ``sqrt(n) * max_h |oracle component_h - feasible component_h|``.
    """
    smoother = smoother or KernelSmoother()
    oracle = OracleProbabilities(dgp.probabilities(n))
    gaps = np.empty(replications)
    for r in range(replications):
        series = simulate_series(dgp, n, replication_stream(seed, n, r))
        known = profile_oracle(series, oracle, m).components
        estimated = profile_feasible(series, smoother(series), m).components
        gaps[r] = math.sqrt(n) * np.max(np.abs(known - estimated))
    return gaps


# human-readable tables

def format_rejection_table(result):
    """
    :returns: text table, one row per test variant, one column per ``n``.
    """
    sizes = [row['n'] for row in result.rows]
    header = "%-20s" % "test" + "".join("%10s" % ("n=%d" % n) for n in sizes)
    lines = [header, "-" * len(header)]
    for variant in result.spec.tests:
        lines.append("%-20s" % variant.value + "".join(
            "%10.2f" % result.rejection(n, variant) for n in sizes))
    return "\n".join(lines)


def format_exceedance_table(result):
    """
    :returns: text table, one row per ``(n, variant)``, one column per lag;
        empty string when no lag is reported.
    """
    lags = result.spec.lag_report
    if not lags:
        return ""
    header = "%-8s%-20s" % ("n", "profile") + \
        "".join("%9s" % ("h=%d" % h) for h in lags)
    lines = [header, "-" * len(header)]
    for row in result.rows:
        for variant in result.spec.tests:
            lines.append("%-8d%-20s" % (row['n'], variant.value) + "".join(
                "%9.2f" % result.exceedance(row['n'], variant, h)
                for h in lags))
    return "\n".join(lines)
