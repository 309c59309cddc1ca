#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    IlliqDep.tests.test_adaptive
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Tests IlliqDep.adaptive

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['TestGammaTilde',
           'TestOmegaHat',
           'TestAdaptiveProfiles',
           'TestAdaptivePortmanteau',
           'TestCusum', ]


import itertools
import math
import os
import sys

import numpy as np

try:
    from . import _config
    from ._config import unittest
except (ValueError, ImportError):
    import _config
    from _config import unittest


def naive_gamma_tilde(bits, p, h, u):
    n = len(bits)
    stop = int(math.floor(n * u + 1e-9))
    total = sum((bits[t] - p[t]) * (bits[t - h] - p[t - h])
                for t in range(h, stop))
    return total / float(n if h == 0 else n - h)


class TestGammaTilde(unittest.TestCase):
    """
    Tests ``gamma_tilde()`` by brute force and against ``gamma_hat()``.
    """

    def test_gamma_tilde_exhaustive(self):
        from IlliqDep.adaptive import OracleProbabilities, gamma_tilde
        from IlliqDep.binarize import BinarySeries
        for n in range(2, 13):
            p = np.linspace(0.2, 0.8, n)
            oracle = OracleProbabilities(p)
            for bits in itertools.product((0, 1), repeat=n):
                series = BinarySeries(bits)
                for h in range(n):
                    for u in (0.5, 1.0):
                        self.assertAlmostEqual(
                            gamma_tilde(series, oracle, h, u),
                            naive_gamma_tilde(bits, p, h, u), places=12)
        pass  # void return

    def test_reduction_to_stationary(self):
        # with p_t = abar: (n - h) gamma_tilde(h, 1) = n gamma_hat(h)
        from IlliqDep.adaptive import gamma_tilde
        from IlliqDep.binarize import BinarySeries
        from IlliqDep.stationary import gamma_hat
        for n in range(2, 13):
            for bits in itertools.product((0, 1), repeat=n):
                if len(set(bits)) == 1:
                    continue
                series = BinarySeries(bits)
                p = np.full(n, sum(bits) / float(n))
                for h in range(1, n):
                    self.assertAlmostEqual(
                        (n - h) * gamma_tilde(series, p, h, 1.0),
                        n * gamma_hat(series, h), places=12)
                self.assertAlmostEqual(gamma_tilde(series, p, 0, 1.0),
                                       gamma_hat(series, 0), places=12)
        pass  # void return

    def test_gamma_tilde_partial_sample(self):
        from IlliqDep.adaptive import gamma_tilde
        from IlliqDep.binarize import BinarySeries
        series = BinarySeries([1, 0, 1, 1, 0, 1, 0, 0, 1, 1])
        p = [0.5] * 10
        # [n u] <= h leaves an empty sum
        self.assertEqual(gamma_tilde(series, p, 3, 0.3), 0.0)
        self.assertNotEqual(gamma_tilde(series, p, 1, 0.5), 0.0)
        pass  # void return

    def test_gamma_tilde_invalid(self):
        from IlliqDep.adaptive import OracleProbabilities, gamma_tilde
        from IlliqDep.binarize import BinarySeries
        from IlliqDep.error import InvalidInput, InvalidLag
        series = BinarySeries([1, 0, 1, 1])
        self.assertRaises(InvalidInput, gamma_tilde, series, [0.5] * 3, 1)
        self.assertRaises(InvalidInput, gamma_tilde, series, [0.5] * 4, 1,
                          0.0)
        self.assertRaises(InvalidInput, gamma_tilde, series, [0.5] * 4, 1,
                          1.2)
        self.assertRaises(InvalidLag, gamma_tilde, series, [0.5] * 4, 4)
        self.assertRaises(InvalidInput, OracleProbabilities, [0.5, 1.0])
        self.assertRaises(InvalidInput, OracleProbabilities, [0.0, 0.5])
        pass  # void return

    pass


class TestOmegaHat(unittest.TestCase):
    """
    Tests ``omega_hat()``.
    """

    def test_omega_hat_hand_case(self):
        from IlliqDep.adaptive import omega_hat
        from IlliqDep.binarize import BinarySeries
        # every e_t^2 = 1/4: omega = (n - 1) / n
        for bits in ([1, 0, 0, 1], [1, 1, 1, 0], [0, 1, 0, 1]):
            self.assertAlmostEqual(
                omega_hat(BinarySeries(bits), [0.5] * 4), 0.75)
        pass  # void return

    def test_omega_hat_naive(self):
        from IlliqDep.adaptive import omega_hat
        from IlliqDep.binarize import BinarySeries
        rng = np.random.default_rng(21)
        p = rng.uniform(0.2, 0.9, 50)
        bits = (rng.random(50) < p).astype(int)
        e2 = (bits - p) ** 2
        expected = (sum(e2[t] * e2[t - 1] for t in range(1, 50)) / 50.0) / \
            (e2.sum() / 50.0) ** 2
        self.assertAlmostEqual(omega_hat(BinarySeries(bits), p), expected,
                               places=12)
        pass  # void return

    def test_omega_hat_complement(self):
        from IlliqDep.adaptive import omega_hat
        from IlliqDep.binarize import BinarySeries
        rng = np.random.default_rng(23)
        p = rng.uniform(0.1, 0.9, 120)
        series = BinarySeries((rng.random(120) < p).astype(int))
        self.assertAlmostEqual(omega_hat(series, p),
                               omega_hat(series.complement(), 1.0 - p),
                               places=12)
        pass  # void return

    pass


class TestAdaptiveProfiles(unittest.TestCase):
    """
    Tests ``profile_oracle()`` and ``profile_feasible()``.
    """

    def test_oracle_profile_components(self):
        from IlliqDep.adaptive import gamma_tilde, omega_hat, profile_oracle
        from IlliqDep.binarize import BinarySeries
        from IlliqDep.stationary import Variant
        rng = np.random.default_rng(31)
        p = np.linspace(0.3, 0.7, 200)
        series = BinarySeries((rng.random(200) < p).astype(int))
        profile = profile_oracle(series, p, 6)
        self.assertEqual(profile.variant, Variant.ORACLE)
        self.assertAlmostEqual(profile.omega, omega_hat(series, p))
        for h in range(1, 7):
            self.assertAlmostEqual(
                profile.components[h - 1],
                gamma_tilde(series, p, h) / gamma_tilde(series, p, 0),
                places=12)
        self.assertAlmostEqual(
            profile.bound, 1.959963985 * math.sqrt(profile.omega / 200.0),
            places=8)
        pass  # void return

    def test_oracle_profile_on_sample_mean(self):
        from IlliqDep.adaptive import profile_oracle
        from IlliqDep.binarize import BinarySeries
        from IlliqDep.stationary import dependence_profile_stationary
        bits = [1, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1, 0, 1, 1]
        n = len(bits)
        series = BinarySeries(bits)
        p = np.full(n, np.mean(bits))
        oracle = profile_oracle(series, p, 5).components
        plain = dependence_profile_stationary(series, 5).components
        scale = np.array([n / float(n - h) for h in range(1, 6)])
        np.testing.assert_allclose(oracle, plain * scale, atol=1e-12)
        pass  # void return

    def test_oracle_complement_symmetry(self):
        from IlliqDep.adaptive import profile_oracle
        from IlliqDep.binarize import BinarySeries
        rng = np.random.default_rng(37)
        p = rng.uniform(0.2, 0.8, 150)
        series = BinarySeries((rng.random(150) < p).astype(int))
        a = profile_oracle(series, p, 8)
        b = profile_oracle(series.complement(), 1.0 - p, 8)
        np.testing.assert_allclose(a.components, b.components, atol=1e-12)
        self.assertAlmostEqual(a.omega, b.omega, places=12)
        pass  # void return

    def test_feasible_profile(self):
        from IlliqDep.adaptive import OracleProbabilities, profile_feasible, \
            profile_oracle
        from IlliqDep.binarize import BinarySeries
        from IlliqDep.error import InvalidInput
        from IlliqDep.kernel import KernelSmoother
        from IlliqDep.stationary import Variant
        rng = np.random.default_rng(41)
        series = BinarySeries((rng.random(400) < 0.6).astype(int))
        estimate = KernelSmoother()(series)
        profile = profile_feasible(series, estimate, 10)
        self.assertEqual(profile.variant, Variant.FEASIBLE)
        # same arithmetic as the oracle variant on the estimated path
        same = profile_oracle(series, OracleProbabilities(estimate.p_hat), 10)
        np.testing.assert_allclose(profile.components, same.components,
                                   atol=1e-14)
        self.assertAlmostEqual(profile.omega, same.omega)
        # a bare array is not an estimate
        self.assertRaises(InvalidInput, profile_feasible, series,
                          estimate.p_hat, 10)
        pass  # void return

    def test_feasible_constant_series(self):
        from IlliqDep.adaptive import portmanteau_feasible, profile_feasible
        from IlliqDep.binarize import BinarySeries
        from IlliqDep.error import DegenerateSeries
        from IlliqDep.kernel import KernelSmoother
        for bit in (0, 1):
            series = BinarySeries([bit] * 100)
            estimate = KernelSmoother()(series)
            self.assertEqual(estimate.clip_count, 100)
            self.assertRaises(DegenerateSeries, profile_feasible, series,
                              estimate, 5)
            self.assertRaises(DegenerateSeries, portmanteau_feasible, series,
                              estimate, 5)
        pass  # void return

    pass


class TestAdaptivePortmanteau(unittest.TestCase):
    """
    Tests ``portmanteau_oracle()`` and ``portmanteau_feasible()``.
    """

    def test_oracle_statistic(self):
        from IlliqDep.adaptive import omega_hat, portmanteau_oracle, \
            profile_oracle
        from IlliqDep.binarize import BinarySeries
        rng = np.random.default_rng(43)
        p = np.linspace(0.4, 0.8, 300)
        series = BinarySeries((rng.random(300) < p).astype(int))
        report = portmanteau_oracle(series, p, 5)
        components = profile_oracle(series, p, 5).components
        self.assertAlmostEqual(
            report.statistic,
            300 / omega_hat(series, p) * float(np.sum(components ** 2)),
            places=9)
        self.assertEqual(report.variant.value, "oracle-adaptive")
        self.assertEqual(report.df, 5)
        pass  # void return

    def test_feasible_clipping_warning(self):
        from IlliqDep.adaptive import portmanteau_feasible
        from IlliqDep.binarize import BinarySeries
        from IlliqDep.kernel import KernelSmoother
        bits = [1] * 90 + [0, 1] * 5
        series = BinarySeries(bits)
        estimate = KernelSmoother()(series)
        self.assertGreater(estimate.clip_count, 0)
        report = portmanteau_feasible(series, estimate, 3)
        self.assertEqual(len(report.warnings), 1)
        self.assertIn("clipped", report.warnings[0])
        pass  # void return

    def test_feasible_no_warning(self):
        from IlliqDep.adaptive import portmanteau_feasible
        from IlliqDep.binarize import BinarySeries
        from IlliqDep.kernel import KernelSmoother
        rng = np.random.default_rng(47)
        series = BinarySeries((rng.random(300) < 0.5).astype(int))
        report = portmanteau_feasible(series, KernelSmoother()(series), 5)
        self.assertEqual(report.warnings, ())
        self.assertEqual(report.variant.value, "feasible-adaptive")
        pass  # void return

    def test_feasible_removes_trend(self):
        # a trending probability fools the stationary test only
        from IlliqDep.adaptive import portmanteau_feasible
        from IlliqDep.binarize import BinarySeries
        from IlliqDep.kernel import KernelSmoother
        from IlliqDep.stationary import portmanteau_stationary
        n = 2000
        u = np.arange(1, n + 1) / float(n)
        p = np.where(u <= 0.5, 0.2, 0.9)
        series = BinarySeries(
            (np.random.default_rng(53).random(n) < p).astype(int))
        self.assertTrue(portmanteau_stationary(series, 5).reject)
        feasible = portmanteau_feasible(series, KernelSmoother()(series), 5)
        self.assertLess(feasible.statistic,
                        portmanteau_stationary(series, 5).statistic / 10.0)
        pass  # void return

    pass


class TestCusum(unittest.TestCase):
    """
    Tests ``cusum_trajectory()``.
    """

    def test_cusum_matches_gamma_tilde(self):
        from IlliqDep.adaptive import cusum_trajectory, gamma_tilde
        from IlliqDep.binarize import BinarySeries
        rng = np.random.default_rng(59)
        p = rng.uniform(0.3, 0.7, 97)
        series = BinarySeries((rng.random(97) < p).astype(int))
        for h in (0, 1, 4):
            trajectory = cusum_trajectory(series, p, h, grid_size=20)
            self.assertEqual(trajectory.h, h)
            self.assertEqual(len(trajectory.values), 20)
            self.assertAlmostEqual(trajectory.u_grid[-1], 1.0)
            for u, value in zip(trajectory.u_grid, trajectory.values):
                self.assertAlmostEqual(value, gamma_tilde(series, p, h, u),
                                       places=12)
            self.assertAlmostEqual(trajectory.sup,
                                   float(np.max(np.abs(trajectory.values))))
            self.assertAlmostEqual(trajectory.scaled_sup,
                                   math.sqrt(97) * trajectory.sup)
        pass  # void return

    def test_cusum_default_grid(self):
        import IlliqDep.api as api
        from IlliqDep.adaptive import cusum_trajectory
        from IlliqDep.binarize import BinarySeries
        series = BinarySeries([1, 0, 1, 1, 0, 0, 1, 0, 1, 1])
        trajectory = cusum_trajectory(series, [0.5] * 10, 1)
        self.assertEqual(len(trajectory.u_grid), api.DEFAULT_GRID_SIZE)
        data = trajectory.to_dict()
        self.assertEqual(data['h'], 1)
        self.assertEqual(len(data['values']), api.DEFAULT_GRID_SIZE)
        pass  # void return

    def test_cusum_invalid(self):
        from IlliqDep.adaptive import cusum_trajectory
        from IlliqDep.binarize import BinarySeries
        from IlliqDep.error import InvalidInput, InvalidLag
        series = BinarySeries([1, 0, 1, 1])
        self.assertRaises(InvalidInput, cusum_trajectory, series, [0.5] * 4,
                          1, 1)
        self.assertRaises(InvalidInput, cusum_trajectory, series, [0.5] * 4,
                          1, 2.5)
        self.assertRaises(InvalidLag, cusum_trajectory, series, [0.5] * 4, 4)
        pass  # void return

    pass


def test_suite():
    return unittest.TestSuite([
        unittest.TestLoader().loadTestsFromTestCase(eval(c)) for c in __all__])


if __name__ == '__main__':
    # local IlliqDep package takes precedence
    sys.path.insert(0, os.path.join(os.path.curdir, "..", "src"))
    sys.path.insert(0, os.path.join(os.path.curdir, ".."))
    sys.path.insert(0, os.path.join(os.path.curdir, "src"))
    sys.path.insert(0, os.path.join(os.path.curdir))
    unittest.main(defaultTest='test_suite')
