# -*- coding: utf-8 -*-
"""
    IlliqDep.tests
    ~~~~~~~~~~~~~~

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['test_suite', ]


from . import (test_binarize,
               test_distributions,
               test_stationary,
               test_kernel,
               test_adaptive,
               test_montecarlo,
               test_cli,
               test_acceptance)

from ._config import unittest, TestPackageIntegrity


def test_suite():
    suite = unittest.TestSuite()
    suite.addTest(unittest.TestLoader().
                  loadTestsFromTestCase(TestPackageIntegrity))
    for pkg in (test_binarize,
                test_distributions,
                test_stationary,
                test_kernel,
                test_adaptive,
                test_montecarlo,
                test_cli,
                test_acceptance):
        suite.addTest(pkg.test_suite())
    return suite
