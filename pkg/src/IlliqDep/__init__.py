# -*- coding: utf-8 -*-
"""
    IlliqDep
    ~~~~~~~~

    Dependence analysis of trade/no-trade sequences: stationary and
    probability-adaptive dependence plots and portmanteau tests, kernel
    estimation of a time-varying trade probability, and a Monte Carlo
    harness for rejection frequencies.

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['Analyzer',
           'KernelSmoother',
           'binarize',
           'run_experiment', ]


# package metadata

__author__ = "IlliqDep developers"
__contact__ = "illiqdep@users.noreply.github.com"
__copyright__ = 'Copyright (c) 2026 IlliqDep developers'
__license__ = "MIT"
__title__ = "IlliqDep"
__version__ = (0, 1, 0)

# import objects from sub-modules and re-export them as top-level objects

from .analyzer import Analyzer
from .binarize import binarize
from .kernel import KernelSmoother
from .montecarlo import run_experiment
