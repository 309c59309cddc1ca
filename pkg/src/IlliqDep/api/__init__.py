# -*- coding: utf-8 -*-
"""
    IlliqDep.api
    ~~~~~~~~~~~~

    Input / Output Abstraction Layer for IlliqDep: defaults, bundled
    resources, CSV ingestion, report serialization and plot rendering.

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['DEFAULT_THRESHOLD',
           'DEFAULT_ALPHA',
           'DEFAULT_TEST_LAGS',
           'DEFAULT_PLOT_LAGS',
           'DEFAULT_KERNEL',
           'DEFAULT_BANDWIDTH_CONSTANT',
           'DEFAULT_GRID_SIZE',
           'CLIP_EPSILON',
           'BOUND_LEVEL',
           'REPORT_SCHEMA_VERSION',
           'PLOT_LIBRARY',
           'EXPERIMENTS',
           'confirm_resource',
           'read_returns',
           'render_profile',
           'render_probability', ]


import os
import os.path

# analysis parameters (can be changed by users)

DEFAULT_THRESHOLD = 0.0
DEFAULT_ALPHA = 0.05
DEFAULT_TEST_LAGS = 5
DEFAULT_PLOT_LAGS = 60
DEFAULT_KERNEL = "epanechnikov"
DEFAULT_BANDWIDTH_CONSTANT = 2.0
DEFAULT_GRID_SIZE = 200

# probability estimates are kept inside [eps, 1 - eps]
CLIP_EPSILON = 1e-6

# coverage of the plotted confidence bounds (1.96 at 0.95)
BOUND_LEVEL = 0.95


# analysis report constants (should NEVER be changed by users)

REPORT_SCHEMA_VERSION = 1


# bundled resources

RESOURCE_DIR = os.path.dirname(__file__)


def confirm_resource(name):
    """
    :param name: name of the bundled resource file.
    :returns: confirmed full path to the specified resource file.
    """
    path = os.path.abspath(os.path.join(RESOURCE_DIR, name))
    return path if os.access(path, os.F_OK | os.R_OK) else None


# bundled simulation configs, keyed by short name
EXPERIMENTS = dict(
    (name, confirm_resource(os.path.join("experiments", name + ".json")))
    for name in ("size_constant",
                 "size_time_varying",
                 "power_one_dependent",
                 "lags_constant",
                 "lags_time_varying", ))


# input / output objects and methods

from .backend import render_profile, render_probability, plotinfo as __plotinfo
from .ingest import read_returns

PLOT_LIBRARY = __plotinfo[0] if __plotinfo else None
