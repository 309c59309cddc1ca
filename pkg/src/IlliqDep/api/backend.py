# -*- coding: utf-8 -*-
"""
    IlliqDep.api.backend
    ~~~~~~~~~~~~~~~~~~~~

    wrapper around the plotting library producing SVG dependence plots and
    smoothed-probability plots

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['render_profile', 'render_probability', ]


import logging

import numpy as np

import IlliqDep.error as error

logger = logging.getLogger(__name__)

# fixed id salt and no date stamp keep the SVG bytes reproducible
_SVG_RC = {'svg.hashsalt': "illiqdep", 'svg.fonttype': "path"}
_SVG_METADATA = {'Date': None}

_TITLES = {
    'stationary': "dependence plot (constant probability)",
    'oracle-adaptive': "dependence plot (known probability)",
    'feasible-adaptive': "dependence plot (estimated probability)", }


def _require():
    if not plotinfo:
        raise error.IlliqDepDependencyError(
            "missing plotting library, requires ``matplotlib``")


def _save(figure, path):
    import matplotlib

    try:
        with matplotlib.rc_context(_SVG_RC):
            figure.savefig(path, format="svg", metadata=_SVG_METADATA)
    except (IOError, OSError) as e:
        raise error.InvalidInput("cannot write %s: %s" % (path, e),
                                 path=str(path))
    logger.debug("rendered %s", path)
    return path


def render_profile(profile, path, title=None):
    """
    :param profile: ``DependenceProfile``.
    :param path: output ``.svg`` path.

    Optional arguments:

    :param title: plot title, defaults to one naming the variant.

    :returns: ``path``.

    :raises error.IlliqDepDependencyError: if ``matplotlib`` is missing.
    """
    _require()
    from matplotlib.figure import Figure

    figure = Figure(figsize=(8, 4))
    ax = figure.add_subplot(1, 1, 1)
    ax.vlines(profile.lags, 0.0, profile.components, colors="black",
              linewidth=1.5)
    ax.axhline(0.0, color="black", linewidth=0.8)
    for bound in (profile.bound, -profile.bound):
        ax.axhline(bound, color="tab:blue", linestyle="--", linewidth=1.0)
    ax.set_xlim(0, profile.m + 1)
    ax.set_xlabel("lag")
    ax.set_ylabel("normalized covariance")
    ax.set_title(title or _TITLES.get(profile.variant.value, ""))
    return _save(figure, path)


def render_probability(bits, p_hat, path, title=None):
    """
    :param bits: trade indicators ``a_t``.
    :param p_hat: estimated probabilities, same length.
    :param path: output ``.svg`` path.

    :returns: ``path``.

    :raises error.IlliqDepDependencyError: if ``matplotlib`` is missing.
    """
    _require()
    from matplotlib.figure import Figure

    bits = np.asarray(bits, dtype=float)
    t = np.arange(1, bits.size + 1)
    figure = Figure(figsize=(8, 3))
    ax = figure.add_subplot(1, 1, 1)
    ax.plot(t, bits, linestyle="none", marker="|", markersize=4,
            color="0.6", label="trade indicator")
    ax.plot(t, p_hat, color="tab:red", linewidth=1.5,
            label="estimated trade probability")
    ax.set_ylim(-0.05, 1.05)
    ax.set_xlabel("t")
    ax.legend(loc="lower right", fontsize="small")
    if title:
        ax.set_title(title)
    return _save(figure, path)


# plotting library info
plotinfo = None

try:
    import matplotlib
except ImportError:
    pass  # no raise
else:
    plotinfo = ("matplotlib", matplotlib.__version__)
    pass
