# -*- coding: utf-8 -*-
"""
    IlliqDep._compat
    ~~~~~~~~~~~~~~~~

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = ['DEBUG', 'THREADS', 'cpu_count', ]


import os

# global directives

# debugging mode flag
DEBUG = ('DEBUG' in os.environ) and ('NDEBUG' not in os.environ)


def _read_threads(value):
    # ``ILLIQDEP_THREADS`` caps the worker count; junk values are ignored.
    try:
        threads = int(value)
    except (TypeError, ValueError):
        return None
    return threads if threads > 0 else None


# parallelism cap (``None`` means no cap)
THREADS = _read_threads(os.environ.get('ILLIQDEP_THREADS'))


# other useful helper functions

def cpu_count():
    return os.cpu_count() or 1
