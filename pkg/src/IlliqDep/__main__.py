# -*- coding: utf-8 -*-
"""
    IlliqDep.__main__
    ~~~~~~~~~~~~~~~~~

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = []


import sys

from .cli import main

if __name__ == '__main__':
    sys.exit(main())
