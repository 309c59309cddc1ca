#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    IlliqDep
    ~~~~~~~~

    Dependence analysis of trade/no-trade sequences.

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

PACKAGE = "illiqdep"

import os
import sys

from setuptools import setup
from glob import glob
from os.path import isfile, join


# auxiliary data files for installation
def get_data_files():
    #
    data_files = []
    if sys.platform == "win32":
        datadir = join("doc", PACKAGE)
    else:
        datadir = join("share", "doc", PACKAGE)
    #
    files = ["README.rst", "LICENSE", ]
    if files:
        data_files.append((join(datadir), files))
    #
    files = glob(join("docs", "*.rst"))
    if files:
        data_files.append((join(datadir, "docs"), files))
    #
    files = glob(join("tests", "*.py"))
    if files:
        data_files.append((join(datadir, "tests"), files))
    #
    files = glob(join("tests", "_config", "*.*"))
    if files:
        data_files.append((join(datadir, "tests", "_config"), files))
    #
    assert data_files
    for install_dir, files in data_files:
        assert files
        for f in files:
            assert isfile(f), (f, install_dir)
    return data_files


# make sure local package takes precedence over installed (old) package
sys.path.insert(0, join('src', ))
import IlliqDep as pkg


setup(
    name=PACKAGE,
    packages=["IlliqDep", "IlliqDep.api"],
    package_dir={"IlliqDep": join("src", "IlliqDep", ),
                 "IlliqDep.api": join("src", "IlliqDep", "api"), },
    package_data={"IlliqDep.api": [join("experiments", "*.json"), ], },
    data_files=get_data_files(),
    version=".".join(map(str, pkg.__version__)),
    author=pkg.__author__,
    license=pkg.__license__,
    author_email=pkg.__contact__,
    description="Dependence analysis of trade/no-trade sequences",
    long_description=open("README.rst").read(),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Financial and Insurance Industry",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
        "Topic :: Office/Business :: Financial :: Investment",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords=["illiquidity", "zero returns", "portmanteau", "kernel"],
    platforms="All",
    python_requires=">=3.8",
    install_requires=["numpy>=1.17", "pandas>=1.0", "matplotlib>=3.3", ],
    extras_require={"test": ["scipy>=1.5", ], },
    entry_points={
        "console_scripts": ["illiqdep = IlliqDep.cli:main", ], },
)
