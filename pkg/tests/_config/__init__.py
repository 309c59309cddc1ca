# -*- coding: utf-8 -*-
"""
    IlliqDep.tests._config
    ~~~~~~~~~~~~~~~~~~~~~~

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""

__all__ = []


import atexit
import json
import os
import os.path
import platform
import shutil
import sys
import tempfile
import unittest


# unittest verbosity

VERBOSE = ("-v" in sys.argv or "--verbose" in sys.argv)

# slow Monte Carlo suites can be switched off
SKIP_ACCEPTANCE = bool(os.environ.get('ILLIQDEP_SKIP_ACCEPTANCE', None))


# utilities for managing package data

DATA_DIR = os.path.dirname(__file__)


def data_path(name):
    return os.path.join(DATA_DIR, name)


# utilities for managing temporary files

TEMP_DIR = tempfile.mkdtemp()


def save_temp(name, data=b"", mode=0o666):
    """
    Writes data to a temporary file in the file system. Returns the full path
    to the temporary file on success, and None otherwise.
    """
    path = os.path.join(TEMP_DIR, name)
    try:
        with open(path, 'wb') as f:
            f.write(data)
        os.chmod(path, mode)
        if not os.access(path, os.F_OK | os.R_OK | os.W_OK):
            return None
        return path
    except (IOError, OSError):
        pass
    return None


def temp_dir(name):
    """
    Creates (if needed) and returns a directory under the temporary root.
    """
    path = os.path.join(TEMP_DIR, name)
    if not os.path.isdir(path):
        os.makedirs(path)
    return path


def cleanup():
    """
    Erases temporary files and directories created during the test.
    """
    shutil.rmtree(TEMP_DIR, ignore_errors=True)
    pass


atexit.register(cleanup)


# pre-fetched data

DATA_RETURNS_DATED = data_path("returns_dated.csv")
DATA_RETURNS_SINGLE = data_path("returns_single.csv")
DATA_RETURNS_BAD_ROW = data_path("returns_bad_row.csv")
DATA_RETURNS_UNORDERED = data_path("returns_unordered.csv")


def returns_csv(name, returns, dated=True):
    """
    Saves ``returns`` as a temporary CSV (``date,return`` when ``dated``)
    and returns its path.
    """
    import pandas as pd

    if dated:
        days = pd.bdate_range("2000-01-03", periods=len(returns))
        lines = ["date,return"] + ["%s,%r" % (d.date().isoformat(), float(r))
                                   for d, r in zip(days, returns)]
    else:
        lines = ["%r" % float(r) for r in returns]
    return save_temp(name, ("\n".join(lines) + "\n").encode("utf-8"))


def bits_to_returns(bits, rng):
    """
    Turns trade indicators into returns: zero where ``a_t = 0``, a non-zero
    Gaussian draw elsewhere.
    """
    import numpy as np

    draws = rng.normal(0.0, 0.01, len(bits))
    draws[draws == 0.0] = 1e-4
    return np.where(np.asarray(bits) == 1, draws, 0.0)


# preliminary tests
class TestPackageIntegrity(unittest.TestCase):
    """
    Tests package availability and components.
    """

    def test_dependency(self):
        from IlliqDep.api import backend

        if VERBOSE:
            sys.stderr.write("\n    plot library: ``%s (%s)`` ... " %
                             backend.plotinfo[:2])

        self.assertTrue(backend.plotinfo[0])
        pass

    def test_environ(self):
        self.assertTrue(os.path.isdir(DATA_DIR))
        self.assertTrue(os.path.isdir(TEMP_DIR))

        if VERBOSE:
            sys.stderr.write("\n    Python: ``%s (%s/%s)`` ..." %
                             (platform.python_version(),
                              platform.system(),
                              platform.machine()))
        pass

    def test_package(self):
        import IlliqDep

        if VERBOSE:
            sys.stderr.write("\n    IlliqDep: ``%d.%d.%d`` ... " %
                             IlliqDep.__version__)

        self.assertTrue(callable(IlliqDep.Analyzer))
        self.assertTrue(callable(IlliqDep.KernelSmoother))
        self.assertTrue(callable(IlliqDep.binarize))
        self.assertTrue(callable(IlliqDep.run_experiment))

        from IlliqDep import error
        self.assertTrue(issubclass(error.InvalidLag, error.InvalidInput))
        self.assertTrue(issubclass(error.InvalidSpec, error.InvalidInput))
        self.assertTrue(issubclass(error.DegenerateSeries,
                                   error.IlliqDepError))

        from IlliqDep import api
        for name, path in api.EXPERIMENTS.items():
            self.assertTrue(path, name)
            with open(path) as f:
                self.assertEqual(json.load(f)['name'], name)
        pass  # void return

    def test_types_error_base(self):
        from IlliqDep import error
        e = error.IlliqDepError("base error", code=100)
        self.assertEqual(e.code, 100)
        self.assertRaises(AttributeError, lambda: e.no_such_attr)
        self.assertEqual(e.to_dict(), {'error': "IlliqDepError",
                                       'message': "base error", 'code': 100})
        pass  # void return

    def test_types_error_spec(self):
        from IlliqDep import error
        se = error.InvalidSpec("bad replications", field="replications")
        self.assertEqual(se.field, "replications")
        self.assertEqual(se.to_dict()['error'], "InvalidSpec")
        pass  # void return

    def test_types_error_dependency(self):
        from IlliqDep import error
        de = error.IlliqDepDependencyError("import error",
                                           requires=["matplotlib", ])
        self.assertEqual(de.requires[0], "matplotlib")
        pass  # void return

    pass
