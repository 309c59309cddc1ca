# -*- coding: utf-8 -*-
"""
    IlliqDep.error
    ~~~~~~~~~~~~~~

    :copyright: 2026 by IlliqDep developers
    :license: MIT, see LICENSE for more details.
"""


class IlliqDepError(Exception):
    """
    Common base class for all IlliqDep errors. Keyword arguments given at
    construction are readable as attributes (e.g. ``err.row``).
    """

    def __init__(self, *args, **kwds):
        super(IlliqDepError, self).__init__(*args)
        self.__data = kwds
        pass  # void return

    def __getattr__(self, name):
        if name in self.__data:
            return self.__data[name]
        return getattr(super(IlliqDepError, self), name)

    def to_dict(self):
        """
        :returns: machine-readable ``dict`` with the error class name, the
            message, and every keyword given at construction.
        """
        data = {'error': type(self).__name__,
                'message': str(self.args[0]) if self.args else ""}
        data.update(self.__data)
        return data

    pass


class InvalidInput(IlliqDepError):
    """
    Input data or arguments violate a precondition.
    """
    pass


class InvalidLag(InvalidInput):
    """
    Requested lag is outside ``0 <= h <= n - 1``.
    """
    pass


class InvalidSpec(InvalidInput):
    """
    Simulation config is malformed; ``field`` names the offending entry.
    """
    pass


class DegenerateSeries(IlliqDepError):
    """
    Zero variance denominator (e.g. a constant trade indicator).
    """
    pass


class SampleTooSmall(IlliqDepError):
    """
    Too few observations for the requested operation.
    """
    pass


class BandwidthTooSmall(IlliqDepError):
    """
    Kernel window holds no neighbour for some time index.
    """
    pass


class IlliqDepDependencyError(IlliqDepError):
    """
    Cannot import package(s) required by IlliqDep.
    """
    pass
