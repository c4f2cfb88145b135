# encoding: utf-8
"""Exceptions raised by :mod:`sysgeom`

All errors raised for invalid geometric input derive from
:class:`SysgeomError`, which is itself a :class:`ValueError`. Iterative
routines that fail to terminate raise :class:`NonConvergenceError`, which is
also a :class:`RuntimeError`.

"""

from __future__ import division, print_function

__all__ = ['SysgeomError', 'InvalidNormError', 'DegeneratePolygonError',
           'GluingError', 'IsometryError', 'NormCompatibilityError',
           'MetricClassError', 'UnsupportedBaseError',
           'RamificationCollisionError', 'CollapsedLoopError',
           'NonConvergenceError', 'TransversalityError', 'BudgetError',
           'ClassificationError', 'ConfigError', 'SurfaceFormatError']


class SysgeomError(ValueError):
    """Base class of all domain errors"""


class InvalidNormError(SysgeomError):
    """Unit ball does not contain the origin in its interior or is not
    strictly convex"""


class DegeneratePolygonError(SysgeomError):
    """Polygon with (numerically) vanishing area"""


class GluingError(SysgeomError):
    """An edge is unglued, glued twice or glued to a missing edge"""


class IsometryError(SysgeomError):
    """A gluing map does not carry its source edge onto its target edge"""


class NormCompatibilityError(SysgeomError):
    """A linear map does not fix the unit ball of the norm"""


class MetricClassError(SysgeomError):
    """Metric class tag does not match the norm"""


class UnsupportedBaseError(SysgeomError):
    """Surface is not of a combinatorial type a construction can handle"""


class RamificationCollisionError(SysgeomError):
    """Loop passes through (or too close to) a ramification point"""


class CollapsedLoopError(SysgeomError):
    """Loop shrinks to a point under shortening"""


class NonConvergenceError(SysgeomError, RuntimeError):
    """Iteration cap exceeded"""


class TransversalityError(SysgeomError):
    """Loop touches the base point, a marked point or runs along a cut"""


class BudgetError(SysgeomError):
    """Discretisation exceeds the node budget"""


class ClassificationError(SysgeomError):
    """Projected loop has an unexpected self-intersection pattern"""


class ConfigError(SysgeomError):
    """Invalid run configuration or missing data file"""


class SurfaceFormatError(SysgeomError):
    """Malformed surface document

    :param msg: Description of the problem
    :param path: JSON path of the offending entry, e.g. ``gluings[2].src``

    """

    def __init__(self, msg, path=None):
        self.path = path
        if path is not None:
            msg = '{}: {}'.format(path, msg)
        super(SurfaceFormatError, self).__init__(msg)
