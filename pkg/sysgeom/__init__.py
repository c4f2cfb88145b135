# encoding: utf-8
"""

* :mod:`sysgeom.geometry`: Convex polygons, polygonal and Euclidean norms,
  polar bodies and the Holmes-Thompson area factor

* :mod:`sysgeom.surface`: Flat cone surfaces glued from convex polygons

* :mod:`sysgeom.paths`: Polylines on surfaces and straight ray tracing

* :mod:`sysgeom.lattice`: Lattices, lattice systoles in arbitrary norms and
  distances on flat tori

* :mod:`sysgeom.words`: Free homotopy classes on marked spheres

* :mod:`sysgeom.cuts`: Cut-arc systems and crossing words of loops

* :mod:`sysgeom.geodesics`: Straightening loops to closed geodesics

* :mod:`sysgeom.covers`: Ramified torus covers of marked spheres

* :mod:`sysgeom.systole`: Systoles and marked homotopy systoles with
  certificates

* :mod:`sysgeom.discrete`: Epsilon-net search for marked systoles

* :mod:`sysgeom.factory`: Canonical surfaces and random instances

* :mod:`sysgeom.harness`: Verification of the optimal systolic constants

* :mod:`sysgeom.cli`: The `sysgeom` command

"""


from .covers import *       # noqa: F401, F403
from .factory import *      # noqa: F401, F403
from .geometry import *     # noqa: F401, F403
from .lattice import *      # noqa: F401, F403
from .surface import *      # noqa: F401, F403
from .systole import *      # noqa: F401, F403
from .words import *        # noqa: F401, F403


__version__ = "0.1.0"
