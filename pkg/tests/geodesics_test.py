# encoding: utf-8


from __future__ import division, print_function

import numpy as np
import pytest as pt
from numpy.testing import assert_almost_equal

from sysgeom import factory
from sysgeom.errors import UnsupportedBaseError
from sysgeom.geodesics import (CrossingLoop, is_geodesic,
                               self_intersection_count, straighten_geodesic)
from sysgeom.geometry import Norm
from sysgeom.paths import SurfaceLoop
from sysgeom.systole import cover_exact_systole


@pt.mark.parametrize('build, length, crossings', [
    (factory.calabi_croke, np.sqrt(3), 1),
    (factory.tetrahedral, 2., 0),
])
def test_systolic_loops_are_geodesic(build, length, crossings):
    S = build()
    cert = cover_exact_systole(S)
    loop, crossing_loop = straighten_geodesic(S, cert.loop,
                                              return_crossings=True)
    assert_almost_equal(loop.length(S.norm), length, decimal=7)
    assert is_geodesic(S, crossing_loop)
    assert self_intersection_count(cert.loop) == crossings


def test_straighten_bent_loop():
    S = factory.parallelogram_torus((1, 0), (0, 1))
    bent = SurfaceLoop([(0, (.2, .3), (.6, .6)),
                        (0, (.6, .6), (1., .3)),
                        (0, (0., .3), (.2, .3))])
    assert bent.length(S.norm) > 1.1
    loop = straighten_geodesic(S, bent)
    assert_almost_equal(loop.length(S.norm), 1., decimal=7)


def test_marked_point_off_vertex_rejected():
    S = factory.torus_equilateral(marked_points=[(.3, .3)])
    loop = SurfaceLoop([(0, (.1, .1), (.5, .1))])
    with pt.raises(UnsupportedBaseError):
        straighten_geodesic(S, loop)


def test_straightening_never_lengthens():
    # triangular unit ball, invariant under the 120 degree gluing rotations
    ball = [(1., 0.), (-.5, np.sqrt(3) / 2), (-.5, -np.sqrt(3) / 2)]
    triangle = [(0., 0.), (1., 0.), (.5, np.sqrt(3) / 2)]
    S = factory.doubled_polygon(triangle, Norm.polygon(ball),
                                'nonreversible_finsler')
    assert not S.norm.reversible
    straight = CrossingLoop.from_loop(S, cover_exact_systole(
        factory.calabi_croke()).loop)
    params = straight.params + .1 * np.sin(np.arange(1, len(straight) + 1))
    bent = CrossingLoop(S, zip(straight.polygons, straight.edges,
                               np.clip(params, .05, .95))).to_loop()
    start = bent.length(S.norm)

    lengths = []
    loop = straighten_geodesic(S, bent, callback=lengths.append)
    assert len(lengths) > 0
    assert np.all(np.diff(lengths) <= 1e-10 * max(lengths))
    assert lengths[0] <= start + 1e-10
    assert_almost_equal(loop.length(S.norm), lengths[-1])
