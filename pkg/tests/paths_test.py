# encoding: utf-8


from __future__ import division, print_function

import numpy as np
import pytest as pt
from numpy.testing import assert_almost_equal

from sysgeom import factory
from sysgeom._testing import assert_loop_closed
from sysgeom.errors import TransversalityError
from sysgeom.paths import (SurfaceLoop, same_point, self_intersections,
                           trace_ray)


def test_trace_ray_closes_on_torus():
    S = factory.torus_equilateral()
    start = (0, np.array([.3, .2]))
    legs, end, direction = trace_ray(S, start, [.5, np.sqrt(3) / 2], 1.)
    assert same_point(S, end[0], end[1], *start)
    assert_almost_equal(direction, [.5, np.sqrt(3) / 2])
    loop = SurfaceLoop(legs)
    assert_loop_closed(S, loop)
    assert_almost_equal(loop.length(S.norm), 1.)


def test_trace_ray_across_gluing():
    S = factory.calabi_croke()
    legs, (p, xy), _ = trace_ray(S, (0, [.5, .2]), [0, -1], .4)
    assert len(legs) == 2
    assert p == 1
    assert_almost_equal(xy, [.5, -.2])


def test_trace_ray_hits_vertex():
    S = factory.torus_linf()
    with pt.raises(TransversalityError):
        trace_ray(S, (0, [.5, .5]), [1, 1], 2.)


def test_loop_check_detects_gap():
    S = factory.torus_linf()
    loop = SurfaceLoop([(0, [.2, .5], [.8, .5])])
    with pt.raises(ValueError):
        loop.check(S)
    with pt.raises(AssertionError):
        assert_loop_closed(S, loop)


def test_loop_length_in_norm():
    S = factory.torus_triangle_norm()
    legs, _, _ = trace_ray(S, (0, [.3, .4]), [-1, 0], 1.)
    loop = SurfaceLoop(legs)
    assert_loop_closed(S, loop)
    assert_almost_equal(loop.length(S.norm), 2.)
    assert_almost_equal(SurfaceLoop.from_dict(loop.to_dict()).length(S.norm),
                        2.)


def test_self_intersections():
    S = factory.torus_linf()
    horizontal, _, _ = trace_ray(S, (0, [0.1, .5]), [1, 0], 1.)
    vertical, _, _ = trace_ray(S, (0, [.3, .7]), [0, 1], 1.)
    assert self_intersections(SurfaceLoop(horizontal)) == []
    crossings = self_intersections(SurfaceLoop(horizontal + vertical))
    assert len(crossings) == 1
    p, xy, i, j = crossings[0]
    assert p == 0
    assert_almost_equal(xy, [.3, .5])
