# encoding: utf-8


from __future__ import division, print_function

import numpy as np
import pytest as pt
from numpy.testing import assert_almost_equal

from sysgeom import factory
from sysgeom.surface import NONREVERSIBLE, REVERSIBLE, RIEMANNIAN
from sysgeom.utils import cross2


@pt.mark.parametrize('name', sorted(factory.CANONICAL))
def test_canonical_labels(name):
    S = factory.CANONICAL[name]()
    assert S.label.startswith(name.replace('_norm', ''))


@pt.mark.parametrize('k', [4, 6, 8, 12])
def test_grid_pillowcase(k):
    S = factory.grid_pillowcase(k)
    assert S.euler_characteristic() == 2
    assert len(S.marked_points) == k
    assert None not in S.marked_classes
    assert_almost_equal(S.surface_area(), 2.)
    angles = sorted(c.angle for c in S.cone_angles())
    assert_almost_equal(angles[:4], [np.pi] * 4)
    assert_almost_equal(angles[4:], [2 * np.pi] * k)


def test_grid_pillowcase_invalid():
    with pt.raises(ValueError):
        factory.grid_pillowcase(5)
    with pt.raises(ValueError):
        factory.grid_pillowcase(2)


def test_aligned_pillowcase():
    S = factory.pillowcase(factory.named_norm('l1'), aligned=True)
    assert S.metric_class == REVERSIBLE
    assert_almost_equal(S.surface_area(), 8 / np.pi)


def test_parallelogram_torus_marks():
    S = factory.parallelogram_torus((0, 1), (1, 0),
                                    marked_points=[(2.5, -.25), (1, 1)])
    assert len(S.polygons[0]) == 4
    assert_almost_equal(S.marked_points[0].xy, (.5, .75))
    assert_almost_equal(S.marked_points[1].xy, (0, 0))
    assert S.marked_classes[1] == 0


@pt.mark.parametrize('symmetric', [True, False])
def test_random_norm(symmetric, rgen):
    for _ in range(10):
        norm = factory.random_norm(symmetric, randstate=rgen)
        if symmetric:
            assert norm.reversible
        vertices = norm.ball.vertices
        assert norm.ball.contains(np.zeros(2), margin=.05 - 1e-9)
        assert np.all(np.linalg.norm(vertices, axis=1) <= 1.5 + 1e-12)


def test_random_lattice(rgen):
    for _ in range(10):
        L = factory.random_lattice(rgen, min_det=.5)
        assert L.area >= .5
        b1, b2 = L.basis
        assert cross2(b1, b2) > 0


@pt.mark.parametrize('metric_class', [RIEMANNIAN, REVERSIBLE, NONREVERSIBLE])
def test_random_torus(metric_class, rgen):
    L, norm = factory.random_torus(metric_class, rgen)
    assert norm.is_euclidean == (metric_class == RIEMANNIAN)
    if metric_class == REVERSIBLE:
        assert norm.reversible
    with pt.raises(ValueError):
        factory.random_torus('flat', rgen)
