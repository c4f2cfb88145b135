# encoding: utf-8


from __future__ import division, print_function

import numpy as np
import pytest as pt
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose, assert_almost_equal

from sysgeom import factory
from sysgeom._testing import assert_same_polygon
from sysgeom.errors import DegeneratePolygonError, InvalidNormError
from sysgeom.geometry import (ConvexPolygon, Norm, ht_area_factor,
                              minkowski_functional, polar_body,
                              preserves_norm)
from sysgeom.utils import rotation


coords = st.floats(min_value=-10, max_value=10, allow_nan=False)
vectors = st.tuples(coords, coords)


def test_polygon_basics():
    P = ConvexPolygon([(0, 0), (2, 0), (2, 1), (0, 1)])
    assert len(P) == 4
    assert_almost_equal(P.area, 2)
    assert_almost_equal(P.centroid, [1, .5])
    assert_almost_equal(P.angles, [np.pi / 2] * 4)
    assert P.contains([1, .5])
    assert P.contains([2, .5])
    assert not P.contains([2, .5], margin=.1)
    assert not P.contains([3, .5])


@pt.mark.parametrize('vertices', [
    [(0, 0), (1, 0)],
    [(0, 0), (0, 1), (1, 0)],
    [(0, 0), (1, 0), (2, 0)],
    [(0, 0), (1, 0), (2, 0), (1, 1)],
])
def test_degenerate_polygon(vertices):
    with pt.raises(DegeneratePolygonError):
        ConvexPolygon(vertices)


def test_minkowski_functional_l1():
    norm = factory.named_norm('l1')
    assert_almost_equal(norm([1, 0]), 1)
    assert_almost_equal(norm([1, 1]), 2)
    assert_almost_equal(norm([[3, -4], [0, 0]]), [7, 0])
    assert norm.reversible


def test_minkowski_functional_triangle():
    ball = factory.NORMS['triangle']
    assert_almost_equal(minkowski_functional(ball, [-1, 0]), 2)
    assert_almost_equal(minkowski_functional(ball, [1, 0]), 1)
    assert_almost_equal(minkowski_functional(ball, [-1, -1]), 1)
    assert not Norm.polygon(ball).reversible


def test_origin_outside_ball():
    with pt.raises(InvalidNormError):
        Norm.polygon([(1, 0), (2, 0), (2, 1)])
    with pt.raises(InvalidNormError):
        Norm('sphere')


def test_euclidean_norm_as_ball():
    assert_almost_equal(minkowski_functional(Norm.euclidean(), [3, 4]), 5)
    assert_almost_equal(minkowski_functional(Norm.euclidean(),
                                             [[1, 0], [0, -2]]), [1, 2])
    with pt.raises(InvalidNormError):
        polar_body(Norm.euclidean())


def test_polar_body():
    assert_same_polygon(polar_body(factory.NORMS['l1']).vertices,
                        factory.NORMS['linf'])
    assert_same_polygon(polar_body(factory.NORMS['triangle']).vertices,
                        factory.NORMS['polar_triangle'])
    assert factory.named_norm('triangle').polar() \
        == factory.named_norm('polar_triangle')


@pt.mark.parametrize('name, factor', [('euclidean', 1.),
                                      ('l1', 4 / np.pi),
                                      ('linf', 2 / np.pi),
                                      ('triangle', 4.5 / np.pi),
                                      ('polar_triangle', 1.5 / np.pi)])
def test_ht_area_factor(name, factor):
    assert_almost_equal(ht_area_factor(factory.named_norm(name)), factor,
                        decimal=12)


def test_preserves_norm():
    l1 = factory.named_norm('l1')
    assert preserves_norm(rotation(np.pi / 2), l1)
    assert preserves_norm([[1, 0], [0, -1]], l1)
    assert not preserves_norm(rotation(np.pi / 4), l1)
    assert preserves_norm(rotation(.3), Norm.euclidean())
    triangle = factory.named_norm('triangle')
    assert not preserves_norm(-np.eye(2), triangle)


def test_norm_dict():
    for name in ('euclidean', 'l1', 'triangle'):
        norm = factory.named_norm(name)
        assert Norm.from_dict(norm.to_dict()) == norm
    assert factory.named_norm('l1') != factory.named_norm('linf')
    with pt.raises(ValueError):
        factory.named_norm('l3')


@settings(deadline=None, max_examples=50)
@given(u=vectors, v=vectors, scale=st.floats(min_value=0, max_value=100),
       seed=st.integers(min_value=0, max_value=2 ** 31))
def test_norm_axioms(u, v, scale, seed):
    randstate = np.random.RandomState(seed)
    norm = factory.random_norm(symmetric=bool(seed % 2),
                               randstate=randstate)
    u, v = np.array(u), np.array(v)
    assert norm(u) >= 0
    assert norm(u + v) <= norm(u) + norm(v) + 1e-9 * (1 + norm(u) + norm(v))
    assert_almost_equal(norm(scale * u), scale * norm(u), decimal=6)
    r = norm.max_radius
    assert np.linalg.norm(u) <= r * norm(u) + 1e-9


def _directions(norm, count=256):
    angles = np.linspace(0, 2 * np.pi, count, endpoint=False)
    circle = np.stack([np.cos(angles), np.sin(angles)], axis=1)
    return np.concatenate([norm.ball.vertices, circle])


@settings(deadline=None, max_examples=50)
@given(seed=st.integers(min_value=0, max_value=2 ** 31),
       symmetric=st.booleans())
def test_polar_involution(seed, symmetric):
    norm = factory.random_norm(symmetric,
                               randstate=np.random.RandomState(seed))
    try:
        twice = norm.polar().polar()
    except DegeneratePolygonError:
        assume(False)
    dirs = _directions(norm)
    assert_allclose(twice(dirs), norm(dirs), rtol=1e-7)
    assert twice.reversible == norm.reversible


@settings(deadline=None, max_examples=50)
@given(seed=st.integers(min_value=0, max_value=2 ** 31),
       symmetric=st.booleans())
def test_reversibility_detection(seed, symmetric):
    norm = factory.random_norm(symmetric,
                               randstate=np.random.RandomState(seed))
    dirs = _directions(norm)
    assert norm.reversible == symmetric
    assert norm.reversible == np.allclose(norm(dirs), norm(-dirs), atol=1e-9)
