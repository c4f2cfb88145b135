# encoding: utf-8


from __future__ import division, print_function

import h5py as h5
import numpy as np
import pytest as pt
from numpy.testing import assert_allclose, assert_almost_equal

from sysgeom import factory
from sysgeom.covers import (RamifiedCover, build_cover, build_degree2_cover,
                            build_degree3_cover)
from sysgeom.errors import RamificationCollisionError, UnsupportedBaseError
from sysgeom.geometry import Norm, preserves_norm
from sysgeom.lattice import lattice_systole
from sysgeom.paths import SurfaceLoop, trace_ray


@pt.fixture(scope='module')
def triple():
    return build_degree3_cover(factory.calabi_croke())


@pt.fixture(scope='module')
def double():
    return build_degree2_cover(factory.tetrahedral())


def test_triple_cover(triple):
    assert triple.degree == 3
    assert triple.total.euler_characteristic() == 0
    lhs, rhs = triple.riemann_hurwitz()
    assert lhs == rhs == 0
    assert len(triple.ramification_points) == 3
    assert all(r.multiplicity == 3 for r in triple.ramification_points)
    assert_almost_equal(triple.lattice.area, 3 * np.sqrt(3) / 2)
    length, _ = lattice_systole(triple.lattice, triple.base.norm)
    assert_almost_equal(length, np.sqrt(3))


def test_double_cover(double):
    assert double.total.euler_characteristic() == 0
    assert len(double.ramification_points) == 4
    assert_almost_equal(double.lattice.area, 2 * np.sqrt(3))
    length, _ = lattice_systole(double.lattice, double.base.norm)
    assert_almost_equal(length, 2)


def test_pillowcase_cover():
    S = factory.pillowcase_l1()
    cover = build_degree2_cover(S)
    deck = cover.deck_linear_part()
    assert_almost_equal(deck, -np.eye(2))
    assert preserves_norm(deck, S.norm)
    assert_almost_equal(cover.lattice.area, 2)


@pt.mark.parametrize('name', ['triple', 'double'])
def test_deck_transformation(name, request):
    cover = request.getfixturevalue(name)
    deck = cover.deck_linear_part()
    assert not np.allclose(deck, np.eye(2))
    assert_almost_equal(np.linalg.matrix_power(deck, cover.degree),
                        np.eye(2))
    x = (0, (.4, .3))
    for power in range(cover.degree):
        assert cover.project_point(cover.deck(x, power)) \
            == cover.project_point(x)
    assert cover.deck(x, cover.degree) == cover.deck(x, 0)
    assert len(cover.fixed_points()) == len(cover.ramification_points)


def test_lift_point(triple):
    lifts = triple.lift_point((0, (.4, .3)))
    assert len(lifts) == 3
    assert all(m == 1 for _, m in lifts)
    assert len({p for (p, _), _ in lifts}) == 3
    lifts = triple.lift_point((0, (0., 0.)))
    assert len(lifts) == 1
    assert lifts[0][1] == 3


def test_base_distance(double):
    corners = double.base.marked_points
    assert_almost_equal(double.base_distance(corners[0], corners[1]), 1.)
    assert_almost_equal(double.base_distance(corners[0], corners[0]), 0.)


def test_deck_loop(triple):
    loop = SurfaceLoop([(0, (.4, .3), (.45, .35)), (0, (.45, .35), (.4, .3))])
    base = triple.project_loop(loop)
    for power in range(1, 3):
        moved = triple.deck_loop(loop, power)
        assert moved.legs[0].polygon != loop.legs[0].polygon
        image = triple.project_loop(moved)
        assert [leg.polygon for leg in image] == [leg.polygon for leg in base]
        assert_almost_equal([leg.a for leg in image], [leg.a for leg in base])


def test_project_loop_collision(triple):
    loop = SurfaceLoop([(0, (0., 0.), (.5, .2)), (0, (.5, .2), (0., 0.))])
    with pt.raises(RamificationCollisionError):
        triple.project_loop(loop)


def test_unsupported_bases():
    with pt.raises(UnsupportedBaseError):
        build_cover(factory.torus_equilateral(), 2)
    with pt.raises(UnsupportedBaseError):
        build_degree3_cover(factory.tetrahedral())
    with pt.raises(UnsupportedBaseError):
        build_degree2_cover(factory.calabi_croke())
    unmarked = factory.doubled_polygon(factory.SQUARE, marked=False)
    with pt.raises(UnsupportedBaseError):
        build_cover(unmarked, 2)


def test_dump_and_load(tmpdir, double):
    with h5.File(str(tmpdir / 'dump_load_test.h5'), 'w') as buf:
        newgroup = buf.create_group('cover')
        double.dump(newgroup)
    with h5.File(str(tmpdir / 'dump_load_test.h5'), 'r') as buf:
        cover = RamifiedCover.load(buf['cover'])
    assert cover.degree == 2
    assert list(cover.shifts) == list(double.shifts)
    assert_almost_equal(cover.lattice.area, double.lattice.area)

    double.dump(str(tmpdir / 'dump_load_test_str.h5'))
    cover = RamifiedCover.load(str(tmpdir / 'dump_load_test_str.h5'))
    assert len(cover.ramification_points) == 4


def test_triple_deck_isometries(triple):
    deck = triple.deck_linear_part()
    assert preserves_norm(deck, Norm.euclidean())
    assert not preserves_norm(deck, factory.named_norm('l1'))


def _chart_samples(S, rgen, per_polygon):
    for idx, poly in enumerate(S.polygons):
        weights = rgen.dirichlet(np.ones(len(poly.vertices)),
                                 size=per_polygon)
        for xy in weights.dot(poly.vertices):
            yield (idx, tuple(xy))


@pt.mark.parametrize('name', ['triple', 'double'])
def test_deck_on_chart_samples(name, request, rgen):
    cover = request.getfixturevalue(name)
    deck = cover.deck_linear_part()
    assert preserves_norm(deck, cover.base.norm)
    samples = list(_chart_samples(cover.total, rgen, per_polygon=200))
    assert len(samples) >= 1000

    x0 = samples[0]
    offset = cover.developed(cover.deck(x0)) - deck.dot(cover.developed(x0))
    for x in samples:
        y = cover.deck(x)
        residual = cover.developed(y) - deck.dot(cover.developed(x)) - offset
        assert cover.lattice.contains(residual, tol=1e-9), x
        assert cover.project_point(y) == cover.project_point(x)
        assert_allclose(cover.developed(cover.deck(x, cover.degree)),
                        cover.developed(x), atol=1e-9)


@pt.mark.parametrize('name', ['triple', 'double'])
def test_projection_preserves_length(name, request, rgen):
    cover = request.getfixturevalue(name)
    S, norm = cover.total, cover.base.norm
    for _ in range(100):
        idx = rgen.randint(len(S.polygons))
        vertices = S.polygons[idx].vertices
        start = (idx, rgen.dirichlet(np.ones(len(vertices))).dot(vertices))
        legs = []
        for _ in range(3):
            steps, start, _ = trace_ray(S, start, rgen.randn(2),
                                        rgen.uniform(.2, 1.))
            legs.extend(steps)
        loop = SurfaceLoop((leg.polygon, leg.a, leg.b) for leg in legs)
        base = cover.project_loop(loop)
        assert len(base) == len(loop)
        assert_allclose(base.length(norm), loop.length(S.norm), rtol=1e-9)
