# encoding: utf-8


from __future__ import division, print_function

import io
import json
import os

import numpy as np
import pytest as pt
from numpy.testing import assert_almost_equal

from sysgeom import factory
from sysgeom.errors import (GluingError, IsometryError, MetricClassError,
                            NormCompatibilityError, SurfaceFormatError)
from sysgeom.geometry import Norm
from sysgeom.surface import (ConeSurface, Gluing, build_surface, cone_angles,
                             euler_characteristic, load_surface,
                             save_surface, surface_area)


SQUARE = [[0, 0], [1, 0], [1, 1], [0, 1]]


def _torus_description(**kwargs):
    data = {'polygons': [SQUARE],
            'gluings': [{'src': [0, 0], 'dst': [0, 2]},
                        {'src': [0, 1], 'dst': [0, 3]}],
            'norm': {'kind': 'euclidean'},
            'metric_class': 'riemannian',
            'marked_points': [],
            'label': 'square'}
    data.update(kwargs)
    return data


def test_square_torus():
    S = build_surface(_torus_description())
    assert euler_characteristic(S) == 0
    assert len(S.classes) == 1
    assert_almost_equal([c.angle for c in cone_angles(S)], [2 * np.pi])
    assert_almost_equal(surface_area(S), 1)
    assert S.is_orientable


@pt.mark.parametrize('build, chi, angles, area', [
    (factory.calabi_croke, 2, [2 * np.pi / 3] * 3, np.sqrt(3) / 2),
    (factory.tetrahedral, 2, [np.pi] * 4, np.sqrt(3)),
    (factory.pillowcase_l1, 2, [np.pi] * 4, 4 / np.pi),
    (factory.torus_linf, 0, [2 * np.pi], 2 / np.pi),
    (factory.torus_equilateral, 0, [2 * np.pi], np.sqrt(3) / 2),
])
def test_canonical_invariants(build, chi, angles, area):
    S = build()
    assert S.euler_characteristic() == chi
    assert_almost_equal(sorted(c.angle for c in S.cone_angles()), angles)
    assert_almost_equal(S.surface_area(), area)
    curvature = sum(2 * np.pi - c.angle for c in S.cone_angles())
    assert_almost_equal(curvature, 2 * np.pi * chi)


@pt.mark.parametrize('name', sorted(factory.CANONICAL))
def test_shipped_files(name, datadir):
    S = load_surface(os.path.join(datadir, name + '.surf'))
    T = factory.CANONICAL[name]()
    assert S.metric_class == T.metric_class
    assert S.norm == T.norm
    assert S.euler_characteristic() == T.euler_characteristic()
    assert len(S.marked_points) == len(T.marked_points)
    assert_almost_equal(S.surface_area(), T.surface_area())
    assert_almost_equal(sorted(c.angle for c in S.cone_angles()),
                        sorted(c.angle for c in T.cone_angles()))


def test_save_and_load(tmpdir):
    S = factory.tetrahedral()
    path = str(tmpdir / 'tetrahedral.surf')
    save_surface(S, path)
    T = load_surface(path)
    assert T.label == 'tetrahedral'
    assert T.marked_classes == S.marked_classes
    for g, h in zip(S.gluings, T.gluings):
        assert g.src == h.src and g.dst == h.dst
        assert_almost_equal(g.linear, h.linear)


def test_unmatched_edge():
    data = _torus_description(gluings=[{'src': [0, 0], 'dst': [0, 2]}])
    with pt.raises(GluingError) as err:
        build_surface(data)
    assert '(0, 1)' in str(err.value)


def test_edge_glued_twice():
    data = _torus_description(gluings=[{'src': [0, 0], 'dst': [0, 2]},
                                       {'src': [0, 1], 'dst': [0, 2]},
                                       {'src': [0, 3], 'dst': [0, 0]}])
    with pt.raises(GluingError):
        build_surface(data)


def test_length_mismatch():
    data = _torus_description(polygons=[[[0, 0], [2, 0], [2, 1], [0, 1]]],
                              gluings=[{'src': [0, 0], 'dst': [0, 1]},
                                       {'src': [0, 2], 'dst': [0, 3]}])
    with pt.raises(IsometryError):
        build_surface(data)


def test_gluing_breaks_norm():
    triangle = [(0, 0), (1, 0), (.5, np.sqrt(3) / 2)]
    with pt.raises(NormCompatibilityError):
        factory.doubled_polygon(triangle, factory.named_norm('l1'),
                                'reversible_finsler')


@pt.mark.parametrize('norm, metric_class', [
    ({'kind': 'polygon', 'vertices': [[1, 0], [0, 1], [-1, 0], [0, -1]]},
     'riemannian'),
    ({'kind': 'euclidean'}, 'nonreversible_finsler'),
    ({'kind': 'polygon', 'vertices': [[1, 0], [0, 1], [-1, -1]]},
     'reversible_finsler'),
    ({'kind': 'euclidean'}, 'lorentzian'),
])
def test_metric_class_mismatch(norm, metric_class):
    with pt.raises(MetricClassError):
        build_surface(_torus_description(norm=norm,
                                         metric_class=metric_class))


def test_malformed_documents(tmpdir):
    with pt.raises(SurfaceFormatError) as err:
        build_surface({'polygons': [SQUARE]})
    assert err.value.path is not None

    with pt.raises(SurfaceFormatError) as err:
        build_surface(_torus_description(marked_points=[[0, [2, 2]]]))
    assert err.value.path == 'marked_points[0]'

    path = str(tmpdir / 'broken.surf')
    with io.open(path, 'w', encoding='utf-8') as fh:
        fh.write(u'{"polygons": [')
    with pt.raises(SurfaceFormatError):
        load_surface(path)


def test_split_polygon():
    S = factory.torus_equilateral(marked_points=[(1.2, .7)])
    T = S.split_polygon(0, 0, 2)
    assert len(T.polygons) == 2
    assert T.euler_characteristic() == 0
    assert_almost_equal(T.surface_area(), S.surface_area())
    assert len(T.marked_points) == 1
    p, xy = T.marked_points[0]
    assert T.polygons[p].contains(xy)
    with pt.raises(ValueError):
        S.split_polygon(0, 0, 1)


def test_develop_torus():
    S = factory.torus_equilateral()
    placements, holonomies = S.develop()
    assert len(placements) == 1
    for L, c in holonomies:
        assert_almost_equal(L, np.eye(2))
    shifts = sorted(np.round(np.linalg.norm([c for _, c in holonomies],
                                            axis=1), 9))
    assert_almost_equal(shifts, [1, 1])


def test_vertex_fans():
    S = factory.calabi_croke()
    fans = S.vertex_fans()
    assert len(fans) == 3
    assert all(len(fan) == 2 for fan in fans)


def test_dict_roundtrip_keeps_json():
    S = factory.pillowcase_l1()
    text = json.dumps(S.to_dict())
    T = ConeSurface.from_dict(json.loads(text))
    assert T.norm == Norm.polygon(factory.NORMS['l1'])
    assert T.marked_classes == S.marked_classes


def _hexagonal_gluings():
    # linear symmetry of order six of the hexagon below, det 1 but not
    # orthogonal
    A = [[1, -1], [1, 0]]
    return [Gluing((0, 2), (1, 0), A, (0, 0)),
            Gluing((0, 0), (1, 1), A, (-1, 0)),
            Gluing((0, 1), (1, 2), A, (-1, -1))]


def test_gluing_by_ball_symmetry():
    hexagon = Norm.polygon([(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1),
                            (0, -1)])
    triangles = [[(0, 0), (1, 0), (1, 1)], [(0, 0), (0, 1), (-1, 0)]]
    S = ConeSurface(triangles, _hexagonal_gluings(), hexagon,
                    'reversible_finsler')
    assert S.euler_characteristic() == 0
    assert len(S.classes) == 1
    assert_almost_equal(S.euclidean_area, 1)

    with pt.raises(IsometryError):
        ConeSurface(triangles, _hexagonal_gluings(), Norm.euclidean(),
                    'riemannian')
