# encoding: utf-8
"""Planar convex geometry: unit balls, their Minkowski functionals, polar
bodies and the Holmes-Thompson area factor

A :class:`Norm` on the plane is either the Euclidean norm (stored as an exact
tag) or the Minkowski functional of a convex polygon
:math:`B \\ni 0` which need not be symmetric,

.. math::

   F(v) = \\inf \\{ t > 0 : v / t \\in B \\}
        = \\max_i \\langle n_i, v \\rangle,

where the :math:`n_i` are the vertices of the polar body
:math:`B^\\circ = \\{y : \\langle y, x \\rangle \\le 1 \\ \\forall x \\in B\\}`.
For a surface carrying a constant norm, the Holmes-Thompson area is the
Euclidean area times :math:`|B^\\circ| / \\pi`.

"""

from __future__ import division, print_function

import numpy as np

from .errors import DegeneratePolygonError, InvalidNormError
from .utils import cross2, interior_angles, shoelace

__all__ = ['ConvexPolygon', 'Norm', 'minkowski_functional', 'polar_body',
           'ht_area_factor', 'polygon_area', 'preserves_norm']

AREA_FLOOR = 1e-12
"""Polygons with area below this value are degenerate"""

TOL = 1e-9


class ConvexPolygon(object):
    """Strictly convex polygon with counterclockwise vertices

    .. automethod:: __init__

    """

    def __init__(self, vertices, check=True):
        """
        :param vertices: Array-like of shape (n, 2), counterclockwise
        :param check: Verify orientation, strict convexity and area
            (default True)

        """
        self._vertices = np.array(vertices, dtype=float)
        self._vertices.setflags(write=False)
        if check:
            self._check()

    def _check(self):
        vertices = self._vertices
        if vertices.ndim != 2 or vertices.shape[1] != 2 \
                or len(vertices) < 3:
            raise DegeneratePolygonError(
                '{!r} is not a list of at least three planar points'
                .format(vertices.tolist()))
        area = shoelace(vertices)
        if area <= AREA_FLOOR:
            raise DegeneratePolygonError(
                'Polygon {} has area {:.3g} (not positive or clockwise)'
                .format(vertices.tolist(), area))
        edges = np.roll(vertices, -1, axis=0) - vertices
        turns = cross2(edges, np.roll(edges, -1, axis=0))
        scale = np.max(np.abs(vertices)) ** 2
        if np.any(turns <= TOL * scale):
            raise DegeneratePolygonError(
                'Polygon {} is not strictly convex'.format(vertices.tolist()))

    def __len__(self):
        return len(self._vertices)

    def __repr__(self):
        return 'ConvexPolygon({})'.format(self._vertices.tolist())

    @property
    def vertices(self):
        """Read-only array of shape (n, 2)"""
        return self._vertices

    @property
    def area(self):
        return polygon_area(self)

    @property
    def angles(self):
        """Interior angle at each vertex"""
        return interior_angles(self._vertices)

    @property
    def centroid(self):
        """Area centroid"""
        v = self._vertices
        w = np.roll(v, -1, axis=0)
        c = cross2(v, w)
        return np.sum((v + w) * c[:, None], axis=0) / (3 * np.sum(c))

    def edge(self, i):
        """Endpoints of edge `i`, which runs from vertex `i` to vertex
        `i + 1` (indices taken modulo the number of vertices)"""
        n = len(self._vertices)
        return self._vertices[i % n], self._vertices[(i + 1) % n]

    def contains(self, points, margin=0.):
        """True for points at Euclidean distance at least `margin` inside the
        polygon (on the boundary counts for `margin=0`)"""
        points = np.asarray(points, dtype=float)
        v = self._vertices
        edges = np.roll(v, -1, axis=0) - v
        lengths = np.linalg.norm(edges, axis=1)
        rel = points[..., None, :] - v
        dist = cross2(edges, rel) / lengths
        return np.all(dist >= margin - TOL * max(1., margin), axis=-1)

    def scaled(self, factor):
        return type(self)(factor * self._vertices)

    def transformed(self, A, t=(0, 0)):
        """Image under the affine map x -> A x + t (A must have positive
        determinant to keep the orientation)"""
        A = np.asarray(A, dtype=float)
        return type(self)(self._vertices.dot(A.T) + np.asarray(t))


def _as_polygon(ball):
    if isinstance(ball, ConvexPolygon):
        return ball
    if isinstance(ball, Norm):
        if ball.is_euclidean:
            raise InvalidNormError('The Euclidean norm has no polygonal '
                                   'unit ball')
        return ball.ball
    return ConvexPolygon(ball)


def _normals(ball):
    """Outward edge normals scaled such that <n, x> = 1 on the edge"""
    v = ball.vertices
    w = np.roll(v, -1, axis=0)
    heights = cross2(v, w)
    if np.any(heights <= TOL * np.max(np.abs(v)) ** 2):
        raise InvalidNormError(
            'Origin is not an interior point of {!r}'.format(ball))
    d = w - v
    return np.stack([d[:, 1], -d[:, 0]], axis=1) / heights[:, None]


def minkowski_functional(ball, v):
    """Minkowski functional of a convex polygon containing the origin

    :param ball: :class:`ConvexPolygon`, :class:`Norm` or array of vertices
    :param v: Vector or array of vectors with trailing axis 2
    :returns: Non-negative lengths, same leading shape as `v`

    >>> diamond = [[1, 0], [0, 1], [-1, 0], [0, -1]]
    >>> print(minkowski_functional(diamond, [1, 0]))
    1.0
    >>> print(minkowski_functional([[1, 0], [0, 1], [-1, -1]], [-1, 0]))
    2.0

    """
    if isinstance(ball, Norm) and ball.is_euclidean:
        return ball(v)
    normals = _normals(_as_polygon(ball))
    v = np.asarray(v, dtype=float)
    return np.maximum(np.max(v.dot(normals.T), axis=-1), 0.)


def polar_body(ball):
    """Polar body ``{y : <y, x> <= 1 for all x in ball}``

    The result has one vertex per edge of `ball`, emitted in edge order
    starting with the edge which follows the lexicographically smallest
    vertex of `ball`.

    :param ball: :class:`ConvexPolygon` or array of vertices
    :returns: :class:`ConvexPolygon`

    """
    ball = _as_polygon(ball)
    normals = _normals(ball)
    v = ball.vertices
    start = np.lexsort((v[:, 1], v[:, 0]))[0]
    return ConvexPolygon(np.roll(normals, -start, axis=0))


def polygon_area(P):
    """Shoelace area of a counterclockwise polygon

    :raises DegeneratePolygonError: if the area is not positive

    """
    vertices = P.vertices if isinstance(P, ConvexPolygon) else P
    area = shoelace(vertices)
    if area <= AREA_FLOOR:
        raise DegeneratePolygonError(
            'Polygon has area {:.3g}'.format(area))
    return area


class Norm(object):
    """Constant norm on the plane, either Euclidean or polygonal

    Instances are callable and evaluate the norm on (arrays of) vectors.
    Use :func:`Norm.euclidean` and :func:`Norm.polygon` for construction.

    .. automethod:: __init__
    .. automethod:: __call__

    """

    def __init__(self, kind, ball=None):
        """
        :param kind: ``'euclidean'`` or ``'polygon'``
        :param ball: Unit ball as :class:`ConvexPolygon` (polygonal case)

        """
        if kind == 'euclidean':
            self._ball = None
            self._normals = None
            self._reversible = True
        elif kind == 'polygon':
            self._ball = _as_polygon(ball)
            self._normals = _normals(self._ball)
            self._reversible = bool(np.all(np.abs(
                self(-self._ball.vertices) - 1) < TOL))
        else:
            raise InvalidNormError('{!r} is not a valid norm kind'
                                   .format(kind))
        self._kind = kind

    @classmethod
    def euclidean(cls):
        return cls('euclidean')

    @classmethod
    def polygon(cls, vertices):
        return cls('polygon', ConvexPolygon(vertices))

    def __call__(self, v):
        v = np.asarray(v, dtype=float)
        if self._normals is None:
            return np.linalg.norm(v, axis=-1)
        return np.maximum(np.max(v.dot(self._normals.T), axis=-1), 0.)

    def __repr__(self):
        if self._ball is None:
            return 'Norm.euclidean()'
        return 'Norm.polygon({})'.format(self._ball.vertices.tolist())

    def __eq__(self, other):
        if not isinstance(other, Norm) or self._kind != other._kind:
            return False
        if self._ball is None:
            return True
        return _same_vertex_set(self._ball.vertices, other._ball.vertices)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    @property
    def kind(self):
        return self._kind

    @property
    def is_euclidean(self):
        return self._kind == 'euclidean'

    @property
    def ball(self):
        """Unit ball as :class:`ConvexPolygon` (None for Euclidean)"""
        return self._ball

    @property
    def reversible(self):
        """True iff ``F(-v) == F(v)`` for all `v`"""
        return self._reversible

    @property
    def max_radius(self):
        """Largest Euclidean norm of a unit vector, so that
        ``|v| <= max_radius * F(v)``"""
        if self._ball is None:
            return 1.
        return float(np.max(np.linalg.norm(self._ball.vertices, axis=1)))

    def polar(self):
        """Dual norm, whose unit ball is the polar body"""
        if self._ball is None:
            return self
        return Norm('polygon', polar_body(self._ball))

    def scaled(self, factor):
        """Norm whose unit ball is scaled by `factor` (so lengths scale by
        ``1 / factor``)"""
        if self._ball is None:
            raise InvalidNormError('Cannot rescale the Euclidean norm tag')
        return Norm('polygon', self._ball.scaled(factor))

    def to_dict(self):
        if self._ball is None:
            return {'kind': 'euclidean'}
        return {'kind': 'polygon', 'vertices': self._ball.vertices.tolist()}

    @classmethod
    def from_dict(cls, data):
        kind = data.get('kind')
        if kind == 'euclidean':
            return cls.euclidean()
        if kind == 'polygon':
            return cls.polygon(data['vertices'])
        raise InvalidNormError('{!r} is not a valid norm kind'.format(kind))


def _same_vertex_set(u, v, tol=TOL):
    if u.shape != v.shape:
        return False
    dist = np.linalg.norm(u[:, None, :] - v[None, :, :], axis=-1)
    return bool(np.all(np.min(dist, axis=1) < tol)
                and np.all(np.min(dist, axis=0) < tol))


def ht_area_factor(norm):
    """Holmes-Thompson area factor of a constant norm

    Multiplying the Euclidean area of a flat region by this factor yields
    its Holmes-Thompson area. The factor is exactly 1 for the Euclidean norm.

    :param norm: :class:`Norm`
    :returns: ``area(polar_body(ball)) / pi`` as float

    """
    if norm.is_euclidean:
        return 1.
    return polygon_area(polar_body(norm.ball)) / np.pi


def preserves_norm(A, norm, tol=TOL):
    """Check whether the linear map `A` maps the unit ball of `norm` onto
    itself"""
    A = np.asarray(A, dtype=float)
    if norm.is_euclidean:
        return bool(np.allclose(A.T.dot(A), np.eye(2), atol=tol))
    vertices = norm.ball.vertices
    return _same_vertex_set(vertices.dot(A.T), vertices, tol=tol)
