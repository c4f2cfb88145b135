# encoding: utf-8
"""Closed piecewise-flat surfaces glued from convex polygons

A :class:`ConeSurface` consists of convex polygons (the charts), gluings
which identify every edge with exactly one partner edge through a planar
isometry, one constant :class:`~sysgeom.geometry.Norm` and a list of marked
points. Edge `e` of a polygon runs from vertex `e` to vertex `e + 1` in
counterclockwise order. Gluing maps act on chart coordinates,

.. math:: x_{dst} = A x_{src} + t,

and an orientation-preserving gluing maps the source edge onto the target
edge with reversed direction.

Vertex classes (the points of the surface represented by polygon corners)
and their cone angles are computed on construction; they are never part of
the input.

"""

from __future__ import division, print_function

import collections
import io
import json
import logging

import networkx as nx
import numpy as np

from .errors import (GluingError, IsometryError, MetricClassError,
                     NormCompatibilityError, SurfaceFormatError,
                     UnsupportedBaseError)
from .geometry import ConvexPolygon, Norm, ht_area_factor, preserves_norm
from .utils import cross2

__all__ = ['SurfacePoint', 'ConePoint', 'Gluing', 'ConeSurface',
           'build_surface', 'euler_characteristic', 'cone_angles',
           'surface_area', 'load_surface', 'save_surface',
           'METRIC_CLASSES']

logger = logging.getLogger(__name__)

RIEMANNIAN = 'riemannian'
REVERSIBLE = 'reversible_finsler'
NONREVERSIBLE = 'nonreversible_finsler'
METRIC_CLASSES = (RIEMANNIAN, REVERSIBLE, NONREVERSIBLE)

TOL = 1e-9

SurfacePoint = collections.namedtuple('SurfacePoint', ['polygon', 'xy'])
"""Location on a surface: polygon index and chart coordinates"""

ConePoint = collections.namedtuple('ConePoint', ['location', 'angle'])
"""Vertex class id and total angle around it"""


class Gluing(object):
    """Identification of edge `src` with edge `dst` by ``x -> A x + t``

    .. automethod:: __init__

    """

    def __init__(self, src, dst, linear, translation):
        """
        :param src: `(polygon, edge)` pair
        :param dst: `(polygon, edge)` pair
        :param linear: 2x2 linear part
        :param translation: Translation part

        """
        self.src = (int(src[0]), int(src[1]))
        self.dst = (int(dst[0]), int(dst[1]))
        self.linear = np.array(linear, dtype=float).reshape((2, 2))
        self.translation = np.array(translation, dtype=float).reshape(2)

    def __repr__(self):
        return 'Gluing(src={}, dst={}, linear={}, translation={})'.format(
            self.src, self.dst, self.linear.tolist(),
            self.translation.tolist())

    @property
    def det(self):
        return float(np.linalg.det(self.linear))

    def __call__(self, x):
        return np.asarray(x, dtype=float).dot(self.linear.T) \
            + self.translation

    def inverse_map(self):
        """Linear part and translation of the inverse map"""
        inv = np.linalg.inv(self.linear)
        return inv, -inv.dot(self.translation)

    def to_dict(self):
        return {'src': list(self.src), 'dst': list(self.dst),
                'linear': self.linear.tolist(),
                'translation': self.translation.tolist()}


def _derived_gluing(src, dst, polygons, where):
    """Rotation plus translation which maps the start of the source edge to
    the end of the target edge and vice versa"""
    for p, e in (src, dst):
        if not (0 <= p < len(polygons) and 0 <= e < len(polygons[p])):
            raise GluingError('{}: edge {} does not exist'
                              .format(where, (p, e)))
    a, b = polygons[src[0]].edge(src[1])
    c, d = polygons[dst[0]].edge(dst[1])
    u, v = b - a, c - d
    if abs(np.linalg.norm(u) - np.linalg.norm(v)) > TOL:
        raise IsometryError(
            '{}: edges {} and {} have different lengths {:.12g} and {:.12g}'
            .format(where, src, dst, np.linalg.norm(u), np.linalg.norm(v)))
    angle = np.arctan2(cross2(u, v), np.dot(u, v))
    c_, s_ = np.cos(angle), np.sin(angle)
    linear = np.array([[c_, -s_], [s_, c_]])
    return Gluing(src, dst, linear, d - linear.dot(a))


class ConeSurface(object):
    """Closed surface glued from convex polygons, with a constant norm,
    a metric class tag and marked points

    All invariants are verified on construction; instances should be treated
    as immutable.

    .. automethod:: __init__

    """

    def __init__(self, polygons, gluings, norm, metric_class,
                 marked_points=(), label=''):
        """
        :param polygons: List of :class:`~sysgeom.geometry.ConvexPolygon`
            (or vertex arrays)
        :param gluings: List of :class:`Gluing`; a gluing given as pair
            `(src, dst)` gets the derived orientation-preserving isometry
        :param norm: :class:`~sysgeom.geometry.Norm`
        :param metric_class: One of :data:`METRIC_CLASSES`
        :param marked_points: List of :class:`SurfacePoint`
        :param label: Free text

        """
        self.polygons = [p if isinstance(p, ConvexPolygon)
                         else ConvexPolygon(p) for p in polygons]
        self.norm = norm
        self.metric_class = metric_class
        self.label = label
        self._check_class()
        self.gluings = [
            g if isinstance(g, Gluing)
            else _derived_gluing(g[0], g[1], self.polygons,
                                 'gluings[{}]'.format(k))
            for k, g in enumerate(gluings)]
        self._edges = self._check_edges()
        self._check_isometries()
        self._corner_class, self.classes = self._vertex_classes()
        self.marked_points = [SurfacePoint(int(p), tuple(float(x) for x in xy))
                              for p, xy in marked_points]
        self._check_marked_points()
        if __debug__:
            curvature = sum(2 * np.pi - c.angle for c in self.cone_angles())
            assert abs(curvature - 2 * np.pi * self.euler_characteristic()) \
                < TOL * (1 + len(self.classes)), 'Gauss-Bonnet violated'

    ###########################################################################
    #                               Validation                                #
    ###########################################################################
    def _check_class(self):
        if self.metric_class not in METRIC_CLASSES:
            raise MetricClassError('{!r} is not a valid metric class'
                                   .format(self.metric_class))
        if self.metric_class == RIEMANNIAN and not self.norm.is_euclidean:
            raise MetricClassError('Riemannian surface requires the '
                                   'Euclidean norm, got {!r}'
                                   .format(self.norm))
        if self.metric_class == REVERSIBLE and not self.norm.reversible:
            raise MetricClassError('Reversible Finsler surface requires a '
                                   'symmetric unit ball, got {!r}'
                                   .format(self.norm))
        if self.metric_class == NONREVERSIBLE and self.norm.is_euclidean:
            raise MetricClassError('Finsler surface requires a polygonal '
                                   'unit ball')

    def _check_edges(self):
        edges = {}
        for k, g in enumerate(self.gluings):
            for side, (p, e) in enumerate((g.src, g.dst)):
                if not (0 <= p < len(self.polygons)
                        and 0 <= e < len(self.polygons[p])):
                    raise GluingError('gluings[{}]: edge {} does not exist'
                                      .format(k, (p, e)))
                if (p, e) in edges:
                    raise GluingError(
                        'gluings[{}]: edge {} already glued by gluings[{}]'
                        .format(k, (p, e), edges[p, e][0]))
                edges[p, e] = (k, side)
        unglued = [(p, e) for p, poly in enumerate(self.polygons)
                   for e in range(len(poly)) if (p, e) not in edges]
        if unglued:
            raise GluingError('Unmatched edges: {}'.format(unglued))
        return edges

    def _check_isometries(self):
        for k, g in enumerate(self.gluings):
            where = 'gluings[{}]'.format(k)
            if abs(abs(g.det) - 1) > TOL:
                raise IsometryError('{}: determinant {:.12g} is not +-1'
                                    .format(where, g.det))
            if self.norm.is_euclidean and \
                    not preserves_norm(g.linear, self.norm, tol=TOL):
                raise IsometryError('{}: linear part is not a Euclidean '
                                    'isometry'.format(where))
            a, b = self.polygons[g.src[0]].edge(g.src[1])
            c, d = self.polygons[g.dst[0]].edge(g.dst[1])
            ia, ib = g(a), g(b)
            if not ((np.allclose(ia, d, atol=TOL)
                     and np.allclose(ib, c, atol=TOL))
                    or (np.allclose(ia, c, atol=TOL)
                        and np.allclose(ib, d, atol=TOL))):
                raise IsometryError(
                    '{}: edge {} is not mapped onto edge {}'
                    .format(where, g.src, g.dst))
            if abs(self.norm(b - a) - self.norm(ib - ia)) > TOL:
                raise IsometryError(
                    '{}: norm lengths {:.12g} and {:.12g} differ'
                    .format(where, self.norm(b - a), self.norm(ib - ia)))
            if not preserves_norm(g.linear, self.norm):
                raise NormCompatibilityError(
                    '{}: linear part {} does not preserve the unit ball'
                    .format(where, g.linear.tolist()))

    def _vertex_classes(self):
        graph = nx.Graph()
        for p, poly in enumerate(self.polygons):
            graph.add_nodes_from((p, i) for i in range(len(poly)))
        for g in self.gluings:
            (p, e), (q, f) = g.src, g.dst
            n, m = len(self.polygons[p]), len(self.polygons[q])
            a, _ = self.polygons[p].edge(e)
            _, d = self.polygons[q].edge(f)
            if np.allclose(g(a), d, atol=TOL):
                graph.add_edge((p, e), (q, (f + 1) % m))
                graph.add_edge((p, (e + 1) % n), (q, f))
            else:
                graph.add_edge((p, e), (q, f))
                graph.add_edge((p, (e + 1) % n), (q, (f + 1) % m))
        classes = sorted(sorted(c) for c in nx.connected_components(graph))
        corner_class = {corner: c for c, corners in enumerate(classes)
                        for corner in corners}
        return corner_class, classes

    def _check_marked_points(self):
        for j, (p, xy) in enumerate(self.marked_points):
            if not (0 <= p < len(self.polygons)) \
                    or not self.polygons[p].contains(xy):
                raise SurfaceFormatError('point {} lies outside polygon {}'
                                         .format(list(xy), p),
                                         'marked_points[{}]'.format(j))

    ###########################################################################
    #                         Combinatorial structure                         #
    ###########################################################################
    def __repr__(self):
        return '<ConeSurface {!r}: {} polygons, {} vertices, {} marked>' \
            .format(self.label, len(self.polygons), len(self.classes),
                    len(self.marked_points))

    @property
    def is_orientable(self):
        """True if all gluings preserve the chart orientation"""
        return all(g.det > 0 for g in self.gluings)

    def corner_class(self, p, i):
        return self._corner_class[p, i % len(self.polygons[p])]

    def corner_position(self, p, i):
        return self.polygons[p].vertices[i % len(self.polygons[p])]

    def point_class(self, point, tol=TOL):
        """Vertex class at `point` or None if it is no polygon corner"""
        p, xy = point
        dist = np.linalg.norm(self.polygons[p].vertices - np.asarray(xy),
                              axis=1)
        i = int(np.argmin(dist))
        return self.corner_class(p, i) if dist[i] < tol else None

    @property
    def marked_classes(self):
        """Vertex class (or None) of each marked point"""
        return [self.point_class(pt) for pt in self.marked_points]

    def gluing_at(self, p, e):
        """Index of the gluing and side (0 for source, 1 for target) of edge
        `e` of polygon `p`"""
        return self._edges[p, e % len(self.polygons[p])]

    def edge_map(self, p, e):
        """Partner edge and chart transition across edge `e` of polygon `p`

        :returns: `(q, f, A, t)` such that ``x -> A x + t`` maps chart `p` to
            chart `q` and edge `e` of `p` onto edge `f` of `q`

        """
        k, side = self._edges[p, e % len(self.polygons[p])]
        g = self.gluings[k]
        if side == 0:
            return g.dst[0], g.dst[1], g.linear, g.translation
        inv, shift = g.inverse_map()
        return g.src[0], g.src[1], inv, shift

    def fan_step(self, p, i, ccw=True):
        """Rotate around the vertex at corner `(p, i)` into the adjacent
        polygon

        :param ccw: Rotate counterclockwise (crossing edge `i - 1`) or
            clockwise (crossing edge `i`)
        :returns: `(edge crossed, q, corner of q)`

        """
        if not self.is_orientable:
            raise UnsupportedBaseError('Fans require an orientable surface')
        n = len(self.polygons[p])
        if ccw:
            e = (i - 1) % n
            q, f, _, _ = self.edge_map(p, e)
            return e, q, f
        e = i % n
        q, f, _, _ = self.edge_map(p, e)
        return e, q, (f + 1) % len(self.polygons[q])

    def vertex_fans(self):
        """Counterclockwise cyclic sequence of corners around each vertex
        class"""
        fans = []
        for corners in self.classes:
            fan = [corners[0]]
            while True:
                _, q, f = self.fan_step(*fan[-1], ccw=True)
                if (q, f) == fan[0]:
                    break
                fan.append((q, f))
            assert sorted(fan) == corners
            fans.append(fan)
        return fans

    def dual_graph(self):
        """Multigraph on polygons with one edge per gluing (key = gluing
        index)"""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(len(self.polygons)))
        for k, g in enumerate(self.gluings):
            graph.add_edge(g.src[0], g.dst[0], key=k)
        return graph

    def develop(self):
        """Place all polygons in the plane along a breadth-first spanning
        tree of the dual graph

        :returns: `(placements, holonomies)`; placement `p` is the affine map
            `(L, c)` from chart `p` to the plane, and holonomy `k` is the
            affine map of the plane `(L, c)` by which the two placements of
            the edges of gluing `k` differ (identity on tree gluings)

        """
        if not self.is_orientable:
            raise UnsupportedBaseError('Developing map requires an '
                                       'orientable surface')
        placements = {0: (np.eye(2), np.zeros(2))}
        for u, v, k in nx.edge_bfs(self.dual_graph(), 0):
            if v in placements:
                continue
            g = self.gluings[k]
            L, c = placements[u]
            if g.src[0] == u:
                # M_v = M_u o G^-1
                inv, shift = g.inverse_map()
                placements[v] = (L.dot(inv), L.dot(shift) + c)
            else:
                # M_v = M_u o G
                placements[v] = (L.dot(g.linear), L.dot(g.translation) + c)
        if len(placements) != len(self.polygons):
            raise GluingError('Surface is not connected')
        placements = [placements[p] for p in range(len(self.polygons))]
        holonomies = []
        for g in self.gluings:
            Ls, cs = placements[g.src[0]]
            Ld, cd = placements[g.dst[0]]
            inv, shift = g.inverse_map()
            # M_src o G^-1 o M_dst^-1
            Ldi = np.linalg.inv(Ld)
            L = Ls.dot(inv).dot(Ldi)
            c = Ls.dot(inv.dot(-Ldi.dot(cd)) + shift) + cs
            holonomies.append((L, c))
        return placements, holonomies

    ###########################################################################
    #                                 Metric                                  #
    ###########################################################################
    def euler_characteristic(self):
        """V - E + F of the glued complex"""
        return len(self.classes) - len(self.gluings) + len(self.polygons)

    def cone_angles(self):
        """One :class:`ConePoint` per vertex class"""
        return [ConePoint(c, float(sum(self.polygons[p].angles[i]
                                       for p, i in corners)))
                for c, corners in enumerate(self.classes)]

    @property
    def euclidean_area(self):
        return float(sum(poly.area for poly in self.polygons))

    def surface_area(self):
        """Holmes-Thompson area (Euclidean area for Riemannian surfaces)"""
        return self.euclidean_area * ht_area_factor(self.norm)

    def length(self, v):
        return self.norm(v)

    ###########################################################################
    #                             Transformations                             #
    ###########################################################################
    def replace(self, **kwargs):
        """Copy with some constructor arguments replaced"""
        args = dict(polygons=self.polygons, gluings=self.gluings,
                    norm=self.norm, metric_class=self.metric_class,
                    marked_points=self.marked_points, label=self.label)
        args.update(kwargs)
        return type(self)(**args)

    def split_polygon(self, pid, i, j):
        """Subdivide polygon `pid` along the chord between its corners `i`
        and `j`

        The part containing corners `i, ..., j` keeps index `pid`, the other
        part is appended. The chord becomes a new gluing with the identity
        map.

        """
        poly = self.polygons[pid]
        n = len(poly)
        i, j = i % n, j % n
        if (j - i) % n in (0, 1, n - 1):
            raise ValueError('Corners {} and {} of a {}-gon are adjacent'
                             .format(i, j, n))
        first = [(i + m) % n for m in range((j - i) % n + 1)]
        second = [(j + m) % n for m in range((i - j) % n + 1)]
        new = len(self.polygons)
        polygons = list(self.polygons)
        polygons[pid] = ConvexPolygon(poly.vertices[first])
        polygons.append(ConvexPolygon(poly.vertices[second]))

        def relabel(p, e):
            if p != pid:
                return (p, e)
            if (e - i) % n < len(first) - 1:
                return (pid, (e - i) % n)
            return (new, (e - j) % n)

        gluings = [Gluing(relabel(*g.src), relabel(*g.dst), g.linear,
                          g.translation) for g in self.gluings]
        gluings.append(Gluing((pid, len(first) - 1), (new, len(second) - 1),
                              np.eye(2), np.zeros(2)))
        marked = []
        for p, xy in self.marked_points:
            if p == pid and not polygons[pid].contains(xy):
                p = new
            marked.append((p, xy))
        return self.replace(polygons=polygons, gluings=gluings,
                            marked_points=marked)

    ###########################################################################
    #                              Serialisation                              #
    ###########################################################################
    def to_dict(self):
        return {'label': self.label,
                'metric_class': self.metric_class,
                'norm': self.norm.to_dict(),
                'polygons': [p.vertices.tolist() for p in self.polygons],
                'gluings': [g.to_dict() for g in self.gluings],
                'marked_points': [[p, list(xy)]
                                  for p, xy in self.marked_points]}

    @classmethod
    def from_dict(cls, data):
        """Build a surface from a surface description

        Gluings without ``linear``/``translation`` get the derived
        orientation-preserving isometry.

        """
        for key in ('polygons', 'gluings', 'norm', 'metric_class'):
            if key not in data:
                raise SurfaceFormatError('missing key', key)
        gluings = []
        for k, g in enumerate(data['gluings']):
            try:
                src, dst = tuple(g['src']), tuple(g['dst'])
            except (KeyError, TypeError):
                raise SurfaceFormatError('gluing needs src and dst',
                                         'gluings[{}]'.format(k))
            if 'linear' in g:
                gluings.append(Gluing(src, dst, g['linear'],
                                      g.get('translation', (0, 0))))
            else:
                gluings.append((src, dst))
        marked = []
        for j, entry in enumerate(data.get('marked_points', [])):
            try:
                p, xy = entry
                marked.append((int(p), (float(xy[0]), float(xy[1]))))
            except (TypeError, ValueError, IndexError):
                raise SurfaceFormatError('expected [polygon, [x, y]]',
                                         'marked_points[{}]'.format(j))
        return cls(polygons=data['polygons'], gluings=gluings,
                   norm=Norm.from_dict(data['norm']),
                   metric_class=data['metric_class'],
                   marked_points=marked, label=data.get('label', ''))


def build_surface(description):
    """Validated :class:`ConeSurface` from a surface description (a dict with
    keys `polygons`, `gluings`, `norm`, `metric_class`, `marked_points`,
    `label`)"""
    surface = ConeSurface.from_dict(description)
    logger.debug('Built %r', surface)
    return surface


def euler_characteristic(S):
    return S.euler_characteristic()


def cone_angles(S):
    return S.cone_angles()


def surface_area(S):
    return S.surface_area()


def load_surface(path):
    """Read a `.surf` document (UTF-8, JSON syntax)"""
    with io.open(path, encoding='utf-8') as fh:
        try:
            data = json.load(fh)
        except ValueError as err:
            raise SurfaceFormatError('not a JSON document ({})'.format(err),
                                     str(path))
    return build_surface(data)


def save_surface(S, path):
    with io.open(path, 'w', encoding='utf-8') as fh:
        fh.write(json.dumps(S.to_dict(), indent=1, sort_keys=True))
        fh.write(u'\n')
