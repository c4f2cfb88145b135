# encoding: utf-8
"""Cyclic ramified covers of marked flat spheres by flat tori

A cyclic cover of degree `d` is assembled from `d` sheets, each a copy of
all base polygons with identical charts. Edge `e` of polygon `p` on sheet `s`
is glued to the partner edge on sheet ``s + k_g (mod d)``, where the shift
`k_g` belongs to the base gluing `g`. The shifts are chosen such that the
monodromy around every marked vertex generates Z/d; the marked vertices are
then fully ramified and, when their cone angles are ``2 pi / d``, the total
space is a flat torus. The deck transformation moves every chart to the next
sheet.

Total polygon `(s, p)` has index ``s * P + p`` where `P` is the number of
base polygons, so the projection is ``index % P`` with identical
coordinates.

"""

from __future__ import division, print_function

import collections
import itertools as it
import json
import logging

import numpy as np

from .errors import (NormCompatibilityError, RamificationCollisionError,
                     UnsupportedBaseError)
from .geometry import preserves_norm
from .lattice import flat_torus_distance, torus_lattice
from .paths import SurfaceLoop
from .surface import ConeSurface, Gluing, SurfacePoint
from .utils import point_segment_distance

__all__ = ['RamifiedCover', 'RamificationPoint', 'build_cover',
           'build_degree2_cover', 'build_degree3_cover', 'lift_point',
           'project_loop']

logger = logging.getLogger(__name__)

TOL = 1e-9
MAX_GLUINGS = 16
"""Largest number of base gluings for the brute-force shift search"""

RamificationPoint = collections.namedtuple(
    'RamificationPoint', ['location', 'total_class', 'base_class',
                          'multiplicity'])


def _fan_coefficients(base):
    """Signed gluing counts of the counterclockwise loop around every vertex
    class (+1 crossing source -> target, -1 in the other direction)"""
    rows = []
    for fan in base.vertex_fans():
        row = np.zeros(len(base.gluings), dtype=int)
        for p, i in fan:
            e, _, _ = base.fan_step(p, i, ccw=True)
            k, side = base.gluing_at(p, e)
            row[k] += 1 if side == 0 else -1
        rows.append(row)
    return np.array(rows)


def _find_shifts(base, degree):
    coeffs = _fan_coefficients(base)
    if coeffs.shape[1] > MAX_GLUINGS:
        raise UnsupportedBaseError('{} gluings exceed the search limit {}'
                                   .format(coeffs.shape[1], MAX_GLUINGS))
    for shifts in it.product(range(degree), repeat=coeffs.shape[1]):
        if np.all(coeffs.dot(shifts) % degree != 0):
            return np.array(shifts)
    raise UnsupportedBaseError('No degree-{} monodromy ramifies every vertex '
                               'of {!r}'.format(degree, base))


def _assemble(base, degree, shifts):
    P = len(base.polygons)
    polygons = [base.polygons[p] for _ in range(degree) for p in range(P)]
    gluings = []
    for s in range(degree):
        for g, k in zip(base.gluings, shifts):
            (p, e), (q, f) = g.src, g.dst
            gluings.append(Gluing((s * P + p, e),
                                  (((s + k) % degree) * P + q, f),
                                  g.linear, g.translation))
    label = '{}-fold cover of {}'.format(degree, base.label or 'surface')
    return ConeSurface(polygons, gluings, base.norm, base.metric_class,
                       label=label)


class RamifiedCover(object):
    """Cyclic ramified cover of a marked sphere by a flat torus

    .. automethod:: __init__

    """

    def __init__(self, base, degree, shifts):
        """
        :param base: Base :class:`~sysgeom.surface.ConeSurface`
        :param degree: Number of sheets
        :param shifts: Sheet shift of every base gluing

        """
        self.base = base
        self.degree = int(degree)
        self.shifts = np.asarray(shifts, dtype=int)
        self.total = _assemble(base, self.degree, self.shifts)
        self.lattice = torus_lattice(self.total)
        self._placements, _ = self.total.develop()
        self.ramification_points = self._ramification()

    def __repr__(self):
        return '<RamifiedCover of degree {} over {!r}>'.format(self.degree,
                                                              self.base)

    @property
    def sheet_size(self):
        return len(self.base.polygons)

    ###########################################################################
    #                                  Maps                                   #
    ###########################################################################
    def project_point(self, x):
        """Image of the total point `x = (polygon, xy)` on the base"""
        return SurfacePoint(int(x[0]) % self.sheet_size, tuple(x[1]))

    def deck(self, x, power=1):
        """Deck transformation (to the next sheet) applied `power` times"""
        n = self.degree * self.sheet_size
        return SurfacePoint((int(x[0]) + power * self.sheet_size) % n,
                            tuple(x[1]))

    def projection_table(self):
        """Chart-to-chart affine maps of the projection as `(base polygon,
        linear, translation)` per total polygon"""
        return [(idx % self.sheet_size, np.eye(2), np.zeros(2))
                for idx in range(len(self.total.polygons))]

    def developed(self, x):
        """Plane coordinates of a total point for the period lattice"""
        L, c = self._placements[int(x[0])]
        return L.dot(np.asarray(x[1], dtype=float)) + c

    def deck_linear_part(self):
        """Linear part of the deck transformation in developed coordinates"""
        P = self.sheet_size
        L0, _ = self._placements[0]
        L1, _ = self._placements[P]
        deck = L1.dot(np.linalg.inv(L0))
        if __debug__:
            for idx in range(len(self.total.polygons)):
                La, _ = self._placements[idx]
                Lb, _ = self._placements[(idx + P) % len(self._placements)]
                assert np.allclose(Lb.dot(np.linalg.inv(La)), deck,
                                   atol=1e-9), 'Deck is not affine'
        return deck

    ###########################################################################
    #                              Ramification                               #
    ###########################################################################
    def _base_class_of(self, total_class):
        q, i = self.total.classes[total_class][0]
        return self.base.corner_class(q % self.sheet_size, i)

    def _ramification(self):
        over = collections.defaultdict(list)
        for c in range(len(self.total.classes)):
            over[self._base_class_of(c)].append(c)
        points = []
        for b, classes in sorted(over.items()):
            if self.degree % len(classes):
                raise UnsupportedBaseError('{} points over vertex {} do not '
                                           'divide the degree'
                                           .format(len(classes), b))
            multiplicity = self.degree // len(classes)
            if multiplicity == 1:
                continue
            for c in classes:
                q, i = self.total.classes[c][0]
                xy = self.total.corner_position(q, i)
                location = SurfacePoint(q, tuple(xy))
                points.append(RamificationPoint(location, c, b, multiplicity))
        return points

    def fixed_points(self):
        """Vertex classes of the total space fixed by the deck
        transformation"""
        fixed = []
        for c, corners in enumerate(self.total.classes):
            q, i = corners[0]
            moved = self.deck((q, (0, 0)))[0]
            if self.total.corner_class(moved, i) == c:
                fixed.append(c)
        return fixed

    def riemann_hurwitz(self):
        """`(chi_total, d chi_base - sum (m - 1))` over ramification points"""
        defect = sum(r.multiplicity - 1 for r in self.ramification_points)
        return (self.total.euler_characteristic(),
                self.degree * self.base.euler_characteristic() - defect)

    def lift_point(self, x, tol=TOL):
        """Preimages of the base point `x` with their multiplicities

        :returns: List of `(SurfacePoint, multiplicity)`

        """
        p, xy = int(x[0]), tuple(float(v) for v in x[1])
        cls = self.base.point_class((p, xy), tol)
        if cls is None:
            return [(SurfacePoint(s * self.sheet_size + p, xy), 1)
                    for s in range(self.degree)]
        lifts = []
        for c in range(len(self.total.classes)):
            if self._base_class_of(c) != cls:
                continue
            q, i = self.total.classes[c][0]
            multiplicity = next((r.multiplicity
                                 for r in self.ramification_points
                                 if r.total_class == c), 1)
            lifts.append((SurfacePoint(q, tuple(self.total.corner_position(
                q, i))), multiplicity))
        return lifts

    ###########################################################################
    #                                  Loops                                  #
    ###########################################################################
    def _check_avoids_ramification(self, loop, tol):
        for n, leg in enumerate(loop.legs):
            poly = self.total.polygons[leg.polygon]
            dist = point_segment_distance(poly.vertices, leg.a, leg.b)
            if np.min(dist) < tol:
                raise RamificationCollisionError(
                    'Leg {} passes within {:.3g} of a ramification point'
                    .format(n, float(np.min(dist))))

    def project_loop(self, loop, tol=TOL):
        """Image of a loop on the total space

        :raises RamificationCollisionError: if the loop comes closer than
            `tol` to a vertex of the total space

        """
        self._check_avoids_ramification(loop, tol)
        P = self.sheet_size
        return SurfaceLoop((leg.polygon % P, leg.a, leg.b) for leg in loop)

    def deck_loop(self, loop, power=1):
        n = len(self.total.polygons)
        return SurfaceLoop(((leg.polygon + power * self.sheet_size) % n,
                            leg.a, leg.b) for leg in loop)

    def base_distance(self, x, y):
        """Directed distance between two base points, computed on the cover
        as the minimum over the lifts of `y`"""
        x_lift = self.developed(self.lift_point(x)[0][0])
        norm = self.base.norm
        return min(flat_torus_distance(self.lattice, norm, x_lift,
                                       self.developed(y_lift))
                   for y_lift, _ in self.lift_point(y))

    ###########################################################################
    #                              Serialisation                              #
    ###########################################################################
    def dump(self, target):
        """Serializes the cover to a :code:`h5py.Group`. Recover using
        :func:`~load`.

        :param target: :code:`h5py.Group` the instance should be saved to or
            path to h5 file (it's then serialized to /)

        """
        if isinstance(target, str):
            import h5py
            with h5py.File(target, 'w') as outfile:
                return self.dump(outfile)

        target.attrs['base'] = json.dumps(self.base.to_dict(), sort_keys=True)
        target.attrs['degree'] = self.degree
        target['shifts'] = self.shifts
        table = self.projection_table()
        target['projection'] = np.array([p for p, _, _ in table])
        target['linear'] = np.array([L for _, L, _ in table])
        target['translation'] = np.array([t for _, _, t in table])
        target['deck'] = np.array([self.deck((idx, (0, 0)))[0]
                                   for idx in range(len(table))])

    @classmethod
    def load(cls, source):
        """Deserializes a cover from a :code:`h5py.Group`. Serialize using
        :func:`~dump`.

        :param source: :code:`h5py.Group` containing a serialized cover or
            path to a single h5 File containing it under /

        """
        if isinstance(source, str):
            import h5py
            with h5py.File(source, 'r') as infile:
                return cls.load(infile)

        base = ConeSurface.from_dict(json.loads(source.attrs['base']))
        return cls(base, int(source.attrs['degree']), source['shifts'][()])


def build_cover(base, degree):
    """Cyclic cover of degree `degree` fully ramified over the marked
    vertices

    :param base: Orientable sphere whose vertex classes are exactly its
        marked points
    :raises UnsupportedBaseError: if no such cover is a flat torus
    :raises NormCompatibilityError: if the deck transformation does not
        preserve the norm

    """
    if not base.is_orientable or base.euler_characteristic() != 2:
        raise UnsupportedBaseError('{!r} is not an oriented sphere'
                                   .format(base))
    marked = base.marked_classes
    if None in marked or sorted(marked) != list(range(len(base.classes))):
        raise UnsupportedBaseError('Marked points of {!r} must be exactly its '
                                   'vertices'.format(base))
    shifts = _find_shifts(base, degree)
    cover = RamifiedCover(base, degree, shifts)
    deck = cover.deck_linear_part()
    if not preserves_norm(deck, base.norm):
        raise NormCompatibilityError('Deck transformation {} does not '
                                     'preserve {!r}'
                                     .format(deck.tolist(), base.norm))
    lhs, rhs = cover.riemann_hurwitz()
    assert lhs == rhs, 'Riemann-Hurwitz violated'
    logger.info('Built %r with shifts %s, lattice %r', cover,
                cover.shifts.tolist(), cover.lattice)
    return cover


def build_degree3_cover(base):
    """Triple cover of a sphere with three marked cone points of angle
    ``2 pi / 3`` (the doubled triangle)"""
    if len(base.marked_points) != 3 or len(base.classes) != 3:
        raise UnsupportedBaseError('Degree-3 cover needs three marked '
                                   'vertices, got {!r}'.format(base))
    return build_cover(base, 3)


def build_degree2_cover(base):
    """Double cover of a sphere with four marked cone points of angle pi
    (tetrahedron, pillowcase)"""
    if len(base.marked_points) != 4 or len(base.classes) != 4:
        raise UnsupportedBaseError('Degree-2 cover needs four marked '
                                   'vertices, got {!r}'.format(base))
    return build_cover(base, 2)


def lift_point(c, x):
    return c.lift_point(x)


def project_loop(c, loop):
    return c.project_loop(loop)
