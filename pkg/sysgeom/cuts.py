# encoding: utf-8
"""Cut-arc systems on marked spheres and crossing words of loops

A cut system consists of pairwise disjoint straight arcs from one base point
`O` to each marked point. Cutting the sphere along them leaves a disk, so a
loop avoiding `O` and the marked points is determined up to free homotopy by
the cyclic sequence of arcs it crosses. The arcs are numbered clockwise
around `O`; then the product of the puncture loops ``a_1 a_2 ... a_k`` is
trivial. Crossing arc `i` from its left to its right side (looking from `O`
towards the marked point) reads `a_i`.

"""

from __future__ import division, print_function

import collections
import heapq
import itertools as it
import logging

import numpy as np

from .errors import TransversalityError, UnsupportedBaseError
from .paths import same_point, trace_ray
from .utils import cross2, line_intersection, point_segment_distance
from .words import HomotopyWord

__all__ = ['CutSystem', 'build_cut_system', 'crossing_letters',
           'homotopy_word', 'default_origin']

logger = logging.getLogger(__name__)

TOL = 1e-9


def default_origin(S):
    """Generic base point near the centroid of polygon 0"""
    poly = S.polygons[0]
    diameter = np.max(np.linalg.norm(poly.vertices - poly.centroid, axis=1))
    offset = np.array([np.sqrt(2) / 7, (np.pi - 3) / 3])
    return (0, poly.centroid + 1e-2 * diameter * offset)


class CutSystem(object):
    """Disjoint straight arcs from a base point to the marked points

    :ivar origin: `(polygon, xy)` of the base point
    :ivar arcs: List of arcs (lists of :class:`~sysgeom.paths.Leg`), arc `i`
        belonging to letter `i + 1`
    :ivar marks: Index of the marked point at the end of each arc

    """

    def __init__(self, S, origin, arcs, marks):
        self.surface = S
        self.origin = (int(origin[0]), np.asarray(origin[1], dtype=float))
        self.arcs = arcs
        self.marks = list(marks)

    def __len__(self):
        return len(self.arcs)

    def __repr__(self):
        return '<CutSystem with {} arcs>'.format(len(self.arcs))

    @property
    def k(self):
        return len(self.arcs)

    def legs_by_polygon(self):
        """Mapping polygon -> list of `(arc index, leg)`"""
        out = collections.defaultdict(list)
        for i, arc in enumerate(self.arcs):
            for leg in arc:
                out[leg.polygon].append((i, leg))
        return out

    def lengths(self):
        norm = self.surface.norm
        return [float(sum(norm(leg.b - leg.a) for leg in arc))
                for arc in self.arcs]


def _mark_representatives(S):
    """Mapping polygon -> list of `(mark index, xy)` for every chart
    position of every marked point"""
    reps = collections.defaultdict(list)
    for j, (p, xy) in enumerate(S.marked_points):
        cls = S.point_class((p, xy))
        if cls is None:
            reps[p].append((j, np.asarray(xy)))
        else:
            for q, i in S.classes[cls]:
                reps[q].append((j, S.corner_position(q, i)))
    return reps


def _placed_distance(point, vertices):
    w = np.roll(vertices, -1, axis=0)
    edges = w - vertices
    inside = np.all(cross2(edges, point - vertices) >= 0)
    if inside:
        return 0.
    return float(np.min(point_segment_distance(point, vertices, w)))


def _unfolded_candidates(S, origin, per_mark=4, max_copies=50000):
    """Straight vectors from `origin` to developed copies of the marked
    points, found by unfolding polygons in order of distance"""
    p0, o = origin
    reps = _mark_representatives(S)
    k = len(S.marked_points)
    found = [dict() for _ in range(k)]
    counter = it.count()
    heap = [(0., next(counter), p0, np.eye(2), np.zeros(2), None)]
    seen = set()
    radius = np.inf
    while heap and len(seen) < max_copies:
        dist, _, p, L, c, back = heapq.heappop(heap)
        if dist > radius:
            break
        key = (p,) + tuple(np.round(np.concatenate([L.ravel(), c]), 7))
        if key in seen:
            continue
        seen.add(key)
        for j, xy in reps.get(p, ()):
            v = L.dot(xy) + c - o
            found[j].setdefault(tuple(np.round(v, 9)), v)
        if radius == np.inf and all(len(f) >= per_mark for f in found):
            lengths = [sorted(np.linalg.norm(list(f.values()), axis=1))
                       for f in found]
            radius = 1.5 * max(l[per_mark - 1] for l in lengths)
        poly = S.polygons[p]
        for e in range(len(poly)):
            if e == back:
                continue
            q, f, A, t = S.edge_map(p, e)
            inv = np.linalg.inv(A)
            Lq, cq = L.dot(inv), c - L.dot(inv.dot(t))
            placed = S.polygons[q].vertices.dot(Lq.T) + cq
            heapq.heappush(heap, (_placed_distance(o, placed), next(counter),
                                  q, Lq, cq, f))
    logger.debug('Unfolded %d polygon copies', len(seen))
    return [sorted(f.values(), key=lambda v: (np.linalg.norm(v), tuple(v)))
            for f in found]


def _verified_arc(S, origin, j, v):
    """Trace the straight arc along `v`; None unless it ends at marked point
    `j` without passing other marked points"""
    try:
        legs, (q, xy), _ = trace_ray(S, origin, v, np.linalg.norm(v))
    except TransversalityError:
        return None
    mp, mxy = S.marked_points[j]
    if not same_point(S, q, xy, mp, mxy, tol=1e-7):
        return None
    for m, (mq, mxy) in enumerate(S.marked_points):
        if m == j or S.point_class((mq, mxy)) is not None:
            continue
        for leg in legs:
            if leg.polygon == mq and \
                    point_segment_distance(mxy, leg.a, leg.b) < 1e-7:
                return None
    return legs


def _arcs_cross(arc, other):
    for leg in arc:
        for o in other:
            if leg.polygon != o.polygon:
                continue
            s, t = line_intersection(leg.a, leg.b, o.a, o.b)
            if np.isnan(s):
                # parallel legs only meet if collinear and overlapping
                if point_segment_distance(o.a, leg.a, leg.b) < TOL \
                        and np.linalg.norm(o.a - leg.a) > TOL:
                    return True
                continue
            if -TOL < s < 1 + TOL and -TOL < t < 1 + TOL:
                # arcs share only the base point
                if s < TOL and t < TOL:
                    continue
                return True
    return False


def build_cut_system(S, origin=None, per_mark=4):
    """Pairwise disjoint shortest straight arcs from `origin` to every marked
    point, numbered clockwise around `origin`

    :param S: Orientable :class:`~sysgeom.surface.ConeSurface` of genus
        zero with marked points
    :param origin: `(polygon, xy)` base point (default
        :func:`default_origin`)
    :raises TransversalityError: if no disjoint system is found

    """
    if S.euler_characteristic() != 2 or not S.is_orientable:
        raise UnsupportedBaseError('Cut systems need an oriented sphere, got '
                                   '{!r}'.format(S))
    if not S.marked_points:
        raise UnsupportedBaseError('{!r} has no marked points'.format(S))
    origin = default_origin(S) if origin is None else origin
    origin = (int(origin[0]), np.asarray(origin[1], dtype=float))
    candidates = _unfolded_candidates(S, origin, per_mark=per_mark)
    verified = []
    for j, vectors in enumerate(candidates):
        arcs = []
        for v in vectors:
            legs = _verified_arc(S, origin, j, v)
            if legs is not None:
                arcs.append((np.linalg.norm(v), v, legs))
            if len(arcs) >= per_mark:
                break
        if not arcs:
            raise TransversalityError('No straight arc reaches marked point '
                                      '{}'.format(j))
        verified.append(arcs)

    order = sorted(range(len(verified)), key=lambda j: verified[j][0][0])
    chosen = {}
    for j in order:
        for _, v, legs in verified[j]:
            if not any(_arcs_cross(legs, other)
                       for _, other in chosen.values()):
                chosen[j] = (v, legs)
                break
        else:
            raise TransversalityError('No disjoint cut arc to marked point {}'
                                      .format(j))
    # clockwise around the origin: decreasing angle of the initial direction
    marks = sorted(chosen, key=lambda j: -np.arctan2(chosen[j][0][1],
                                                     chosen[j][0][0]))
    logger.info('Cut system with %d arcs from %s', len(marks),
                origin[1].tolist())
    return CutSystem(S, origin, [chosen[j][1] for j in marks], marks)


def _marked_positions(S):
    """Chart positions of all representatives of the marked points, keyed by
    polygon

    A marked vertex appears as a corner of every polygon around it.
    """
    positions = collections.defaultdict(list)
    classes = S.marked_classes
    for mark, ((mp, mxy), cls) in enumerate(zip(S.marked_points, classes)):
        if cls is None:
            positions[mp].append((mark, np.asarray(mxy, dtype=float)))
            continue
        for p, poly in enumerate(S.polygons):
            for i, corner in enumerate(poly.vertices):
                if S.corner_class(p, i) == cls:
                    positions[p].append((mark, corner))
    return positions


def crossing_letters(S, loop, cuts, tol=1e-9):
    """Signed arc crossings of a loop in traversal order

    :returns: List of letters `+-(i + 1)` for crossings of arc `i`
    :raises TransversalityError: if the loop touches the base point, a marked
        point, or meets an arc non-transversally

    """
    by_polygon = cuts.legs_by_polygon()
    o_polygon, o = cuts.origin
    marks = _marked_positions(S)
    crossings = []
    for n, leg in enumerate(loop.legs):
        if leg.polygon == o_polygon and \
                point_segment_distance(o, leg.a, leg.b) < tol:
            raise TransversalityError('Loop passes through the base point')
        for mark, mxy in marks.get(leg.polygon, ()):
            if point_segment_distance(mxy, leg.a, leg.b) < tol:
                raise TransversalityError('Loop passes through marked point '
                                          '{}'.format(mark))
        direction = leg.b - leg.a
        if np.linalg.norm(direction) < tol:
            continue
        for i, cut in by_polygon.get(leg.polygon, ()):
            s, t = line_intersection(leg.a, leg.b, cut.a, cut.b)
            if np.isnan(s):
                if point_segment_distance(leg.a, cut.a, cut.b) < tol:
                    raise TransversalityError('Loop runs along cut {}'
                                              .format(i))
                continue
            if not (0 <= s < 1 and 0 <= t <= 1):
                continue
            scale = np.linalg.norm(cut.b - cut.a)
            if min(t, 1 - t) * scale < tol or \
                    min(s, 1 - s) * np.linalg.norm(direction) < tol:
                raise TransversalityError('Loop meets cut {} at a polygon '
                                          'edge'.format(i))
            sign = 1 if cross2(cut.b - cut.a, direction) < 0 else -1
            crossings.append((n, float(s), sign * (i + 1)))
    crossings.sort()
    return [letter for _, _, letter in crossings]


def homotopy_word(S, loop, cuts):
    """Free homotopy class of `loop` on the sphere punctured at the marked
    points, read off the cut system

    :returns: :class:`~sysgeom.words.HomotopyWord`

    """
    return HomotopyWord(crossing_letters(S, loop, cuts), cuts.k)
