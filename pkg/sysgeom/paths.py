# encoding: utf-8
"""Polylines on cone surfaces

A closed polyline is stored as a :class:`SurfaceLoop`, a cyclic list of legs
``(polygon, a, b)`` each of which is a straight segment inside one polygon
(in that polygon's chart). Consecutive legs meet at a common point of the
same polygon, at two points identified by a gluing or at a common vertex
class.

"""

from __future__ import division, print_function

import collections

import numpy as np

from .errors import TransversalityError
from .utils import cross2, segments_cross

__all__ = ['Leg', 'SurfaceLoop', 'trace_ray', 'self_intersections',
           'same_point']

TOL = 1e-9

Leg = collections.namedtuple('Leg', ['polygon', 'a', 'b'])


def _leg(p, a, b):
    return Leg(int(p), np.asarray(a, dtype=float), np.asarray(b, dtype=float))


def _edge_of(S, p, x, tol=TOL):
    """Edge index of polygon `p` containing `x` and the edge parameter, or
    `(None, None)`"""
    poly = S.polygons[p]
    for e in range(len(poly)):
        a, b = poly.edge(e)
        ab = b - a
        length = np.linalg.norm(ab)
        if abs(cross2(ab, x - a)) / length < tol:
            t = np.dot(x - a, ab) / length ** 2
            if -tol <= t <= 1 + tol:
                return e, float(np.clip(t, 0., 1.))
    return None, None


def same_point(S, p, x, q, y, tol=1e-7):
    """Whether chart point `x` of polygon `p` and chart point `y` of polygon
    `q` represent the same point of `S`"""
    if p == q and np.linalg.norm(np.asarray(x) - np.asarray(y)) < tol:
        return True
    cx, cy = S.point_class((p, x), tol), S.point_class((q, y), tol)
    if cx is not None or cy is not None:
        return cx == cy
    e, _ = _edge_of(S, p, np.asarray(x, dtype=float), tol)
    if e is None:
        return False
    r, _, A, t = S.edge_map(p, e)
    return r == q and np.linalg.norm(A.dot(x) + t - y) < tol


class SurfaceLoop(object):
    """Closed polyline on a surface

    .. automethod:: __init__

    """

    def __init__(self, legs):
        """
        :param legs: Iterable of `(polygon, a, b)` triples

        """
        self.legs = [_leg(*leg) for leg in legs]
        if not self.legs:
            raise ValueError('A loop needs at least one leg')

    def __len__(self):
        return len(self.legs)

    def __iter__(self):
        return iter(self.legs)

    def __repr__(self):
        return '<SurfaceLoop with {} legs>'.format(len(self.legs))

    def length(self, norm):
        """Sum of the norm lengths of all legs"""
        return float(sum(norm(leg.b - leg.a) for leg in self.legs))

    def check(self, S, tol=1e-7):
        """Verify that all legs lie in their polygons and connect up

        :raises ValueError: on the first defect found

        """
        for i, leg in enumerate(self.legs):
            poly = S.polygons[leg.polygon]
            if not (poly.contains(leg.a, -tol) and poly.contains(leg.b, -tol)):
                raise ValueError('Leg {} leaves polygon {}'
                                 .format(i, leg.polygon))
        for i, leg in enumerate(self.legs):
            nxt = self.legs[(i + 1) % len(self.legs)]
            if not same_point(S, leg.polygon, leg.b, nxt.polygon, nxt.a, tol):
                raise ValueError('Legs {} and {} do not connect'
                                 .format(i, (i + 1) % len(self.legs)))
        return True

    def to_dict(self):
        return [[leg.polygon, leg.a.tolist(), leg.b.tolist()]
                for leg in self.legs]

    @classmethod
    def from_dict(cls, data):
        return cls((p, a, b) for p, a, b in data)


def trace_ray(S, start, direction, length, max_steps=100000):
    """Follow a straight ray across glued edges

    :param S: :class:`~sysgeom.surface.ConeSurface`
    :param start: `(polygon, xy)` start point
    :param direction: Direction in the chart of the start polygon
    :param length: Euclidean length to travel
    :returns: `(legs, end, end_direction)` where `legs` is a list of
        :class:`Leg`, `end` is the final `(polygon, xy)` and `end_direction`
        the unit direction in the final chart
    :raises TransversalityError: if the ray runs into a vertex before its
        end

    """
    p, x = int(start[0]), np.asarray(start[1], dtype=float)
    d = np.asarray(direction, dtype=float)
    d = d / np.linalg.norm(d)
    remaining = float(length)
    legs = []
    for _ in range(max_steps):
        poly = S.polygons[p]
        v = poly.vertices
        w = np.roll(v, -1, axis=0)
        edges = w - v
        outward = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
        speed = outward.dot(d)
        with np.errstate(divide='ignore', invalid='ignore'):
            s = np.sum((v - x) * outward, axis=1) / speed
        s = np.where(speed > 1e-15, s, np.inf)
        s = np.where(s > 1e-12, s, np.inf)
        e = int(np.argmin(s))
        s_exit = s[e]
        if not np.isfinite(s_exit) or s_exit >= remaining:
            end = x + remaining * d
            legs.append(_leg(p, x, end))
            return legs, (p, end), d
        hit = x + s_exit * d
        t = np.dot(hit - v[e], edges[e]) / np.dot(edges[e], edges[e])
        legs.append(_leg(p, x, hit))
        remaining -= s_exit
        if min(t, 1 - t) * np.linalg.norm(edges[e]) < TOL:
            if remaining < TOL:
                return legs, (p, hit), d
            raise TransversalityError('Ray hits the vertex {} of polygon {}'
                                      .format(hit.tolist(), p))
        q, _, A, shift = S.edge_map(p, e)
        p, x, d = q, A.dot(hit) + shift, A.dot(d)
    raise TransversalityError('Ray crosses more than {} edges'
                              .format(max_steps))


def self_intersections(loop, margin=1e-12, tol=1e-9):
    """Transverse self-intersection points of a loop

    Only crossings in the relative interior of two legs are reported; points
    closer than `tol` are merged.

    :returns: List of `(polygon, xy, i, j)` with leg indices `i < j`

    """
    by_polygon = collections.defaultdict(list)
    for i, leg in enumerate(loop.legs):
        by_polygon[leg.polygon].append(i)
    found = []
    for p, indices in sorted(by_polygon.items()):
        if len(indices) < 2:
            continue
        a = np.array([loop.legs[i].a for i in indices])
        b = np.array([loop.legs[i].b for i in indices])
        for m, i in enumerate(indices[:-1]):
            crosses = segments_cross(a[m], b[m], a[m + 1:], b[m + 1:],
                                     margin=margin)
            for k in np.flatnonzero(crosses):
                j = indices[m + 1 + k]
                leg, other = loop.legs[i], loop.legs[j]
                r = leg.b - leg.a
                q = other.b - other.a
                s = cross2(other.a - leg.a, q) / cross2(r, q)
                xy = leg.a + s * r
                if any(fp == p and np.linalg.norm(fxy - xy) < tol
                       for fp, fxy, _, _ in found):
                    continue
                found.append((p, xy, i, j))
    return found
