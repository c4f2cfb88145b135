# encoding: utf-8
"""Straightening closed polylines into closed geodesics

A loop which avoids the vertices is described by the cyclic sequence of edges
it crosses together with one parameter per crossing (the position on the
edge). For a fixed sequence, the shortest representative is found by
relaxation: each crossing moves to the point where the chord between its two
neighbours (unfolded across the edge) meets the edge, clamped to the edge.
Crossings clamped at a common vertex form a *run* around that vertex; a run
whose swept angle is below pi is straightened across the sector, and a taut
run at an unmarked vertex whose opposite angle is below pi is moved to the
other side of the vertex. Marked vertices are never crossed.

Straight lines are geodesics for every constant norm, hence the relaxation
is purely geometric; lengths are evaluated with the surface norm.

"""

from __future__ import division, print_function

import collections
import logging

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import (CollapsedLoopError, NonConvergenceError,
                     TransversalityError, UnsupportedBaseError)
from .paths import SurfaceLoop, _edge_of, self_intersections
from .utils import cross2, edge_parameter, line_intersection, perp

__all__ = ['CrossingLoop', 'straighten_geodesic', 'geodesic_defects',
           'is_geodesic', 'self_intersection_count']

logger = logging.getLogger(__name__)

MAX_SWEEPS = 10 ** 5
"""Iteration cap of :func:`straighten_geodesic`"""

CLAMP = 1e-12
ANGLE_TOL = 1e-9

Run = collections.namedtuple('Run', ['start', 'size', 'vertex', 'ccw',
                                     'first', 'last', 'swept', 'angle',
                                     'marked'])
"""Crossings `start, ..., start + size - 1` (cyclic) clamped at one vertex.

`first`/`last` are the corners of the polygons before and after the run,
`swept` the angle on the side of the crossed edges and `angle` the cone
angle."""


def _angle_between(u, v):
    return float(np.arctan2(abs(cross2(u, v)), np.dot(u, v)))


class CrossingLoop(object):
    """Closed loop given by its edge crossings

    Crossing `j` leaves polygon ``polygons[j]`` through edge ``edges[j]`` at
    parameter ``params[j]``; the loop then continues in the partner polygon,
    which is ``polygons[j + 1]``.

    .. automethod:: __init__

    """

    def __init__(self, S, crossings):
        """
        :param S: :class:`~sysgeom.surface.ConeSurface`
        :param crossings: Iterable of `(polygon, edge, parameter)`

        """
        self.surface = S
        self._maps = {}
        self._set(crossings)

    def _set(self, crossings):
        crossings = list(crossings)
        self.polygons = [int(p) for p, _, _ in crossings]
        self.edges = [int(e) for _, e, _ in crossings]
        self.params = np.array([float(t) for _, _, t in crossings])

    def __len__(self):
        return len(self.polygons)

    def __repr__(self):
        return '<CrossingLoop with {} crossings>'.format(len(self))

    @property
    def crossings(self):
        return list(zip(self.polygons, self.edges, self.params.tolist()))

    def _transition(self, p, e):
        """`(q, f, A, t, A^-1, -A^-1 t)` for edge `e` of polygon `p`"""
        try:
            return self._maps[p, e]
        except KeyError:
            q, f, A, t = self.surface.edge_map(p, e)
            inv = np.linalg.inv(A)
            self._maps[p, e] = (q, f, A, t, inv, -inv.dot(t))
            return self._maps[p, e]

    ###########################################################################
    #                               Conversion                                #
    ###########################################################################
    @classmethod
    def from_loop(cls, S, loop, tol=1e-7):
        """Crossing description of a :class:`~sysgeom.paths.SurfaceLoop`

        :raises CollapsedLoopError: if the loop stays inside one polygon
        :raises TransversalityError: if the loop passes through a vertex

        """
        legs = [leg for leg in loop.legs
                if np.linalg.norm(leg.b - leg.a) > 1e-15]
        if not legs:
            raise CollapsedLoopError('Loop has length zero')
        crossings = []
        for i, leg in enumerate(legs):
            nxt = legs[(i + 1) % len(legs)]
            if leg.polygon == nxt.polygon and \
                    np.linalg.norm(leg.b - nxt.a) < tol:
                continue
            if S.point_class((leg.polygon, leg.b), tol) is not None:
                raise TransversalityError('Loop passes through a vertex of '
                                          'polygon {}'.format(leg.polygon))
            e, t = _edge_of(S, leg.polygon, leg.b, tol)
            if e is None:
                raise ValueError('Legs {} and {} do not meet on an edge'
                                 .format(i, (i + 1) % len(legs)))
            q, _, A, shift = S.edge_map(leg.polygon, e)
            if q != nxt.polygon or \
                    np.linalg.norm(A.dot(leg.b) + shift - nxt.a) > tol:
                raise ValueError('Legs {} and {} do not connect across edge {}'
                                 .format(i, (i + 1) % len(legs), e))
            crossings.append((leg.polygon, e, t))
        if not crossings:
            raise CollapsedLoopError('Loop stays inside polygon {}'
                                     .format(legs[0].polygon))
        return cls(S, crossings)

    def to_loop(self):
        """Polyline through the crossing points"""
        n = len(self)
        legs = []
        for j in range(n):
            a, b = self.entry(j), self.point(j)
            if np.linalg.norm(b - a) > 1e-15 or (j == n - 1 and not legs):
                legs.append((self.polygons[j], a, b))
        return SurfaceLoop(legs)

    ###########################################################################
    #                                Geometry                                 #
    ###########################################################################
    def point(self, j):
        """Crossing point `j` in the chart of its polygon"""
        j %= len(self)
        a, b = self.surface.polygons[self.polygons[j]].edge(self.edges[j])
        return a + self.params[j] * (b - a)

    def entry(self, j):
        """Crossing point `j - 1` in the chart of polygon `j`"""
        i = (j - 1) % len(self)
        _, _, A, t, _, _ = self._transition(self.polygons[i], self.edges[i])
        return A.dot(self.point(i)) + t

    def beyond(self, j):
        """Crossing point `j + 1` unfolded into the chart of polygon `j`"""
        j %= len(self)
        _, _, _, _, inv, shift = self._transition(self.polygons[j],
                                                  self.edges[j])
        return inv.dot(self.point(j + 1)) + shift

    def length(self):
        norm = self.surface.norm
        return float(sum(norm(self.point(j) - self.entry(j))
                         for j in range(len(self))))

    ###########################################################################
    #                               Relaxation                                #
    ###########################################################################
    def _local_cost(self, j, t, u, w):
        a, b = self.surface.polygons[self.polygons[j]].edge(self.edges[j])
        x = a + t * (b - a)
        norm = self.surface.norm
        return float(norm(x - u) + norm(w - x))

    def _optimal_parameter(self, j):
        p, e = self.polygons[j], self.edges[j]
        a, b = self.surface.polygons[p].edge(e)
        d = b - a
        old = self.params[j]
        if len(self) == 1:
            _, _, A, shift, _, _ = self._transition(p, e)
            norm = self.surface.norm

            def cost(t):
                x = a + t * d
                return float(norm(x - A.dot(x) - shift))

            res = minimize_scalar(cost, bounds=(0., 1.), method='bounded',
                                  options={'xatol': 1e-13})
            return res.x if cost(res.x) <= cost(old) else old

        u, w = self.entry(j), self.beyond(j)
        inward = perp(d)
        su, sw = np.dot(u - a, inward), np.dot(w - a, inward)
        if su - sw > 1e-14 * np.dot(d, d):
            x = u + su / (su - sw) * (w - u)
            new = float(np.clip(edge_parameter(x, a, b), 0., 1.))
        else:
            res = minimize_scalar(lambda t: self._local_cost(j, t, u, w),
                                  bounds=(0., 1.), method='bounded',
                                  options={'xatol': 1e-13})
            new = float(res.x)
        if self._local_cost(j, new, u, w) > self._local_cost(j, old, u, w):
            return old
        return new

    def sweep(self):
        """One Gauss-Seidel pass over all crossings

        :returns: Largest parameter change

        """
        change = 0.
        for j in range(len(self)):
            new = self._optimal_parameter(j)
            change = max(change, abs(new - self.params[j]))
            self.params[j] = new
        return change

    def cancel_backtracks(self):
        """Remove pairs of consecutive crossings through the same edge in
        opposite directions

        :raises CollapsedLoopError: if no crossing remains

        """
        items = self.crossings
        changed = True
        while changed and len(items) >= 2:
            changed = False
            for j in range(len(items)):
                k = (j + 1) % len(items)
                q, f = self._transition(items[j][0], items[j][1])[:2]
                if (items[k][0], items[k][1]) == (q, f):
                    if k == 0:
                        items = items[1:j]
                    else:
                        del items[j:j + 2]
                    changed = True
                    break
        if not items:
            raise CollapsedLoopError('Loop is contractible')
        if len(items) != len(self):
            self._set(items)

    ###########################################################################
    #                             Vertex passages                             #
    ###########################################################################
    def _clamped_corner(self, j):
        t = self.params[j]
        p, e = self.polygons[j], self.edges[j]
        if t <= CLAMP:
            return p, e, False
        if t >= 1 - CLAMP:
            return p, (e + 1) % len(self.surface.polygons[p]), True
        return None

    def _linked(self, j, corners):
        k = (j + 1) % len(self)
        cj, ck = corners[j], corners[k]
        if cj is None or ck is None or cj[2] != ck[2]:
            return False
        _, q, c = self.surface.fan_step(cj[0], cj[1], ccw=cj[2])
        return (q, c) == (ck[0], ck[1])

    def runs(self):
        """All maximal runs of crossings clamped at a common vertex

        :raises CollapsedLoopError: if the whole loop circles one vertex

        """
        S = self.surface
        n = len(self)
        corners = [self._clamped_corner(j) for j in range(n)]
        linked = [self._linked(j, corners) for j in range(n)]
        if all(linked):
            raise CollapsedLoopError('Loop circles a single vertex')
        starts = [j for j in range(n) if corners[j] is not None
                  and not linked[(j - 1) % n]]
        marked = set(c for c in S.marked_classes if c is not None)
        out = []
        for j0 in starts:
            size = 1
            while linked[(j0 + size - 1) % n]:
                size += 1
            p0, i0, ccw = corners[j0]
            jl = (j0 + size - 1) % n
            e_last, q, c = S.fan_step(corners[jl][0], corners[jl][1], ccw=ccw)
            vertex = S.corner_class(p0, i0)
            swept = self._swept_angle(j0, size, (p0, i0), (q, c), ccw)
            angle = sum(S.polygons[p].angles[i] for p, i in S.classes[vertex])
            out.append(Run(j0, size, vertex, ccw, (p0, i0), (q, c), swept,
                           float(angle), vertex in marked))
        return out

    def _swept_angle(self, j0, size, first, last, ccw):
        """Angle at the vertex between the incoming leg, the crossed edges
        and the outgoing leg; None if a leg degenerates"""
        S = self.surface
        n = len(self)
        p0, i0 = first
        q, c = last
        poly0, polyq = S.polygons[p0], S.polygons[q]
        v0, vq = poly0.vertices[i0], polyq.vertices[c]
        u = self.entry(j0)
        w = self.point((j0 + size) % n)
        if np.linalg.norm(u - v0) < 1e-12 or np.linalg.norm(w - vq) < 1e-12:
            return None
        # far ends of the first crossed edge and of the last entry edge
        if ccw:
            first_far = poly0.vertices[(i0 - 1) % len(poly0)]
            last_far = polyq.vertices[(c + 1) % len(polyq)]
        else:
            first_far = poly0.vertices[(i0 + 1) % len(poly0)]
            last_far = polyq.vertices[(c - 1) % len(polyq)]
        swept = _angle_between(u - v0, first_far - v0)
        for m in range(1, size):
            p, i, _ = self._clamped_corner((j0 + m) % n)
            swept += S.polygons[p].angles[i]
        swept += _angle_between(last_far - vq, w - vq)
        return float(swept)

    def straighten_run(self, run):
        """Move the crossings of `run` onto the chord between its end points,
        unfolded around the vertex; reverted if the loop gets longer

        :returns: True if the loop changed

        """
        n = len(self)
        L, c = np.eye(2), np.zeros(2)
        edges = []
        for m in range(run.size):
            j = (run.start + m) % n
            a, b = self.surface.polygons[self.polygons[j]].edge(self.edges[j])
            edges.append((L.dot(a) + c, L.dot(b) + c))
            _, _, _, _, inv, shift = self._transition(self.polygons[j],
                                                      self.edges[j])
            L, c = L.dot(inv), L.dot(shift) + c
        u = self.entry(run.start)
        w = L.dot(self.point(run.start + run.size)) + c
        before = self.length()
        old = self.params.copy()
        for m, (a, b) in enumerate(edges):
            _, t = line_intersection(u, w, a, b)
            if np.isfinite(t):
                self.params[(run.start + m) % n] = float(np.clip(t, 0., 1.))
        if self.length() > before + 1e-13 * max(1., before) \
                or np.array_equal(old, self.params):
            self.params = old
            return False
        return True

    def flip_run(self, run):
        """Replace `run` by the fan route around the other side of its
        vertex"""
        S = self.surface
        ccw = not run.ccw
        route = []
        corner = run.first
        for _ in range(len(S.classes[run.vertex]) + 1):
            if corner == run.last:
                break
            e, q, c = S.fan_step(corner[0], corner[1], ccw=ccw)
            route.append((corner[0], e, 1. if ccw else 0.))
            corner = (q, c)
        else:
            raise NonConvergenceError('Fan around vertex {} does not close'
                                      .format(run.vertex))
        items = self.crossings
        items = items[run.start:] + items[:run.start]
        self._set(route + items[run.size:])
        logger.debug('Moved %d crossings across vertex %d (%d new)',
                     run.size, run.vertex, len(route))

    def resolve_vertices(self):
        """Straighten or flip the first run which is not taut

        :returns: True if the loop changed

        """
        for run in self.runs():
            if run.swept is None:
                continue
            if run.swept < np.pi - ANGLE_TOL:
                if self.straighten_run(run):
                    return True
            elif not run.marked and \
                    run.angle - run.swept < np.pi - ANGLE_TOL:
                self.flip_run(run)
                return True
        return False

    def defects(self, tol=ANGLE_TOL, straight_tol=1e-7):
        """Violations of the geodesic criterion as human readable strings"""
        out = []
        for run in self.runs():
            if run.swept is None:
                out.append('degenerate passage at vertex {}'
                           .format(run.vertex))
                continue
            if run.swept < np.pi - tol:
                out.append('vertex {}: swept angle {:.12g} < pi'
                           .format(run.vertex, run.swept))
            if not run.marked and run.angle - run.swept < np.pi - tol:
                out.append('vertex {}: opposite angle {:.12g} < pi'
                           .format(run.vertex, run.angle - run.swept))
        for j in range(len(self)):
            if self._clamped_corner(j) is not None:
                continue
            if abs(self._optimal_parameter(j) - self.params[j]) > straight_tol:
                out.append('crossing {} is not on the chord'.format(j))
        return out


def _check_surface(S):
    if not S.is_orientable:
        raise UnsupportedBaseError('Straightening requires an orientable '
                                   'surface')
    if any(c is None for c in S.marked_classes):
        raise UnsupportedBaseError('Straightening requires marked points at '
                                   'vertices')


def straighten_geodesic(S, path, max_sweeps=MAX_SWEEPS,
                        return_crossings=False, callback=None):
    """Shorten a closed polyline to a closed geodesic in its free homotopy
    class on `S` minus its marked points

    :param S: Orientable :class:`~sysgeom.surface.ConeSurface` whose marked
        points are vertices
    :param path: :class:`~sysgeom.paths.SurfaceLoop` avoiding all vertices
    :param max_sweeps: Iteration cap
    :param return_crossings: Also return the :class:`CrossingLoop`
    :param callback: Called with the current length after every sweep
    :returns: Geodesic :class:`~sysgeom.paths.SurfaceLoop`
    :raises CollapsedLoopError: if the loop is contractible
    :raises NonConvergenceError: if the iteration cap is exceeded

    """
    _check_surface(S)
    loop = CrossingLoop.from_loop(S, path)
    loop.cancel_backtracks()
    length = loop.length()
    for sweep in range(max_sweeps):
        change = loop.sweep()
        acted = loop.resolve_vertices()
        if acted:
            loop.cancel_backtracks()
        new_length = loop.length()
        if new_length < 1e-12:
            raise CollapsedLoopError('Loop shrinks to a point')
        if __debug__:
            assert new_length <= length + 1e-10 * max(1., length), \
                'Straightening increased the length'
        if callback is not None:
            callback(new_length)
        if not acted and change < 1e-10 and length - new_length < 1e-14:
            break
        length = new_length
    else:
        raise NonConvergenceError('No geodesic after {} sweeps'
                                  .format(max_sweeps))
    logger.debug('Straightened after %d sweeps: %d crossings, length %.12g',
                 sweep + 1, len(loop), new_length)
    result = loop.to_loop()
    return (result, loop) if return_crossings else result


def geodesic_defects(S, crossings, tol=ANGLE_TOL):
    """Violations of the geodesic criterion of a :class:`CrossingLoop`:
    at unmarked vertices both side angles must be at least pi, at marked
    vertices the swept side"""
    _check_surface(S)
    return crossings.defects(tol)


def is_geodesic(S, crossings, tol=ANGLE_TOL):
    return not geodesic_defects(S, crossings, tol)


def self_intersection_count(loop):
    """Number of transverse self-intersection points"""
    return len(self_intersections(loop))
