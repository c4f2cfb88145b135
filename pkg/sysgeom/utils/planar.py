# encoding: utf-8
"""Elementary planar geometry on numpy arrays

All functions broadcast over leading axes; points and vectors are arrays
with a trailing axis of length 2.

"""

from __future__ import division, print_function

import numpy as np

__all__ = ['cross2', 'perp', 'rotation', 'shoelace', 'interior_angles',
           'ccw_angle', 'line_intersection', 'segments_cross',
           'point_segment_distance', 'edge_parameter']


def cross2(u, v):
    """z-component of the cross product of two planar vectors

    >>> print(cross2([1, 0], [0, 1]))
    1.0
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def perp(v):
    """Rotate by +90 degrees"""
    v = np.asarray(v, dtype=float)
    return np.stack([-v[..., 1], v[..., 0]], axis=-1)


def rotation(angle):
    """2x2 rotation matrix for a counterclockwise rotation by `angle`"""
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]])


def shoelace(points):
    """Signed area of the closed polygon `points` (positive for
    counterclockwise order)

    >>> shoelace([[0, 0], [1, 0], [0, 1]])
    0.5
    """
    points = np.asarray(points, dtype=float)
    return .5 * float(np.sum(cross2(points, np.roll(points, -1, axis=0))))


def ccw_angle(u, v):
    """Counterclockwise angle in [0, 2 pi) which rotates `u` onto the
    direction of `v`"""
    angle = np.arctan2(cross2(u, v), np.sum(np.asarray(u) * np.asarray(v),
                                            axis=-1))
    return np.mod(angle, 2 * np.pi)


def interior_angles(points):
    """Interior angles of a counterclockwise convex polygon, one per vertex"""
    points = np.asarray(points, dtype=float)
    to_next = np.roll(points, -1, axis=0) - points
    to_prev = np.roll(points, 1, axis=0) - points
    return ccw_angle(to_next, to_prev)


def line_intersection(a, b, c, d):
    """Parameters `(s, t)` with ``a + s (b - a) = c + t (d - c)``

    :returns: Tuple of arrays; entries are `nan` where the lines are parallel

    """
    a, b, c, d = (np.asarray(x, dtype=float) for x in (a, b, c, d))
    r = b - a
    q = d - c
    denom = cross2(r, q)
    with np.errstate(divide='ignore', invalid='ignore'):
        s = cross2(c - a, q) / denom
        t = cross2(c - a, r) / denom
    parallel = np.abs(denom) < 1e-300
    s = np.where(parallel, np.nan, s)
    t = np.where(parallel, np.nan, t)
    return s, t


def segments_cross(a, b, c, d, margin=0.):
    """True where the segments `[a, b]` and `[c, d]` cross at a point
    strictly inside both (up to a relative `margin` at the endpoints)"""
    s, t = line_intersection(a, b, c, d)
    with np.errstate(invalid='ignore'):
        return ((s > margin) & (s < 1 - margin)
                & (t > margin) & (t < 1 - margin))


def point_segment_distance(p, a, b):
    """Euclidean distance from the points `p` to the segments `[a, b]`"""
    p, a, b = (np.asarray(x, dtype=float) for x in (p, a, b))
    ab = b - a
    len2 = np.sum(ab * ab, axis=-1)
    with np.errstate(divide='ignore', invalid='ignore'):
        t = np.sum((p - a) * ab, axis=-1) / len2
    t = np.clip(np.nan_to_num(t), 0., 1.)
    foot = a + t[..., None] * ab
    return np.linalg.norm(p - foot, axis=-1)


def edge_parameter(p, a, b):
    """Parameter of the orthogonal projection of `p` onto the line through
    `a` and `b` (0 at `a`, 1 at `b`)"""
    p, a, b = (np.asarray(x, dtype=float) for x in (p, a, b))
    ab = b - a
    return np.sum((p - a) * ab, axis=-1) / np.sum(ab * ab, axis=-1)
