# encoding: utf-8
"""Module to create the canonical flat surfaces and random test instances"""

from __future__ import division, print_function

import itertools as it

import numpy as np
from scipy.spatial import ConvexHull, Delaunay, QhullError

from .errors import DegeneratePolygonError
from .geometry import Norm
from .lattice import Lattice
from .surface import NONREVERSIBLE, REVERSIBLE, RIEMANNIAN, ConeSurface
from .utils import cross2

__all__ = ['named_norm', 'doubled_polygon', 'calabi_croke', 'tetrahedral',
           'pillowcase', 'pillowcase_l1', 'parallelogram_torus',
           'torus_equilateral', 'torus_linf', 'torus_l1',
           'torus_triangle_norm', 'grid_pillowcase', 'random_norm',
           'random_lattice', 'random_torus', 'CANONICAL', 'NORMS']

NORMS = {
    'l1': [(1, 0), (0, 1), (-1, 0), (0, -1)],
    'linf': [(1, -1), (1, 1), (-1, 1), (-1, -1)],
    'triangle': [(1, 0), (0, 1), (-1, -1)],
    'polar_triangle': [(1, -2), (1, 1), (-2, 1)],
}
"""Unit balls of the named polygonal norms"""

DIAMOND = [(0, 0), (.5, -.5), (1, 0), (.5, .5)]
"""Square of unit l1 side length with sides along (1, +-1)"""

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def named_norm(name):
    """Norm by name: ``'euclidean'`` or a key of :data:`NORMS`"""
    if name == 'euclidean':
        return Norm.euclidean()
    try:
        return Norm.polygon(NORMS[name])
    except KeyError:
        raise ValueError('{!r} is not a valid norm name'.format(name))


def _equilateral(side=1.):
    return side * np.array([[0, 0], [1, 0], [.5, np.sqrt(3) / 2]])


###############################################################################
#                                   Spheres                                   #
###############################################################################
def doubled_polygon(vertices, norm=None, metric_class=RIEMANNIAN,
                    marked=True, label=''):
    """Sphere glued from a convex polygon and its mirror image along
    corresponding edges

    Face 1 is the reflection of face 0 in the x-axis; every point of an edge
    is identified with its mirror image.

    :param vertices: Counterclockwise vertices of face 0
    :param norm: :class:`~sysgeom.geometry.Norm` (default Euclidean)
    :param marked: Mark every vertex class (default True)
    :raises NormCompatibilityError: if the gluings do not preserve `norm`

    """
    Q = np.asarray(vertices, dtype=float)
    n = len(Q)
    mirror = (Q * [1, -1])[::-1]
    gluings = [((0, i), (1, (n - 2 - i) % n)) for i in range(n)]
    marks = [(0, xy) for xy in Q] if marked else []
    return ConeSurface([Q, mirror], gluings,
                       Norm.euclidean() if norm is None else norm,
                       metric_class, marks, label=label)


def calabi_croke(side=1.):
    """Doubled equilateral triangle, marked at its three cone points

    >>> S = calabi_croke()
    >>> print(S.euler_characteristic(), len(S.marked_points))
    2 3
    """
    return doubled_polygon(_equilateral(side), label='calabi_croke')


def tetrahedral(side=1.):
    """Surface of the regular tetrahedron, marked at its four vertices"""
    T = _equilateral(side)
    # faces ABC, ACD, ADB, BDC
    gluings = [((0, 0), (2, 2)), ((0, 1), (3, 2)), ((0, 2), (1, 0)),
               ((1, 1), (3, 1)), ((1, 2), (2, 0)), ((2, 1), (3, 0))]
    marks = [(0, T[0]), (0, T[1]), (0, T[2]), (1, T[2])]
    return ConeSurface([T] * 4, gluings, Norm.euclidean(), RIEMANNIAN, marks,
                       label='tetrahedral')


def pillowcase(norm, metric_class=REVERSIBLE, aligned=False, label=''):
    """Doubled square with four cone points of angle pi, all marked

    :param norm: Norm of both faces
    :param aligned: Use the axis-parallel unit square instead of the square
        with sides along `(1, +-1)`

    """
    square = SQUARE if aligned else DIAMOND
    return doubled_polygon(square, norm, metric_class, label=label)


def pillowcase_l1():
    """l1 pillowcase: scg 2 and Holmes-Thompson area 4 / pi"""
    return pillowcase(named_norm('l1'), label='pillowcase_l1')


def grid_pillowcase(k, norm=None, metric_class=RIEMANNIAN):
    """Doubled unit square with `k / 2` marked points per face

    The marks sit at the cell centres of an `r x c` grid, `r` the largest
    divisor of `k / 2` not exceeding its square root. Each face is
    triangulated on its corners and marks, so every mark is a vertex; the
    four corners remain unmarked cone points of angle pi.

    :param k: Even number of marked points, at least 4

    """
    if k < 4 or k % 2:
        raise ValueError('{!r} is not a valid number of grid marks'.format(k))
    m = k // 2
    rows = max(r for r in range(1, int(np.sqrt(m)) + 1) if m % r == 0)
    cols = m // rows
    marks = np.array([((j + .5) / cols, (i + .5) / rows)
                      for i in range(rows) for j in range(cols)])
    points = np.concatenate([np.array(SQUARE, dtype=float), marks])
    simplices = []
    for tri in Delaunay(points).simplices:
        a, b, c = points[tri]
        if cross2(b - a, c - a) < 0:
            tri = tri[::-1]
        simplices.append([int(v) for v in tri])

    T = len(simplices)
    front = [points[tri] for tri in simplices]
    back = [(F * [1, -1])[::-1] for F in front]

    def mirrored(e):
        return (1 - e) % 3

    owner = {}
    for t, tri in enumerate(simplices):
        for e in range(3):
            owner[(tri[e], tri[(e + 1) % 3])] = (t, e)
    gluings = []
    for (u, v), (t, e) in sorted(owner.items()):
        if (v, u) in owner:
            if u < v:
                s, f = owner[(v, u)]
                gluings.append(((t, e), (s, f)))
                gluings.append(((T + t, mirrored(e)), (T + s, mirrored(f))))
        else:
            gluings.append(((t, e), (T + t, mirrored(e))))

    marked = []
    for j in range(4, len(points)):
        t = next(t for t, tri in enumerate(simplices) if j in tri)
        marked.append((t, points[j]))
    return ConeSurface(front + back, gluings,
                       Norm.euclidean() if norm is None else norm,
                       metric_class, marked,
                       label='grid_pillowcase_k{}'.format(k))


###############################################################################
#                                    Tori                                     #
###############################################################################
def parallelogram_torus(b1, b2, norm=None, metric_class=RIEMANNIAN,
                        marked_points=(), label=''):
    """Flat torus glued from the parallelogram spanned by `b1` and `b2`

    :param marked_points: Points in the plane, reduced modulo the lattice
        into the parallelogram

    """
    b1, b2 = np.asarray(b1, dtype=float), np.asarray(b2, dtype=float)
    if cross2(b1, b2) < 0:
        b1, b2 = b2, b1
    polygon = [np.zeros(2), b1, b1 + b2, b2]
    basis = np.array([b1, b2])
    marks = []
    for x in marked_points:
        c = np.linalg.solve(basis.T, np.asarray(x, dtype=float))
        c = np.mod(np.round(c, 12), 1.)
        marks.append((0, c.dot(basis)))
    return ConeSurface([polygon], [((0, 0), (0, 2)), ((0, 1), (0, 3))],
                       Norm.euclidean() if norm is None else norm,
                       metric_class, marks, label=label)


def torus_equilateral(side=1., marked_points=()):
    """Equilateral (hexagonal) flat torus

    >>> print(round(torus_equilateral().surface_area(), 12))
    0.866025403784
    """
    return parallelogram_torus((side, 0), (side / 2, side * np.sqrt(3) / 2),
                               marked_points=marked_points,
                               label='torus_equilateral')


def torus_linf(marked_points=()):
    """Square torus Z^2 with the l-infinity norm"""
    return parallelogram_torus((1, 0), (0, 1), named_norm('linf'),
                               REVERSIBLE, marked_points, label='torus_linf')


def torus_l1(rotated=False, scale=1., marked_points=()):
    """l1 torus on `scale * Z^2` or on the lattice generated by `(1, 1)` and
    `(1, -1)`"""
    if rotated:
        b1, b2 = (scale, -scale), (scale, scale)
    else:
        b1, b2 = (scale, 0), (0, scale)
    return parallelogram_torus(b1, b2, named_norm('l1'), REVERSIBLE,
                               marked_points, label='torus_l1')


def torus_triangle_norm(polar=False, scale=1., marked_points=()):
    """Square torus `scale * Z^2` with the triangle ball (or its polar)"""
    name = 'polar_triangle' if polar else 'triangle'
    return parallelogram_torus((scale, 0), (0, scale), named_norm(name),
                               NONREVERSIBLE, marked_points,
                               label='torus_' + name)


CANONICAL = {
    'calabi_croke': calabi_croke,
    'tetrahedral': tetrahedral,
    'pillowcase_l1': pillowcase_l1,
    'torus_equilateral': torus_equilateral,
    'torus_linf': torus_linf,
    'torus_triangle_norm': torus_triangle_norm,
}
"""Constructors of the surfaces shipped as `.surf` files"""


###############################################################################
#                              Random instances                               #
###############################################################################
def random_norm(symmetric=True, vertices=6, randstate=None):
    """Random polygonal norm

    The ball is the convex hull of points at random angles and radii in
    `[1/2, 3/2]`, symmetrised for reversible norms and resampled until the
    origin lies well inside.

    :param symmetric: Return a reversible norm (default True)
    :param vertices: Number of sampled points (doubled if `symmetric`)
    :param randstate: numpy.random.RandomState instance or None

    """
    randstate = randstate if randstate is not None else np.random
    for _ in it.count():
        angles = randstate.uniform(0, 2 * np.pi, size=vertices)
        radii = randstate.uniform(.5, 1.5, size=vertices)
        points = radii[:, None] * np.stack([np.cos(angles), np.sin(angles)],
                                           axis=1)
        if symmetric:
            points = np.concatenate([points, -points])
        try:
            hull = ConvexHull(points)
        except QhullError:
            continue
        if np.max(hull.equations[:, -1]) > -.05:
            continue
        try:
            return Norm.polygon(points[hull.vertices])
        except DegeneratePolygonError:
            continue


def random_lattice(randstate=None, min_det=.1):
    """Random Gauss-reduced lattice with determinant at least `min_det`"""
    randstate = randstate if randstate is not None else np.random
    while True:
        b1, b2 = randstate.randn(2, 2)
        if abs(cross2(b1, b2)) >= min_det:
            return Lattice(b1, b2)


def random_torus(metric_class, randstate=None):
    """Random flat torus of the given metric class

    :returns: `(lattice, norm)` pair

    """
    if metric_class == RIEMANNIAN:
        norm = Norm.euclidean()
    elif metric_class == REVERSIBLE:
        norm = random_norm(True, randstate=randstate)
    elif metric_class == NONREVERSIBLE:
        norm = random_norm(False, randstate=randstate)
    else:
        raise ValueError('{!r} is not a valid metric class'
                         .format(metric_class))
    return random_lattice(randstate), norm
