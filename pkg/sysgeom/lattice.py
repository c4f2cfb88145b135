# encoding: utf-8
"""Planar lattices, shortest vectors under (possibly asymmetric) norms and
distances on flat tori

A flat torus is the plane modulo a :class:`Lattice`; with a constant norm
straight lines are geodesics, so its systole is the length of a shortest
nonzero lattice vector. Enumeration is certified: with
``r_max = max |x|`` over the unit ball, every vector `v` satisfies
``|v| <= r_max F(v)``, which bounds the coefficient box to scan.

"""

from __future__ import division, print_function

import itertools as it
import logging

import numpy as np

from .errors import UnsupportedBaseError
from .utils import cross2

__all__ = ['Lattice', 'lattice_systole', 'lattice_vectors',
           'flat_torus_distance', 'round_trip_distance', 'torus_lattice',
           'gauss_reduce']

logger = logging.getLogger(__name__)

TOL = 1e-9
# relative tolerance for ties between enumerated lengths
TIE = 1e-12


def gauss_reduce(b1, b2):
    """Lagrange-Gauss reduction: returns a basis of the same lattice with
    ``|b1| <= |b2|`` and ``|<b1, b2>| <= |b1|^2 / 2``"""
    b1 = np.asarray(b1, dtype=float)
    b2 = np.asarray(b2, dtype=float)
    if np.dot(b1, b1) > np.dot(b2, b2):
        b1, b2 = b2, b1
    while True:
        mu = np.round(np.dot(b1, b2) / np.dot(b1, b1))
        b2 = b2 - mu * b1
        if np.dot(b2, b2) >= np.dot(b1, b1):
            break
        b1, b2 = b2, b1
    if cross2(b1, b2) < 0:
        b2 = -b2
    return b1, b2


def _integer_basis(rows):
    """Two rows spanning the integer row lattice of an (m, 2) integer
    matrix (Hermite normal form)"""
    rows = [list(map(int, r)) for r in rows if any(r)]
    pivot = None
    rest = []
    for r in rows:
        if r[0] == 0:
            rest.append(r)
            continue
        if pivot is None:
            pivot = r
            continue
        # Euclid on the first column, keeping the remainder row
        while r[0] != 0:
            q = pivot[0] // r[0]
            pivot, r = r, [pivot[0] - q * r[0], pivot[1] - q * r[1]]
        rest.append(r)
    second = 0
    for r in rest:
        second = _gcd(second, r[1])
    if pivot is None or second == 0:
        raise ValueError('Generators do not span a lattice of rank two')
    return pivot, [0, second]


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


class Lattice(object):
    """Rank-two lattice in the plane, stored with a Gauss-reduced basis

    .. automethod:: __init__

    """

    def __init__(self, b1, b2):
        """
        :param b1, b2: Linearly independent basis vectors

        """
        if abs(cross2(b1, b2)) < TOL:
            raise ValueError('{!r} and {!r} are linearly dependent'
                             .format(list(b1), list(b2)))
        b1, b2 = gauss_reduce(b1, b2)
        self._basis = np.array([b1, b2])
        self._basis.setflags(write=False)

    @classmethod
    def from_generators(cls, vectors, area):
        """Lattice generated by `vectors` whose fundamental domain has the
        given Euclidean `area`

        :raises ValueError: if the generators are inconsistent with `area`

        """
        vectors = np.asarray(vectors, dtype=float)
        vectors = vectors[np.linalg.norm(vectors, axis=1) > TOL]
        dets = np.abs(cross2(vectors[:, None, :], vectors[None, :, :]))
        i, j = np.unravel_index(np.argmax(dets), dets.shape)
        pair = np.array([vectors[i], vectors[j]])
        index = int(round(dets[i, j] / area))
        if index < 1 or abs(index * area - dets[i, j]) > 1e-6 * dets[i, j]:
            raise ValueError('Generators span area {:.6g}, not a multiple of '
                             '{:.6g}'.format(dets[i, j], area))
        coeffs = np.linalg.solve(pair.T, vectors.T).T * index
        rounded = np.round(coeffs)
        if np.max(np.abs(coeffs - rounded)) > 1e-6:
            raise ValueError('Generators are not contained in a lattice of '
                             'area {:.6g}'.format(area))
        r1, r2 = _integer_basis(rounded.astype(int))
        b1 = np.dot(r1, pair) / index
        b2 = np.dot(r2, pair) / index
        lattice = cls(b1, b2)
        assert abs(lattice.area - area) < 1e-6 * area
        return lattice

    def __repr__(self):
        return 'Lattice({}, {})'.format(*self._basis.tolist())

    @property
    def basis(self):
        """Reduced basis as rows of a 2x2 array"""
        return self._basis

    @property
    def area(self):
        return float(abs(cross2(self._basis[0], self._basis[1])))

    def coefficients(self, v):
        """Real coefficients of `v` with respect to the reduced basis"""
        return np.linalg.solve(self._basis.T, np.asarray(v, dtype=float).T).T

    def contains(self, v, tol=1e-7):
        c = self.coefficients(v)
        return bool(np.all(np.abs(c - np.round(c)) < tol))

    def reduce(self, v):
        """Representative of `v` modulo the lattice in the fundamental
        parallelogram"""
        c = self.coefficients(v)
        return np.asarray(v) - np.floor(c).dot(self._basis)

    def scaled(self, factor):
        return type(self)(*(factor * self._basis))

    def box(self, radius):
        """Coefficient bounds `(R1, R2)` such that every lattice vector of
        Euclidean length at most `radius` has ``|c_i| <= R_i``"""
        b1, b2 = self._basis
        det = self.area
        return (int(np.ceil(radius * np.linalg.norm(b2) / det + TOL)),
                int(np.ceil(radius * np.linalg.norm(b1) / det + TOL)))

    def points(self, R1, R2):
        """Coefficients and vectors of all lattice points in the box"""
        coeffs = np.array(list(it.product(range(-R1, R1 + 1),
                                          range(-R2, R2 + 1))))
        return coeffs, coeffs.dot(self._basis)


def lattice_vectors(L, norm, bound):
    """All nonzero lattice vectors `v` with ``norm(v) <= bound``

    :returns: `(lengths, coefficients, vectors)` sorted by length, ties
        broken by the lexicographic order of the coefficients

    """
    coeffs, vectors = L.points(*L.box(norm.max_radius * bound))
    lengths = norm(vectors)
    keep = (lengths <= bound * (1 + TIE) + TIE) & np.any(coeffs != 0, axis=1)
    coeffs, vectors, lengths = coeffs[keep], vectors[keep], lengths[keep]
    order = np.lexsort((coeffs[:, 1], coeffs[:, 0], lengths))
    return lengths[order], coeffs[order], vectors[order]


def lattice_systole(L, norm):
    """Length of a shortest nonzero lattice vector and a minimiser

    The minimiser is the lexicographically smallest coefficient pair (in the
    reduced basis) among all shortest vectors.

    :param L: :class:`Lattice`
    :param norm: :class:`~sysgeom.geometry.Norm`
    :returns: `(length, vector)`

    """
    b1, b2 = L.basis
    candidates = np.array([b1, b2, b1 + b2, b1 - b2])
    candidates = np.concatenate([candidates, -candidates])
    bound = float(np.min(norm(candidates)))
    lengths, coeffs, vectors = lattice_vectors(L, norm, bound)
    logger.debug('Systole of %r: %d candidates below %.6g', L,
                 len(lengths), bound)
    tied = np.flatnonzero(lengths <= lengths[0] * (1 + TIE) + TIE)
    best = tied[np.lexsort((coeffs[tied, 1], coeffs[tied, 0]))[0]]
    return float(lengths[best]), vectors[best]


def _closest(L, func, w, radius_factor):
    """min over lattice vectors t of func(w + t), by certified enumeration"""
    w = L.reduce(w)
    corners = w - np.array([[0, 0], L.basis[0], L.basis[1],
                            L.basis[0] + L.basis[1]])
    bound = float(np.min(func(corners)))
    radius = radius_factor * bound + np.linalg.norm(w)
    _, vectors = L.points(*L.box(radius))
    return float(np.min(func(w + vectors)))


def flat_torus_distance(L, norm, p, q):
    """Directed distance from `p` to `q` on the flat torus plane / `L`:
    ``min_t F(q + t - p)``"""
    w = np.asarray(q, dtype=float) - np.asarray(p, dtype=float)
    return _closest(L, norm, w, norm.max_radius)


def round_trip_distance(L, norm, p, q):
    """Length of the shortest back-and-forth path between `p` and a
    translate of `q`: ``min_t F(v_t) + F(-v_t)`` with ``v_t = q + t - p``

    This is at least ``d(p, q) + d(q, p)``, with equality for reversible
    norms.

    """
    w = np.asarray(q, dtype=float) - np.asarray(p, dtype=float)
    return _closest(L, lambda v: norm(v) + norm(-v), w, norm.max_radius / 2)


def torus_lattice(S):
    """Period lattice of a flat torus glued from polygons

    Coordinates are those of the developing map of
    :meth:`~sysgeom.surface.ConeSurface.develop`.

    :raises UnsupportedBaseError: if `S` is not a flat torus

    """
    angles = [c.angle for c in S.cone_angles()]
    if S.euler_characteristic() != 0 or not S.is_orientable \
            or not np.allclose(angles, 2 * np.pi, atol=1e-9):
        raise UnsupportedBaseError('{!r} is not a flat torus'.format(S))
    _, holonomies = S.develop()
    translations = []
    for linear, shift in holonomies:
        if not np.allclose(linear, np.eye(2), atol=1e-9):
            raise UnsupportedBaseError('Holonomy of {!r} is not a translation'
                                       .format(S))
        translations.append(shift)
    return Lattice.from_generators(translations, S.euclidean_area)
