# encoding: utf-8
"""Systoles and marked homotopy systoles with certificates

Two independent methods compute the marked homotopy systole `sys_*` of a
flat sphere whose marked points are its cone points:

* ``cover_exact``: pull the metric back to the ramified torus cover, scan the
  period lattice in increasing norm length, realise each vector by a straight
  closed line avoiding the ramification points, project it and accept the
  first one whose free homotopy class is admissible.
* ``discretized``: shortest cycles in an epsilon-net of the cut-open sphere,
  organised by crossing words and straightened afterwards (see
  :mod:`sysgeom.discrete`).

Flat tori are handled exactly by lattice enumeration, with marked points
entering through round-trip distances.

"""

from __future__ import division, print_function

import collections
import logging

import numpy as np

from .covers import build_degree2_cover, build_degree3_cover
from .cuts import build_cut_system, crossing_letters, homotopy_word
from .errors import (ClassificationError, NonConvergenceError,
                     TransversalityError, UnsupportedBaseError)
from .geodesics import self_intersection_count
from .lattice import (lattice_systole, lattice_vectors, round_trip_distance,
                      torus_lattice)
from .paths import SurfaceLoop, same_point, trace_ray
from .utils import cross2, perp
from .words import is_admissible

__all__ = ['SystoleCertificate', 'marked_systole', 'classify_projection',
           'region_census', 'torus_systole', 'marked_torus_systole',
           'cover_exact_systole', 'straight_loop', 'METHODS',
           'FIGURE_EIGHT', 'SIMPLE_TWO_TWO']

logger = logging.getLogger(__name__)

COVER_EXACT = 'cover_exact'
DISCRETIZED = 'discretized'
BOTH = 'both'
METHODS = (COVER_EXACT, DISCRETIZED, BOTH)

FIGURE_EIGHT = 'figure_eight'
SIMPLE_TWO_TWO = 'simple_two_two'

AGREEMENT = 0.02
"""Relative tolerance between the cover and the discretised method"""

# position of the straight representative inside the widest free strip
STRIP_FRACTION = np.sqrt(2) - 1


class SystoleCertificate(object):
    """Length of a shortest admissible loop together with the evidence

    .. automethod:: __init__

    """

    def __init__(self, length, loop, method, word, metric_class,
                 classification=None, extra=None):
        """
        :param length: Systole value
        :param loop: Realising :class:`~sysgeom.paths.SurfaceLoop` or None
            for degenerate loops around two marked points of a torus
        :param method: ``'cover_exact'`` or ``'discretized'``
        :param word: Admissibility witness
            (:class:`~sysgeom.words.HomotopyWord`), None on tori
        :param metric_class: Metric class of the surface
        :param classification: Shape of the loop (see
            :func:`classify_projection`)
        :param extra: Dict of further JSON-serialisable data

        """
        self.length = float(length)
        self.loop = loop
        self.method = method
        self.word = word
        self.metric_class = metric_class
        self.classification = classification
        self.extra = dict(extra or {})

    def __repr__(self):
        return '<SystoleCertificate {} {:.12g} ({})>'.format(
            self.method, self.length, self.classification or 'unclassified')

    def check(self, S, tol=1e-9):
        """Verify that the loop closes up and realises the length

        :raises ValueError: if not

        """
        if self.word is not None and not is_admissible(self.word):
            raise ValueError('{} is not admissible'.format(self.word))
        if self.loop is None:
            return True
        self.loop.check(S)
        length = self.loop.length(S.norm)
        if abs(length - self.length) > tol * max(1., self.length):
            raise ValueError('Loop has length {:.12g}, certificate claims '
                             '{:.12g}'.format(length, self.length))
        return True

    def to_dict(self):
        out = {'length': self.length,
               'method': self.method,
               'metric_class': self.metric_class,
               'word': None if self.word is None else self.word.to_list(),
               'word_str': None if self.word is None else str(self.word),
               'classification': self.classification,
               'loop': None if self.loop is None else self.loop.to_dict()}
        out.update(self.extra)
        return out


###############################################################################
#                               Straight loops                                #
###############################################################################
def _obstacles(S, placements):
    """Developed positions of all corners and marked points"""
    points = [L.dot(poly.vertices.T).T + c
              for poly, (L, c) in zip(S.polygons, placements)]
    for p, xy in S.marked_points:
        L, c = placements[p]
        points.append([L.dot(xy) + c])
    return np.concatenate(points)


def straight_loop(S, vector, placements=None, avoid=None):
    """Closed straight loop on a flat torus along a lattice vector

    The line is placed in the widest strip free of vertices and marked
    points, so that it avoids them.

    :param S: Flat torus (:class:`~sysgeom.surface.ConeSurface`)
    :param vector: Period vector in developed coordinates
    :param placements: Placements from :meth:`ConeSurface.develop`
    :param avoid: Extra developed points to avoid
    :returns: :class:`~sysgeom.paths.SurfaceLoop`

    """
    if placements is None:
        placements, _ = S.develop()
    v = np.asarray(vector, dtype=float)
    length = np.linalg.norm(v)
    unit = v / length
    width = S.euclidean_area / length
    obstacles = _obstacles(S, placements)
    if avoid is not None:
        obstacles = np.concatenate([obstacles, np.atleast_2d(avoid)])
    levels = np.round(np.mod(cross2(unit, obstacles), width), 12)
    levels = np.unique(np.mod(levels, width))
    if len(levels) == 0:
        low, gap = 0., width
    else:
        gaps = np.diff(np.concatenate([levels, [levels[0] + width]]))
        i = int(np.argmax(gaps))
        low, gap = levels[i], gaps[i]
    target = low + STRIP_FRACTION * gap

    centre = S.polygons[0].centroid
    shift = np.mod(target - cross2(unit, centre), width)
    if shift > width / 2:
        shift -= width
    normal = perp(unit)
    start = (0, centre)
    if abs(shift) > 1e-15:
        _, start, _ = trace_ray(S, start, np.sign(shift) * normal, abs(shift))
    p, xy = start
    L, _ = placements[p]
    direction = np.linalg.solve(L, v)
    legs, end, _ = trace_ray(S, (p, xy), direction, length)
    if not same_point(S, end[0], end[1], p, xy, tol=1e-7):
        raise NonConvergenceError('Straight line along {} does not close'
                                  .format(v.tolist()))
    return SurfaceLoop(legs)


###############################################################################
#                                    Tori                                     #
###############################################################################
def torus_systole(S):
    """Systole of a flat torus by lattice enumeration

    :returns: :class:`SystoleCertificate`

    """
    L = torus_lattice(S)
    length, vector = lattice_systole(L, S.norm)
    loop = straight_loop(S, vector)
    logger.info('Torus systole %.12g along %s', length, vector.tolist())
    return SystoleCertificate(length, loop, COVER_EXACT, None, S.metric_class,
                              extra={'vector': vector.tolist(),
                                     'lattice': L.basis.tolist()})


def marked_torus_systole(S):
    """Marked homotopy systole of a flat torus with marked points

    The shortest admissible loops are either closed straight lines or thin
    loops around a segment between two marked points; the value is
    ``min(sys, min_{i != j} min_t F(v) + F(-v))`` over segments
    ``v = x_j + t - x_i``.

    """
    cert = torus_systole(S)
    if len(S.marked_points) < 2:
        return cert
    L = torus_lattice(S)
    placements, _ = S.develop()
    points = [placements[p][0].dot(xy) + placements[p][1]
              for p, xy in S.marked_points]
    best, pair = np.inf, None
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d = round_trip_distance(L, S.norm, points[i], points[j])
            if d < best - 1e-12:
                best, pair = d, (i, j)
    if best < cert.length - 1e-12:
        logger.info('Marked torus systole %.12g around points %s', best, pair)
        return SystoleCertificate(best, None, COVER_EXACT, None,
                                  S.metric_class,
                                  extra={'pair': list(pair),
                                         'systole': cert.length})
    cert.extra['closest_pair'] = None if pair is None else list(pair)
    cert.extra['round_trip'] = float(best)
    return cert


###############################################################################
#                                Cover method                                 #
###############################################################################
def _cover_for(S):
    k = len(S.marked_points)
    if k == 3:
        return build_degree3_cover(S)
    if k == 4:
        return build_degree2_cover(S)
    raise UnsupportedBaseError('No ramified torus cover for {} marked points'
                               .format(k))


def _primitive(coeffs):
    return np.gcd.reduce(np.abs(coeffs).astype(int)) == 1


def cover_exact_systole(S, cuts=None, rounds=4):
    """Marked homotopy systole through the ramified torus cover

    :param S: Sphere with three or four marked cone points which are all of
        its vertices
    :param cuts: :class:`~sysgeom.cuts.CutSystem` for the admissibility
        witness (default: built from `S`)
    :param rounds: How often the enumeration bound is doubled
    :raises UnsupportedBaseError: if `S` has no supported cover

    """
    cover = _cover_for(S)
    cuts = build_cut_system(S) if cuts is None else cuts
    total = cover.total
    placements = cover._placements
    bound, _ = lattice_systole(cover.lattice, S.norm)
    done = 0.
    for _ in range(rounds):
        lengths, coeffs, vectors = lattice_vectors(cover.lattice, S.norm,
                                                   2 * bound)
        for length, c, v in zip(lengths, coeffs, vectors):
            if length <= done or not _primitive(c):
                continue
            try:
                loop = straight_loop(total, v, placements)
                projected = cover.project_loop(loop)
                word = homotopy_word(S, projected, cuts)
            except TransversalityError as err:
                logger.debug('Skipping %s: %s', v.tolist(), err)
                continue
            logger.debug('Vector %s of length %.12g reads %s', v.tolist(),
                         length, word)
            if not is_admissible(word):
                continue
            cert = SystoleCertificate(
                projected.length(S.norm), projected, COVER_EXACT, word,
                S.metric_class,
                extra={'vector': v.tolist(), 'coefficients': c.tolist(),
                       'degree': cover.degree,
                       'lattice': cover.lattice.basis.tolist()})
            cert.classification = classify_projection(cert, S, cuts)
            logger.info('Cover systole %.12g (%s)', cert.length,
                        cert.classification)
            return cert
        done, bound = 2 * bound, 2 * bound
    raise NonConvergenceError('No admissible lattice vector below {:.6g}'
                              .format(done))


###############################################################################
#                               Classification                                #
###############################################################################
def region_census(S, loop, cuts=None):
    """Group the marked points by the signed number of times the loop crosses
    their cut arc

    For a loop in general position the count equals the difference of the
    winding numbers around the marked point and around the base point, so
    points in a common complementary region share a group.

    :returns: List of sorted lists of marked point indices

    """
    cuts = build_cut_system(S) if cuts is None else cuts
    sums = collections.Counter()
    for letter in crossing_letters(S, loop, cuts):
        sums[abs(letter) - 1] += 1 if letter > 0 else -1
    groups = collections.defaultdict(list)
    for i, mark in enumerate(cuts.marks):
        groups[sums[i]].append(mark)
    return sorted(sorted(g) for g in groups.values())


def classify_projection(cert, S, cuts=None):
    """Shape of the projected systolic loop

    :returns: :data:`SIMPLE_TWO_TWO` (no self-intersection, marked points
        split into two groups) or :data:`FIGURE_EIGHT` (one
        self-intersection, two or three groups), each group holding one or
        two marked points
    :raises ClassificationError: for any other configuration

    """
    if cert.loop is None:
        raise ClassificationError('Certificate carries no loop')
    count = self_intersection_count(cert.loop)
    census = region_census(S, cert.loop, cuts)
    sizes = [len(g) for g in census]
    cert.extra['census'] = census
    cert.extra['self_intersections'] = count
    if any(s not in (1, 2) for s in sizes):
        raise ClassificationError('Regions hold {} marked points'
                                  .format(sizes))
    if count == 0 and len(census) == 2:
        return SIMPLE_TWO_TWO
    if count == 1 and len(census) in (2, 3):
        return FIGURE_EIGHT
    raise ClassificationError('{} self-intersections with census {}'
                              .format(count, census))


###############################################################################
#                                 Entry point                                 #
###############################################################################
def marked_systole(S, method=COVER_EXACT, tolerance=AGREEMENT, **kwargs):
    """Marked homotopy systole of `S` with a certificate

    :param S: Marked sphere or flat torus
    :param method: One of :data:`METHODS`; flat tori are always computed
        exactly
    :param tolerance: Relative agreement required for ``method='both'``
    :param kwargs: Passed to :func:`~sysgeom.discrete.discretized_systole`
        (`eps`, `words`, `budget`)
    :returns: :class:`SystoleCertificate`; for ``'both'`` the cover
        certificate with the discretised length and the relative gap in
        `extra`
    :raises NonConvergenceError: if both methods disagree

    """
    if method not in METHODS:
        raise ValueError('{!r} is not a valid method'.format(method))
    if S.euler_characteristic() == 0:
        if method == DISCRETIZED:
            raise UnsupportedBaseError('Tori are computed exactly; use '
                                       'method {!r}'.format(COVER_EXACT))
        return marked_torus_systole(S)
    if method == COVER_EXACT:
        return cover_exact_systole(S)

    from .discrete import discretized_systole
    if method == DISCRETIZED:
        return discretized_systole(S, **kwargs)
    exact = cover_exact_systole(S)
    approx = discretized_systole(S, **kwargs)
    gap = abs(approx.length - exact.length) / exact.length
    exact.extra['discretized'] = approx.to_dict()
    exact.extra['gap'] = gap
    if gap > tolerance:
        raise NonConvergenceError('Methods disagree: {:.9g} (cover) versus '
                                  '{:.9g} (discretized)'
                                  .format(exact.length, approx.length))
    logger.info('Methods agree within %.3g', gap)
    return exact
