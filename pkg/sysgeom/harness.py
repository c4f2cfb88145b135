# encoding: utf-8
"""Verification harness for the optimal systolic constants

Every check returns a :class:`VerificationReport` made of :class:`CheckResult`
rows; :func:`run_suite` bundles the checks into named suites. Checks run
sequentially in a fixed order, so reports are deterministic for a given seed.

"""

from __future__ import division, print_function

import collections
import csv
import io
import json
import logging
import os
import timeit

import numpy as np

from .covers import build_degree2_cover
from .errors import ConfigError
from .factory import (calabi_croke, grid_pillowcase, named_norm,
                      parallelogram_torus, pillowcase, pillowcase_l1,
                      random_torus, tetrahedral, torus_equilateral, torus_l1,
                      torus_linf, torus_triangle_norm)
from .geometry import ht_area_factor
from .lattice import (Lattice, flat_torus_distance, lattice_systole,
                      round_trip_distance)
from .surface import NONREVERSIBLE, REVERSIBLE, RIEMANNIAN
from .systole import (cover_exact_systole, marked_systole,
                      marked_torus_systole, torus_systole)

__all__ = ['ConstantEntry', 'registry', 'constant', 'CheckResult',
           'VerificationReport', 'check_equality_case',
           'check_random_inequalities', 'check_separated_points',
           'check_packing_bound', 'check_packing', 'check_svp_oracle',
           'check_asymptotic',
           'check_punctured_from_closed', 'check_pillowcase_separation',
           'check_conventions', 'check_crosscheck', 'load_points',
           'run_suite', 'SUITES', 'EQUALITY_CASES', 'POINT_CONFIGS']

logger = logging.getLogger(__name__)

EXACT = 1e-9
DISCRETIZED = 0.02
ASYMPTOTIC_K = (4, 8, 16, 32, 64)
DATA_DIR = os.path.join(os.path.dirname(__file__), 'data', 'points')


###############################################################################
#                                  Registry                                   #
###############################################################################
ConstantEntry = collections.namedtuple(
    'ConstantEntry', ['expression', 'value', 'k_max', 'computable', 'note'])
"""Optimal constant `sys / sqrt(area)` (or its analogue) with metadata"""


def registry():
    """Optimal systolic constants keyed by `(surface, k, metric_class)`

    `k` is None for closed surfaces; their `k_max` is the largest number of
    punctures for which the collapse construction stays near-extremal.

    >>> entry = registry()['sphere', 3, 'riemannian']
    >>> print('{:.3f}'.format(entry.value))
    1.861
    """
    s2, s3, sp = np.sqrt(2), np.sqrt(3), np.sqrt(np.pi)
    E = ConstantEntry
    return collections.OrderedDict([
        (('sphere', 3, RIEMANNIAN), E('2^(1/2) 3^(1/4)', s2 * 3 ** .25,
                                      None, True, '')),
        (('sphere', 4, RIEMANNIAN), E('2 3^(-1/4)', 2 * 3 ** -.25,
                                      None, True, '')),
        (('sphere', 3, REVERSIBLE), E('2^(-1/2) 3^(1/2) pi^(1/2)',
                                      s3 * sp / s2, None, True, '')),
        (('sphere', 4, REVERSIBLE), E('pi^(1/2)', sp, None, True, '')),
        (('sphere', 3, NONREVERSIBLE), E('2^(1/2) pi^(1/2)', s2 * sp,
                                         None, True, '')),
        (('sphere', 4, NONREVERSIBLE), E('2 3^(-1/2) pi^(1/2)',
                                         2 * sp / s3, None, True, '')),
        (('torus', None, RIEMANNIAN), E('2^(1/2) 3^(-1/4)', s2 * 3 ** -.25,
                                        4, True, 'equilateral torus')),
        (('torus', None, REVERSIBLE), E('2^(-1/2) pi^(1/2)', sp / s2,
                                        8, True, 'l-infinity on Z^2')),
        (('torus', None, NONREVERSIBLE), E('2^(1/2) 3^(-1/2) pi^(1/2)',
                                           s2 * sp / s3, 9, True,
                                           'polar triangle ball on Z^2')),
        (('projective_plane', None, RIEMANNIAN),
         E('2^(-1/2) pi^(1/2)', sp / s2, 3, False, 'round metric')),
        (('projective_plane', None, REVERSIBLE),
         E('2^(-1/2) pi^(1/2)', sp / s2, 3, False, 'round metric')),
        (('klein_bottle', None, RIEMANNIAN),
         E('pi^(1/2) 2^(-3/4)', sp * 2 ** -.75, 4, False,
           'two round Moebius bands')),
        (('klein_bottle', None, REVERSIBLE),
         E('square flat l1 Klein bottle', None, 8, False, '')),
        (('sphere', 'asymptotic', None),
         E('4 2^(1/2) (area / k)^(1/2)', 4 * s2, None, True,
           'upper bound for every k')),
        (('surface', 'genus', None),
         E('C log(g) (area / k)^(1/2)', None, None, False,
           'universal constant C unspecified')),
    ])


def constant(surface, k, metric_class):
    """Value of a registry entry

    :raises KeyError: for unknown keys

    """
    return registry()[surface, k, metric_class].value


###############################################################################
#                                   Reports                                   #
###############################################################################
KINDS = ('equality', 'inequality', 'lower_bound', 'rejection')


class CheckResult(object):
    """One row of a verification report

    .. automethod:: __init__

    """

    def __init__(self, id, kind, computed, expected, tolerance, inputs=None,
                 note='', details=None, runtime=None):
        """
        :param id: Dotted check identifier
        :param kind: One of ``'equality'``, ``'inequality'`` (computed is
            bounded by expected), ``'lower_bound'`` (computed is at least
            expected) and ``'rejection'`` (the check must detect a violation
            of the lower bound)
        :param computed: Computed value
        :param expected: Expected value or bound
        :param tolerance: Absolute tolerance
        :param inputs: Dict describing the instance
        :param note: Free text, e.g. ``'equality-discrepancy'``
        :param details: JSON-serialisable evidence (certificates)
        :param runtime: Seconds, or None

        """
        if kind not in KINDS:
            raise ValueError('{!r} is not a valid check kind'.format(kind))
        self.id = id
        self.kind = kind
        self.computed = float(computed)
        self.expected = float(expected)
        self.tolerance = float(tolerance)
        self.inputs = dict(inputs or {})
        self.note = note
        self.details = details
        self.runtime = runtime

    def __repr__(self):
        return '<CheckResult {} {}>'.format(self.id, self.verdict)

    @property
    def passed(self):
        c, e, t = self.computed, self.expected, self.tolerance
        if self.kind == 'equality':
            return abs(c - e) <= t
        if self.kind == 'inequality':
            return c <= e + t
        if self.kind == 'lower_bound':
            return c >= e - t
        return c < e - t

    @property
    def verdict(self):
        return 'pass' if self.passed else 'fail'

    def to_dict(self, timings=False):
        out = {'id': self.id, 'kind': self.kind, 'computed': self.computed,
               'expected': self.expected, 'tolerance': self.tolerance,
               'verdict': self.verdict, 'inputs': self.inputs,
               'note': self.note, 'details': self.details}
        if timings:
            out['ms'] = None if self.runtime is None else 1e3 * self.runtime
        return out

    @classmethod
    def from_dict(cls, data):
        runtime = data.get('ms')
        return cls(data['id'], data['kind'], data['computed'],
                   data['expected'], data['tolerance'], data.get('inputs'),
                   data.get('note', ''), data.get('details'),
                   None if runtime is None else runtime / 1e3)


def _jsonable(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError('{!r} is not JSON serializable'.format(obj))


class VerificationReport(object):
    """Ordered collection of :class:`CheckResult` rows"""

    COLUMNS = ['id', 'kind', 'computed', 'expected', 'tolerance', 'verdict',
               'note']

    def __init__(self, rows=()):
        self.rows = list(rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __repr__(self):
        return '<VerificationReport {} rows, {} failed>'.format(
            len(self.rows), len(self.failures))

    def add(self, row):
        self.rows.append(row)
        return row

    def extend(self, other):
        self.rows.extend(other)
        return self

    @property
    def failures(self):
        return [row for row in self.rows if not row.passed]

    @property
    def passed(self):
        return not self.failures

    def to_csv(self, timings=False):
        """One line per check; the `ms` column only with `timings`"""
        columns = self.COLUMNS + (['ms'] if timings else [])
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(columns)
        for row in self.rows:
            data = row.to_dict(timings)
            writer.writerow([repr(data[c]) if isinstance(data[c], float)
                             else data[c] for c in columns])
        return buf.getvalue()

    def to_json(self, timings=False):
        data = {'passed': self.passed,
                'checks': [row.to_dict(timings) for row in self.rows]}
        return json.dumps(data, indent=1, sort_keys=True,
                          default=_jsonable) + '\n'

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(CheckResult.from_dict(row) for row in data['checks'])

    def to_table(self):
        """Plain-text table for terminals"""
        lines = ['{:<44} {:<11} {:>18} {:>18} {:>9} {}'.format(
            'id', 'kind', 'computed', 'expected', 'tolerance', 'verdict')]
        for row in self.rows:
            lines.append('{:<44} {:<11} {:>18.12g} {:>18.12g} {:>9.2g} {}'
                         .format(row.id, row.kind, row.computed, row.expected,
                                 row.tolerance, row.verdict))
        return '\n'.join(lines) + '\n'


def _timed(func, *args, **kwargs):
    start = timeit.default_timer()
    report = func(*args, **kwargs)
    elapsed = timeit.default_timer() - start
    for row in report:
        if row.runtime is None:
            row.runtime = elapsed / len(report)
    return report


###############################################################################
#                               Equality cases                                #
###############################################################################
def _ratio(length, S):
    return length / np.sqrt(S.surface_area())


def _sphere_case(S, key):
    cert = marked_systole(S, 'cover_exact')
    return cert, registry()[key].value, cert.classification


def _torus_case(S, key):
    cert = torus_systole(S)
    return cert, registry()[key].value, None


EQUALITY_CASES = collections.OrderedDict([
    ('calabi_croke', (calabi_croke, _sphere_case, ('sphere', 3, RIEMANNIAN))),
    ('tetrahedral', (tetrahedral, _sphere_case, ('sphere', 4, RIEMANNIAN))),
    ('pillowcase_l1', (pillowcase_l1, _sphere_case,
                       ('sphere', 4, REVERSIBLE))),
    ('torus_equilateral', (torus_equilateral, _torus_case,
                           ('torus', None, RIEMANNIAN))),
    ('torus_linf', (torus_linf, _torus_case, ('torus', None, REVERSIBLE))),
    ('torus_triangle', (torus_triangle_norm, _torus_case,
                        ('torus', None, NONREVERSIBLE))),
])
"""Extremal families: constructor, systole routine, registry key"""


def check_equality_case(name, tol=EXACT):
    """Compare the systolic ratio of an extremal family with its constant

    The triangle-ball torus stays strictly below its constant under the
    Holmes-Thompson convention; its row is an inequality flagged
    ``equality-discrepancy``.

    :param name: Key of :data:`EQUALITY_CASES`

    """
    try:
        build, compute, key = EQUALITY_CASES[name]
    except KeyError:
        raise ValueError('{!r} is not a valid equality case'.format(name))
    S = build()
    cert, expected, shape = compute(S, key)
    ratio = _ratio(cert.length, S)
    inputs = {'surface': name, 'constant': list(key),
              'area': S.surface_area(), 'length': cert.length}
    note = '' if shape is None else shape
    kind = 'equality'
    if name == 'torus_triangle':
        kind = 'inequality'
        note = 'equality-discrepancy: slack {:.6g}'.format(expected - ratio)
    logger.info('Equality case %s: ratio %.12g, constant %.12g', name, ratio,
                expected)
    return VerificationReport([CheckResult(
        'equality.' + name, kind, ratio, expected, tol, inputs, note,
        cert.to_dict())])


###############################################################################
#                              Random instances                               #
###############################################################################
def _brute_systole(L, norm, radius=40):
    c = np.arange(-radius, radius + 1)
    coeffs = np.stack(np.meshgrid(c, c), axis=-1).reshape((-1, 2))
    coeffs = coeffs[np.any(coeffs != 0, axis=1)]
    return float(np.min(norm(coeffs.dot(L.basis))))


def check_random_inequalities(metric_class, count=1000, seed=0, tol=EXACT):
    """Systolic ratios of random flat tori stay below the optimal constant

    :returns: Report with one row; violating instances are serialised in
        its details

    """
    expected = constant('torus', None, metric_class)
    randstate = np.random.RandomState(seed)
    worst, violations = 0., []
    for n in range(count):
        L, norm = random_torus(metric_class, randstate)
        length, _ = lattice_systole(L, norm)
        ratio = length / np.sqrt(L.area * ht_area_factor(norm))
        worst = max(worst, ratio)
        if ratio > expected + tol:
            violations.append({'instance': n, 'ratio': ratio,
                               'lattice': L.basis.tolist(),
                               'norm': norm.to_dict()})
    logger.info('%d random %s tori, largest ratio %.9g', count, metric_class,
                worst)
    return VerificationReport([CheckResult(
        'random.' + metric_class, 'inequality', worst, expected, tol,
        {'metric_class': metric_class, 'count': count, 'seed': seed},
        '{} violations'.format(len(violations)),
        {'violations': violations})])


def check_svp_oracle(count=50, seed=0):
    """Certified lattice systole against an exhaustive coefficient scan"""
    randstate = np.random.RandomState(seed)
    classes = (RIEMANNIAN, REVERSIBLE, NONREVERSIBLE)
    worst = 0.
    for n in range(count):
        metric_class = classes[n % len(classes)]
        L, norm = random_torus(metric_class, randstate)
        length, _ = lattice_systole(L, norm)
        worst = max(worst, abs(length - _brute_systole(L, norm)))
    return VerificationReport([CheckResult(
        'random.svp_oracle', 'equality', worst, 0., EXACT,
        {'count': count, 'seed': seed,
         'classes': list(classes[:count])}, 'largest deviation')])


###############################################################################
#                         Separated points and packing                        #
###############################################################################
POINT_CONFIGS = ('riem4', 'rev8', 'nonrev9')


def load_points(name):
    """Stored separated-point configuration

    :returns: Dict with keys `lattice`, `norm`, `metric_class`, `points`,
        `criterion`
    :raises ConfigError: if the configuration file does not exist

    """
    path = os.path.join(DATA_DIR, '{}.json'.format(name))
    if not os.path.isfile(path):
        raise ConfigError('No point configuration {!r} ({})'
                          .format(name, path))
    with io.open(path, encoding='utf-8') as fh:
        return json.load(fh)


def _config_torus(config, k=None):
    points = config['points'] if k is None else config['points'][:k]
    b1, b2 = config['lattice']
    return parallelogram_torus(b1, b2, named_norm(config['norm']),
                               config['metric_class'], points,
                               label=config.get('label', ''))


def check_separated_points(name, tol=EXACT):
    """Pairwise separation of a stored point configuration on its torus

    `half_systole` configurations need directed distances of at least half
    the systole, `round_trip` configurations need round trips of at least
    the systole.

    """
    config = load_points(name)
    L = Lattice(*config['lattice'])
    norm = named_norm(config['norm'])
    sys, _ = lattice_systole(L, norm)
    points = np.asarray(config['points'], dtype=float)
    pairs = [(i, j) for i in range(len(points)) for j in range(len(points))
             if i != j]
    if config['criterion'] == 'half_systole':
        values = [flat_torus_distance(L, norm, points[i], points[j])
                  for i, j in pairs]
        expected = sys / 2
    elif config['criterion'] == 'round_trip':
        values = [round_trip_distance(L, norm, points[i], points[j])
                  for i, j in pairs]
        expected = sys
    else:
        raise ConfigError('{!r} is not a valid criterion'
                          .format(config['criterion']))
    computed = min(values)
    kind = 'equality' if name == 'riem4' else 'lower_bound'
    return VerificationReport([CheckResult(
        'separated.' + name, kind, computed, expected, tol,
        {'points': len(points), 'criterion': config['criterion'],
         'systole': sys}, 'minimum over ordered pairs')])


def _pairwise_min(L, norm, points):
    return min(flat_torus_distance(L, norm, p, q)
               for i, p in enumerate(points) for j, q in enumerate(points)
               if i != j)


def check_packing_bound(S, points=None, tol=EXACT, label='torus',
                        reject=False):
    """Disk packing bound for ramification points on a flat torus

    Disks of radius `sys / 4` around points pairwise at distance at least
    `sys / 2` are disjoint, so there are at most
    ``area / (pi sys^2 / 16)`` of them.

    :param S: Flat torus
    :param points: Candidate ramification points in developed coordinates;
        rows for their count and separation are added when given
    :param reject: The candidate set must fail the bound: its size exceeds
        the floor of the packing value and some pair is closer than
        `sys / 2`

    """
    cert = torus_systole(S)
    sys = cert.length
    value = S.euclidean_area / (np.pi / 16 * sys ** 2)
    capacity = np.floor(value + tol)
    report = VerificationReport([
        CheckResult('packing.{}.value'.format(label), 'equality', value,
                    8 * np.sqrt(3) / np.pi, tol, {'systole': sys}),
        CheckResult('packing.{}.floor'.format(label), 'equality',
                    capacity, 4, 0., {'value': value})])
    if points is None:
        return report

    L = Lattice(*cert.extra['lattice'])
    dist = _pairwise_min(L, S.norm, np.asarray(points, dtype=float))
    if reject:
        report.add(CheckResult(
            'packing.{}.count'.format(label), 'rejection', capacity,
            float(len(points)), 0., {'points': len(points)},
            'more points than disjoint disks fit'))
        report.add(CheckResult(
            'packing.{}.disks'.format(label), 'rejection', dist, sys / 2,
            tol, {'points': len(points)}, 'overlapping disks detected'))
    else:
        report.add(CheckResult(
            'packing.{}.count'.format(label), 'inequality',
            float(len(points)), capacity, 0., {'value': value},
            'at most floor(value) points'))
        report.add(CheckResult(
            'packing.{}.disks'.format(label), 'lower_bound', dist, sys / 2,
            tol, {'points': len(points)}, 'disks of radius sys/4'))
    return report


def _tetrahedral_cover_points():
    cover = build_degree2_cover(tetrahedral())
    return cover, [cover.developed(r.location)
                   for r in cover.ramification_points]


def check_packing(tol=EXACT):
    """Packing rows of the equilateral torus, the tetrahedral cover and a
    five-point configuration that must be rejected"""
    report = check_packing_bound(torus_equilateral(), tol=tol,
                                 label='equilateral')
    cover, points = _tetrahedral_cover_points()
    report.extend(check_packing_bound(cover.total, points, tol,
                                      label='tetrahedral_cover'))
    # half periods plus the centre of a lattice triangle
    b1, b2 = np.array([2., 0.]), np.array([1., np.sqrt(3)])
    five = [np.zeros(2), b1 / 2, b2 / 2, (b1 + b2) / 2, (b1 + b2) / 3]
    report.extend(check_packing_bound(torus_equilateral(2.), five, tol,
                                      label='five_points', reject=True))
    return report


def check_pillowcase_separation(tol=EXACT):
    """Corners of the l1 pillowcase are pairwise at distance `scg / 2`; the
    axis-aligned l1 pillowcase stays below the reversible constant"""
    S = pillowcase_l1()
    cover = build_degree2_cover(S)
    scg = cover_exact_systole(S).length
    corners = S.marked_points
    dist = min(cover.base_distance(x, y) for x in corners for y in corners
               if x is not y)
    report = VerificationReport([CheckResult(
        'separated.pillowcase_l1', 'equality', dist, scg / 2, tol,
        {'scg': scg}, 'corner distance through the double cover')])
    aligned = pillowcase(named_norm('l1'), aligned=True,
                         label='pillowcase_l1_aligned')
    ratio = _ratio(cover_exact_systole(aligned).length, aligned)
    expected = constant('sphere', 4, REVERSIBLE)
    report.add(CheckResult('separated.pillowcase_l1_aligned', 'equality',
                           ratio, np.sqrt(np.pi / 2), tol, {},
                           'axis-aligned square'))
    report.add(CheckResult('separated.pillowcase_l1_aligned_bound',
                           'inequality', ratio, expected, tol, {},
                           'strictly below the rotated square'))
    return report


###############################################################################
#                         Punctured from closed                               #
###############################################################################
COLLAPSE_CONFIGS = collections.OrderedDict([
    (RIEMANNIAN, 'riem4'), (REVERSIBLE, 'rev8'), (NONREVERSIBLE, 'nonrev9')])


def check_punctured_from_closed(metric_class, k=None, tol=EXACT,
                                rel_tol=DISCRETIZED):
    """Marked systole of an extremal torus with `k` stored marked points

    :param metric_class: Selects the extremal torus and its configuration
    :param k: Number of marked points (default: the full configuration)
    :raises ConfigError: if `k` exceeds the stored configuration

    """
    name = COLLAPSE_CONFIGS[metric_class]
    config = load_points(name)
    total = len(config['points'])
    k = total if k is None else k
    if not 1 <= k <= total:
        raise ConfigError('{} stores {} points, {} requested'
                          .format(name, total, k))
    S = _config_torus(config, k)
    cert = marked_torus_systole(S)
    sys = torus_systole(S).length
    bound = constant('torus', None, metric_class) * np.sqrt(S.surface_area())
    prefix = 'collapse.{}.k{}'.format(metric_class, k)
    inputs = {'configuration': name, 'k': k}
    report = VerificationReport([
        CheckResult(prefix + '.bound', 'inequality', cert.length, bound, tol,
                    inputs, details=cert.to_dict()),
        CheckResult(prefix + '.near_extremal', 'equality', cert.length, sys,
                    rel_tol * sys, inputs, 'marked systole versus systole')])
    return report


###############################################################################
#                        Conventions and cross checks                         #
###############################################################################
def check_conventions(tol=EXACT):
    """Alignment of ball and lattice for the l1, l-infinity and triangle
    tori"""
    rev = constant('torus', None, REVERSIBLE)
    nonrev = constant('torus', None, NONREVERSIBLE)
    cases = [('linf_square', torus_linf(), rev, 'equality', ''),
             ('l1_rotated', torus_l1(rotated=True), rev, 'equality', ''),
             ('l1_square', torus_l1(), rev, 'inequality',
              'l1 on Z^2 does not attain'),
             ('triangle', torus_triangle_norm(), nonrev, 'inequality',
              'equality-discrepancy'),
             ('polar_triangle', torus_triangle_norm(polar=True), nonrev,
              'equality', '')]
    report = VerificationReport()
    for name, S, expected, kind, note in cases:
        cert = torus_systole(S)
        report.add(CheckResult('conventions.' + name, kind,
                               _ratio(cert.length, S), expected, tol,
                               {'norm': S.norm.to_dict()}, note,
                               cert.to_dict()))
    return report


def check_crosscheck(eps=.01, words=6, rel_tol=DISCRETIZED):
    """Cover method versus discretised search on the Calabi-Croke and
    tetrahedral spheres"""
    from .discrete import discretized_systole
    report = VerificationReport()
    for name, build in (('calabi_croke', calabi_croke),
                        ('tetrahedral', tetrahedral)):
        S = build()
        exact = cover_exact_systole(S)
        approx = discretized_systole(S, eps=eps, words=words)
        report.add(CheckResult(
            'crosscheck.' + name, 'equality', approx.length, exact.length,
            rel_tol * exact.length, {'eps': eps, 'words': words},
            str(approx.word), approx.to_dict()))
    return report


###############################################################################
#                                 Asymptotics                                 #
###############################################################################
def check_asymptotic(k_values=ASYMPTOTIC_K, words=2, tol=EXACT):
    """Marked systoles of grid-marked doubled squares against
    ``4 sqrt(2) sqrt(area / k)``

    The discretised search runs with spacing one fifth of the grid cell; the
    last row compares every ratio `sys_* / sqrt(area)` with the ratio at the
    smallest `k`.

    """
    from .discrete import discretized_systole
    report = VerificationReport()
    ratios = []
    for k in k_values:
        S = grid_pillowcase(k)
        area = S.surface_area()
        cols = max(len(set(np.round([xy[0] for _, xy in S.marked_points],
                                    9))), 1)
        rows = max(len(set(np.round([xy[1] for _, xy in S.marked_points],
                                    9))), 1)
        eps = min(1 / cols, 1 / rows) / 5
        cert = discretized_systole(S, eps=eps, words=words)
        ratios.append(cert.length / np.sqrt(area))
        report.add(CheckResult(
            'asymptotic.k{}'.format(k), 'inequality', cert.length,
            constant('sphere', 'asymptotic', None) * np.sqrt(area / k), tol,
            {'k': k, 'eps': eps, 'words': words},
            'ratio {:.6g}'.format(ratios[-1]), cert.to_dict()))
    monotone = all(b <= a + tol for a, b in zip(ratios, ratios[1:]))
    report.add(CheckResult(
        'asymptotic.trend', 'inequality', max(ratios[1:] or ratios),
        ratios[0], tol, {'k': list(k_values)},
        'monotone' if monotone else 'not monotone',
        {'ratios': ratios}))
    return report


###############################################################################
#                                   Suites                                    #
###############################################################################
def _equality_suite(seed, count):
    report = VerificationReport()
    for name in EQUALITY_CASES:
        report.extend(_timed(check_equality_case, name))
    return report


def _random_suite(seed, count):
    report = VerificationReport()
    for metric_class in (RIEMANNIAN, REVERSIBLE, NONREVERSIBLE):
        report.extend(_timed(check_random_inequalities, metric_class, count,
                             seed))
    return report.extend(_timed(check_svp_oracle, 50, seed))


def _separated_suite(seed, count):
    report = VerificationReport()
    for name in POINT_CONFIGS:
        report.extend(_timed(check_separated_points, name))
    return report.extend(_timed(check_pillowcase_separation))


def _collapse_suite(seed, count):
    report = VerificationReport()
    for metric_class in COLLAPSE_CONFIGS:
        report.extend(_timed(check_punctured_from_closed, metric_class, 1))
        report.extend(_timed(check_punctured_from_closed, metric_class))
    return report


SUITES = collections.OrderedDict([
    ('equality', _equality_suite),
    ('random', _random_suite),
    ('packing', lambda seed, count: _timed(check_packing)),
    ('separated', _separated_suite),
    ('collapse', _collapse_suite),
    ('conventions', lambda seed, count: _timed(check_conventions)),
    ('crosscheck', lambda seed, count: _timed(check_crosscheck)),
    ('asymptotic', lambda seed, count: _timed(check_asymptotic)),
])


def run_suite(name, seed=0, count=1000):
    """Run a named suite (or ``'all'``)

    :param seed: Seed of the random suite
    :param count: Random instances per metric class
    :returns: :class:`VerificationReport`

    """
    if name == 'all':
        report = VerificationReport()
        for suite in SUITES:
            report.extend(run_suite(suite, seed, count))
        return report
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError('{!r} is not a valid suite'.format(name))
    logger.info('Running suite %s', name)
    return suite(seed, count)
