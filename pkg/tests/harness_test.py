# encoding: utf-8


from __future__ import division, print_function

import json

import numpy as np
import pytest as pt
from numpy.testing import assert_almost_equal

from sysgeom import harness
from sysgeom.errors import ConfigError
from sysgeom.factory import torus_equilateral
from sysgeom.harness import (CheckResult, VerificationReport,
                             check_equality_case, check_packing,
                             check_pillowcase_separation,
                             check_punctured_from_closed,
                             check_random_inequalities,
                             check_separated_points, constant, registry,
                             run_suite)


@pt.mark.parametrize('key, decimals', [
    (('sphere', 3, 'riemannian'), '1.861'),
    (('sphere', 4, 'riemannian'), '1.520'),
    (('sphere', 3, 'reversible_finsler'), '2.171'),
    (('sphere', 4, 'reversible_finsler'), '1.772'),
    (('sphere', 3, 'nonreversible_finsler'), '2.507'),
    (('sphere', 4, 'nonreversible_finsler'), '2.047'),
    (('torus', None, 'riemannian'), '1.075'),
    (('torus', None, 'reversible_finsler'), '1.253'),
    (('torus', None, 'nonreversible_finsler'), '1.447'),
])
def test_registry_values(key, decimals):
    assert '{:.3f}'.format(constant(*key)) == decimals
    assert registry()[key].computable


def test_registry_entries():
    entries = registry()
    assert not entries['projective_plane', None, 'riemannian'].computable
    assert entries['klein_bottle', None, 'reversible_finsler'].value is None
    assert_almost_equal(constant('sphere', 'asymptotic', None),
                        4 * np.sqrt(2))
    assert entries['torus', None, 'nonreversible_finsler'].k_max == 9
    with pt.raises(KeyError):
        constant('sphere', 5, 'riemannian')


@pt.mark.parametrize('kind, computed, passed', [
    ('equality', 1., True), ('equality', 1.1, False),
    ('inequality', .5, True), ('inequality', 1.1, False),
    ('lower_bound', 1.5, True), ('lower_bound', .9, False),
    ('rejection', .5, True), ('rejection', 1., False),
])
def test_check_verdicts(kind, computed, passed):
    row = CheckResult('test', kind, computed, 1., 1e-9)
    assert row.passed == passed
    assert row.verdict == ('pass' if passed else 'fail')


def test_invalid_kind():
    with pt.raises(ValueError):
        CheckResult('test', 'approximately', 1., 1., 0.)


def test_report_formats():
    report = VerificationReport([
        CheckResult('a', 'equality', 1. / 3, 1. / 3, 1e-9,
                    details={'x': np.float64(.5)}),
        CheckResult('b', 'inequality', 2., 1., 0., note='too large',
                    runtime=.25)])
    assert not report.passed
    assert [row.id for row in report.failures] == ['b']
    lines = report.to_csv().splitlines()
    assert lines[0] == 'id,kind,computed,expected,tolerance,verdict,note'
    assert lines[1].startswith('a,equality,0.3333333333333333,')
    assert report.to_csv(timings=True).splitlines()[0].endswith(',ms')
    data = json.loads(report.to_json())
    assert data['passed'] is False
    restored = VerificationReport.from_json(report.to_json(timings=True))
    assert restored.to_csv() == report.to_csv()
    assert restored.rows[1].runtime == .25
    assert 'fail' in report.to_table()


@pt.mark.parametrize('name', list(harness.EQUALITY_CASES))
def test_equality_cases(name):
    report = check_equality_case(name)
    assert report.passed, report.to_table()
    row = report.rows[0]
    if name == 'torus_triangle':
        assert row.kind == 'inequality'
        assert row.note.startswith('equality-discrepancy')
    else:
        assert row.kind == 'equality'
    with pt.raises(ValueError):
        check_equality_case('sphere')


@pt.mark.parametrize('metric_class', ['riemannian', 'reversible_finsler',
                                      'nonreversible_finsler'])
def test_random_inequalities(metric_class):
    report = check_random_inequalities(metric_class, count=100, seed=1)
    assert report.passed, report.to_table()
    assert report.rows[0].details['violations'] == []


def test_svp_oracle():
    report = harness.check_svp_oracle(count=10, seed=2)
    assert report.passed, report.to_table()
    assert report.rows[0].inputs['classes'] == ['riemannian',
                                                'reversible_finsler',
                                                'nonreversible_finsler']


@pt.mark.parametrize('name', harness.POINT_CONFIGS)
def test_separated_points(name):
    report = check_separated_points(name)
    assert report.passed, report.to_table()


def test_load_points():
    config = harness.load_points('riem4')
    assert len(config['points']) == 4
    assert config['criterion'] == 'half_systole'
    with pt.raises(ConfigError):
        harness.load_points('riem5')


def test_packing():
    report = check_packing()
    assert report.passed, report.to_table()
    assert len(report) == 10
    rows = {row.id: row for row in report}
    assert rows['packing.equilateral.floor'].computed == 4
    assert rows['packing.tetrahedral_cover.count'].kind == 'inequality'
    count = rows['packing.five_points.count']
    assert count.kind == 'rejection'
    assert (count.computed, count.expected) == (4, 5)
    assert rows['packing.five_points.disks'].kind == 'rejection'


def test_packing_count():
    # more candidates than the floor of the packing value
    S = torus_equilateral()
    points = [(0., 0.), (.5, 0.), (.25, np.sqrt(3) / 4), (.75, np.sqrt(3) / 4),
              (.4, .1)]
    rows = {row.id: row for row in
            harness.check_packing_bound(S, points, label='grid', reject=True)}
    assert rows['packing.grid.count'].passed
    rows = {row.id: row for row in
            harness.check_packing_bound(S, points, label='grid')}
    assert not rows['packing.grid.count'].passed
    assert rows['packing.grid.floor'].passed


def test_pillowcase_separation():
    report = check_pillowcase_separation()
    assert report.passed, report.to_table()


@pt.mark.parametrize('metric_class', ['riemannian', 'reversible_finsler',
                                      'nonreversible_finsler'])
def test_punctured_from_closed(metric_class):
    for k in (1, 2, None):
        report = check_punctured_from_closed(metric_class, k)
        assert report.passed, report.to_table()
    with pt.raises(ConfigError):
        check_punctured_from_closed(metric_class, 20)


def test_conventions():
    report = harness.check_conventions()
    assert report.passed, report.to_table()
    kinds = {row.id: row.kind for row in report}
    assert kinds['conventions.l1_square'] == 'inequality'
    assert kinds['conventions.polar_triangle'] == 'equality'


def test_run_suite():
    report = run_suite('equality')
    assert len(report) == len(harness.EQUALITY_CASES)
    assert all(row.runtime is not None for row in report)
    assert report.to_csv() == run_suite('equality').to_csv()
    with pt.raises(ValueError):
        run_suite('everything')


@pt.mark.long
def test_crosscheck():
    report = harness.check_crosscheck(eps=.02, words=4)
    assert report.passed, report.to_table()


@pt.mark.verylong
def test_asymptotic():
    report = harness.check_asymptotic(k_values=(4, 8, 16))
    assert report.passed, report.to_table()
