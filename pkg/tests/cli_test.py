# encoding: utf-8


from __future__ import division, print_function

import io
import json
import os

import pytest as pt
from numpy.testing import assert_almost_equal

from sysgeom.cli import RunConfig, main
from sysgeom.errors import ConfigError


def test_generate_and_validate(tmpdir, capsys):
    assert main(['generate', str(tmpdir)]) == 0
    names = sorted(os.listdir(str(tmpdir)))
    assert len(names) == 6
    assert all(name.endswith('.surf') for name in names)
    capsys.readouterr()
    path = str(tmpdir.join('calabi_croke.surf'))
    assert main(['validate', path]) == 0
    out = capsys.readouterr().out
    assert 'euler characteristic: 2' in out
    assert 'metric class: riemannian' in out


def test_systole_out(datadir, tmpdir):
    target = str(tmpdir.join('cert.json'))
    assert main(['systole', os.path.join(datadir, 'torus_linf.surf'),
                 '--out', target]) == 0
    with io.open(target, encoding='utf-8') as fh:
        data = json.load(fh)
    assert_almost_equal(data['length'], 1.)


def test_verify_json(capsys):
    assert main(['verify', '--suite', 'conventions', '--format', 'json']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['passed'] is True


def test_verify_byte_identical(tmpdir, capsys):
    first, second = str(tmpdir.join('a.csv')), str(tmpdir.join('b.csv'))
    assert main(['verify', '--suite', 'packing', '--out', first]) == 0
    assert main(['verify', '--suite', 'packing', '--out', second]) == 0
    with io.open(first, 'rb') as fa, io.open(second, 'rb') as fb:
        assert fa.read() == fb.read()


def test_report(tmpdir, capsys):
    target = str(tmpdir.join('report.json'))
    assert main(['verify', '--suite', 'conventions', '--format', 'json',
                 '--out', target]) == 0
    assert main(['report', target]) == 0
    assert 'conventions.polar_triangle' in capsys.readouterr().out


def test_invalid_arguments():
    with pt.raises(SystemExit) as exc:
        main(['systole', 'x.surf', '--eps', '-1'])
    assert exc.value.code == 2
    with pt.raises(ConfigError):
        RunConfig('verify', eps=0)
    with pt.raises(ConfigError):
        RunConfig('verify', fmt='xml')


def test_validate_errors(tmpdir, capsys):
    assert main(['validate', str(tmpdir.join('missing.surf'))]) == 1
    broken = tmpdir.join('broken.surf')
    broken.write('{"polygons": ')
    assert main(['validate', str(broken)]) == 1
    assert 'error' in capsys.readouterr().err
