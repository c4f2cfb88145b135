# encoding: utf-8
"""Command line front end

Subcommands::

    sysgeom validate SURFACE
    sysgeom systole SURFACE [--method M] [--eps E] [--words W]
    sysgeom verify [--suite S] [--seed N] [--out PATH] [--format F]
    sysgeom report REPORT.json [--format F]
    sysgeom generate DIRECTORY

The exit status is zero on success and, for `verify` and `report`, iff all
checks pass.

"""

from __future__ import division, print_function

import argparse
import io
import json
import logging
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .errors import ConfigError, SurfaceFormatError, SysgeomError
from .factory import CANONICAL
from .geometry import ht_area_factor
from .harness import SUITES, VerificationReport, run_suite
from .surface import load_surface, save_surface
from .systole import METHODS, marked_systole

__all__ = ['RunConfig', 'main', 'build_parser']

logger = logging.getLogger(__name__)

FORMATS = ('csv', 'json', 'table')


@dataclass(frozen=True)
class RunConfig:
    """Validated command line settings"""
    command: str
    path: str = None
    method: str = 'cover_exact'
    eps: float = .01
    words: int = 6
    budget: int = 200000
    suite: str = 'all'
    seed: int = 0
    count: int = 1000
    fmt: str = 'csv'
    out: str = None
    timings: bool = False
    verbosity: int = 0

    def __post_init__(self):
        if not self.eps > 0:
            raise ConfigError('--eps must be positive, got {!r}'
                              .format(self.eps))
        if self.words < 2:
            raise ConfigError('--words must be at least 2, got {!r}'
                              .format(self.words))
        if self.count < 1:
            raise ConfigError('--count must be at least 1, got {!r}'
                              .format(self.count))
        if self.method not in METHODS:
            raise ConfigError('{!r} is not a valid method'.format(self.method))
        if self.fmt not in FORMATS:
            raise ConfigError('{!r} is not a valid format'.format(self.fmt))

    @classmethod
    def from_namespace(cls, ns):
        fields = cls.__dataclass_fields__
        return cls(**{k: v for k, v in vars(ns).items()
                      if k in fields and v is not None})


def build_parser():
    parser = argparse.ArgumentParser(
        prog='sysgeom',
        description='Systoles of flat cone surfaces and verification of '
                    'optimal systolic inequalities')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', dest='verbosity', action='count',
                        default=0, help='INFO output, twice for DEBUG')
    parser.add_argument('-q', '--quiet', action='store_true',
                        help='Only warnings (default)')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('validate', help='Check a surface file')
    p.add_argument('path', help='.surf file')

    p = sub.add_parser('systole', help='Marked systole with certificate')
    p.add_argument('path', help='.surf file')
    p.add_argument('--method', choices=METHODS, default='cover_exact')
    p.add_argument('--eps', type=float, default=.01,
                   help='Net spacing of the discretised search')
    p.add_argument('--words', type=int, default=6,
                   help='Crossing cap of the discretised search')
    p.add_argument('--budget', type=int, default=200000,
                   help='Node budget of the discretised search')
    p.add_argument('--out', help='Write the certificate here')

    p = sub.add_parser('verify', help='Run verification suites')
    p.add_argument('--suite', choices=list(SUITES) + ['all'], default='all')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--count', type=int, default=1000,
                   help='Random instances per metric class')
    p.add_argument('--format', dest='fmt', choices=FORMATS, default='csv')
    p.add_argument('--out', help='Write the report here')
    p.add_argument('--timings', action='store_true',
                   help='Add runtimes (breaks byte-identical reports)')

    p = sub.add_parser('report', help='Render a JSON report')
    p.add_argument('path', help='JSON report from verify')
    p.add_argument('--format', dest='fmt', choices=FORMATS, default='table')

    p = sub.add_parser('generate', help='Write the canonical .surf files')
    p.add_argument('path', help='Target directory')
    return parser


def _configure_logging(config, quiet):
    level = logging.WARNING
    if not quiet and config.verbosity == 1:
        level = logging.INFO
    elif not quiet and config.verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with io.open(out, 'w', encoding='utf-8') as fh:
            fh.write(text)
        logger.info('Wrote %s', out)


def _render(report, fmt, timings=False):
    if fmt == 'csv':
        return report.to_csv(timings)
    if fmt == 'json':
        return report.to_json(timings)
    return report.to_table()


###############################################################################
#                                 Subcommands                                 #
###############################################################################
def cmd_validate(config):
    S = load_surface(config.path)
    print('label:', S.label or '-')
    print('metric class:', S.metric_class)
    print('euler characteristic:', S.euler_characteristic())
    for cone in S.cone_angles():
        print('cone point {}: angle {:.12g} pi'.format(cone.location,
                                                       cone.angle / np.pi))
    print('euclidean area: {:.12g}'.format(S.euclidean_area))
    print('holmes-thompson area: {:.12g}'.format(
        S.euclidean_area * ht_area_factor(S.norm)))
    print('marked points:', len(S.marked_points))
    return 0


def cmd_systole(config):
    S = load_surface(config.path)
    cert = marked_systole(S, config.method, eps=config.eps,
                          words=config.words, budget=config.budget)
    _emit(json.dumps(cert.to_dict(), indent=1, sort_keys=True) + '\n',
          config.out)
    return 0


def cmd_verify(config):
    report = run_suite(config.suite, seed=config.seed, count=config.count)
    _emit(_render(report, config.fmt, config.timings), config.out)
    for row in report.failures:
        logger.warning('Check %s failed: %.12g versus %.12g', row.id,
                       row.computed, row.expected)
    return 0 if report.passed else 1


def cmd_report(config):
    with io.open(config.path, encoding='utf-8') as fh:
        report = VerificationReport.from_json(fh.read())
    sys.stdout.write(_render(report, config.fmt))
    return 0 if report.passed else 1


def cmd_generate(config):
    if not os.path.isdir(config.path):
        os.makedirs(config.path)
    for name, build in CANONICAL.items():
        target = os.path.join(config.path, name + '.surf')
        save_surface(build(), target)
        logger.info('Wrote %s', target)
    return 0


COMMANDS = {'validate': cmd_validate, 'systole': cmd_systole,
            'verify': cmd_verify, 'report': cmd_report,
            'generate': cmd_generate}


def main(argv=None):
    """Entry point of the `sysgeom` console script

    :returns: Exit status

    """
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        config = RunConfig.from_namespace(ns)
    except ConfigError as err:
        parser.error(str(err))
    _configure_logging(config, ns.quiet)
    try:
        return COMMANDS[config.command](config)
    except SurfaceFormatError as err:
        print('error: {}'.format(err), file=sys.stderr)
        return 1
    except (SysgeomError, IOError) as err:
        print('error: {}: {}'.format(type(err).__name__, err),
              file=sys.stderr)
        return 1
