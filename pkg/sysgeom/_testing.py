# encoding: utf-8
"""Auxiliary functions useful for writing tests"""

from __future__ import division, print_function

import numpy as np
from numpy.testing import assert_allclose, assert_almost_equal

from .words import is_admissible


def assert_loop_closed(S, loop, tol=1e-7):
    """Verify that `loop` is a closed polyline on `S`"""
    try:
        loop.check(S, tol)
    except ValueError as err:
        raise AssertionError('Loop is not closed on {!r}: {}'.format(S, err))


def assert_certificate_valid(cert, S, length=None, decimal=9):
    """Verify that a systole certificate is self-consistent and, if given,
    realises `length`
    """
    if cert.word is not None:
        assert is_admissible(cert.word), \
            '{} is not admissible'.format(cert.word)
    if cert.loop is not None:
        assert_loop_closed(S, cert.loop)
        assert_almost_equal(cert.loop.length(S.norm), cert.length,
                            decimal=decimal)
    if length is not None:
        assert_almost_equal(cert.length, length, decimal=decimal)


def assert_ratio(length, S, expected, rtol=1e-9):
    """Verify ``length / sqrt(area) == expected``"""
    assert_allclose(length / np.sqrt(S.surface_area()), expected, rtol=rtol)


def assert_same_polygon(P, Q, decimal=12):
    """Verify that two vertex arrays agree up to a cyclic shift"""
    P, Q = np.asarray(P, dtype=float), np.asarray(Q, dtype=float)
    assert P.shape == Q.shape, '{} != {}'.format(P.shape, Q.shape)
    shifts = [np.max(np.abs(np.roll(P, s, axis=0) - Q))
              for s in range(len(P))]
    assert min(shifts) < 10 ** -decimal, \
        '{} is no cyclic shift of {}'.format(P.tolist(), Q.tolist())
