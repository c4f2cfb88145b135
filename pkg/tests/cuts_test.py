# encoding: utf-8


from __future__ import division, print_function

import pytest as pt

from sysgeom import factory
from sysgeom.cuts import build_cut_system, crossing_letters, homotopy_word
from sysgeom.errors import TransversalityError, UnsupportedBaseError
from sysgeom.paths import SurfaceLoop
from sysgeom.systole import cover_exact_systole
from sysgeom.words import is_admissible


@pt.mark.parametrize('build, k', [(factory.calabi_croke, 3),
                                  (factory.tetrahedral, 4),
                                  (factory.pillowcase_l1, 4)])
def test_cut_system(build, k):
    S = build()
    cuts = build_cut_system(S)
    assert len(cuts) == cuts.k == k
    assert sorted(cuts.marks) == list(range(k))
    assert all(length > 0 for length in cuts.lengths())
    legs = cuts.legs_by_polygon()
    assert set(legs) <= set(range(len(S.polygons)))


def test_unsupported_surfaces():
    with pt.raises(UnsupportedBaseError):
        build_cut_system(factory.torus_equilateral())
    with pt.raises(UnsupportedBaseError):
        build_cut_system(factory.doubled_polygon(factory.SQUARE,
                                                 marked=False))


@pt.mark.parametrize('build', [factory.calabi_croke, factory.tetrahedral])
def test_certificate_word(build):
    S = build()
    cuts = build_cut_system(S)
    cert = cover_exact_systole(S, cuts)
    word = homotopy_word(S, cert.loop, cuts)
    assert word == cert.word
    assert is_admissible(word)
    letters = crossing_letters(S, cert.loop, cuts)
    assert all(1 <= abs(l) <= cuts.k for l in letters)


def test_loop_through_marked_point():
    S = factory.calabi_croke()
    cuts = build_cut_system(S)
    loop = SurfaceLoop([(0, (0., 0.), (.5, .3)), (0, (.5, .3), (0., 0.))])
    with pt.raises(TransversalityError):
        crossing_letters(S, loop, cuts)


def test_loop_through_marked_corner_of_mirror_face():
    # the marked cone point at the origin is also corner 2 of face 1
    S = factory.calabi_croke()
    cuts = build_cut_system(S)
    loop = SurfaceLoop([(1, (0., 0.), (.5, -.3)), (1, (.5, -.3), (0., 0.))])
    with pt.raises(TransversalityError, match='marked point 0'):
        crossing_letters(S, loop, cuts)
