import random

import pytest

from hamplex import families as fam
from hamplex.complex_core import ComplexError


def facets(cx):
    return [" ".join(map(str, f)) for f in cx.sorted_facets()]


def test_listed_complexes():
    assert facets(fam.two_simplices_skeleton(2)) == ["1 2 3", "1 2 4", "1 3 4", "2 3 4", "2 3 5",
                                                     "2 4 5", "3 4 5"]
    assert facets(fam.starred_square(2)) == ["1 2 3", "1 2 5", "2 3 4", "2 4 5"]
    assert facets(fam.starred_square(3)) == ["1 2 3 6", "1 2 5 6", "2 3 4 6", "2 4 5 6"]
    assert facets(fam.bouquet(2, 3)) == ["1 2 4", "3 4 5", "4 6 7"]
    assert facets(fam.bouquet(3, 4)) == ["1 2 3 7", "4 5 7 8", "6 7 9 10", "7 11 12 13"]
    assert facets(fam.wheel(2, 3)) == ["1 2 3", "1 2 4", "1 2 5"]
    assert facets(fam.full_minus_two()) == ["1 2 5", "1 3 4", "1 3 5", "1 4 5", "2 3 4",
                                             "2 3 5", "2 4 5", "3 4 5"]


def test_bouquet_shape():
    for d in range(1, 4):
        for k in range(1, 7):
            cx = fam.bouquet(d, k)
            assert len(cx.facets) == k and cx.n == k * d + 1
            shared = set.intersection(*(set(f) for f in cx.facets))
            assert len(shared) == 1 or k == 1


def test_boundary_drops_one_face():
    for d in (2, 3):
        assert len(fam.two_simplices_skeleton(d).facets) - 1 == len(fam.two_simplices_boundary(d).facets)


def test_counts():
    assert len(fam.annulus(2, 7).facets) == 7
    assert len(fam.cycle_complement(3).facets) == 15 - 6
    assert len(fam.suspension_of_points(6).facets) == 8
    assert fam.full_minus_wrap(7, 2).n == 7
    assert len(fam.cone_with_skeleton(fam.named("cone-base")).facets) == 5 + 15
    spread = fam.path_plus_spread_face(2)
    assert spread.n == 7 and (1, 4, 7) in spread.facets


def test_registry_and_errors():
    assert fam.family("wheel", 2, 3) == fam.wheel(2, 3)
    assert fam.family("diamond") == fam.named("diamond")
    assert fam.family("cone").n == 10
    assert "bouquet" in fam.family_names() and "cone" in fam.family_names()
    with pytest.raises(ComplexError, match="expects"):
        fam.family("wheel", 2)
    with pytest.raises(ComplexError):
        fam.family("nope")
    with pytest.raises(ComplexError):
        fam.annulus(2, 3)
    with pytest.raises(ComplexError):
        fam.family("diamond", 1)


def test_random_complex_is_seeded():
    a = fam.random_complex(6, 2, random.Random(5))
    b = fam.random_complex(6, 2, random.Random(5))
    assert a == b and a.facets
