import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamplex import dfi
from hamplex.complex_core import Complex, Labeling, consecutive_face, relabel
from hamplex.families import bouquet, named, simplex_skeleton_complex, two_simplices_skeleton

from _support import cofactor_det

PRIME = dfi.Field("prime")


def mono(pairs, d, n):
    return dfi.monomial_from(pairs, d, n)


def test_variable_order():
    d, n = 1, 3
    assert dfi.diagonal_lex_compare(mono([(0, 1)], d, n), mono([(0, 2)], d, n)) == 1
    a = mono([(0, 1), (1, 2)], d, n)
    b = mono([(0, 2), (1, 1)], d, n)
    assert dfi.diagonal_lex_compare(a, b) == 1 and dfi.diagonal_lex_compare(b, a) == -1
    assert dfi.diagonal_lex_compare(a, a) == 0


def test_two_by_two_minor():
    p = dfi.minor([0, 1], [1, 2], 1, 2)
    assert dfi.format_poly(p, 1, 2) == "x[0][1]*x[1][2] - x[0][2]*x[1][1]"
    assert len(p.terms) == 2


def test_minor_rejects_bad_indices():
    with pytest.raises(ValueError):
        dfi.minor([0, 1], [2, 1], 1, 3)
    with pytest.raises(ValueError):
        dfi.minor([0, 2], [1, 2], 1, 3)
    with pytest.raises(ValueError):
        dfi.minor([0], [1, 2], 1, 3)


@pytest.mark.parametrize("d,n", [(1, 4), (2, 5), (3, 6)])
def test_leading_terms_are_diagonal(d, n):
    for f in combinations(range(1, n + 1), d + 1):
        g = dfi.facet_minor(f, d, n)
        assert g.lead()[0] == mono([(i, f[i]) for i in range(d + 1)], d, n)
        assert len(g.terms) == len(set(g.terms)) and all(abs(c) == 1 for c in g.terms.values())
    window = dfi.facet_minor(consecutive_face(n, d, 1), d, n)
    assert window.lead()[0] == mono([(i, 1 + i) for i in range(d + 1)], d, n)


def test_generators():
    gens = dfi.dfi_generators(named("not-radical"))
    assert len(gens) == 4 and all(sum(g.lead()[0]) == 3 for g in gens)
    assert len(dfi.dfi_generators(Complex.from_facets([(1, 2, 3)]))) == 1
    assert len(dfi.dfi_generators(simplex_skeleton_complex(6, 2))) == comb(6, 3)
    text = dfi.format_poly(gens[0], 2, 5)
    assert text.startswith("x[0][1]*x[1][2]*x[2][4]") and "x[i]" not in text


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_minor_matches_cofactor_expansion(size):
    rng = random.Random(size)
    n = size + 1
    d = size - 1
    for _ in range(20):
        entries = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(d + 1)]
        values = [entries[i][j - 1] for i in range(d + 1) for j in range(1, n + 1)]
        cols = sorted(rng.sample(range(1, n + 1), size))
        p = dfi.minor(range(size), cols, d, n)
        sub = [[entries[i][c - 1] for c in cols] for i in range(size)]
        assert p.evaluate(values) == cofactor_det(sub)


def test_reduce_basics():
    gens = dfi.dfi_generators(two_simplices_skeleton(2))
    assert dfi.reduce(gens[3], gens).remainder.is_zero()
    lone = dfi.minor([0, 1], [1, 2], 2, 5)
    other = [dfi.facet_minor((3, 4, 5), 2, 5)]
    assert dfi.reduce(lone, other).remainder == lone
    with pytest.raises(ValueError):
        dfi.reduce(lone, [])


@st.composite
def polys(draw, nvars=6):
    terms = {}
    for _ in range(draw(st.integers(1, 6))):
        m = tuple(draw(st.integers(0, 2)) for _ in range(nvars))
        terms[m] = draw(st.integers(-5, 5).filter(bool))
    return dfi.Poly(nvars, {m: dfi.RATIONAL.coerce(c) for m, c in terms.items()})


@settings(max_examples=60)
@given(polys(), st.lists(polys(), min_size=1, max_size=3))
def test_reduction_reconstructs(p, basis):
    out = dfi.reduce(p, basis)
    assert out.reconstruct(basis) == p
    leads = [g.lead()[0] for g in basis]
    for m in out.remainder.terms:
        assert not any(all(a <= b for a, b in zip(lm, m)) for lm in leads)


def test_groebner_positive_cases():
    for cx in (two_simplices_skeleton(2), named("joined-bouquet"), named("diamond")):
        for fld in (dfi.RATIONAL, PRIME):
            assert dfi.gb_check_minors(cx, fld).is_gb


def test_groebner_negative_on_path_relabeling():
    k2_join = named("k2-join-3")
    # Hamiltonian path 3-1-4-2-5
    lab = Labeling.from_order([3, 1, 4, 2, 5])
    rc = relabel(k2_join, lab)
    for fld in (dfi.RATIONAL, PRIME):
        rep = dfi.gb_check_minors(rc, fld)
        assert not rep.is_gb and rep.failure is not None
        gens = dfi.dfi_generators(rc, fld)
        rem = rep.failure[1]
        assert dfi.reduce(rem, gens).remainder == rem


def test_groebner_caps():
    with pytest.raises(dfi.DfiCapacityError, match="--cap"):
        dfi.gb_check_minors(simplex_skeleton_complex(6, 2))
    assert dfi.gb_check_minors(simplex_skeleton_complex(6, 2), max_facets=20).is_gb


def test_consequence_check():
    glued = dfi.gbac_consequence_check(two_simplices_skeleton(2))
    assert glued["pairs"] > 0 and not glued["violations"] and not glued["nonzero_remainders"]
    full = dfi.gbac_consequence_check(simplex_skeleton_complex(5, 2))
    assert not full["violations"] and not full["nonzero_remainders"]


def test_bouquet_three_is_recorded():
    u = bouquet(2, 3)
    rep = dfi.gb_check_minors(u)
    # pairwise disjoint leading terms: every pair is skipped
    assert rep.is_gb and rep.checked_pairs == 0


def test_initial_terms():
    leads, sqfree = dfi.initial_terms(Complex.from_facets([(1, 2)]))
    assert leads == [mono([(0, 1), (1, 2)], 1, 2)] and sqfree
    path = Complex.from_facets([consecutive_face(7, 2, i) for i in range(1, 6)])
    leads, sqfree = dfi.initial_terms(path)
    assert sqfree
    for a, b in combinations(leads, 2):
        assert not any(x and y for x, y in zip(a, b))
    for m in dfi.initial_terms(simplex_skeleton_complex(5, 3))[0]:
        assert sum(m) == 4 and max(m) == 1


def test_json_report():
    rc = relabel(named("k2-join-3"), Labeling.from_order([3, 1, 4, 2, 5]))
    js = dfi.gb_check_minors(rc).to_json(1, 5)
    assert js["is_gb"] is False and "x[" in js["failure"]["remainder"]


def test_not_radical_example_report_is_consistent():
    cx = named("not-radical")
    rats, mods = dfi.gb_check_minors(cx), dfi.gb_check_minors(cx, PRIME)
    assert rats.is_gb == mods.is_gb
    assert rats.is_gb or rats.failure is not None
