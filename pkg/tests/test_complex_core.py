from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamplex.complex_core import (
    ArityError,
    Complex,
    ComplexError,
    Labeling,
    ParseError,
    PurityError,
    consecutive_face,
    delete_vertices,
    dual_graph,
    facet_vertex_distance,
    format_complex,
    gap,
    induced_subcomplex,
    is_strongly_connected,
    k_skeleton,
    parse_complex,
    relabel,
    ridge_degree,
)
from hamplex.families import (
    named,
    full_minus_wrap,
    simplex_skeleton_complex,
    two_simplices_skeleton,
    wheel,
)
from hamplex.hierarchy import unit_interval_with


def cx_of(*facets, n=None):
    return Complex.from_facets(facets, n=n)


@st.composite
def complexes(draw, max_n=7):
    d = draw(st.integers(1, 2))
    n = draw(st.integers(d + 1, max_n))
    allf = list(combinations(range(1, n + 1), d + 1))
    picked = draw(st.lists(st.sampled_from(allf), min_size=1, unique=True))
    return Complex(d, n, frozenset(picked))


@st.composite
def complex_and_labeling(draw):
    cx = draw(complexes())
    perm = draw(st.permutations(range(1, cx.n + 1)))
    return cx, Labeling(tuple(perm))


def test_gap_examples():
    assert gap((1, 2, 3), 2) == 0
    assert gap((1, 2, 4), 2) == 1
    assert gap((1, 4, 7), 2) == 4
    with pytest.raises(ArityError):
        gap((1, 2), 2)


def test_consecutive_face_wraps():
    assert consecutive_face(9, 2, 1) == (1, 2, 3)
    assert consecutive_face(9, 2, 9) == (1, 2, 9)
    assert consecutive_face(9, 2, 8) == (1, 8, 9)
    with pytest.raises(ComplexError):
        consecutive_face(9, 2, 10)


@given(st.integers(1, 3), st.integers(5, 12), st.data())
def test_gap_zero_exactly_for_unwrapped_windows(d, n, data):
    f = tuple(sorted(data.draw(st.sets(st.integers(1, n), min_size=d + 1, max_size=d + 1))))
    unwrapped = f[0] <= n - d and consecutive_face(n, d, f[0]) == f
    assert (gap(f, d) == 0) == unwrapped


def test_k_skeleton_examples():
    d23 = wheel(2, 3)
    assert k_skeleton(d23, 2) == d23
    assert k_skeleton(d23, 1).facets == named("k2-join-3").facets
    assert len(k_skeleton(cx_of((1, 2, 3, 4)), 1).facets) == 6


@given(complexes())
def test_skeleton_of_skeleton(cx):
    for j in range(cx.d + 1):
        for k in range(j + 1):
            assert k_skeleton(k_skeleton(cx, j), k) == k_skeleton(cx, k)


def test_delete_vertices_examples():
    cx = cx_of((1, 2, 3), (1, 3, 4), (3, 4, 5))
    assert delete_vertices(cx, {2}).facets == {(1, 2, 3), (2, 3, 4)}
    assert delete_vertices(cx, set()) == cx
    isolated = named("hamiltonian-isolated")
    assert not delete_vertices(isolated, {1}).is_pure()


@given(complexes(), st.data())
def test_deletions_commute(cx, data):
    a = data.draw(st.sets(st.integers(1, cx.n), max_size=2))
    b = data.draw(st.sets(st.integers(1, cx.n), max_size=2).filter(lambda s: not s & a))
    step = delete_vertices(cx, a)
    keep = [v for v in range(1, cx.n + 1) if v not in a]
    b_after = {keep.index(v) + 1 for v in b}
    assert delete_vertices(step, b_after) == delete_vertices(cx, a | b)


def test_induced_subcomplex():
    glued = two_simplices_skeleton(2)
    assert induced_subcomplex(glued, range(1, 6)) == glued
    assert induced_subcomplex(glued, {1, 2, 3, 4}).facets == {(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)}
    s5 = simplex_skeleton_complex(5, 2)
    assert induced_subcomplex(s5, {1, 2, 3, 4}) == simplex_skeleton_complex(4, 2)


@given(complexes())
def test_dual_graph_edges_by_brute_force(cx):
    fs = cx.sorted_facets()
    expected = sum(1 for f, g in combinations(fs, 2) if len(set(f) & set(g)) == cx.d)
    assert len(dual_graph(cx).edges) == expected


def test_strong_connectivity():
    assert is_strongly_connected(simplex_skeleton_complex(6, 2))
    assert not is_strongly_connected(named("hamiltonian-isolated"))
    assert is_strongly_connected(wheel(2, 3))
    with pytest.raises(PurityError):
        is_strongly_connected(Complex(2, 4, frozenset({(1, 2, 3), (3, 4)})))


def test_ridge_degrees_of_wrap_removal():
    n, d = 7, 2
    cx = full_minus_wrap(n, d)
    mu = set(consecutive_face(n, d, n - 1)) & set(consecutive_face(n, d, n))
    assert ridge_degree(cx, mu) == n - d - 2
    assert ridge_degree(cx, (2, 4)) == n - d
    assert ridge_degree(cx, (1, 99)) == 0


def test_distance_examples():
    path = Complex.from_facets([consecutive_face(7, 2, i) for i in range(1, 6)])
    assert facet_vertex_distance(path, (1, 2, 3), 2).distance == 0
    far = facet_vertex_distance(path, (1, 2, 3), 7)
    assert far.distance == 4 and far.has_ascending_shortest
    iso = named("hamiltonian-isolated")
    assert facet_vertex_distance(iso, (1, 4, 7), 5).distance == float("inf")


@settings(max_examples=60)
@given(complexes(max_n=6))
def test_unit_interval_distances(cx):
    if not unit_interval_with(cx):
        return
    for f in cx.facets:
        for v in range(1, cx.n + 1):
            r = facet_vertex_distance(cx, f, v)
            if r.distance == float("inf"):
                continue
            if r.distance >= 2:
                assert r.has_ascending_shortest or r.has_descending_shortest
            if f[0] < v < f[-1]:
                assert r.distance <= 1


@given(complex_and_labeling())
def test_relabel_round_trip(pair):
    cx, lab = pair
    assert relabel(relabel(cx, lab), lab.inverse()) == cx


@given(st.permutations(range(1, 8)), st.permutations(range(1, 8)))
def test_labeling_algebra(p, q):
    a, b = Labeling(tuple(p)), Labeling(tuple(q))
    assert a.then(a.inverse()) == Labeling.identity(7)
    assert Labeling.from_order(a.order()) == a
    assert a.then(b)(3) == b(a(3))
    assert a.reversed().reversed() == a
    assert a.shifted(7) == a


def test_parse_round_trip_and_errors():
    text = "# glued\n2 5\n1 2 3\n1 2 4\n\n2 3 5\n"
    cx = parse_complex(text)
    assert parse_complex(format_complex(cx)) == cx
    with pytest.raises(ParseError, match="line 3"):
        parse_complex("2 5\n1 2 3\n1 2\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_complex("1 4\n2 1\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_complex("1 4\n1 x\n")
    with pytest.raises(ParseError):
        parse_complex("# nothing\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_complex("1 65\n")
