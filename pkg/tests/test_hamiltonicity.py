from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamplex import oracle
from hamplex.complex_core import Complex, Labeling, delete_vertices, k_skeleton, relabel
from hamplex.families import (
    cone_with_skeleton,
    named,
    simplex_skeleton_complex,
    suspension_of_points,
    wheel,
)
from hamplex.hamiltonicity import (
    NotApplicable,
    PathCertificate,
    gamma_construction,
    is_hamiltonian_with,
    is_traceable_with,
    lemma_deletion_extract,
    search_labeling,
    verify_certificate,
    weak_path_indices,
    weak_path_indices_dfs,
    weakly_hamiltonian_with,
    weakly_traceable_with,
    window_set,
)
from hamplex.search import CapacityError

from test_complex_core import complex_and_labeling, complexes

WEAK_CYCLE_ONLY = named("weak-cycle-only")


def test_tight_checks_on_examples():
    full = simplex_skeleton_complex(6, 2)
    assert is_traceable_with(full) and is_hamiltonian_with(full)
    assert is_hamiltonian_with(named("hamiltonian-isolated"))
    assert not is_traceable_with(wheel(2, 3))


def test_weak_checks_on_examples():
    assert weakly_traceable_with(WEAK_CYCLE_ONLY) is None
    cert = weakly_hamiltonian_with(WEAK_CYCLE_ONLY)
    assert cert.indices == (1, 3, 5) and verify_certificate(WEAK_CYCLE_ONLY, cert)
    stairs = Complex.from_facets([(1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 6), (5, 6, 7),
                                  (6, 7, 8), (7, 8, 9)])
    assert verify_certificate(stairs, weakly_traceable_with(stairs))
    assert weakly_traceable_with(named("cone-base")) is None
    assert weakly_hamiltonian_with(named("cone-base")) is None


def test_cone_has_the_listed_weak_cycle():
    cone = cone_with_skeleton(named("cone-base"))
    cert = PathCertificate("weak-cycle", Labeling.identity(10), (2, 4, 6, 8, 10))
    # windows 234, 456, 678, 8 9 10 and the wrap 1 2 10
    assert verify_certificate(cone, cert)
    assert weakly_hamiltonian_with(cone) is not None


def test_searches_on_examples():
    for prop in ("traceable", "hamiltonian", "weakly-traceable", "weakly-hamiltonian"):
        assert search_labeling(wheel(2, 3), prop) is None
    susp = suspension_of_points(6)
    assert search_labeling(susp, "traceable") is None
    assert search_labeling(susp, "weakly-traceable") is None
    assert search_labeling(WEAK_CYCLE_ONLY, "weakly-hamiltonian") is not None
    assert search_labeling(WEAK_CYCLE_ONLY, "weakly-traceable") is None
    with pytest.raises(CapacityError, match="--cap"):
        search_labeling(simplex_skeleton_complex(11, 1), "traceable")


def test_verify_rejects_damaged_certificates():
    cx = simplex_skeleton_complex(7, 2)
    cert = search_labeling(cx, "traceable")
    assert verify_certificate(cx, cert)
    assert not verify_certificate(cx, PathCertificate("tight-path", cert.labeling,
                                                      cert.indices[:-1]))
    weak = PathCertificate("weak-path", Labeling.identity(7), (1, 3, 5))
    assert verify_certificate(cx, weak)
    assert not verify_certificate(cx, PathCertificate("weak-path", Labeling.identity(7), (1, 5)))
    rev = PathCertificate("tight-path", cert.labeling.reversed(), cert.indices)
    assert verify_certificate(cx, rev)
    assert PathCertificate.from_json(cert.to_json()) == cert


@given(complex_and_labeling())
def test_tight_implies_weak(pair):
    cx, lab = pair
    if is_hamiltonian_with(cx, lab):
        assert is_traceable_with(cx, lab)
        assert weakly_hamiltonian_with(cx, lab) is not None
    if is_traceable_with(cx, lab):
        assert weakly_traceable_with(cx, lab) is not None


@given(st.integers(1, 3), st.integers(4, 11), st.data())
def test_greedy_and_dfs_weak_paths_agree(d, n, data):
    if n <= d:
        return
    present = data.draw(st.sets(st.integers(1, n - d)))
    g = weak_path_indices(n, d, present)
    s = weak_path_indices_dfs(n, d, present)
    assert (g is None) == (s is None)
    for idx in (g, s):
        if idx is not None:
            cert = PathCertificate("weak-path", Labeling.identity(n), idx)
            faces = {tuple(range(i, i + d + 1)) for i in present}
            assert verify_certificate(Complex(d, n, frozenset(faces)), cert)


def _connected_fast_path(n, d, present):
    g = nx.Graph()
    g.add_nodes_from(present)
    for i, j in combinations(sorted(present), 2):
        if j - i <= d:
            g.add_edge(i, j)
    return 1 in g and n - d in g and nx.has_path(g, 1, n - d)


@given(st.integers(1, 3), st.integers(4, 11), st.data())
def test_weak_path_matches_connectivity(d, n, data):
    present = data.draw(st.sets(st.integers(1, n - d)))
    assert (weak_path_indices(n, d, present) is not None) == _connected_fast_path(n, d, present)


@settings(max_examples=40)
@given(complexes(max_n=6))
def test_reversal_and_shift_closure(cx):
    for prop in ("traceable", "weakly-traceable", "hamiltonian", "weakly-hamiltonian"):
        cert = search_labeling(cx, prop)
        if cert is None:
            continue
        check = {"traceable": is_traceable_with, "hamiltonian": is_hamiltonian_with,
                 "weakly-traceable": weakly_traceable_with,
                 "weakly-hamiltonian": weakly_hamiltonian_with}[prop]
        assert check(cx, cert.labeling.reversed())
        if prop in ("hamiltonian", "weakly-hamiltonian"):
            for k in range(cx.n):
                assert check(cx, cert.labeling.shifted(k))


@settings(max_examples=40)
@given(complexes(max_n=6))
def test_search_matches_oracle_small(cx):
    for prop in ("traceable", "hamiltonian", "weakly-traceable", "weakly-hamiltonian"):
        found = search_labeling(cx, prop)
        assert (found is not None) == (oracle.exists(cx, prop) is not None)
        if found is not None:
            assert verify_certificate(cx, found)


@settings(max_examples=40)
@given(complexes(max_n=6))
def test_weakly_hamiltonian_is_two_connected(cx):
    if search_labeling(cx, "weakly-hamiltonian") is None:
        return
    for v in range(1, cx.n + 1):
        rest = k_skeleton(delete_vertices(cx, {v}), 0)
        g = nx.Graph()
        g.add_nodes_from(range(1, cx.n))
        for f in k_skeleton(cx, 1).facets:
            if v not in f:
                g.add_edge(*(x - (x > v) for x in f))
        assert nx.is_connected(g), (cx, v, rest)


def test_deletion_extract_on_weak_cycle():
    cert = weakly_hamiltonian_with(WEAK_CYCLE_ONLY)
    smaller, path = lemma_deletion_extract(WEAK_CYCLE_ONLY, cert, 3)
    assert smaller.n < WEAK_CYCLE_ONLY.n and verify_certificate(smaller, path)


def test_deletion_extract_on_tight_cycles():
    # a tight cycle has no private vertices, so the graph case rotates instead
    g = simplex_skeleton_complex(6, 1)
    tight = search_labeling(g, "hamiltonian")
    weak = PathCertificate("weak-cycle", tight.labeling, tight.indices)
    same, path = lemma_deletion_extract(g, weak, len(weak.indices))
    assert same == g and verify_certificate(g, path)
    # a sparse cycle through a Hamiltonian 2-complex drops one private vertex
    cx = simplex_skeleton_complex(6, 2)
    sparse = PathCertificate("weak-cycle", Labeling.identity(6), (1, 3, 5))
    smaller, path = lemma_deletion_extract(cx, sparse, 3)
    assert smaller.n == 5 and verify_certificate(smaller, path)


def test_deletion_extract_not_applicable():
    cx = simplex_skeleton_complex(6, 2)
    cert = PathCertificate("weak-cycle", Labeling.identity(6), (1, 2, 3, 4, 5, 6))
    with pytest.raises(NotApplicable):
        lemma_deletion_extract(cx, cert, 2)


def test_gamma_construction_counts_and_path():
    cx = named("split-path")
    g = gamma_construction(cx)
    assert g.n == cx.n + cx.d and len(g.facets) == len(cx.facets) + cx.n
    path = weakly_traceable_with(named("weak-cycle-only"), Labeling((1, 2, 3, 4, 5, 6)))
    assert path is None
    stairs = Complex.from_facets([(1, 2, 3), (3, 4, 5), (5, 6, 7)])
    wp = weakly_traceable_with(stairs)
    gs = gamma_construction(stairs)
    cyc = PathCertificate("weak-cycle", Labeling.identity(gs.n),
                          wp.indices + (gs.n - gs.d, gs.n - gs.d + 1))
    assert verify_certificate(gs, cyc)


def test_window_set_respects_labeling():
    cx = Complex.from_facets([(1, 3, 5)], n=5)
    lab = Labeling((1, 4, 2, 5, 3))
    assert window_set(cx, lab) == {1}
    assert relabel(cx, lab).facets == {(1, 2, 3)}
