"""Generators for the named complexes used as examples and test fixtures."""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

from .complex_core import Complex, ComplexError, consecutive_face


def _cx(d: int, n: int, facets) -> Complex:
    return Complex(d, n, frozenset(tuple(sorted(f)) for f in facets))


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ComplexError(msg)


def simplex_skeleton_complex(n: int, d: int) -> Complex:
    """All d-faces on 1..n."""
    _need(0 <= d < n, "needs 0 <= d < n")
    return _cx(d, n, combinations(range(1, n + 1), d + 1))


def two_simplices_skeleton(d: int) -> Complex:
    """d-skeleton of two (d+1)-simplices glued along a d-face, on d+3 vertices."""
    _need(d >= 1, "needs d >= 1")
    n = d + 3
    faces = set(combinations(range(1, d + 3), d + 1)) | set(combinations(range(2, d + 4), d + 1))
    return _cx(d, n, faces)


def two_simplices_boundary(d: int) -> Complex:
    """Same as above with the shared d-face removed: the boundary sphere."""
    cx = two_simplices_skeleton(d)
    return _cx(d, cx.n, set(cx.facets) - {tuple(range(2, d + 3))})


def bouquet(d: int, k: int) -> Complex:
    """k d-simplices sharing one vertex.

    The first min(k, d+1) simplices carry the shared vertex in pairwise
    different positions; any further ones put it first.
    """
    _need(d >= 1 and k >= 1, "needs d >= 1 and k >= 1")
    m = min(k, d + 1)
    below_total = sum(d + 1 - i for i in range(1, m + 1))
    hub = below_total + 1
    low, high = 1, hub + 1
    facets = []
    for i in range(1, k + 1):
        nb = d + 1 - i if i <= d + 1 else 0
        na = d - nb
        f = list(range(low, low + nb)) + [hub] + list(range(high, high + na))
        low += nb
        high += na
        facets.append(f)
    return _cx(d, high - 1, facets)


def wheel(d: int, k: int) -> Complex:
    """Join of a (d-1)-simplex on 1..d with k extra points."""
    _need(d >= 1 and k >= 1, "needs d >= 1 and k >= 1")
    base = tuple(range(1, d + 1))
    return _cx(d, d + k, [base + (d + j,) for j in range(1, k + 1)])


def starred_square(d: int) -> Complex:
    """d-1 successive cones over a 4-cycle; apex labels 2, 6, 7, ..."""
    _need(d >= 2, "needs d >= 2")
    base = [(1, 2, 3), (1, 2, 5), (2, 3, 4), (2, 4, 5)]
    extra = tuple(range(6, d + 4))
    return _cx(d, d + 3, [f + extra for f in base])


def annulus(d: int, n: int) -> Complex:
    """The cyclic windows H_1..H_n."""
    _need(d >= 1 and n >= d + 2, "needs n >= d + 2")
    return _cx(d, n, [consecutive_face(n, d, i) for i in range(1, n + 1)])


def suspension_of_points(n: int) -> Complex:
    """Graph joining apices 1 and n to each of the n-2 isolated vertices between them."""
    _need(n >= 4, "needs n >= 4")
    return _cx(1, n, [(1, v) for v in range(2, n)] + [(v, n) for v in range(2, n)])


def full_minus_wrap(n: int, d: int) -> Complex:
    """All d-faces on 1..n except the wrap-around windows H_{n-d+1}..H_n."""
    _need(n > 2 * d, "needs n > 2d")
    drop = {consecutive_face(n, d, i) for i in range(n - d + 1, n + 1)}
    return _cx(d, n, set(combinations(range(1, n + 1), d + 1)) - drop)


def claw() -> Complex:
    return _cx(1, 4, [(1, 2), (1, 3), (1, 4)])


def four_cycle() -> Complex:
    return _cx(1, 4, [(1, 2), (1, 3), (2, 4), (3, 4)])


def cycle_complement(k: int) -> Complex:
    """Complement of the 2k-cycle 1-2-...-2k-1."""
    _need(k >= 2, "needs k >= 2")
    n = 2 * k
    cyc = {tuple(sorted((v, v % n + 1))) for v in range(1, n + 1)}
    return _cx(1, n, set(combinations(range(1, n + 1), 2)) - cyc)


def path_graph(n: int = 4) -> Complex:
    return _cx(1, n, [(v, v + 1) for v in range(1, n)])


NAMED = {
    # weakly-Hamiltonian but not weakly-traceable
    "weak-cycle-only": (2, 6, [(1, 2, 3), (1, 5, 6), (3, 4, 5)]),
    # Hamiltonian, with an isolated facet in the dual graph
    "hamiltonian-isolated": (2, 9, [(1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 6), (5, 6, 7),
                                    (6, 7, 8), (7, 8, 9), (1, 8, 9), (1, 2, 9), (1, 4, 7)]),
    "cone-base": (2, 9, [(1, 2, 6), (2, 3, 4), (4, 5, 6), (4, 8, 9), (6, 7, 8)]),
    "face-removal": (3, 10, [(1, 2, 3, 4), (2, 3, 4, 5), (5, 6, 7, 8), (1, 6, 7, 10),
                             (1, 8, 9, 10)]),
    "split-path": (2, 9, [(1, 2, 3), (2, 3, 4), (5, 6, 7), (6, 7, 8), (7, 8, 9)]),
    "joined-bouquet": (2, 11, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (2, 3, 5), (2, 4, 5),
                               (3, 4, 5), (5, 6, 8), (7, 8, 9), (8, 10, 11)]),
    "diamond": (1, 4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
    "k2-join-3": (1, 5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]),
    "chordal-peo": (2, 7, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (1, 3, 5), (1, 6, 7), (2, 3, 4),
                           (2, 4, 6)]),
    "chordal-semi-closed": (2, 7, [(1, 2, 3), (2, 5, 6), (3, 4, 5), (3, 4, 6), (3, 4, 7),
                                   (3, 5, 6), (4, 5, 6)]),
    "chordal-weakly-closed": (2, 5, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 4)]),
    "not-radical": (2, 5, [(1, 2, 4), (1, 4, 5), (2, 3, 4), (3, 4, 5)]),
    "under-closed-not-chordal": (2, 5, [(1, 2, 3), (1, 2, 4), (2, 3, 4), (2, 3, 5)]),
}


def named(name: str) -> Complex:
    try:
        d, n, facets = NAMED[name]
    except KeyError:
        raise ComplexError(f"unknown named complex {name!r}") from None
    return _cx(d, n, facets)


def cone_with_skeleton(cx: Complex) -> Complex:
    """Add a new vertex n+1 coned over the (d-1)-skeleton of cx."""
    d, n = cx.d, cx.n
    ridges = {r for f in cx.facets for r in combinations(f, d)}
    return _cx(d, n + 1, set(cx.facets) | {r + (n + 1,) for r in ridges})


def full_minus_two() -> Complex:
    """All triangles on five vertices except 123 and 124."""
    full = set(combinations(range(1, 6), 3))
    return _cx(2, 5, full - {(1, 2, 3), (1, 2, 4)})


def path_plus_spread_face(d: int) -> Complex:
    """H_1..H_{d^2+1} plus the face 1, d+2, 2d+3, ..., d^2+d+1."""
    _need(d >= 2, "needs d >= 2")
    n = d * d + d + 1
    facets = [consecutive_face(n, d, i) for i in range(1, d * d + 2)]
    facets.append(tuple(j * (d + 1) + 1 for j in range(d + 1)))
    return _cx(d, n, facets)


def disjoint_simplices(d: int, k: int) -> Complex:
    _need(d >= 0 and k >= 1, "needs k >= 1")
    return _cx(d, k * (d + 1), [tuple(range(j * (d + 1) + 1, (j + 1) * (d + 1) + 1))
                                for j in range(k)])


def small_gap_complex(n: int, d: int, g: int | None = None) -> Complex:
    """Every d-face on 1..n of gap at most g (default g = d)."""
    g = d if g is None else g
    _need(0 <= d < n and g >= 0, "needs 0 <= d < n and g >= 0")
    return _cx(d, n, [f for f in combinations(range(1, n + 1), d + 1) if f[-1] - f[0] - d <= g])


def interval_union(n: int, d: int, intervals) -> Complex:
    """Union of full d-skeleta on the label intervals [a, b]."""
    faces = set()
    for a, b in intervals:
        faces.update(combinations(range(a, b + 1), d + 1))
    _need(bool(faces), "intervals too short for any d-face")
    return _cx(d, n, faces)


def random_complex(n: int, d: int, rng: random.Random, density: float = 0.5) -> Complex:
    allf = list(combinations(range(1, n + 1), d + 1))
    picked = [f for f in allf if rng.random() < density] or [rng.choice(allf)]
    return _cx(d, n, picked)


# name -> (builder, parameter names)
REGISTRY = {
    "full": (simplex_skeleton_complex, ("n", "d")),
    "double-simplex": (two_simplices_skeleton, ("d",)),
    "double-simplex-boundary": (two_simplices_boundary, ("d",)),
    "bouquet": (bouquet, ("d", "k")),
    "wheel": (wheel, ("d", "k")),
    "starred-square": (starred_square, ("d",)),
    "annulus": (annulus, ("d", "n")),
    "susp": (suspension_of_points, ("n",)),
    "full-minus-wrap": (full_minus_wrap, ("n", "d")),
    "claw": (claw, ()),
    "four-cycle": (four_cycle, ()),
    "cycle-complement": (cycle_complement, ("k",)),
    "path": (path_graph, ("n",)),
    "full5-minus-two": (full_minus_two, ()),
    "spread": (path_plus_spread_face, ("d",)),
    "disjoint": (disjoint_simplices, ("d", "k")),
    "gap": (small_gap_complex, ("n", "d")),
}


def family(name: str, *params: int) -> Complex:
    if name in NAMED:
        _need(not params, f"{name} takes no parameters")
        return named(name)
    if name == "cone":
        _need(not params, "cone takes no parameters")
        return cone_with_skeleton(named("cone-base"))
    try:
        fn, names = REGISTRY[name]
    except KeyError:
        raise ComplexError(f"unknown family {name!r}") from None
    _need(len(params) == len(names),
          f"{name} expects parameters ({', '.join(names)}), got {len(params)}")
    return fn(*params)


def family_names() -> list[str]:
    return sorted(set(REGISTRY) | set(NAMED) | {"cone"})


def binomial_bound(gap: int, d: int) -> int:
    return comb(gap + d, d)
