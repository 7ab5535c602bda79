"""Brute-force reference answers for small complexes.

Deliberately naive: every labeling in ``itertools.permutations`` order, each
predicate written straight from its definition on sorted tuples. Nothing here
touches the search engine or the optimized predicates, so the two can be
compared against each other.
"""

from __future__ import annotations

from itertools import combinations, permutations

ORACLE_MAX_N = 7

PREDICATES = ("traceable", "hamiltonian", "weakly-traceable", "weakly-hamiltonian",
              "closed", "unit-interval", "under-closed", "semi-closed", "weakly-closed",
              "chordal", "shifted")


class OracleTooLarge(ValueError):
    pass


def _relabel(facets, perm):
    # perm[v-1] is the new label of v
    return frozenset(tuple(sorted(perm[v - 1] for v in f)) for f in facets)


def _window(n, d, i):
    return tuple(sorted((i - 1 + k) % n + 1 for k in range(d + 1)))


def traceable(fs, n, d):
    return all(tuple(range(i, i + d + 1)) in fs for i in range(1, n - d + 1))


def hamiltonian(fs, n, d):
    return n >= d + 2 and all(_window(n, d, i) in fs for i in range(1, n + 1))


def _present(fs, n, d, cyclic):
    last = n if cyclic else n - d
    return [i for i in range(1, last + 1) if _window(n, d, i) in fs]


def _meet(n, d, a, b):
    return bool(set(_window(n, d, a)) & set(_window(n, d, b)))


def weakly_traceable(fs, n, d):
    if n < d + 1:
        return False
    avail = _present(fs, n, d, False)
    everything = set(range(1, n + 1))

    def go(path, covered):
        if covered == everything:
            return True
        for j in avail:
            if j not in path and _meet(n, d, path[-1], j):
                if go(path + [j], covered | set(_window(n, d, j))):
                    return True
        return False

    return any(go([s], set(_window(n, d, s))) for s in avail)


def weakly_hamiltonian(fs, n, d):
    if n < d + 2:
        return False
    avail = _present(fs, n, d, True)
    everything = set(range(1, n + 1))
    need = min(3, n)

    def go(path, covered):
        if (len(path) >= need and covered == everything
                and _meet(n, d, path[-1], path[0])):
            return True
        for j in avail:
            if j not in path and _meet(n, d, path[-1], j):
                if go(path + [j], covered | set(_window(n, d, j))):
                    return True
        return False

    return any(go([s], set(_window(n, d, s))) for s in avail)


def _skeleton_full(fs, verts, d):
    return all(c in fs for c in combinations(sorted(verts), d + 1))


def closed(fs, n, d):
    for f, g in combinations(fs, 2):
        if any(f[k] == g[k] for k in range(d + 1)) and not _skeleton_full(fs, set(f) | set(g), d):
            return False
    return True


def unit_interval(fs, n, d):
    return all(_skeleton_full(fs, range(f[0], f[-1] + 1), d) for f in fs)


def _under_ok(fs, f, d):
    for c in combinations(range(1, f[-1] + 1), d + 1):
        if c[0] == f[0] and all(c[k] <= f[k] for k in range(1, d + 1)) and c not in fs:
            return False
    return True


def _over_ok(fs, f, d):
    for c in combinations(range(1, f[-1] + 1), d + 1):
        if c[-1] == f[-1] and all(c[k] >= f[k] for k in range(d)) and c not in fs:
            return False
    return True


def under_closed(fs, n, d):
    return all(_under_ok(fs, f, d) for f in fs)


def semi_closed(fs, n, d):
    return all(_under_ok(fs, f, d) or _over_ok(fs, f, d) for f in fs)


def weakly_closed(fs, n, d):
    for f in fs:
        for g in range(1, n + 1):
            if g in f or not f[0] < g < f[-1]:
                continue
            a = tuple(sorted(set(f) - {f[0]} | {g}))
            b = tuple(sorted(set(f) - {f[-1]} | {g}))
            if a not in fs and b not in fs:
                return False
    return True


def chordal(fs, n, d):
    for f, g in combinations(fs, 2):
        if f[-1] == g[-1] and not _skeleton_full(fs, set(f) | set(g), d):
            return False
    return True


def shifted(fs, n, d):
    faces = set()
    for f in fs:
        for k in range(1, len(f) + 1):
            faces.update(combinations(f, k))
    for f in faces:
        for g in combinations(range(1, n + 1), len(f)):
            if all(g[k] <= f[k] for k in range(len(f))) and g not in faces:
                return False
    return True


TESTS = {
    "traceable": traceable,
    "hamiltonian": hamiltonian,
    "weakly-traceable": weakly_traceable,
    "weakly-hamiltonian": weakly_hamiltonian,
    "closed": closed,
    "unit-interval": unit_interval,
    "under-closed": under_closed,
    "semi-closed": semi_closed,
    "weakly-closed": weakly_closed,
    "chordal": chordal,
    "shifted": shifted,
}


def _plain(cx):
    n, d = cx.n, cx.d
    if n > ORACLE_MAX_N:
        raise OracleTooLarge(f"oracle limited to n <= {ORACLE_MAX_N}, got n={n}")
    return [tuple(sorted(f)) for f in cx.facets], n, d


def _relabelings(facets, n):
    """Distinct relabeled facet sets, each paired with one permutation producing it."""
    seen = set()
    for perm in permutations(range(1, n + 1)):
        fs = _relabel(facets, perm)
        if fs not in seen:
            seen.add(fs)
            yield perm, fs


def exists(cx, prop: str):
    """A permutation (new label of v at index v-1) realising prop, or None."""
    facets, n, d = _plain(cx)
    test = TESTS[prop]
    for perm, fs in _relabelings(facets, n):
        if test(fs, n, d):
            return perm
    return None


def count(cx, prop: str) -> tuple[int, int]:
    """(relabelings satisfying prop, distinct relabelings)."""
    facets, n, d = _plain(cx)
    test = TESTS[prop]
    hits = total = 0
    for _, fs in _relabelings(facets, n):
        total += 1
        hits += bool(test(fs, n, d))
    return hits, total


def holds(cx, prop: str, perm=None) -> bool:
    facets, n, d = _plain(cx)
    perm = perm or tuple(range(1, n + 1))
    return bool(TESTS[prop](_relabel(facets, perm), n, d))


def survey(cx) -> dict[str, bool]:
    facets, n, d = _plain(cx)
    left = set(PREDICATES)
    out = {p: False for p in PREDICATES}
    for _, fs in _relabelings(facets, n):
        for p in list(left):
            if TESTS[p](fs, n, d):
                out[p] = True
                left.discard(p)
        if not left:
            break
    return out
