"""Closed, unit-interval, under-closed, semi-closed and weakly-closed labelings,
plus perfect elimination orders and shiftedness.

Every fixed-labeling predicate returns a :class:`Check`, truthy when the
property holds; on failure it carries the lexicographically smallest
``(facet, missing face)`` pair in the relabeled complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .complex_core import Complex, ComplexError, Face, Labeling, mask, relabel
from .search import DEFAULT_HIERARCHY_CAP, SearchState, find_labeling

PROPERTIES = ("closed", "unit-interval", "under-closed", "semi-closed", "weakly-closed",
              "chordal", "shifted")
# strongest first; existence of each implies existence of the next
CHAIN = ("unit-interval", "under-closed", "semi-closed", "weakly-closed")


@dataclass(frozen=True)
class Check:
    ok: bool
    violation: tuple[Face, Face] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _result(violations) -> Check:
    worst = min(violations, default=None)
    return Check(worst is None, worst)


def _facets(cx: Complex, lab: Labeling | None) -> tuple[set[Face], int, int]:
    rc = cx if lab is None else relabel(cx, lab)
    return set(rc.facets), rc.d, rc.n


def _skeleton_gaps(vertices, d: int, facets: set[Face]):
    for g in combinations(sorted(vertices), d + 1):
        if g not in facets:
            yield g


def _below(f: Face):
    """Faces a_0 i_1 .. i_d with i_j <= a_j, other than f itself."""
    a0 = f[0]
    d = len(f) - 1
    for rest in combinations(range(a0 + 1, f[-1] + 1), d):
        if rest != f[1:] and all(x <= y for x, y in zip(rest, f[1:])):
            yield (a0,) + rest


def _above(f: Face):
    """Faces i_0 .. i_{d-1} a_d with i_j >= a_j, other than f itself."""
    ad = f[-1]
    d = len(f) - 1
    for rest in combinations(range(f[0], ad), d):
        if rest != f[:-1] and all(x >= y for x, y in zip(rest, f[:-1])):
            yield rest + (ad,)


def closed_with(cx: Complex, lab: Labeling | None = None) -> Check:
    fs, d, _ = _facets(cx, lab)
    out = []
    for f, g in combinations(sorted(fs), 2):
        if any(x == y for x, y in zip(f, g)):
            out += [(f, m) for m in _skeleton_gaps(set(f) | set(g), d, fs)]
    return _result(out)


def unit_interval_with(cx: Complex, lab: Labeling | None = None) -> Check:
    fs, d, _ = _facets(cx, lab)
    out = []
    for f in fs:
        out += [(f, m) for m in _skeleton_gaps(range(f[0], f[-1] + 1), d, fs)]
    return _result(out)


def under_closed_with(cx: Complex, lab: Labeling | None = None) -> Check:
    fs, _, _ = _facets(cx, lab)
    return _result([(f, m) for f in fs for m in _below(f) if m not in fs])


def semi_closed_with(cx: Complex, lab: Labeling | None = None) -> Check:
    fs, _, _ = _facets(cx, lab)
    out = []
    for f in fs:
        low = [m for m in _below(f) if m not in fs]
        if low and any(m not in fs for m in _above(f)):
            out.append((f, min(low)))
    return _result(out)


def weakly_closed_with(cx: Complex, lab: Labeling | None = None) -> Check:
    fs, _, _ = _facets(cx, lab)
    out = []
    for f in fs:
        inside = set(f)
        for g in range(f[0] + 1, f[-1]):
            if g in inside:
                continue
            drop_min = tuple(sorted(inside - {f[0]} | {g}))
            drop_max = tuple(sorted(inside - {f[-1]} | {g}))
            if drop_min not in fs and drop_max not in fs:
                out.append((f, drop_min))
    return _result(out)


def chordal_peo_with(cx: Complex, lab: Labeling | None = None) -> Check:
    fs, d, _ = _facets(cx, lab)
    out = []
    for f, g in combinations(sorted(fs), 2):
        if f[-1] == g[-1]:
            out += [(f, m) for m in _skeleton_gaps(set(f) | set(g), d, fs)]
    return _result(out)


def _all_faces(fs: set[Face]) -> set[Face]:
    faces = set()
    for f in fs:
        for k in range(1, len(f) + 1):
            faces.update(combinations(f, k))
    return faces


def _dominated(f: Face):
    """Same-size faces componentwise <= f (f excluded)."""
    for g in combinations(range(1, f[-1] + 1), len(f)):
        if g != f and all(x <= y for x, y in zip(g, f)):
            yield g


def shifted_with(cx: Complex, lab: Labeling | None = None) -> Check:
    """Downward shiftedness: a face forces every componentwise-smaller one."""
    fs, _, _ = _facets(cx, lab)
    faces = _all_faces(fs)
    out = []
    for f in faces:
        for g in _dominated(f):
            if g not in faces:
                host = min(h for h in fs if set(f) <= set(h))
                out.append((host, g))
    return _result(out)


CHECKS = {
    "closed": closed_with,
    "unit-interval": unit_interval_with,
    "under-closed": under_closed_with,
    "semi-closed": semi_closed_with,
    "weakly-closed": weakly_closed_with,
    "chordal": chordal_peo_with,
    "shifted": shifted_with,
}


def check_with(prop: str, cx: Complex, lab: Labeling | None = None) -> Check:
    try:
        fn = CHECKS[prop]
    except KeyError:
        raise ComplexError(f"unknown property {prop!r}") from None
    return fn(cx, lab)


# ------------------------------------------------------------------ search

def _skeleton_complete(st: SearchState, m: int) -> bool:
    verts = [v for v in range(1, st.n + 1) if m >> v & 1]
    return all(st.is_facet(mask(c)) for c in combinations(verts, st.d + 1))


def _pair_table(st: SearchState) -> dict[tuple[int, int], bool]:
    """For facets sharing a vertex: is the full skeleton on their union present?"""
    good = {}
    for v in range(1, st.n + 1):
        for a, b in combinations(st.containing[v], 2):
            if (a, b) not in good:
                good[(a, b)] = _skeleton_complete(st, st.fmask[a] | st.fmask[b])
    return good


def closed_impossible(cx: Complex) -> bool:
    """Labeling-free obstruction: too many mutually clashing facets at a vertex.

    Facets through v whose union lacks the full skeleton must put v in
    distinct positions, and there are only d+1 positions.
    """
    st = SearchState(cx)
    good = _pair_table(st)
    for v in range(1, st.n + 1):
        g = nx.Graph()
        g.add_nodes_from(st.containing[v])
        g.add_edges_from(p for p in combinations(st.containing[v], 2) if not good[p])
        if max((len(c) for c in nx.find_cliques(g)), default=0) > cx.d + 1:
            return True
    return False


def _labeled_of(st: SearchState, idx: int) -> list[int]:
    return [u for u in st.facets[idx] if st.label[u]]


def _unlabeled_of(st: SearchState, idx: int) -> list[int]:
    return [u for u in st.facets[idx] if not st.label[u]]


def _partial_facets_without(st: SearchState, v: int):
    """Facets with a labeled and an unlabeled vertex, not containing v."""
    d1 = st.d + 1
    bit = 1 << v
    for idx, m in enumerate(st.fmask):
        if not m & bit and 0 < st.done[idx] < d1:
            yield idx


def _completed_at(st: SearchState, v: int):
    d1 = st.d + 1
    return [idx for idx in st.containing[v] if st.done[idx] == d1]


def _relabeled_face(st: SearchState, m: int) -> Face:
    return tuple(sorted(st.label[u] for u in range(1, st.n + 1) if m >> u & 1))


def _face_mask_of_labels(st: SearchState, labels) -> int:
    return mask(st.order[x - 1] for x in labels)


def _callbacks(prop: str, cx: Complex):
    st_good: dict = {}

    def final_true(st):
        return True

    if prop == "closed":
        def step(st, v):
            if "good" not in st_good:
                st_good["good"] = _pair_table(st)
            good = st_good["good"]
            pos = {}
            for idx in st.containing[v]:
                pos.setdefault(st.done[idx] - 1, []).append(idx)
            for group in pos.values():
                for a, b in combinations(group, 2):
                    if not good[(a, b)]:
                        return False
            return True
        return step, final_true

    if prop == "chordal":
        def step(st, v):
            if "good" not in st_good:
                st_good["good"] = _pair_table(st)
            good = st_good["good"]
            return all(good[p] for p in combinations(_completed_at(st, v), 2))
        return step, final_true

    if prop in ("unit-interval", "under-closed", "semi-closed", "weakly-closed"):
        fixed = CHECKS[prop]

        def facet_ok(st, idx) -> bool:
            # full check of one completed facet; only labels <= current are involved
            f = _relabeled_face(st, st.fmask[idx])
            lo, hi = f[0], f[-1]
            if prop == "unit-interval":
                return all(st.is_facet(_face_mask_of_labels(st, c))
                           for c in combinations(range(lo, hi + 1), st.d + 1))
            below = all(st.is_facet(_face_mask_of_labels(st, c)) for c in _below(f))
            if prop == "under-closed":
                return below
            if prop == "semi-closed":
                return below or all(st.is_facet(_face_mask_of_labels(st, c)) for c in _above(f))
            inside = set(f)
            for g in range(lo + 1, hi):
                if g in inside:
                    continue
                a = _face_mask_of_labels(st, sorted(inside - {lo} | {g}))
                b = _face_mask_of_labels(st, sorted(inside - {hi} | {g}))
                if not st.is_facet(a) and not st.is_facet(b):
                    return False
            return True

        def lookahead(st, v) -> bool:
            bit = 1 << v
            for idx in _partial_facets_without(st, v):
                m = st.fmask[idx]
                free = _unlabeled_of(st, idx)
                if prop == "unit-interval":
                    verts = [u for u in st.facets[idx]] + [v]
                    for c in combinations(verts, st.d + 1):
                        if v in c and not st.is_facet(mask(c)):
                            return False
                    continue
                swaps = [st.is_facet(m & ~(1 << u) | bit) for u in free]
                if prop == "under-closed" and not all(swaps):
                    return False
                if prop == "semi-closed" and not all(swaps):
                    fixed_part = _labeled_of(st, idx)
                    if not all(st.is_facet(m & ~(1 << u) | bit) for u in fixed_part):
                        return False
                if prop == "weakly-closed":
                    lo = min(_labeled_of(st, idx), key=lambda u: st.label[u])
                    if not any(swaps) and not st.is_facet(m & ~(1 << lo) | bit):
                        return False
            return True

        def step(st, v):
            if not lookahead(st, v):
                return False
            return all(facet_ok(st, idx) for idx in _completed_at(st, v))

        def final(st):
            return bool(fixed(st.cx, st.labeling()))

        return step, final

    if prop == "shifted":
        def step(st, v):
            bit = 1 << v
            for idx, m in enumerate(st.fmask):
                if m & bit:
                    continue
                for u in _unlabeled_of(st, idx):
                    if not st.is_face(m & ~(1 << u) | bit):
                        return False
            return True

        def final(st):
            return bool(shifted_with(st.cx, st.labeling()))

        return step, final

    raise ComplexError(f"unknown property {prop!r}")


def search_hierarchy_labeling(cx: Complex, prop: str,
                              cap: int = DEFAULT_HIERARCHY_CAP) -> Labeling | None:
    if prop not in CHECKS:
        raise ComplexError(f"unknown property {prop!r}")
    if cx.n > cap:
        from .search import CapacityError
        raise CapacityError(cx.n, cap)
    if prop == "closed" and closed_impossible(cx):
        return None
    step, final = _callbacks(prop, cx)
    lab = find_labeling(cx, step, final, cap=cap)
    if lab is not None and not check_with(prop, cx, lab):
        raise AssertionError(f"search returned a labeling that fails {prop}")
    return lab


# ------------------------------------------------------------------ reports

@dataclass(frozen=True)
class Entry:
    verdict: str
    witness: Labeling | None = None
    violation: tuple[Face, Face] | None = None

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness.to_list()
        if self.violation is not None:
            out["violation"] = {"facet": list(self.violation[0]),
                                "missing": list(self.violation[1])}
        return out


@dataclass(frozen=True)
class HierarchyReport:
    entries: dict = field(default_factory=dict)

    def __getitem__(self, prop: str) -> Entry:
        return self.entries[prop]

    def exists(self, prop: str) -> bool:
        return self.entries[prop].verdict != "fails-exhaustively"

    def to_json(self) -> dict:
        return {p: e.to_json() for p, e in self.entries.items()}


def full_report(cx: Complex, lab: Labeling | None = None,
                cap: int = DEFAULT_HIERARCHY_CAP) -> HierarchyReport:
    cx.require_pure()
    if cx.n > cap:
        from .search import CapacityError
        raise CapacityError(cx.n, cap)
    lab = lab or Labeling.identity(cx.n)
    entries = {}
    for prop in PROPERTIES:
        here = check_with(prop, cx, lab)
        if here:
            entries[prop] = Entry("holds-with-given-labeling", lab)
            continue
        wit = search_hierarchy_labeling(cx, prop, cap)
        if wit is not None:
            entries[prop] = Entry("exists-witness-labeling", wit, here.violation)
        else:
            entries[prop] = Entry("fails-exhaustively", None, here.violation)
    report = HierarchyReport(entries)
    for strong, weak in zip(CHAIN, CHAIN[1:]):
        if report.exists(strong) and not report.exists(weak):
            raise AssertionError(f"{strong} found but {weak} refuted")
    return report
