"""Tight and weak traceability/Hamiltonicity: fixed-labeling checks, labeling
search, certificates, and two small constructions on weak cycles."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .complex_core import (
    Complex,
    ComplexError,
    Labeling,
    consecutive_face,
    delete_vertices,
    mask,
    relabel,
)
from .search import DEFAULT_TIGHT_CAP, SearchState, find_labeling

KINDS = ("tight-path", "tight-cycle", "weak-path", "weak-cycle")
PROPERTIES = {
    "traceable": "tight-path",
    "hamiltonian": "tight-cycle",
    "weakly-traceable": "weak-path",
    "weakly-hamiltonian": "weak-cycle",
}
# cycles need at least d+2 vertices, otherwise every window is the same face
CYCLIC = ("hamiltonian", "weakly-hamiltonian")


class NotApplicable(ComplexError):
    pass


@dataclass(frozen=True)
class PathCertificate:
    kind: str
    labeling: Labeling
    indices: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ComplexError(f"unknown certificate kind {self.kind!r}")
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))

    def to_json(self) -> dict:
        return {"kind": self.kind, "labeling": self.labeling.to_list(),
                "indices": list(self.indices)}

    @classmethod
    def from_json(cls, data) -> "PathCertificate":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["kind"], Labeling(tuple(data["labeling"])), tuple(data["indices"]))


def min_cycle_length(n: int) -> int:
    # a closed chain of two faces is a bowtie, not a cycle
    return min(3, n)


# ------------------------------------------------------------ window helpers

def window_set(cx: Complex, lab: Labeling | None = None, cyclic: bool = False) -> set[int]:
    """Indices i with H_i a facet of the (relabeled) complex."""
    rc = cx if lab is None else relabel(cx, lab)
    top = rc.n if cyclic else rc.n - rc.d
    return {i for i in range(1, top + 1) if consecutive_face(rc.n, rc.d, i) in rc.facets}


def _windows_meet(n: int, d: int, i: int, j: int) -> bool:
    return bool(mask(consecutive_face(n, d, i)) & mask(consecutive_face(n, d, j)))


# ------------------------------------------------------------ tight checks

def is_traceable_with(cx: Complex, lab: Labeling | None = None) -> bool:
    if cx.n <= cx.d:
        return False
    present = window_set(cx, lab)
    return all(i in present for i in range(1, cx.n - cx.d + 1))


def is_hamiltonian_with(cx: Complex, lab: Labeling | None = None) -> bool:
    if cx.n < cx.d + 2:
        return False
    present = window_set(cx, lab, cyclic=True)
    return len(present) == cx.n


# ------------------------------------------------------------ weak paths

def weak_path_indices(n: int, d: int, present: set[int]) -> tuple[int, ...] | None:
    """Greedy furthest jump from H_1 to H_{n-d} through present windows."""
    last = n - d
    if last < 1 or 1 not in present:
        return None
    chain = [1]
    cur = 1
    while cur < last:
        nxt = max((j for j in range(cur + 1, min(cur + d, last) + 1) if j in present),
                  default=None)
        if nxt is None:
            return None
        chain.append(nxt)
        cur = nxt
    return tuple(chain)


def weak_path_indices_dfs(n: int, d: int, present: set[int]) -> tuple[int, ...] | None:
    """Explicit search over incident chains of distinct windows.

    Kept separate from the greedy route so the two can be cross-checked.
    """
    last = n - d
    if last < 1 or 1 not in present:
        return None
    full = (1 << n) - 1
    cover = {i: mask(range(i - 1, i + d)) for i in present}  # 0-indexed bits
    nbrs = {i: [j for j in sorted(present) if j != i and _windows_meet(n, d, i, j)]
            for i in present}
    path = [1]
    used = {1}

    def rec(cur: int, covered: int) -> bool:
        if covered == full and cur == last:
            return True
        for j in nbrs[cur]:
            if j not in used:
                used.add(j)
                path.append(j)
                if rec(j, covered | cover[j]):
                    return True
                path.pop()
                used.discard(j)
        return False

    return tuple(path) if rec(1, cover[1]) else None


def weakly_traceable_with(cx: Complex, lab: Labeling | None = None) -> PathCertificate | None:
    lab = lab or Labeling.identity(cx.n)
    idx = weak_path_indices(cx.n, cx.d, window_set(cx, lab))
    return None if idx is None else PathCertificate("weak-path", lab, idx)


# ------------------------------------------------------------ weak cycles

def weak_cycle_indices(n: int, d: int, present: set[int]) -> tuple[int, ...] | None:
    if not present or n < d + 2:
        return None
    k_min = min_cycle_length(n)
    pts = sorted(present)
    gaps = [b - a for a, b in zip(pts, pts[1:])] + [pts[0] + n - pts[-1]]
    if len(pts) >= k_min and max(gaps) <= d:
        return tuple(pts)
    full = (1 << n) - 1
    cover = {i: mask((i - 1 + k) % n for k in range(d + 1)) for i in present}
    nbrs = {i: [j for j in pts if j != i and cover[i] & cover[j]] for i in pts}
    # every cycle passes through a window covering vertex 1; start there
    starts = [i for i in pts if cover[i] & 1]
    for s in starts:
        path = [s]
        used = {s}

        def rec(cur: int, covered: int) -> bool:
            if covered == full and len(path) >= k_min and cover[cur] & cover[s]:
                return True
            for j in nbrs[cur]:
                # cycles through an earlier start were already tried
                if j not in used and (j > s or j not in starts):
                    used.add(j)
                    path.append(j)
                    if rec(j, covered | cover[j]):
                        return True
                    path.pop()
                    used.discard(j)
            return False

        if rec(s, cover[s]):
            return tuple(path)
    return None


def weakly_hamiltonian_with(cx: Complex, lab: Labeling | None = None) -> PathCertificate | None:
    lab = lab or Labeling.identity(cx.n)
    idx = weak_cycle_indices(cx.n, cx.d, window_set(cx, lab, cyclic=True))
    return None if idx is None else PathCertificate("weak-cycle", lab, idx)


# ------------------------------------------------------------ verification

def verify_certificate(cx: Complex, cert: PathCertificate) -> bool:
    """Re-check a certificate from scratch against the complex."""
    try:
        n, d = cx.n, cx.d
        if cert.labeling.n != n or n <= d:
            return False
        facets = relabel(cx, cert.labeling).facets
        idx = list(cert.indices)
        if not idx or len(set(idx)) != len(idx):
            return False
        cyclic = cert.kind in ("tight-cycle", "weak-cycle")
        if cyclic and n < d + 2:
            return False
        top = n if cyclic else n - d
        if any(not 1 <= i <= top for i in idx):
            return False
        faces = [consecutive_face(n, d, i) for i in idx]
        if any(f not in facets for f in faces):
            return False
        if cert.kind == "tight-path":
            return idx == list(range(1, n - d + 1))
        if cert.kind == "tight-cycle":
            return idx == list(range(1, n + 1))
        sets = [set(f) for f in faces]
        if any(not (a & b) for a, b in zip(sets, sets[1:])):
            return False
        if set().union(*sets) != set(range(1, n + 1)):
            return False
        if cert.kind == "weak-path":
            return idx[0] == 1 and idx[-1] == n - d
        return len(idx) >= min_cycle_length(n) and bool(sets[-1] & sets[0])
    except (ComplexError, KeyError, IndexError):
        return False


def certificate_for(cx: Complex, prop: str, lab: Labeling) -> PathCertificate | None:
    if prop == "traceable":
        ok = is_traceable_with(cx, lab)
        return PathCertificate("tight-path", lab, range(1, cx.n - cx.d + 1)) if ok else None
    if prop == "hamiltonian":
        ok = is_hamiltonian_with(cx, lab)
        return PathCertificate("tight-cycle", lab, range(1, cx.n + 1)) if ok else None
    if prop == "weakly-traceable":
        return weakly_traceable_with(cx, lab)
    if prop == "weakly-hamiltonian":
        return weakly_hamiltonian_with(cx, lab)
    raise ComplexError(f"unknown property {prop!r}")


# ------------------------------------------------------------ search

def _tight_step(cyclic: bool):
    def step(st: SearchState, v: int) -> bool:
        p = len(st.order)
        if p > st.d and not st.is_facet(st.window(p - st.d)):
            return False
        return True

    def final(st: SearchState) -> bool:
        if not cyclic:
            return True
        return all(st.is_facet(st.window(i)) for i in range(st.n - st.d + 1, st.n + 1))

    return step, final


def _weak_path_callbacks():
    reach = {}

    def step(st: SearchState, v: int) -> bool:
        p = len(st.order)
        d = st.d
        if p <= d:
            return True
        k = p - d  # newest window index that is fully known
        present = st.is_facet(st.window(k))
        if k == 1:
            if not present:
                return False
            reach[p] = 1
            return True
        r = reach[p - 1]
        if present and k - r <= d:
            r = k
        reach[p] = r
        # nothing after index k can attach if the component of H_1 stalls
        return r + d >= k + 1 or r == st.n - d

    def final(st: SearchState) -> bool:
        return st.n - st.d >= 1 and reach.get(st.n, 0) == st.n - st.d

    return step, final


def _weak_cycle_callbacks():
    def step(st: SearchState, v: int) -> bool:
        p = len(st.order)
        d = st.d
        q = p - d  # label whose covering windows are now all known and unwrapped
        if q >= d + 1:
            if not any(st.is_facet(st.window(i)) for i in range(q - d, q + 1)):
                return False
        return True

    def final(st: SearchState) -> bool:
        present = {i for i in range(1, st.n + 1) if st.is_facet(st.window(i))}
        return weak_cycle_indices(st.n, st.d, present) is not None

    return step, final


def search_labeling(cx: Complex, prop: str, cap: int = DEFAULT_TIGHT_CAP) -> PathCertificate | None:
    if prop not in PROPERTIES:
        raise ComplexError(f"unknown property {prop!r}")
    if cx.n <= cx.d or (prop in CYCLIC and cx.n < cx.d + 2):
        return None
    if prop == "traceable":
        step, final = _tight_step(False)
        lab = find_labeling(cx, step, final, cap=cap)
    elif prop == "hamiltonian":
        step, final = _tight_step(True)
        lab = find_labeling(cx, step, final, anchor=True, cap=cap)
    elif prop == "weakly-traceable":
        step, final = _weak_path_callbacks()
        lab = find_labeling(cx, step, final, cap=cap)
    else:
        step, final = _weak_cycle_callbacks()
        lab = find_labeling(cx, step, final, anchor=True, cap=cap)
    if lab is None:
        return None
    cert = certificate_for(cx, prop, lab)
    if cert is None or not verify_certificate(cx, cert):
        raise AssertionError(f"search produced an invalid {prop} labeling {lab.to_list()}")
    return cert


# ------------------------------------------------------------ constructions

def lemma_deletion_extract(cx: Complex, cert: PathCertificate, j: int):
    """Turn a weak cycle into a weak path by dropping the private part of one face.

    ``j`` is 1-based into ``cert.indices``. Returns ``(complex, certificate)``;
    the complex is the deletion (in the rotated, compressed labels) when the
    face has private vertices, otherwise the input complex itself.
    """
    if cert.kind != "weak-cycle" or not verify_certificate(cx, cert):
        raise NotApplicable("needs a valid weak-cycle certificate")
    idx = list(cert.indices)
    k = len(idx)
    if k < 3 or not 1 <= j <= k:
        raise NotApplicable("needs k >= 3 and 1 <= j <= k")
    n, d = cx.n, cx.d
    here = set(consecutive_face(n, d, idx[j - 1]))
    prev = set(consecutive_face(n, d, idx[j - 2]))
    nxt = set(consecutive_face(n, d, idx[j % k]))
    private = here - prev - nxt
    if private:
        # the private labels form a cyclic run; rotate it to the top
        last = next(x for x in private if (x % n) + 1 not in private)
        rot = cert.labeling.shifted(n - last)
        rotated = relabel(cx, rot)
        gone = [rot.images[cert.labeling.order()[x - 1] - 1] for x in private]
        smaller = delete_vertices(rotated, gone)
        path = weakly_traceable_with(smaller)
        if path is None:
            raise AssertionError("deletion did not leave a weak path")
        return smaller, path
    if prev & nxt:
        raise NotApplicable("face has no private vertices and its neighbours meet")
    start = idx[j % k]
    rot = cert.labeling.shifted(n + 1 - start)
    path = weakly_traceable_with(cx, rot)
    if path is None:
        raise AssertionError("rotation did not give a weak path")
    return cx, path


def gamma_construction(cx: Complex) -> Complex:
    """Add d new vertices and a facet joining each old vertex to all of them."""
    if cx.d < 1:
        raise ComplexError("needs d >= 1")
    n, d = cx.n, cx.d
    apex = tuple(range(n + 1, n + d + 1))
    extra = {(v,) + apex for v in range(1, n + 1)}
    return Complex(d, n + d, frozenset(set(cx.facets) | extra))
