"""Backtracking over vertex labelings, assigning labels 1, 2, ... in order.

Property modules plug in a ``step`` callback (run right after a vertex gets
the next label, may veto the branch) and a ``final`` callback (run on a
complete labeling). Every already-labeled vertex carries a smaller label than
every unlabeled one, which is what makes most prefix checks possible.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable

from .complex_core import Complex, ComplexError, Labeling, mask

DEFAULT_TIGHT_CAP = 10
DEFAULT_HIERARCHY_CAP = 20


class CapacityError(ComplexError):
    def __init__(self, n: int, cap: int, what: str = "search"):
        self.n = n
        self.cap = cap
        super().__init__(
            f"{what} limited to n <= {cap} vertices, got n={n}; raise it with --cap"
        )


class SearchState:
    """Mutable bookkeeping shared with the property callbacks."""

    def __init__(self, cx: Complex):
        self.cx = cx
        self.n = cx.n
        self.d = cx.d
        self.facets = cx.sorted_facets()
        self.fmask = [mask(f) for f in self.facets]
        self.face_masks = set(self.fmask)
        self.containing: list[list[int]] = [[] for _ in range(self.n + 1)]
        for idx, f in enumerate(self.facets):
            for v in f:
                self.containing[v].append(idx)
        self.label = [0] * (self.n + 1)
        self.order: list[int] = []
        self.done = [0] * len(self.facets)
        self.labeled = 0

    # facet and face membership, in terms of old vertices
    def is_facet(self, m: int) -> bool:
        return m in self.face_masks

    def is_face(self, m: int) -> bool:
        return any(g & m == m for g in self.fmask)

    def window(self, i: int) -> int:
        """Mask of the old vertices holding labels i..i+d (wrapping)."""
        m = 0
        for k in range(self.d + 1):
            m |= 1 << self.order[(i - 1 + k) % self.n]
        return m

    def assign(self, v: int) -> None:
        self.order.append(v)
        self.label[v] = len(self.order)
        self.labeled |= 1 << v
        for idx in self.containing[v]:
            self.done[idx] += 1

    def unassign(self) -> None:
        v = self.order.pop()
        self.label[v] = 0
        self.labeled &= ~(1 << v)
        for idx in self.containing[v]:
            self.done[idx] -= 1

    def labeling(self) -> Labeling:
        return Labeling.from_order(self.order)


def twin_classes(cx: Complex) -> list[int]:
    """rep[v] = smallest vertex u with the transposition (u v) an automorphism."""
    n = cx.n
    masks = cx.masks
    rep = list(range(n + 1))
    for u, w in combinations(range(1, n + 1), 2):
        if rep[w] != w or rep[u] != u:
            continue
        bu, bw = 1 << u, 1 << w
        swapped = set()
        for m in masks:
            hu, hw = m & bu, m & bw
            if bool(hu) != bool(hw):
                m ^= bu | bw
            swapped.add(m)
        if swapped == masks:
            rep[w] = u
    return rep


StepFn = Callable[[SearchState, int], bool]
FinalFn = Callable[[SearchState], bool]


def find_labeling(cx: Complex, step: StepFn, final: FinalFn, *, anchor: bool = False,
                  cap: int = DEFAULT_TIGHT_CAP, use_twins: bool = True) -> Labeling | None:
    """First labeling (in search order) accepted by the callbacks, or None.

    ``anchor`` fixes vertex 1 to label 1, valid for properties that are
    invariant under cyclic shifts of the labels.
    """
    if cx.n > cap:
        raise CapacityError(cx.n, cap)
    st = SearchState(cx)
    rep = twin_classes(cx) if use_twins else list(range(cx.n + 1))
    n = cx.n

    def blocked(w: int) -> bool:
        r = rep[w]
        if r == w:
            return False
        # an unlabeled twin with a smaller index must go first
        for u in range(r, w):
            if rep[u] == r and not st.label[u]:
                return True
        return False

    def rec() -> bool:
        p = len(st.order)
        if p == n:
            return final(st)
        if anchor and p == 0:
            candidates = [1]
        else:
            candidates = [w for w in range(1, n + 1) if not st.label[w] and not blocked(w)]
        for w in candidates:
            st.assign(w)
            if step(st, w) and rec():
                return True
            st.unassign()
        return False

    if n == 0:
        return None
    if rec():
        return st.labeling()
    return None
