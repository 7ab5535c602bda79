"""Pure simplicial complexes on labeled vertices 1..n and their basic operations."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 64

Face = tuple[int, ...]


class ComplexError(ValueError):
    """Base class for invalid input to complex operations."""


class ArityError(ComplexError):
    pass


class PurityError(ComplexError):
    pass


class ParseError(ComplexError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def face(vertices: Iterable[int]) -> Face:
    return tuple(sorted(set(vertices)))


def mask(f: Iterable[int]) -> int:
    m = 0
    for v in f:
        m |= 1 << v
    return m


def from_mask(m: int) -> Face:
    out = []
    v = 0
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return tuple(out)


def gap(f: Sequence[int], d: int) -> int:
    if len(f) != d + 1:
        raise ArityError(f"face {tuple(f)} has {len(f)} vertices, expected {d + 1}")
    return max(f) - min(f) - d


def consecutive_face(n: int, d: int, i: int) -> Face:
    """H_i: the window i..i+d, wrapped modulo n and written increasingly."""
    if not 1 <= i <= n:
        raise ComplexError(f"window index {i} outside 1..{n}")
    return face(((i - 1 + k) % n) + 1 for k in range(d + 1))


def format_face(f: Sequence[int]) -> str:
    if all(v < 10 for v in f):
        return "".join(str(v) for v in f)
    return " ".join(str(v) for v in f)


@dataclass(frozen=True)
class Complex:
    """A simplicial complex given by its facets (maximal faces).

    ``d`` is the top dimension and ``n`` the size of the ambient vertex set
    1..n. Non-maximal faces passed in are dropped, so mixed dimensions only
    survive when a face is genuinely maximal.
    """

    d: int
    n: int
    facets: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n > MAX_VERTICES:
            raise ComplexError(f"n={self.n} exceeds the supported maximum {MAX_VERTICES}")
        if self.d < 0:
            raise ComplexError("dimension must be nonnegative")
        clean = set()
        for f in self.facets:
            t = tuple(f)
            if list(t) != sorted(set(t)):
                raise ComplexError(f"face {t} is not strictly increasing")
            if len(t) > self.d + 1:
                raise ArityError(f"face {t} exceeds dimension {self.d}")
            if t and (t[0] < 1 or t[-1] > self.n):
                raise ComplexError(f"face {t} has vertices outside 1..{self.n}")
            clean.add(t)
        maximal = frozenset(
            f for f in clean if not any(len(g) > len(f) and set(f) <= set(g) for g in clean)
        )
        object.__setattr__(self, "facets", maximal)
        object.__setattr__(self, "_masks", frozenset(mask(f) for f in maximal))

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], n: int | None = None,
                    d: int | None = None) -> "Complex":
        fs = [face(f) for f in facets]
        if d is None:
            d = max((len(f) for f in fs), default=1) - 1
        if n is None:
            n = max((f[-1] for f in fs if f), default=0)
        return cls(d, n, frozenset(fs))

    @property
    def masks(self) -> frozenset:
        return self._masks

    def sorted_facets(self) -> list[Face]:
        return sorted(self.facets)

    def __contains__(self, f) -> bool:
        return tuple(f) in self.facets

    def __len__(self) -> int:
        return len(self.facets)

    def is_pure(self) -> bool:
        return bool(self.facets) and all(len(f) == self.d + 1 for f in self.facets)

    def require_pure(self) -> None:
        if not self.is_pure():
            raise PurityError("operation requires a pure complex")

    def vertices(self) -> set[int]:
        return {v for f in self.facets for v in f}

    def has_face(self, f: Iterable[int]) -> bool:
        m = mask(f)
        return any(m & g == m for g in self._masks)

    def __str__(self) -> str:
        return ", ".join(format_face(f) for f in self.sorted_facets())


def simplex_skeleton(vertices: Iterable[int], d: int) -> set[Face]:
    return {c for c in combinations(sorted(vertices), d + 1)}


def full_skeleton(n: int, d: int) -> Complex:
    return Complex(d, n, frozenset(combinations(range(1, n + 1), d + 1)))


# ---------------------------------------------------------------- labelings

@dataclass(frozen=True)
class Labeling:
    """Bijection of 1..n onto itself; ``images[v-1]`` is the new label of v."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ComplexError(f"labeling {imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Labeling":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Labeling":
        """The labeling that gives label p to ``order[p-1]``."""
        images = [0] * len(order)
        for p, v in enumerate(order, start=1):
            images[v - 1] = p
        return cls(tuple(images))

    def order(self) -> tuple[int, ...]:
        """Old vertices listed by increasing new label."""
        out = [0] * self.n
        for v, lab in enumerate(self.images, start=1):
            out[lab - 1] = v
        return tuple(out)

    def __call__(self, v: int) -> int:
        return self.images[v - 1]

    def inverse(self) -> "Labeling":
        return Labeling(self.order())

    def then(self, other: "Labeling") -> "Labeling":
        """Apply self first, then other."""
        return Labeling(tuple(other(self(v)) for v in range(1, self.n + 1)))

    def reversed(self) -> "Labeling":
        return Labeling(tuple(self.n + 1 - x for x in self.images))

    def shifted(self, k: int) -> "Labeling":
        return Labeling(tuple((x - 1 + k) % self.n + 1 for x in self.images))

    def to_list(self) -> list[int]:
        return list(self.images)


def parse_labeling(text: str, n: int) -> Labeling:
    try:
        vals = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise ComplexError(f"bad labeling {text!r}") from exc
    if len(vals) != n:
        raise ComplexError(f"labeling has {len(vals)} entries, expected {n}")
    return Labeling(tuple(vals))


def relabel(cx: Complex, lab: Labeling) -> Complex:
    if lab.n != cx.n:
        raise ComplexError(f"labeling size {lab.n} does not match n={cx.n}")
    return Complex(cx.d, cx.n, frozenset(face(lab(v) for v in f) for f in cx.facets))


# ---------------------------------------------------------------- operations

def k_skeleton(cx: Complex, k: int) -> Complex:
    if not 0 <= k <= cx.d:
        raise ComplexError(f"skeleton dimension {k} outside 0..{cx.d}")
    faces = set()
    for f in cx.facets:
        faces.update(combinations(f, min(k + 1, len(f))))
    return Complex(k, cx.n, frozenset(faces))


def delete_vertices(cx: Complex, removed: Iterable[int]) -> Complex:
    """Induced complex on the remaining vertices, relabeled order-preservingly.

    The result is usually not pure; check ``is_pure()``.
    """
    gone = set(removed)
    keep = [v for v in range(1, cx.n + 1) if v not in gone]
    new = {v: i for i, v in enumerate(keep, start=1)}
    faces = set()
    for f in cx.facets:
        rest = tuple(new[v] for v in f if v not in gone)
        if rest:
            faces.add(rest)
    return Complex(cx.d, len(keep), frozenset(faces))


def induced_subcomplex(cx: Complex, keep: Iterable[int]) -> Complex:
    """Facets lying inside ``keep``, with the kept vertices compressed."""
    w = sorted(set(keep))
    new = {v: i for i, v in enumerate(w, start=1)}
    faces = {tuple(new[v] for v in f) for f in cx.facets if set(f) <= new.keys()}
    return Complex(cx.d, len(w), frozenset(faces))


@dataclass(frozen=True)
class DualGraph:
    nodes: tuple[Face, ...]
    edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.nodes]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


def dual_graph(cx: Complex) -> DualGraph:
    cx.require_pure()
    nodes = tuple(cx.sorted_facets())
    ms = [mask(f) for f in nodes]
    edges = []
    for a in range(len(nodes)):
        for b in range(a + 1, len(nodes)):
            if bin(ms[a] & ms[b]).count("1") == cx.d:
                edges.append((a, b))
    return DualGraph(nodes, tuple(edges))


def _components(adj: list[list[int]]) -> list[int]:
    comp = [-1] * len(adj)
    c = 0
    for s in range(len(adj)):
        if comp[s] >= 0:
            continue
        comp[s] = c
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if comp[w] < 0:
                    comp[w] = c
                    stack.append(w)
        c += 1
    return comp


def is_strongly_connected(cx: Complex) -> bool:
    cx.require_pure()
    comp = _components(dual_graph(cx).adjacency())
    return max(comp) == 0


def ridge_degree(cx: Complex, ridge: Iterable[int]) -> int:
    m = mask(ridge)
    return sum(1 for g in cx.masks if g & m == m and g != m)


def ridges(cx: Complex) -> set[Face]:
    out = set()
    for f in cx.facets:
        out.update(combinations(f, len(f) - 1))
    return out


def vertex_degrees(cx: Complex) -> dict[int, int]:
    deg = {v: 0 for v in range(1, cx.n + 1)}
    for f in cx.facets:
        for v in f:
            deg[v] += 1
    return deg


@dataclass(frozen=True)
class Distance:
    distance: float
    has_ascending_shortest: bool
    has_descending_shortest: bool


def _ascending_step(a: Face, b: Face) -> bool:
    """b replaces the smallest vertex of a by one above everything left."""
    rest = set(a[1:])
    new = set(b) - rest
    return rest <= set(b) and len(new) == 1 and min(new) > a[-1]


def facet_vertex_distance(cx: Complex, f: Sequence[int], v: int) -> Distance:
    """Dual-graph distance from facet f to the nearest facet containing v."""
    cx.require_pure()
    g = dual_graph(cx)
    start = g.nodes.index(tuple(f))
    if v in f:
        return Distance(0, True, True)
    adj = g.adjacency()
    dist = {start: 0}
    parents: dict[int, list[int]] = {start: []}
    q = deque([start])
    found = None
    while q:
        u = q.popleft()
        if found is not None and dist[u] >= found:
            break
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                parents[w] = [u]
                q.append(w)
                if v in g.nodes[w] and found is None:
                    found = dist[w]
            elif dist[w] == dist[u] + 1:
                parents[w].append(u)
    if found is None:
        return Distance(float("inf"), False, False)
    targets = [w for w, dw in dist.items() if dw == found and v in g.nodes[w]]

    def paths_to(w):
        if w == start:
            yield [w]
            return
        for p in parents[w]:
            for path in paths_to(p):
                yield path + [w]

    asc = desc = False
    for t in targets:
        for path in paths_to(t):
            fs = [g.nodes[i] for i in path]
            if not asc and all(_ascending_step(x, y) for x, y in zip(fs, fs[1:])):
                asc = True
            rev = fs[::-1]
            if not desc and all(_ascending_step(x, y) for x, y in zip(rev, rev[1:])):
                desc = True
            if asc and desc:
                break
    return Distance(found, asc, desc)


# ---------------------------------------------------------------- text format

def parse_complex(text: str) -> Complex:
    header = None
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(x) for x in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 2:
                raise ParseError("header must be 'd n'", lineno)
            header = nums
            if nums[0] < 0 or nums[1] < 1:
                raise ParseError("invalid dimension or vertex count", lineno)
            if nums[1] > MAX_VERTICES:
                raise ParseError(f"n={nums[1]} exceeds {MAX_VERTICES}", lineno)
            continue
        d, n = header
        if len(nums) != d + 1:
            raise ParseError(f"facet has {len(nums)} vertices, expected {d + 1}", lineno)
        if any(b <= a for a, b in zip(nums, nums[1:])):
            raise ParseError("facet vertices must be strictly increasing", lineno)
        if nums[0] < 1 or nums[-1] > n:
            raise ParseError(f"vertex outside 1..{n}", lineno)
        facets.append(tuple(nums))
    if header is None:
        raise ParseError("missing 'd n' header")
    if len(set(facets)) != len(facets):
        raise ParseError("duplicate facet")
    return Complex(header[0], header[1], frozenset(facets))


def format_complex(cx: Complex) -> str:
    lines = [f"{cx.d} {cx.n}"]
    lines += [" ".join(map(str, f)) for f in cx.sorted_facets()]
    return "\n".join(lines) + "\n"


def read_complex(path) -> Complex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())
