"""Seeded test corpus of small pure complexes (d in {1, 2}, n <= 7)."""

from __future__ import annotations

import random

from . import families as fam
from .complex_core import Complex

DEFAULT_SEED = 20240611
DEFAULT_SIZE = 220


def _fixed() -> list[Complex]:
    out = [fam.claw(), fam.four_cycle(), fam.cycle_complement(3), fam.path_graph(4),
           fam.path_graph(6), fam.two_simplices_skeleton(2), fam.two_simplices_boundary(2),
           fam.starred_square(2), fam.bouquet(1, 2), fam.bouquet(2, 2), fam.bouquet(2, 3),
           fam.wheel(2, 3), fam.wheel(2, 2), fam.wheel(1, 4), fam.annulus(2, 5), fam.annulus(2, 6),
           fam.annulus(2, 7), fam.annulus(1, 6), fam.suspension_of_points(6),
           fam.full_minus_wrap(5, 2), fam.full_minus_wrap(6, 2), fam.full_minus_wrap(7, 2),
           fam.full_minus_two(), fam.disjoint_simplices(2, 2), fam.disjoint_simplices(1, 3),
           fam.small_gap_complex(6, 2), fam.small_gap_complex(7, 1), fam.simplex_skeleton_complex(5, 2),
           fam.simplex_skeleton_complex(6, 1)]
    for name in ("weak-cycle-only", "diamond", "k2-join-3", "chordal-peo", "chordal-semi-closed",
                 "chordal-weakly-closed", "not-radical", "under-closed-not-chordal"):
        out.append(fam.named(name))
    return [c for c in out if c.n <= 7]


def _uses_all(cx: Complex) -> bool:
    return len(cx.vertices()) == cx.n


def random_corpus(count: int, seed: int = DEFAULT_SEED, max_n: int = 7) -> list[Complex]:
    rng = random.Random(seed)
    seen: set = set()
    out: list[Complex] = []
    while len(out) < count:
        d = rng.choice((1, 2))
        n = rng.randint(d + 2, max_n)
        density = rng.choice((0.3, 0.45, 0.6, 0.8))
        cx = fam.random_complex(n, d, rng, density)
        key = (d, n, cx.facets)
        if key in seen or not _uses_all(cx):
            continue
        seen.add(key)
        out.append(cx)
    return out


def corpus(size: int = DEFAULT_SIZE, seed: int = DEFAULT_SEED) -> list[Complex]:
    """Hand-picked complexes first, then seeded random ones up to ``size``."""
    fixed = _fixed()
    keys = {(c.d, c.n, c.facets) for c in fixed}
    extra = [c for c in random_corpus(size, seed) if (c.d, c.n, c.facets) not in keys]
    return (fixed + extra)[:max(size, len(fixed))]
