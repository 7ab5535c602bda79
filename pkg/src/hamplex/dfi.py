"""Determinantal facet ideals: maximal-minor generators and a Groebner basis check.

Variables x[i][j] (row i in 0..d, column j in 1..n) are numbered i*n + j - 1.
A monomial is a dense exponent tuple in that numbering, so the diagonal lex
order (x[0][1] > x[0][2] > ... > x[1][1] > ...) is plain tuple comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from .complex_core import Complex, ComplexError

PRIME = 32003
MAX_D, MAX_N, MAX_FACETS = 3, 13, 12


class DfiCapacityError(ComplexError):
    pass


class Field:
    """Coefficient arithmetic: exact rationals, or integers modulo PRIME."""

    def __init__(self, kind: str = "rational"):
        if kind not in ("rational", "prime"):
            raise ComplexError(f"unknown field {kind!r}")
        self.kind = kind

    def __repr__(self) -> str:
        return f"Field({self.kind!r})"

    def coerce(self, x):
        return Fraction(x) if self.kind == "rational" else int(x) % PRIME

    def norm(self, x):
        return x if self.kind == "rational" else x % PRIME

    def inv(self, x):
        return 1 / x if self.kind == "rational" else pow(x, PRIME - 2, PRIME)


RATIONAL = Field("rational")


@dataclass
class Poly:
    nvars: int
    terms: dict = field(default_factory=dict)
    field: Field = RATIONAL

    def copy(self) -> "Poly":
        return Poly(self.nvars, dict(self.terms), self.field)

    def is_zero(self) -> bool:
        return not self.terms

    def lead(self):
        """(monomial, coefficient) of the order-maximal term."""
        m = max(self.terms)
        return m, self.terms[m]

    def sorted_terms(self):
        return sorted(self.terms.items(), reverse=True)

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        f = self.field
        for m, c in other.terms.items():
            v = f.norm(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(self.nvars, out, f)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(self.nvars, {m: f.norm(-c) for m, c in self.terms.items()}, f)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict = {}
        f = self.field
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = f.norm(out.get(m, 0) + c1 * c2)
        return Poly(self.nvars, {m: c for m, c in out.items() if c}, f)

    def scale(self, mono, coeff) -> "Poly":
        f = self.field
        return Poly(self.nvars, {tuple(a + b for a, b in zip(m, mono)): f.norm(c * coeff)
                                 for m, c in self.terms.items()}, f)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def evaluate(self, values) -> object:
        """Substitute values[k] for variable k."""
        total = 0
        for m, c in self.terms.items():
            t = c
            for k, e in enumerate(m):
                if e:
                    t *= values[k] ** e
            total += t
        return self.field.norm(total)


def variable(i: int, j: int, n: int) -> int:
    return i * n + j - 1


def monomial_from(pairs, d: int, n: int) -> tuple:
    """Exponent tuple of the product of x[i][j] over (i, j) pairs."""
    e = [0] * ((d + 1) * n)
    for i, j in pairs:
        e[variable(i, j, n)] += 1
    return tuple(e)


def diagonal_lex_compare(m1, m2) -> int:
    """1 if m1 > m2, -1 if m1 < m2, 0 if equal."""
    return (m1 > m2) - (m1 < m2)


def _sign(perm) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def minor(rows, cols, d: int, n: int, fld: Field = RATIONAL) -> Poly:
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols) or not rows:
        raise ComplexError("minor needs equally many rows and columns")
    if rows != sorted(set(rows)) or cols != sorted(set(cols)):
        raise ComplexError("minor indices must be strictly increasing")
    if rows[0] < 0 or rows[-1] > d or cols[0] < 1 or cols[-1] > n:
        raise ComplexError("minor index out of range")
    terms = {}
    for perm in permutations(range(len(rows))):
        m = monomial_from(((rows[k], cols[perm[k]]) for k in range(len(rows))), d, n)
        terms[m] = fld.coerce(_sign(perm))
    return Poly((d + 1) * n, terms, fld)


def facet_minor(f, d: int, n: int, fld: Field = RATIONAL) -> Poly:
    return minor(range(d + 1), f, d, n, fld)


def dfi_generators(cx: Complex, fld: Field = RATIONAL) -> list[Poly]:
    cx.require_pure()
    return [facet_minor(f, cx.d, cx.n, fld) for f in cx.sorted_facets()]


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _quotient(b, a):
    return tuple(y - x for x, y in zip(a, b))


@dataclass
class Reduction:
    remainder: Poly
    quotients: list

    def reconstruct(self, basis) -> Poly:
        total = self.remainder.copy()
        for q, g in zip(self.quotients, basis):
            if not q.is_zero():
                total = total + q * g
        return total


def reduce(p: Poly, basis: list[Poly]) -> Reduction:
    """Normal form by multivariate division; always the first basis element that fits."""
    if not basis:
        raise ComplexError("reduction needs a nonempty basis")
    fld = p.field
    leads = [g.lead() for g in basis]
    work = dict(p.terms)
    rem: dict = {}
    quots = [dict() for _ in basis]
    while work:
        m = max(work)
        c = work[m]
        for k, (lm, lc) in enumerate(leads):
            if _divides(lm, m):
                q = _quotient(m, lm)
                factor = fld.norm(c * fld.inv(lc))
                quots[k][q] = fld.norm(quots[k].get(q, 0) + factor)
                for gm, gc in basis[k].terms.items():
                    t = tuple(a + b for a, b in zip(gm, q))
                    v = fld.norm(work.get(t, 0) - factor * gc)
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            rem[m] = c
            del work[m]
    nv = p.nvars
    return Reduction(Poly(nv, rem, fld),
                     [Poly(nv, {m: c for m, c in q.items() if c}, fld) for q in quots])


def s_polynomial(f: Poly, g: Poly) -> Poly:
    (mf, cf), (mg, cg) = f.lead(), g.lead()
    lcm = tuple(max(a, b) for a, b in zip(mf, mg))
    fld = f.field
    return f.scale(_quotient(lcm, mf), fld.inv(cf)) - g.scale(_quotient(lcm, mg), fld.inv(cg))


@dataclass
class GBReport:
    is_gb: bool
    checked_pairs: int
    skipped_coprime: int
    failure: tuple | None = None

    def to_json(self, d: int | None = None, n: int | None = None) -> dict:
        out = {"is_gb": self.is_gb, "checked_pairs": self.checked_pairs,
               "skipped_coprime": self.skipped_coprime, "failure": None}
        if self.failure is not None:
            (a, b), rem = self.failure
            out["failure"] = {"pair": [list(a), list(b)],
                              "remainder": format_poly(rem, d, n) if d is not None else None}
        return out


def check_caps(cx: Complex, max_d=MAX_D, max_n=MAX_N, max_facets=MAX_FACETS) -> None:
    if cx.d > max_d or cx.n > max_n or len(cx.facets) > max_facets:
        raise DfiCapacityError(
            f"Groebner check limited to d <= {max_d}, n <= {max_n}, at most {max_facets} facets "
            f"(got d={cx.d}, n={cx.n}, {len(cx.facets)} facets); raise the facet limit with --cap")


def gb_check_minors(cx: Complex, fld: Field = RATIONAL, **caps) -> GBReport:
    """Buchberger's criterion on the facet minors, first failure stops the scan."""
    check_caps(cx, **caps)
    facets = cx.sorted_facets()
    gens = dfi_generators(cx, fld)
    leads = [g.lead()[0] for g in gens]
    pairs = sorted(combinations(range(len(gens)), 2),
                   key=lambda p: (sum(max(a, b) for a, b in zip(leads[p[0]], leads[p[1]])), p))
    checked = skipped = 0
    for a, b in pairs:
        if all(x == 0 or y == 0 for x, y in zip(leads[a], leads[b])):
            skipped += 1
            continue
        checked += 1
        red = reduce(s_polynomial(gens[a], gens[b]), gens)
        if not red.remainder.is_zero():
            return GBReport(False, checked, skipped, ((facets[a], facets[b]), red.remainder))
    return GBReport(True, checked, skipped)


def initial_terms(cx: Complex) -> tuple[list[tuple], bool]:
    """Leading monomials of the generators and whether each is squarefree."""
    leads = [g.lead()[0] for g in dfi_generators(cx)]
    return leads, all(max(m) <= 1 for m in leads)


def _shift_up_pairs(cx: Complex):
    d = cx.d
    fs = cx.sorted_facets()
    for a in fs:
        for b in fs:
            for l in range(d):
                if (a[:l + 1] == b[:l + 1] and a[l + 1] > a[l] + 1
                        and all(b[l + k] == b[l] + k for k in range(1, d - l + 1))):
                    yield a, b, l


def _shift_down_pairs(cx: Complex):
    d = cx.d
    fs = cx.sorted_facets()
    for a in fs:
        for b in fs:
            for l in range(1, d + 1):
                if (a[l:] == b[l:] and a[l - 1] < a[l] - 1
                        and all(b[l - k] == b[l] - k for k in range(1, l + 1))):
                    yield a, b, l


def gbac_consequence_check(cx: Complex, fld: Field = RATIONAL) -> dict:
    """For each qualifying facet pair: the shifted facet is present and the
    witnessing polynomial reduces to zero."""
    d, n = cx.d, cx.n
    gens = dfi_generators(cx, fld)
    facets = set(cx.facets)
    out = {"pairs": 0, "violations": [], "nonzero_remainders": []}
    for a, b, l in _shift_up_pairs(cx):
        out["pairs"] += 1
        target = a[:l] + (a[l] + 1,) + a[l + 1:]
        rows = range(l + 1, d + 1)
        p, q = facet_minor(a, d, n, fld), facet_minor(b, d, n, fld)
        f = minor(rows, a[l + 1:], d, n, fld) * q - p * minor(rows, b[l + 1:], d, n, fld)
        _record(out, a, b, l, "up", target, facets, f, gens)
    for a, b, l in _shift_down_pairs(cx):
        out["pairs"] += 1
        target = a[:l] + (a[l] - 1,) + a[l + 1:]
        rows = range(0, l)
        p, q = facet_minor(a, d, n, fld), facet_minor(b, d, n, fld)
        f = minor(rows, a[:l], d, n, fld) * q - p * minor(rows, b[:l], d, n, fld)
        _record(out, a, b, l, "down", target, facets, f, gens)
    return out


def _record(out, a, b, l, kind, target, facets, f, gens) -> None:
    if target not in facets:
        out["violations"].append({"F": list(a), "G": list(b), "l": l, "kind": kind,
                                  "missing": list(target)})
    if not reduce(f, gens).remainder.is_zero():
        out["nonzero_remainders"].append({"F": list(a), "G": list(b), "l": l, "kind": kind})


def format_poly(p: Poly, d: int, n: int) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for m, c in p.sorted_terms():
        factors = []
        for k, e in enumerate(m):
            if e:
                i, j = divmod(k, n)
                v = f"x[{i}][{j + 1}]"
                factors.append(v if e == 1 else f"{v}^{e}")
        if p.field.kind == "prime" and c > PRIME // 2:
            c = c - PRIME
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = "*".join(factors) or "1"
        if mag != 1:
            body = f"{mag}*{body}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
