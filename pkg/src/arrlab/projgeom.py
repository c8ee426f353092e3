"""Points, lines and line arrangements in P^n over an exact field.

A line is stored as the RREF of a 2 x (n+1) spanning matrix, so equal lines
have equal representations in any ambient dimension.  Incidence questions
reduce to exact ranks of stacked spans.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .casalg.poly import Poly
from .exactfield import Field, kernel_rows, rank_rows, rref_rows


class GeometryError(ValueError):
    """Degenerate geometric input (equal points, equal lines, bad shapes)."""


class BudgetExceeded(RuntimeError):
    """A brute-force search or algebra computation would exceed its configured budget."""


@dataclass(frozen=True)
class ProjPoint:
    field: Field
    coords: tuple

    @classmethod
    def of(cls, f: Field, coords: Sequence) -> "ProjPoint":
        vals = [f.convert(c) for c in coords]
        return cls.from_elements(f, vals)

    @classmethod
    def from_elements(cls, f: Field, vals: Sequence) -> "ProjPoint":
        lead = next((v for v in vals if v != 0), None)
        if lead is None:
            raise GeometryError("the zero vector is not a projective point")
        inv = f.inv(lead)
        return cls(f, tuple(f.mul(inv, v) for v in vals))

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def sort_key(self) -> tuple:
        return tuple(self.field.sort_key(c) for c in self.coords)

    def to_json(self) -> list:
        return [self.field.format(c) for c in self.coords]

    def __repr__(self) -> str:
        return "[" + ":".join(str(self.field.format(c)) for c in self.coords) + "]"


@dataclass(frozen=True)
class ProjLine:
    """Line spanned by the two rows of ``span`` (kept in RREF)."""

    field: Field
    span: tuple

    @classmethod
    def from_rows(cls, f: Field, r1: Sequence, r2: Sequence, convert: bool = True) -> "ProjLine":
        if convert:
            r1 = [f.convert(c) for c in r1]
            r2 = [f.convert(c) for c in r2]
        if len(r1) != len(r2):
            raise GeometryError("spanning vectors have different lengths")
        rows, _ = rref_rows(f, [r1, r2], len(r1))
        if len(rows) != 2:
            raise GeometryError("spanning vectors are dependent: not a line")
        return cls(f, (tuple(rows[0]), tuple(rows[1])))

    @property
    def n(self) -> int:
        return len(self.span[0]) - 1

    def contains(self, p: ProjPoint) -> bool:
        return rank_rows(self.field, [*self.span, p.coords], self.n + 1) == 2

    def sort_key(self) -> tuple:
        fk = self.field.sort_key
        return tuple(tuple(fk(c) for c in r) for r in self.span)

    def to_json(self) -> list:
        return [[self.field.format(c) for c in r] for r in self.span]

    def __repr__(self) -> str:
        return "ProjLine(" + ", ".join(
            "[" + ",".join(str(self.field.format(c)) for c in r) + "]" for r in self.span) + ")"


def line_from_points(p: ProjPoint, q: ProjPoint) -> ProjLine:
    if p.field != q.field or p.n != q.n:
        raise GeometryError("points live in different spaces")
    if p == q:
        raise GeometryError("equal points do not determine a line")
    return ProjLine.from_rows(p.field, p.coords, q.coords, convert=False)


def _check_pair(l1: ProjLine, l2: ProjLine) -> None:
    if l1.field != l2.field or l1.n != l2.n:
        raise GeometryError("lines live in different spaces")


def line_meet(l1: ProjLine, l2: ProjLine) -> ProjPoint | None:
    """Intersection point of two distinct lines, ``None`` if they are skew."""
    _check_pair(l1, l2)
    f = l1.field
    if l1 == l2:
        raise GeometryError("a line does not meet itself in a point")
    rk = rank_rows(f, [*l1.span, *l2.span], l1.n + 1)
    if rk == 4:
        return None
    # a*u1 + b*u2 = c*w1 + d*w2: kernel of the (n+1) x 4 coefficient system
    u1, u2 = l1.span
    w1, w2 = l2.span
    cols = [u1, u2, [f.neg(x) for x in w1], [f.neg(x) for x in w2]]
    system = [[cols[j][i] for j in range(4)] for i in range(l1.n + 1)]
    ker = kernel_rows(f, system, 4)
    a, b = ker[0][0], ker[0][1]
    vec = [f.add(f.mul(a, x), f.mul(b, y)) for x, y in zip(u1, u2)]
    return ProjPoint.from_elements(f, vec)


@dataclass(frozen=True)
class Arrangement:
    field: Field
    n: int
    lines: tuple[ProjLine, ...]

    def __post_init__(self):
        if self.n < 2:
            raise GeometryError("ambient dimension must be at least 2")
        if not self.lines:
            raise GeometryError("an arrangement needs at least one line")
        if len(set(self.lines)) != len(self.lines):
            raise GeometryError("arrangement lines must be pairwise distinct")
        for ln in self.lines:
            if ln.field != self.field or ln.n != self.n:
                raise GeometryError("line does not live in the arrangement's space")

    @classmethod
    def of(cls, lines: Sequence[ProjLine]) -> "Arrangement":
        lines = tuple(lines)
        if not lines:
            raise GeometryError("an arrangement needs at least one line")
        return cls(lines[0].field, lines[0].n, lines)

    def __len__(self) -> int:
        return len(self.lines)

    def subarrangement(self, indices: Iterable[int]) -> "Arrangement":
        return Arrangement(self.field, self.n, tuple(self.lines[i] for i in indices))

    @cached_property
    def meets(self) -> dict[tuple[int, int], ProjPoint]:
        """Intersection point for every meeting pair i < j."""
        out = {}
        for i, j in itertools.combinations(range(len(self.lines)), 2):
            pt = line_meet(self.lines[i], self.lines[j])
            if pt is not None:
                out[(i, j)] = pt
        return out


@dataclass(frozen=True)
class SingularPoint:
    point: ProjPoint
    incident: tuple[int, ...]
    planar: bool

    def to_json(self) -> dict:
        return {"point": self.point.to_json(), "incident": list(self.incident), "planar": self.planar}


def singular_points(a: Arrangement) -> list[SingularPoint]:
    """Every point on two or more lines, with all incident lines and the planarity flag."""
    groups: dict[ProjPoint, set[int]] = {}
    for (i, j), pt in a.meets.items():
        groups.setdefault(pt, set()).update((i, j))
    out = []
    for pt, inc in groups.items():
        idx = tuple(sorted(inc))
        rows = [r for i in idx for r in a.lines[i].span]
        planar = rank_rows(a.field, rows, a.n + 1) <= 3
        out.append(SingularPoint(pt, idx, planar))
    out.sort(key=lambda s: (s.point.sort_key(), s.incident))
    return out


def has_only_planar_singularities(a: Arrangement) -> tuple[bool, SingularPoint | None]:
    for sp in singular_points(a):
        if len(sp.incident) >= 3 and not sp.planar:
            return False, sp
    return True, None


# ---------------------------------------------------------------------------
# lines on surfaces
# ---------------------------------------------------------------------------

def _binary_powers(f: Field, a, b, top: int) -> list[list]:
    """Coefficient lists (in v) of (a*u + b*v)^k for k = 0..top; index = power of v."""
    out = [[f.one]]
    for _ in range(top):
        prev = out[-1]
        nxt = [f.zero] * (len(prev) + 1)
        for i, c in enumerate(prev):
            if c != 0:
                nxt[i] = f.add(nxt[i], f.mul(c, a))
                nxt[i + 1] = f.add(nxt[i + 1], f.mul(c, b))
        out.append(nxt)
    return out


def restrict_to_line(s: Poly, line: ProjLine) -> list:
    """Coefficients of the binary form s(u*r1 + v*r2), indexed by the power of v."""
    f = s.field
    if s.nvars != line.n + 1:
        raise GeometryError("surface and line live in different spaces")
    r1, r2 = line.span
    top = max((max(e) for e in s.terms), default=0)
    powers = [_binary_powers(f, r1[i], r2[i], top) for i in range(s.nvars)]
    deg = s.degree()
    coeffs = [f.zero] * (deg + 1)
    for e, c in s.terms.items():
        acc = [c]
        for i, k in enumerate(e):
            if k:
                pk = powers[i][k]
                nxt = [f.zero] * (len(acc) + len(pk) - 1)
                for x, cx in enumerate(acc):
                    if cx != 0:
                        for y, cy in enumerate(pk):
                            if cy != 0:
                                nxt[x + y] = f.add(nxt[x + y], f.mul(cx, cy))
                acc = nxt
        for x, cx in enumerate(acc):
            if cx != 0:
                coeffs[x] = f.add(coeffs[x], cx)
    return coeffs


def line_on_surface(line: ProjLine, s: Poly) -> bool:
    """True iff the surface polynomial vanishes identically on the line."""
    return all(c == 0 for c in restrict_to_line(s, line))


DEFAULT_MAX_Q = 64


def _rref_line_shapes(n: int):
    """Pivot pairs and free positions of 2 x (n+1) RREF matrices."""
    for i, j in itertools.combinations(range(n + 1), 2):
        free1 = [c for c in range(i + 1, n + 1) if c != j]
        free2 = list(range(j + 1, n + 1))
        yield i, j, free1, free2


def enumerate_lines_on_surface(s: Poly, f: Field, max_q: int = DEFAULT_MAX_Q) -> list[ProjLine]:
    """All F_q-rational lines of P^3 lying on ``s``, in canonical order.

    Lines are walked as RREF spans pivot pattern by pivot pattern.  Each RREF
    row is itself a point of the line, so only rows lying on ``s`` are paired
    before the exact restriction test.
    """
    if f.is_rational:
        raise GeometryError("line enumeration needs a finite field")
    if s.field != f:
        raise GeometryError("surface is defined over a different field")
    if s.nvars != 4:
        raise GeometryError("line enumeration is implemented for surfaces in P^3")
    q = f.order
    if q > max_q:
        raise BudgetExceeded(f"q={q} exceeds the line-enumeration budget max_q={max_q}")
    n = 3
    found = []
    elems = list(f.elements())
    for i, j, free1, free2 in _rref_line_shapes(n):
        rows1 = []
        for vals in itertools.product(elems, repeat=len(free1)):
            r = [0] * (n + 1)
            r[i] = f.one
            for c, v in zip(free1, vals):
                r[c] = v
            if s.evaluate(r) == 0:
                rows1.append(r)
        if not rows1:
            continue
        rows2 = []
        for vals in itertools.product(elems, repeat=len(free2)):
            r = [0] * (n + 1)
            r[j] = f.one
            for c, v in zip(free2, vals):
                r[c] = v
            if s.evaluate(r) == 0:
                rows2.append(r)
        for r1 in rows1:
            for r2 in rows2:
                ln = ProjLine(f, (tuple(r1), tuple(r2)))
                if line_on_surface(ln, s):
                    found.append(ln)
    found.sort(key=ProjLine.sort_key)
    return found


class NotBilinear(GeometryError):
    """Quadric is not of the shape x0*A(x2,x3) - x1*B(x2,x3)."""


def bilinear_parts(qd: Poly) -> tuple[tuple, tuple]:
    """(A, B) coefficient pairs (on x2, x3) with qd = x0*A - x1*B; raises NotBilinear."""
    f = qd.field
    if qd.nvars != 4:
        raise NotBilinear("quadric must live in P^3")
    a = [f.zero, f.zero]
    b = [f.zero, f.zero]
    for e, c in qd.terms.items():
        if sum(e) != 2 or e[0] + e[1] != 1 or e[2] + e[3] != 1:
            raise NotBilinear(f"term with exponent {e} breaks the bilinear shape")
        slot = 0 if e[2] else 1
        if e[0]:
            a[slot] = c
        else:
            b[slot] = f.neg(c)
    if rank_rows(f, [a, b], 2) != 2:
        raise NotBilinear("A and B must be linearly independent")
    return tuple(a), tuple(b)


def ruling_lines_of_bilinear_quadric(qd: Poly, s: Poly, f: Field) -> list[ProjLine]:
    """Lines of both rulings of ``qd`` (over F_q) that lie on ``s``, in canonical order.

    Writing qd = det [[x0, x1], [B, A]], the first ruling is parametrised by
    [c2:c3] as span{[B(c), A(c), 0, 0], [0, 0, c2, c3]}; the second by [u:w]
    as the common zeros of u*x0 - w*B and u*x1 - w*A.
    """
    if f.is_rational:
        raise GeometryError("ruling scan needs a finite field")
    (a2, a3), (b2, b3) = bilinear_parts(qd)
    params = [(f.one, v) for v in f.elements()] + [(f.zero, f.one)]
    out = set()
    for c2, c3 in params:
        A = f.add(f.mul(a2, c2), f.mul(a3, c3))
        B = f.add(f.mul(b2, c2), f.mul(b3, c3))
        ln = ProjLine.from_rows(f, [B, A, f.zero, f.zero], [f.zero, f.zero, c2, c3], convert=False)
        if line_on_surface(ln, s):
            out.add(ln)
    for u, w in params:
        nw = f.neg(w)
        forms = [[u, f.zero, f.mul(nw, b2), f.mul(nw, b3)],
                 [f.zero, u, f.mul(nw, a2), f.mul(nw, a3)]]
        r1, r2 = kernel_rows(f, forms, 4)
        ln = ProjLine.from_rows(f, r1, r2, convert=False)
        if line_on_surface(ln, s):
            out.add(ln)
    return sorted(out, key=ProjLine.sort_key)


def projective_points(f: Field, n: int) -> list[tuple]:
    """All points of P^n(F_q) as canonical coordinate tuples."""
    if f.is_rational:
        raise GeometryError("Q has infinitely many points")
    elems = list(f.elements())
    out = []
    for lead in range(n + 1):
        for tail in itertools.product(elems, repeat=n - lead):
            out.append((0,) * lead + (1,) + tail)
    return out
