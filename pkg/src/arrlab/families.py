"""Generators for the named line arrangements and dual graphs.

Geometric generators return :class:`~arrlab.projgeom.Arrangement` objects;
combinatorial ones return :class:`~arrlab.graphs.Graph` objects with labelled
vertices.  Everything is deterministic: parameters are the canonical first
field elements and roots of unity are the least ones of the required order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from sympy import isprime

from .casalg.ideals import Ideal
from .casalg.poly import Poly, product
from .exactfield import Field, FieldError, kernel_rows, primitive_root_of_unity, rank_rows
from .graphs import Graph
from .projgeom import (Arrangement, GeometryError, ProjLine,
                       enumerate_lines_on_surface, line_on_surface,
                       ruling_lines_of_bilinear_quadric)


class FamilyError(ValueError):
    """Invalid family parameters or a field that cannot realise the family."""


def _need_elements(f: Field, count: int) -> list:
    try:
        return f.first_elements(count)
    except FieldError as exc:
        raise FamilyError(str(exc)) from None


def plane_through(l1: ProjLine, l2: ProjLine) -> Poly:
    """The linear form of the plane spanned by two meeting lines of P^3."""
    f = l1.field
    ker = kernel_rows(f, [*l1.span, *l2.span], l1.n + 1)
    if len(ker) != 1 or l1.n != 3:
        raise GeometryError("lines do not span a plane of P^3")
    return Poly.linear(f, ker[0])


# ---------------------------------------------------------------------------
# two rulings of a smooth quadric
# ---------------------------------------------------------------------------

def two_rulings(m: int, n: int, f: Field) -> Arrangement:
    """m lines of one ruling of x0*x3 - x1*x2 followed by n lines of the other."""
    if m < 1 or n < 1:
        raise FamilyError("two_rulings needs m >= 1 and n >= 1")
    elems = _need_elements(f, max(m, n))
    z, o = f.zero, f.one
    lines = [ProjLine.from_rows(f, [o, a, z, z], [z, z, o, a], convert=False) for a in elems[:m]]
    lines += [ProjLine.from_rows(f, [o, z, b, z], [z, o, z, b], convert=False) for b in elems[:n]]
    return Arrangement(f, 3, tuple(lines))


def two_rulings_ci(n: int, f: Field) -> Ideal:
    """(quadric, product of n planes), the planes pairing line i of each ruling."""
    a = two_rulings(n, n, f)
    quadric = Poly.parse("x0*x3 - x1*x2", f, 4)
    planes = [plane_through(a.lines[i], a.lines[n + i]) for i in range(n)]
    return Ideal(f, 4, [quadric, product(planes)])


# ---------------------------------------------------------------------------
# Fermat surfaces
# ---------------------------------------------------------------------------

def fermat_label(a: int, i: int, j: int) -> str:
    return f"l{a}({i},{j})"


def fermat_labels(d: int) -> list[str]:
    return [fermat_label(a, i, j) for a in (1, 2, 3)
            for i in range(1, d + 1) for j in range(1, d + 1)]


def _fermat_index(d: int, a: int, i: int, j: int) -> int:
    return (a - 1) * d * d + (i - 1) * d + (j - 1)


def fermat_combinatorial(d: int) -> Graph:
    """Dual graph of the 3d^2 Fermat lines from the four adjacency rules.

    Rules, indices mod d: same type and (i = h or j = k); types 1,2 with
    i - j = h - k; types 1,3 with i + j = h - k; types 2,3 with i + j = h + k.
    """
    if d < 3:
        raise FamilyError("fermat needs d >= 3")
    rng = range(1, d + 1)
    verts = [(a, i, j) for a in (1, 2, 3) for i in rng for j in rng]

    def adjacent(u, v) -> bool:
        (a, i, j), (b, h, k) = u, v
        if a == b:
            return i == h or j == k
        if (a, b) == (1, 2):
            return (i - j - h + k) % d == 0
        if (a, b) == (1, 3):
            return (i + j - h + k) % d == 0
        return (i + j - h - k) % d == 0

    edges = [(x, y) for x, y in itertools.combinations(range(len(verts)), 2)
             if adjacent(verts[x], verts[y])]
    return Graph.from_edges(len(verts), edges, fermat_labels(d))


@dataclass(frozen=True)
class FermatRoots:
    """omega (primitive 2d-th root) and the labelled d-th roots zeta_1..zeta_d."""

    d: int
    omega: object
    zeta: tuple = dc_field(repr=False)
    offset: int = 0


def fermat_roots(d: int, f: Field) -> FermatRoots:
    """Roots used by the Fermat generators: zeta_i = (omega^2)^(i + offset).

    The offset is (d - 1) / 2 for odd d, which makes the geometric incidences
    agree with the adjacency rules label for label; for even d no shift of
    this kind exists and the offset is 0.
    """
    if d < 3:
        raise FamilyError("fermat needs d >= 3")
    if f.is_rational:
        raise FamilyError("fermat lines need roots of unity: use a finite field")
    try:
        omega = primitive_root_of_unity(f, 2 * d)
    except FieldError as exc:
        raise FamilyError(str(exc)) from None
    zeta = f.mul(omega, omega)
    offset = (d - 1) // 2 if d % 2 else 0
    roots = tuple(f.pow(zeta, i + offset) for i in range(1, d + 1))
    return FermatRoots(d, omega, roots, offset)


def _fermat_line(f: Field, a: int, wi, wj) -> ProjLine:
    z, o = f.zero, f.one
    if a == 1:
        rows = [o, wi, z, z], [z, z, o, wj]
    elif a == 2:
        rows = [o, z, wi, z], [z, o, z, wj]
    else:
        rows = [o, z, z, wi], [z, o, wj, z]
    return ProjLine.from_rows(f, *rows, convert=False)


def fermat_plane_index(d: int, a: int, i: int) -> int:
    """1-based index of the plane pi_{a,i} among the 3d planes."""
    return (a - 1) * d + i


def _plane_from_index(d: int, p: int) -> tuple[int, int]:
    if not 1 <= p <= 3 * d:
        raise FamilyError(f"plane index {p} outside 1..{3 * d}")
    return (p - 1) // d + 1, (p - 1) % d + 1


def fermat_geometric(d: int, f: Field) -> Arrangement:
    """The 3d^2 lines of x0^d + x1^d + x2^d + x3^d, ordered by (a, i, j)."""
    return fermat_sub(d, range(1, 3 * d + 1), f)


def fermat_sub(d: int, planes: Iterable[int], f: Field) -> Arrangement:
    """Lines of the Fermat arrangement lying in the chosen planes pi_{a,i} (1-based indices)."""
    chosen = sorted({_plane_from_index(d, p) for p in planes})
    if not chosen:
        raise FamilyError("choose at least one plane")
    roots = fermat_roots(d, f)
    w = [f.mul(roots.omega, z) for z in roots.zeta]
    lines = [_fermat_line(f, a, w[i - 1], w[j - 1]) for a, i in chosen for j in range(1, d + 1)]
    return Arrangement(f, 3, tuple(lines))


def fermat_sub_labels(d: int, planes: Iterable[int]) -> list[str]:
    chosen = sorted({_plane_from_index(d, p) for p in planes})
    return [fermat_label(a, i, j) for a, i in chosen for j in range(1, d + 1)]


def fermat_sub_graph(d: int, planes: Iterable[int]) -> Graph:
    """Induced subgraph of the combinatorial Fermat graph on the chosen planes' lines."""
    g = fermat_combinatorial(d)
    chosen = sorted({_plane_from_index(d, p) for p in planes})
    return g.induced([_fermat_index(d, a, i, j) for a, i in chosen for j in range(1, d + 1)])


def fermat_surface(d: int, f: Field) -> Poly:
    return Poly.parse(" + ".join(f"x{k}^{d}" for k in range(4)), f, 4)


def fermat_plane_form(d: int, f: Field, a: int, i: int) -> Poly:
    """x_a - omega*zeta_i*x0, the plane containing the lines l_a(i, j)."""
    roots = fermat_roots(d, f)
    c = f.neg(f.mul(roots.omega, roots.zeta[i - 1]))
    coeffs = [c, f.zero, f.zero, f.zero]
    coeffs[a] = f.one
    return Poly.linear(f, coeffs)


def fermat_ci(d: int, f: Field, planes: Iterable[int] | None = None) -> Ideal:
    """(Fermat surface, product of the chosen plane forms); all 3d planes by default."""
    idx = range(1, 3 * d + 1) if planes is None else planes
    chosen = sorted({_plane_from_index(d, p) for p in idx})
    forms = [fermat_plane_form(d, f, a, i) for a, i in chosen]
    return Ideal(f, 4, [fermat_surface(d, f), product(forms)])


def least_prime_congruent_one(m: int, start: int = 2) -> int:
    """Least prime q >= start with q = 1 (mod m)."""
    q = max(start, 2)
    while not (isprime(q) and (q - 1) % m == 0):
        q += 1
    return q


def least_fermat_prime(d: int) -> int:
    """Least prime q with 2d | q - 1, so that every Fermat line is F_q-rational."""
    return least_prime_congruent_one(2 * d)


# ---------------------------------------------------------------------------
# lines on a smooth cubic
# ---------------------------------------------------------------------------

def _cubic_vertices() -> list[tuple]:
    out = [("E", i) for i in range(1, 7)]
    out += [("L", i, j) for i, j in itertools.combinations(range(1, 7), 2)]
    out += [("C", i) for i in range(1, 7)]
    return out


def _cubic_label(v: tuple) -> str:
    return v[0] + "".join(str(x) for x in v[1:])


def _cubic_adjacent(u: tuple, v: tuple) -> bool:
    if u[0] > v[0]:
        u, v = v, u
    kinds = u[0] + v[0]
    if kinds == "EL":
        return u[1] in v[1:]
    if kinds == "CL":
        return u[1] in v[1:]
    if kinds == "CE":
        return u[1] != v[1]
    if kinds == "LL":
        return not set(u[1:]) & set(v[1:])
    return False


def twenty_seven_graph() -> Graph:
    """Incidence graph of the 27 lines: E_i, L_ij (i < j), C_i."""
    verts = _cubic_vertices()
    edges = [(x, y) for x, y in itertools.combinations(range(len(verts)), 2)
             if _cubic_adjacent(verts[x], verts[y])]
    return Graph.from_edges(len(verts), edges, [_cubic_label(v) for v in verts])


def steiner_graph() -> Graph:
    g = twenty_seven_graph()
    keep = ["E1", "E2", "E3", "L12", "L13", "L23", "C1", "C2", "C3"]
    return g.induced([g.index(x) for x in keep])


def double_six_graph() -> Graph:
    g = twenty_seven_graph()
    keep = [f"E{i}" for i in range(1, 7)] + [f"C{i}" for i in range(1, 7)]
    return g.induced([g.index(x) for x in keep])


# ---------------------------------------------------------------------------
# small explicit arrangements
# ---------------------------------------------------------------------------

def cone_over_points(s: int, f: Field, n: int = 4) -> Arrangement:
    """s lines joining the apex e_n to moment-curve points (1, t, ..., t^(n-1), 0)."""
    if s < 2:
        raise FamilyError("cone needs s >= 2")
    if n < 3:
        raise FamilyError("cone needs ambient dimension n >= 3")
    params = _need_elements(f, s)
    apex = [f.zero] * n + [f.one]
    lines = []
    for t in params:
        pt = [f.pow(t, k) if k else f.one for k in range(n)] + [f.zero]
        lines.append(ProjLine.from_rows(f, pt, apex, convert=False))
    return Arrangement(f, n, tuple(lines))


EIGHT_LINE_PRIMES = (
    ("t", "y - z", "x"), ("t", "y + z", "x"), ("z - t", "y", "x"), ("z + t", "y", "x"),
    ("w", "z - t", "x - y"), ("w", "z + t", "x + y"), ("w", "y + z", "x + t"),
    ("w", "y - z", "x - t"),
)
EIGHT_LINE_QUADRICS = ("x^2 - y^2 + z^2 - t^2", "x*z - y*t", "x*w")
EIGHT_LINE_EDGES = ((1, 2), (1, 3), (1, 4), (1, 8), (2, 3), (2, 4), (2, 7), (3, 4), (3, 5),
                    (4, 6), (5, 7), (5, 8), (6, 7), (6, 8))


def example_eight_primes(f: Field | None = None) -> list[Ideal]:
    f = f or Field.rational()
    return [Ideal.parse(gens, f, 5) for gens in EIGHT_LINE_PRIMES]


def example_eight_ideal(f: Field | None = None) -> Ideal:
    f = f or Field.rational()
    return Ideal.parse(EIGHT_LINE_QUADRICS, f, 5)


def example_eight_lines(f: Field | None = None) -> Arrangement:
    """Eight lines of P^4 (coordinates x, y, z, t, w), each the zero set of a listed prime."""
    f = f or Field.rational()
    lines = []
    for prime in example_eight_primes(f):
        rows = []
        for g in prime.gens:
            row = [f.zero] * 5
            for e, c in g.terms.items():
                row[e.index(1)] = c
            rows.append(row)
        r1, r2 = kernel_rows(f, rows, 5)
        lines.append(ProjLine.from_rows(f, r1, r2, convert=False))
    return Arrangement(f, 4, tuple(lines))


def _cube_forms(f: Field) -> tuple[list, list]:
    """a = (x0, x1, x2) and b = (x3, x4, x0 + x1 + x2 + x3 + x4) as coefficient rows."""
    z, o = f.zero, f.one
    unit = [[o if k == i else z for k in range(5)] for i in range(5)]
    return unit[:3], [unit[3], unit[4], [o] * 5]


def cube_subsets() -> list[tuple[int, ...]]:
    """The subsets sigma of {1, 2, 3} in binary order: (), (1,), (2,), (1, 2), ..."""
    return [tuple(i + 1 for i in range(3) if mask >> i & 1) for mask in range(8)]


def cube_ci(f: Field | None = None) -> Arrangement:
    """The 8 lines of V(a1*b1, a2*b2, a3*b3) in P^4, one per sigma in ``cube_subsets()``."""
    f = f or Field.rational()
    a, b = _cube_forms(f)
    lines = []
    for sigma in cube_subsets():
        rows = [a[i - 1] if i in sigma else b[i - 1] for i in (1, 2, 3)]
        if rank_rows(f, rows, 5) != 3:
            raise FamilyError(f"cube forms are degenerate over {f!r} for sigma={sigma}")
        r1, r2 = kernel_rows(f, rows, 5)
        lines.append(ProjLine.from_rows(f, r1, r2, convert=False))
    return Arrangement(f, 4, tuple(lines))


def cube_ci_ideal(f: Field | None = None) -> Ideal:
    f = f or Field.rational()
    a, b = _cube_forms(f)
    gens = [Poly.linear(f, a[i]) * Poly.linear(f, b[i]) for i in range(3)]
    return Ideal(f, 5, gens)


def cube_graph() -> Graph:
    """The 3-cube on the subsets of {1, 2, 3}: edges join sets differing in one element."""
    subs = cube_subsets()
    edges = [(x, y) for x, y in itertools.combinations(range(8), 2)
             if len(set(subs[x]) ^ set(subs[y])) == 1]
    return Graph.from_edges(8, edges, ["{" + ",".join(map(str, s)) + "}" for s in subs])


# ---------------------------------------------------------------------------
# the quartic with 64 lines
# ---------------------------------------------------------------------------

SCHUR_QUARTIC = "x0^4 - x0*x1^3 - x2^4 + x2*x3^3"
SCHUR_OCTIC = ("80*x0^3*x1^5 + x1^8 + 64*x0^2*x1^2*x2^4 + 64*x0^3*x1*x2^3*x3 + 8*x1^4*x2^3*x3"
               " + 64*x2^6*x3^2 - 64*x0^2*x1^2*x2*x3^3 + 8*x0^3*x1*x3^4 + x1^4*x3^4"
               " + 16*x2^3*x3^5 + x3^8")


def schur_quadrics(f: Field) -> list[Poly]:
    """Q_a, Q_b, Q_c, Q_d with zeta the least primitive cube root of unity in ``f``."""
    try:
        zeta = primitive_root_of_unity(f, 3)
    except FieldError as exc:
        raise FamilyError(str(exc)) from None
    z2 = f.mul(zeta, zeta)
    x = [Poly.variable(f, 4, i) for i in range(4)]

    def lin(c2, c3) -> Poly:
        return x[2].scale(c2) + x[3].scale(c3)

    one, two = f.one, f.from_int(2)
    qa = x[0] * x[3] - x[1] * x[2]
    qb = x[0] * lin(f.mul(two, z2), one) - x[1] * lin(f.neg(one), zeta)
    qc = x[0] * lin(two, one) - x[1] * lin(f.neg(one), one)
    qd = x[0] * lin(f.neg(f.mul(two, z2)), f.neg(zeta)) - x[1] * lin(zeta, f.neg(one))
    return [qa, qb, qc, qd]


@dataclass
class SchurResult:
    field: Field
    e1: Arrangement | None
    e2: Arrangement | None
    all: Arrangement | None
    per_quadric: list[int]


def schur_lines(f: Field, max_q: int = 200) -> SchurResult:
    """E1 from ruling scans of Q_a..Q_d on F, E2 from the lines of F on the octic P."""
    quartic = Poly.parse(SCHUR_QUARTIC, f, 4)
    octic = Poly.parse(SCHUR_OCTIC, f, 4)
    per_quadric = []
    e1: list[ProjLine] = []
    for qd in schur_quadrics(f):
        found = ruling_lines_of_bilinear_quadric(qd, quartic, f)
        per_quadric.append(len(found))
        e1.extend(ln for ln in found if ln not in e1)
    on_f = enumerate_lines_on_surface(quartic, f, max_q=max_q)
    e2 = [ln for ln in on_f if line_on_surface(ln, octic) and ln not in e1]
    for ln in e1:
        if not line_on_surface(ln, quartic):
            raise GeometryError("ruling scan returned a line off the quartic")
    e1.sort(key=ProjLine.sort_key)

    def arr(lines):
        return Arrangement(f, 3, tuple(lines)) if lines else None

    return SchurResult(f, arr(e1), arr(e2), arr(e1 + e2), per_quadric)


def schur_candidate_fields(max_p: int = 200, extension_primes: Sequence[int] = (5, 7, 11)) -> list[Field]:
    """Primes q = 1 (mod 12) up to ``max_p``, then F_{p^2} for the listed small primes."""
    out = [Field.finite(p) for p in range(13, max_p + 1) if isprime(p) and p % 12 == 1]
    for p in extension_primes:
        if (p * p - 1) % 12 == 0:
            out.append(Field.finite(p, 2))
    return out



# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------

FAMILY_NAMES = ("two_rulings", "fermat", "fermat_sub", "twenty_seven", "steiner", "double_six",
                "cone", "example_eight", "cube_ci", "schur")


def _int_param(params: dict, key: str, default: int | None = None) -> int:
    if key not in params:
        if default is None:
            raise FamilyError(f"missing parameter {key!r}")
        return default
    value = params[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise FamilyError(f"parameter {key!r} must be an integer")
    return value


def build_family(desc: dict):
    """Construct a family from ``{"name": ..., "params": {...}, "field": {...}}``.

    ``fermat`` with a field gives the geometric arrangement and without one the
    combinatorial graph; the cubic-surface graphs never take a field.
    """
    name = desc.get("name")
    params = desc.get("params") or {}
    fdesc = desc.get("field")
    try:
        f = Field.from_json(fdesc) if fdesc is not None else None
    except (FieldError, KeyError, TypeError) as exc:
        raise FamilyError(f"bad field: {exc}") from None

    def need_field() -> Field:
        if f is None:
            raise FamilyError(f"family {name!r} needs a field")
        return f

    if name == "two_rulings":
        return two_rulings(_int_param(params, "m"), _int_param(params, "n"), need_field())
    if name == "fermat":
        d = _int_param(params, "d")
        return fermat_geometric(d, f) if f is not None else fermat_combinatorial(d)
    if name == "fermat_sub":
        d = _int_param(params, "d")
        planes = params.get("planes")
        if not isinstance(planes, list) or not planes:
            raise FamilyError("fermat_sub needs a nonempty list 'planes'")
        return fermat_sub(d, planes, f) if f is not None else fermat_sub_graph(d, planes)
    if name == "twenty_seven":
        return twenty_seven_graph()
    if name == "steiner":
        return steiner_graph()
    if name == "double_six":
        return double_six_graph()
    if name == "cone":
        return cone_over_points(_int_param(params, "s"), need_field(), _int_param(params, "n", 4))
    if name == "example_eight":
        return example_eight_lines(f)
    if name == "cube_ci":
        return cube_ci(f)
    if name == "schur":
        res = schur_lines(need_field(), max_q=_int_param(params, "max_q", 200))
        if res.all is None:
            raise FamilyError("no lines found over this field")
        return res.all
    raise FamilyError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")


__all__ = [
    "FAMILY_NAMES", "FamilyError", "build_family", "cone_over_points", "cube_ci",
    "cube_ci_ideal", "cube_graph", "double_six_graph", "example_eight_ideal",
    "example_eight_lines", "example_eight_primes", "fermat_ci", "fermat_combinatorial",
    "fermat_geometric", "fermat_labels", "fermat_sub", "fermat_sub_graph", "fermat_surface",
    "least_fermat_prime", "schur_lines", "schur_quadrics", "steiner_graph", "twenty_seven_graph",
    "two_rulings", "two_rulings_ci",
]
