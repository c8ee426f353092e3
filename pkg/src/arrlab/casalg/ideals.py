"""Ideals of a polynomial ring: Groebner-basis backed queries."""

from __future__ import annotations

from typing import Sequence

from ..exactfield import Field
from .groebner import groebner_basis, normal_form
from .hilbert import dimension_degree_from_kpoly, hilbert_function_from_kpoly, k_polynomial
from .poly import GREVLEX, MonomialOrder, Poly


class Ideal:
    """Generators plus a per-order cache of reduced Groebner bases."""

    def __init__(self, field: Field, nvars: int, gens: Sequence[Poly] = ()):
        self.field = field
        self.nvars = nvars
        self.gens = tuple(g for g in gens if g)
        for g in self.gens:
            if g.field != field or g.nvars != nvars:
                raise ValueError("generator lives in a different ring")
        self._gb: dict[MonomialOrder, tuple[Poly, ...]] = {}

    @classmethod
    def of(cls, gens: Sequence[Poly]) -> "Ideal":
        if not gens:
            raise ValueError("use Ideal(field, nvars) for the zero ideal")
        return cls(gens[0].field, gens[0].nvars, gens)

    @classmethod
    def parse(cls, texts: Sequence[str], f: Field, nvars: int, names=None) -> "Ideal":
        return cls(f, nvars, [Poly.parse(t, f, nvars, names) for t in texts])

    def __repr__(self) -> str:
        return f"Ideal({[g.to_str() for g in self.gens]})"

    def groebner(self, order: MonomialOrder = GREVLEX) -> tuple[Poly, ...]:
        gb = self._gb.get(order)
        if gb is None:
            gb = tuple(groebner_basis(self.gens, order))
            self._gb[order] = gb
        return gb

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].degree() == 0

    def contains(self, p: Poly) -> bool:
        return normal_form(p, self.groebner(), GREVLEX).is_zero()

    def __add__(self, other: "Ideal") -> "Ideal":
        _same_ring(self, other)
        return Ideal(self.field, self.nvars, self.gens + other.gens)

    def leading_monomials(self, order: MonomialOrder = GREVLEX) -> list[tuple]:
        return [g.lm(order) for g in self.groebner(order)]


def _same_ring(i: Ideal, j: Ideal) -> None:
    if i.field != j.field or i.nvars != j.nvars:
        raise ValueError("ideals live in different rings")


def groebner(i: Ideal, order: MonomialOrder = GREVLEX) -> tuple[Poly, ...]:
    return i.groebner(order)


def ideal_intersection(i: Ideal, j: Ideal) -> Ideal:
    """Generators of i ∩ j by eliminating t from t*i + (1 - t)*j."""
    _same_ring(i, j)
    f, n = i.field, i.nvars
    if not i.gens or not j.gens:
        return Ideal(f, n)
    m = n + 1
    t = Poly.variable(f, m, 0)
    one_minus_t = Poly.constant(f, m, f.one) - t
    gens = [t * g.embed(m, 1) for g in i.gens] + [one_minus_t * g.embed(m, 1) for g in j.gens]
    elim = MonomialOrder("elim", 1)
    gb = groebner_basis(gens, elim)
    kept = [g.drop_leading_vars(1) for g in gb if not any(e[0] for e in g.terms)]
    out = Ideal(f, n, kept)
    # the t-free part of an elimination basis is a Groebner basis for the
    # restricted grevlex order, but re-reduce to store the canonical form
    out._gb[GREVLEX] = tuple(groebner_basis(kept, GREVLEX))
    return out


def ideal_equal(i: Ideal, j: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    _same_ring(i, j)
    return i.groebner(order) == j.groebner(order)


def _require_homogeneous(i: Ideal) -> None:
    if not i.is_homogeneous():
        raise ValueError("ideal is not homogeneous")


def hilbert_kpoly(i: Ideal) -> list[int]:
    _require_homogeneous(i)
    return k_polynomial(i.leading_monomials(GREVLEX), i.nvars)


def hilbert_function(i: Ideal, upto: int) -> list[int]:
    """dim_K (S/i)_d for d = 0..upto."""
    return hilbert_function_from_kpoly(hilbert_kpoly(i), i.nvars, upto)


def dimension_degree(i: Ideal) -> tuple[int, int]:
    """(Krull dimension of S/i, degree); the unit ideal yields (-1, 0)."""
    return dimension_degree_from_kpoly(hilbert_kpoly(i), i.nvars)


def minimal_generators(i: Ideal) -> list[Poly]:
    """A minimal homogeneous generating set chosen greedily by degree from ``i.gens``."""
    _require_homogeneous(i)
    kept: list[Poly] = []
    for g in sorted(i.gens, key=lambda q: (q.degree(), sorted(q.terms))):
        if kept and Ideal(i.field, i.nvars, kept).contains(g):
            continue
        kept.append(g)
    return kept


def ci_regularity(i: Ideal) -> int | None:
    """Regularity of a complete-intersection ideal, ``None`` if not a CI.

    The ideal is certified a complete intersection when its codimension
    equals the number of minimal generators; then the Koszul complex is a
    minimal resolution and reg = sum(deg g) - c + 1.
    """
    _require_homogeneous(i)
    if not i.gens or i.is_unit():
        return None
    mins = minimal_generators(i)
    krull, _ = dimension_degree(i)
    if i.nvars - krull != len(mins):
        return None
    return sum(g.degree() for g in mins) - len(mins) + 1
