import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from arrlab.casalg import (GREVLEX, LEX, Ideal, MonomialOrder, Poly, ci_regularity, dimension_degree,
                           groebner_basis, hilbert_function, ideal_equal, ideal_intersection,
                           is_groebner_basis, minimal_generators, normal_form)
from arrlab.casalg.poly import monomials_of_degree
from arrlab.exactfield import Field, rank_rows

F7 = Field.finite(7)
QQ = Field.rational()
X = sympy.symbols("x0:4")


def to_sympy(p: Poly, modulus=None):
    expr = 0
    for e, c in p.terms.items():
        expr += sympy.Rational(c.numerator, c.denominator) * sympy.prod(
            [X[i] ** k for i, k in enumerate(e)]) if isinstance(c, Fraction) else c * sympy.prod(
            [X[i] ** k for i, k in enumerate(e)])
    kw = {"modulus": modulus} if modulus else {"domain": "QQ"}
    return sympy.Poly(expr, *X[:p.nvars], **kw)


def macaulay_hilbert(ideal: Ideal, d: int) -> int:
    """dim (S/I)_d from the rank of the degree-d Macaulay matrix of the generators."""
    f, n = ideal.field, ideal.nvars
    basis = monomials_of_degree(n, d)
    pos = {m: k for k, m in enumerate(basis)}
    rows = []
    for g in ideal.gens:
        if g.degree() > d:
            continue
        for m in monomials_of_degree(n, d - g.degree()):
            row = [f.zero] * len(basis)
            for e, c in g.terms.items():
                row[pos[tuple(a + b for a, b in zip(e, m))]] = c
            rows.append(row)
    return len(basis) - (rank_rows(f, rows, len(basis)) if rows else 0)


def test_parse_and_arithmetic():
    p = Poly.parse("(x0 + x1)^2 - x0^2", F7, 2)
    assert p == Poly.parse("2*x0*x1 + x1^2", F7, 2)
    assert (p * 0).is_zero()
    assert p.degree() == 2 and p.is_homogeneous()
    assert p.evaluate([1, 1]) == 3


def test_parse_errors():
    with pytest.raises(ValueError):
        Poly.parse("x0 +", F7, 2)
    with pytest.raises(ValueError):
        Poly.parse("x5", F7, 2)


def test_monomial_orders():
    a, b = (2, 0, 0), (0, 1, 1)
    assert GREVLEX.key(a) > GREVLEX.key(b)
    assert LEX.key((1, 0, 0)) > LEX.key((0, 5, 5))
    elim = MonomialOrder("elim", 1)
    assert elim.key((1, 0, 0)) > elim.key((0, 3, 3))
    with pytest.raises(ValueError):
        MonomialOrder("elim", 0)


def test_unit_and_zero_ideals():
    assert groebner_basis([Poly.parse("x0 - 1", QQ, 1), Poly.parse("x0", QQ, 1)], GREVLEX) == [
        Poly.parse("1", QQ, 1)]
    assert groebner_basis([], GREVLEX) == []


def test_twisted_cubic():
    i = Ideal.parse(["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"], QQ, 4)
    assert dimension_degree(i) == (2, 3)
    assert hilbert_function(i, 5) == [3 * d + 1 for d in range(6)]
    assert ci_regularity(i) is None


def test_ci_regularity_of_complete_intersections():
    i = Ideal.parse(["x0^2 + x1^2 + x2^2 + x3^2", "x0*x1*x2"], F7, 4)
    assert ci_regularity(i) == 2 + 3 - 2 + 1
    assert dimension_degree(i) == (2, 6)


def test_minimal_generators_drops_redundant():
    i = Ideal.parse(["x0^2", "x0*x1", "x0^2*x1 + x0*x1^2"], F7, 2)
    assert len(minimal_generators(i)) == 2


def test_intersection_of_coordinate_lines():
    a = Ideal.parse(["x2", "x3"], QQ, 4)
    b = Ideal.parse(["x0", "x1"], QQ, 4)
    expected = Ideal.parse(["x0*x2", "x0*x3", "x1*x2", "x1*x3"], QQ, 4)
    assert ideal_equal(ideal_intersection(a, b), expected)


homog_quadric = st.lists(st.integers(0, 6), min_size=6, max_size=6)


def _quadric(coeffs, f=F7):
    mons = monomials_of_degree(3, 2)
    return Poly(f, 3, {m: f.convert(c) for m, c in zip(mons, coeffs)})


@settings(max_examples=40, deadline=None)
@given(st.lists(homog_quadric, min_size=1, max_size=3))
def test_groebner_matches_sympy_mod_7(gens):
    polys = [q for q in (_quadric(c) for c in gens) if q]
    if not polys:
        return
    mine = groebner_basis(polys, GREVLEX)
    assert is_groebner_basis(mine, GREVLEX)
    theirs = sympy.groebner([to_sympy(p, 7).as_expr() for p in polys], *X[:3], order="grevlex", modulus=7)
    mine_sym = {to_sympy(p, 7).monic() for p in mine}
    theirs_sym = {sympy.Poly(g, *X[:3], modulus=7).monic() for g in theirs.exprs}
    assert mine_sym == theirs_sym


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=6, max_size=6), min_size=1, max_size=3))
def test_groebner_matches_sympy_over_q(gens):
    polys = [q for q in (_quadric(c, QQ) for c in gens) if q]
    if not polys:
        return
    mine = groebner_basis(polys, GREVLEX)
    theirs = sympy.groebner([to_sympy(p).as_expr() for p in polys], *X[:3], order="grevlex", domain="QQ")
    assert {to_sympy(p).monic() for p in mine} == {sympy.Poly(g, *X[:3], domain="QQ").monic()
                                                   for g in theirs.exprs}


@settings(max_examples=30, deadline=None)
@given(st.lists(homog_quadric, min_size=1, max_size=3))
def test_hilbert_function_matches_macaulay_matrix(gens):
    polys = [q for q in (_quadric(c) for c in gens) if q]
    if not polys:
        return
    i = Ideal.of(polys)
    assert hilbert_function(i, 5) == [macaulay_hilbert(i, d) for d in range(6)]


@settings(max_examples=25, deadline=None)
@given(homog_quadric, homog_quadric)
def test_intersection_is_contained_in_both_and_contains_product(c1, c2):
    p, q = _quadric(c1), _quadric(c2)
    if not p or not q:
        return
    i, j = Ideal.of([p, Poly.parse("x0", F7, 3)]), Ideal.of([q])
    k = ideal_intersection(i, j)
    assert all(i.contains(g) and j.contains(g) for g in k.gens)
    assert all(k.contains(a * b) for a in i.gens for b in j.gens)


@settings(max_examples=40, deadline=None)
@given(homog_quadric, homog_quadric)
def test_normal_form_is_zero_on_ideal_members(c1, c2):
    p, q = _quadric(c1), _quadric(c2)
    if not p:
        return
    gb = groebner_basis([p], GREVLEX)
    assert normal_form(p * q, gb, GREVLEX).is_zero() if q else True
    r = normal_form(q, gb, GREVLEX)
    assert Ideal.of([p]).contains(q - r) if q else r.is_zero()


def test_hilbert_of_polynomial_ring():
    i = Ideal.parse(["0"], F7, 3)
    assert hilbert_function(i, 4) == [math.comb(d + 2, 2) for d in range(5)]
