import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrlab.casalg import Poly
from arrlab.casalg.poly import monomials_of_degree
from arrlab.exactfield import Field
from arrlab.projgeom import (Arrangement, BudgetExceeded, GeometryError, NotBilinear, ProjLine, ProjPoint,
                             bilinear_parts, enumerate_lines_on_surface, has_only_planar_singularities,
                             line_from_points, line_meet, line_on_surface, projective_points,
                             restrict_to_line, ruling_lines_of_bilinear_quadric, singular_points)

F5, F7 = Field.finite(5), Field.finite(7)
QQ = Field.rational()


def brute_force_lines(s: Poly, f: Field) -> set[ProjLine]:
    """Lines all of whose points lie on s; exact when deg s <= q."""
    on = [ProjPoint(f, p) for p in projective_points(f, 3) if s.evaluate(p) == 0]
    onset = set(on)
    found = set()
    for p, q in itertools.combinations(on, 2):
        ln = line_from_points(p, q)
        if ln in found:
            continue
        pts = [ProjPoint.from_elements(f, [f.add(f.mul(a, x), f.mul(b, y)) for x, y in zip(*ln.span)])
               for a, b in [(f.one, f.zero)] + [(c, f.one) for c in f.elements()]]
        if all(pt in onset for pt in pts):
            found.add(ln)
    return found


def test_projective_point_counts():
    assert len(projective_points(F5, 3)) == 1 + 5 + 25 + 125
    assert len(projective_points(Field.finite(2, 2), 2)) == 21


def test_point_normalisation_and_zero_vector():
    assert ProjPoint.of(F7, [0, 3, 6]) == ProjPoint.of(F7, [0, 1, 2])
    with pytest.raises(GeometryError):
        ProjPoint.of(F7, [0, 0, 0])


def test_lines_and_meets_over_q():
    l1 = ProjLine.from_rows(QQ, [1, 0, 0, 0], [0, 1, 0, 0])
    l2 = ProjLine.from_rows(QQ, [1, 1, 0, 0], [0, 0, 1, 0])
    l3 = ProjLine.from_rows(QQ, [0, 0, 1, 0], [0, 0, 0, 1])
    assert line_meet(l1, l2) == ProjPoint.of(QQ, [1, 1, 0, 0])
    assert line_meet(l1, l3) is None
    with pytest.raises(GeometryError):
        line_meet(l1, l1)
    with pytest.raises(GeometryError):
        ProjLine.from_rows(QQ, [1, 2, 3, 4], [2, 4, 6, 8])


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=16, max_size=16))
def test_meet_lies_on_both_lines(v):
    try:
        l1 = ProjLine.from_rows(F7, v[0:4], v[4:8])
        l2 = ProjLine.from_rows(F7, v[8:12], v[12:16])
    except GeometryError:
        return
    if l1 == l2:
        return
    p = line_meet(l1, l2)
    if p is not None:
        assert l1.contains(p) and l2.contains(p)
    else:
        assert not any(l1.contains(ProjPoint(F7, q)) and l2.contains(ProjPoint(F7, q))
                       for q in projective_points(F7, 3))


def test_planar_and_nonplanar_triple_points():
    # three lines through e0 inside the plane x3 = 0, then a fourth leaving it
    rows = [([1, 0, 0, 0], [0, 1, 0, 0]), ([1, 0, 0, 0], [0, 0, 1, 0]), ([1, 0, 0, 0], [0, 1, 1, 0])]
    lines = tuple(ProjLine.from_rows(QQ, a, b) for a, b in rows)
    planar = Arrangement(QQ, 3, lines)
    assert has_only_planar_singularities(planar) == (True, None)
    bad = Arrangement(QQ, 3, lines + (ProjLine.from_rows(QQ, [1, 0, 0, 0], [0, 0, 0, 1]),))
    flag, witness = has_only_planar_singularities(bad)
    assert not flag and witness.incident == (0, 1, 2, 3)
    assert [len(sp.incident) for sp in singular_points(bad)] == [4]


def test_arrangement_rejects_duplicates_and_mixed_spaces():
    ln = ProjLine.from_rows(QQ, [1, 0, 0, 0], [0, 1, 0, 0])
    with pytest.raises(GeometryError):
        Arrangement(QQ, 3, (ln, ln))
    with pytest.raises(GeometryError):
        Arrangement(QQ, 4, (ln,))


def test_restriction_of_surface_to_line():
    s = Poly.parse("x0*x3 - x1*x2", QQ, 4)
    ln = ProjLine.from_rows(QQ, [1, 0, 0, 0], [0, 1, 0, 0])
    assert line_on_surface(ln, s)
    other = ProjLine.from_rows(QQ, [1, 0, 0, 1], [0, 1, 0, 0])
    assert restrict_to_line(s, other) == [1, 0, 0]


def test_fermat_cubic_has_27_lines_over_f7():
    s = Poly.parse("x0^3 + x1^3 + x2^3 + x3^3", F7, 4)
    lines = enumerate_lines_on_surface(s, F7)
    assert len(lines) == 27
    assert lines == sorted(lines, key=ProjLine.sort_key)


def _random_form(rng, f, deg):
    mons = monomials_of_degree(4, deg)
    return Poly(f, 4, {m: rng.randrange(f.order) for m in mons if rng.random() < 0.5})


@pytest.mark.parametrize("seed", range(6))
def test_line_enumeration_matches_brute_force(seed):
    rng = random.Random(seed)
    f = F5 if seed % 2 else Field.finite(3)
    # reducible forms so that lines actually occur
    s = _random_form(rng, f, 1) * _random_form(rng, f, 1)
    if seed % 3 == 0:
        s = s * _random_form(rng, f, 1)
    if not s:
        return
    assert set(enumerate_lines_on_surface(s, f)) == brute_force_lines(s, f)


def test_line_enumeration_respects_budget():
    f = Field.finite(67)
    with pytest.raises(BudgetExceeded):
        enumerate_lines_on_surface(Poly.parse("x0*x1", f, 4), f, max_q=64)
    with pytest.raises(GeometryError):
        enumerate_lines_on_surface(Poly.parse("x0*x1", QQ, 4), QQ)


def test_ruling_scan_finds_both_rulings():
    q = Poly.parse("x0*x3 - x1*x2", F7, 4)
    # every line of the quadric lies on its square
    lines = ruling_lines_of_bilinear_quadric(q, q * q, F7)
    assert len(lines) == 2 * 8
    assert set(lines) == set(enumerate_lines_on_surface(q, F7))


def test_bilinear_parts_rejects_other_quadrics():
    assert bilinear_parts(Poly.parse("x0*x3 - x1*x2", F7, 4))
    with pytest.raises(NotBilinear):
        bilinear_parts(Poly.parse("x0^2 + x1^2", F7, 4))
