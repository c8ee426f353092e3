"""Ideals attached to line arrangements: line ideals, their intersection, link degrees."""

from __future__ import annotations

from ..exactfield import kernel_rows
from .ideals import Ideal, dimension_degree, ideal_intersection
from .poly import Poly

DEFAULT_MAX_LINES_FINITE = 16
DEFAULT_MAX_LINES_RATIONAL = 8


def line_ideal(line) -> Ideal:
    """The n - 1 linear forms cutting out ``line`` (a basis of the span's annihilator)."""
    f = line.field
    forms = kernel_rows(f, line.span, line.n + 1)
    return Ideal(f, line.n + 1, [Poly.linear(f, row) for row in forms])


def default_line_budget(field) -> int:
    return DEFAULT_MAX_LINES_RATIONAL if field.is_rational else DEFAULT_MAX_LINES_FINITE


def _check_budget(count: int, field, max_lines: int | None) -> None:
    from ..projgeom import BudgetExceeded

    limit = default_line_budget(field) if max_lines is None else max_lines
    if count > limit:
        raise BudgetExceeded(f"{count} lines exceed the algebra budget of {limit}")


def intersect_lines(lines, field, nvars: int) -> Ideal:
    """Iterated intersection of the line ideals (the unit ideal for no lines)."""
    if not lines:
        return Ideal(field, nvars, [Poly.constant(field, nvars, field.one)])
    acc = line_ideal(lines[0])
    for ln in lines[1:]:
        acc = ideal_intersection(acc, line_ideal(ln))
    return acc


def arrangement_ideal(a, max_lines: int | None = None) -> Ideal:
    """The radical ideal of the arrangement, as an intersection of its line ideals."""
    _check_budget(len(a.lines), a.field, max_lines)
    return intersect_lines(a.lines, a.field, a.n + 1)


def link_degree(a, i: int, max_lines: int | None = None) -> int:
    """Multiplicity of S/(J + p_i), J the ideal of all lines except line ``i``.

    When J + p_i defines the empty projective scheme (Krull dimension at most
    zero, or the unit ideal) the answer is 0: the line meets none of the others.
    """
    if not 0 <= i < len(a.lines):
        raise IndexError(f"line index {i} out of range")
    others = [ln for k, ln in enumerate(a.lines) if k != i]
    _check_budget(len(others), a.field, max_lines)
    if not others:
        return 0
    j = intersect_lines(others, a.field, a.n + 1)
    krull, degree = dimension_degree(j + line_ideal(a.lines[i]))
    return degree if krull >= 1 else 0
