"""Exact multivariate polynomial algebra over the fields of :mod:`arrlab.exactfield`."""

from .arrangements import arrangement_ideal, line_ideal, link_degree
from .groebner import BuchbergerStats, groebner_basis, is_groebner_basis, normal_form
from .ideals import (Ideal, ci_regularity, dimension_degree, groebner, hilbert_function,
                     hilbert_kpoly, ideal_equal, ideal_intersection, minimal_generators)
from .poly import GREVLEX, LEX, MonomialOrder, Poly

__all__ = [
    "BuchbergerStats", "GREVLEX", "Ideal", "LEX", "MonomialOrder", "Poly",
    "arrangement_ideal", "ci_regularity", "dimension_degree", "groebner", "groebner_basis",
    "hilbert_function", "hilbert_kpoly", "ideal_equal", "ideal_intersection",
    "is_groebner_basis", "line_ideal", "link_degree", "minimal_generators", "normal_form",
]
