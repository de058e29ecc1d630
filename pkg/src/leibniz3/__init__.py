"""Exact computations with finite-dimensional left Leibniz 3-algebras."""

from .algebra3 import (Algebra3, Violation, bracket, is_derivation, is_lie3, is_valid,
                       left_mult_matrix, validate)
from .bounds import BoundReport, schur_report, tightness_gap
from .exactfield import GF, QQ, FieldSpec, char_of, parse_field
from .generators import CentralFamilySpec, abelian, central_family, direct_sum, filippov4
from .linalg import (Matrix, Subspace, complement_coords, contains, kernel, rref, span,
                     subspace_intersect, subspace_sum)
from .structure import (CenterKind, Side, annihilator, center, derived_ideal, is_ideal,
                        is_subalgebra, quotient)

__all__ = [
    "Algebra3", "Violation", "bracket", "is_derivation", "is_lie3", "is_valid",
    "left_mult_matrix", "validate", "BoundReport", "schur_report", "tightness_gap",
    "GF", "QQ", "FieldSpec", "char_of", "parse_field", "CentralFamilySpec", "abelian",
    "central_family", "direct_sum", "filippov4", "Matrix", "Subspace", "complement_coords",
    "contains", "kernel", "rref", "span", "subspace_intersect", "subspace_sum", "CenterKind",
    "Side", "annihilator", "center", "derived_ideal", "is_ideal", "is_subalgebra", "quotient",
]
