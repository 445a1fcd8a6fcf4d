"""Exact and numeric computation in Cayley-Dickson algebras."""

from cdalg.algebra import (
    Algebra, Element, LinOp, bilinear, identity_report, is_zero_divisor,
    left_mul_op, make_algebra, octonions, quaternions, right_mul_op, sedenions,
    solve_left, standard_algebra,
)
from cdalg.eigen import EigenPair, Matrix2
from cdalg.poly import CDPoly, ScalarPoly, companion
from cdalg.roots import all_roots, factorize

__version__ = "0.1.0"

__all__ = [
    "Algebra", "Element", "LinOp", "bilinear", "identity_report", "is_zero_divisor",
    "left_mul_op", "make_algebra", "octonions", "quaternions", "right_mul_op",
    "sedenions", "solve_left", "standard_algebra", "EigenPair", "Matrix2",
    "CDPoly", "ScalarPoly", "companion", "all_roots", "factorize",
]
