"""Hypercomplex number system engine centered on antiquaternions.

Synthesizes four-dimensional number systems by anticommutative doubling of
two-dimensional seeds, provides a generic multiplication-table engine with
exact structural checks, and a closed-form fast path for the antiquaternion
(split-quaternion) algebra: product, conjugation, pseudonorm, zero divisors,
inverse and one-sided division.  Includes classification and meshing of the
pseudonorm level sets, an infix expression evaluator, and a CLI.
"""

from .antiquaternion import (
    AntiQuaternion,
    NotInvertible,
    SingularSystem,
    ZeroElement,
    div_left,
    div_right,
)
from .core import (
    Algebra,
    AlgebraMismatch,
    BasisProduct,
    Element,
    InvalidTable,
    MultiplicationTable,
    antiquaternions,
    check_associativity,
    check_commutativity,
    complex_numbers,
    double_numbers,
    left_mul_matrix,
    norm_det,
    norm_is_zero,
    quaternions,
)
from .doubling import (
    InvalidSeed,
    Seed2,
    double_anticommutative,
    seed_complex,
    seed_double_numbers,
)
from .expr import EvalError, LexError, ParseError, evaluate
from .geometry import (
    InvalidSampling,
    SurfaceClass,
    SurfaceKind,
    classify_surface,
    sample_surface,
    write_surface_csv,
)
from .tableio import TableParseError, format_table_text, parse_table_text

__version__ = "0.1.0"

__all__ = [
    "AntiQuaternion", "NotInvertible", "SingularSystem", "ZeroElement",
    "div_left", "div_right",
    "Algebra", "AlgebraMismatch", "BasisProduct", "Element", "InvalidTable",
    "MultiplicationTable", "antiquaternions", "check_associativity",
    "check_commutativity", "complex_numbers", "double_numbers",
    "left_mul_matrix", "norm_det", "norm_is_zero", "quaternions",
    "InvalidSeed", "Seed2", "double_anticommutative", "seed_complex",
    "seed_double_numbers",
    "EvalError", "LexError", "ParseError", "evaluate",
    "InvalidSampling", "SurfaceClass", "SurfaceKind", "classify_surface",
    "sample_surface", "write_surface_csv",
    "TableParseError", "format_table_text", "parse_table_text",
    "__version__",
]
