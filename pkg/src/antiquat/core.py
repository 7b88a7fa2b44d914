"""Generic engine for finite-dimensional hypercomplex number systems.

A system is defined by its basis multiplication table: entry (i, j) expands
the product e_i * e_j as a sparse linear combination of basis elements with
exact rational coefficients (the structural constants).  Basis indices are
1-based and e_1 is always the two-sided identity; the table validates this at
construction instead of assuming it.

Structural checks (table equality, associativity, commutativity) run on the
exact rational constants, while element arithmetic uses plain floats.  The
norm of an element is the determinant of its left-regular matrix, i.e. the
matrix whose column j holds the coefficients of w * e_j.

Everything in this module is immutable after construction and all operations
are pure functions, so algebras and elements can be shared freely between
threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "AlgebraMismatch",
    "InvalidTable",
    "BasisProduct",
    "MultiplicationTable",
    "Algebra",
    "Element",
    "left_mul_matrix",
    "norm_det",
    "norm_is_zero",
    "check_associativity",
    "check_commutativity",
    "complex_numbers",
    "double_numbers",
    "quaternions",
    "antiquaternions",
]


class AlgebraMismatch(ValueError):
    """Operands belong to different algebras."""


class InvalidTable(ValueError):
    """A multiplication table violates its structural invariants."""


class BasisProduct:
    """Exact sparse combination ``sum(c_k * e_k)`` of basis elements.

    Terms are (coefficient, 1-based index) pairs.  Construction merges
    duplicate indices, drops zero coefficients and sorts by index, so equality
    is independent of the input term order.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[Fraction | int | str, int]] = ()):
        acc: dict[int, Fraction] = {}
        for coeff, index in terms:
            if not isinstance(index, int) or index < 1:
                raise InvalidTable(f"basis index must be a positive integer, got {index!r}")
            acc[index] = acc.get(index, Fraction(0)) + Fraction(coeff)
        object.__setattr__(
            self,
            "terms",
            tuple((c, k) for k, c in sorted(acc.items()) if c != 0),
        )

    def __setattr__(self, name, value):
        raise AttributeError("BasisProduct is immutable")

    @classmethod
    def basis(cls, index: int) -> BasisProduct:
        """The single basis element e_index with coefficient 1."""
        return cls([(1, index)])

    @classmethod
    def zero(cls) -> BasisProduct:
        return cls()

    def coefficient(self, index: int) -> Fraction:
        for c, k in self.terms:
            if k == index:
                return c
        return Fraction(0)

    def max_index(self) -> int:
        return self.terms[-1][1] if self.terms else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, BasisProduct):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "BasisProduct()"
        body = " + ".join(f"{c}*e{k}" for c, k in self.terms)
        return f"BasisProduct[{body}]"


class MultiplicationTable:
    """dim x dim grid of basis products; entry (i, j) is e_i * e_j.

    Row 1 and column 1 must encode e_1 as the two-sided identity; this is
    checked here rather than assumed by callers.
    """

    __slots__ = ("dim", "_entries", "_flat")

    def __init__(self, entries: Sequence[Sequence[BasisProduct]]):
        dim = len(entries)
        if dim < 1:
            raise InvalidTable("table must have positive dimension")
        rows = []
        for i, row in enumerate(entries, start=1):
            row = tuple(row)
            if len(row) != dim:
                raise InvalidTable(f"row {i} has {len(row)} entries, expected {dim}")
            for j, entry in enumerate(row, start=1):
                if not isinstance(entry, BasisProduct):
                    raise InvalidTable(f"entry ({i},{j}) is not a basis product")
                if entry.max_index() > dim:
                    raise InvalidTable(
                        f"entry ({i},{j}) references e{entry.max_index()} "
                        f"outside dimension {dim}"
                    )
            rows.append(row)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_entries", tuple(rows))
        object.__setattr__(self, "_flat", None)
        self._validate_identity()

    def __setattr__(self, name, value):
        raise AttributeError("MultiplicationTable is immutable")

    def _validate_identity(self) -> None:
        for j in range(1, self.dim + 1):
            if self.entry(1, j) != BasisProduct.basis(j):
                raise InvalidTable(f"e1 * e{j} must equal e{j}; table row 1 is not the identity")
            if self.entry(j, 1) != BasisProduct.basis(j):
                raise InvalidTable(f"e{j} * e1 must equal e{j}; table column 1 is not the identity")

    @classmethod
    def from_products(
        cls, dim: int, products: dict[tuple[int, int], BasisProduct]
    ) -> MultiplicationTable:
        """Build a table from the non-identity products only.

        ``products`` maps (i, j) with i, j >= 2 to e_i * e_j; identity row and
        column are filled in automatically.  Every non-identity pair must be
        present.
        """
        grid = [[BasisProduct.basis(max(i, j)) if 1 in (i, j) else None
                 for j in range(1, dim + 1)] for i in range(1, dim + 1)]
        for (i, j), entry in products.items():
            if not (2 <= i <= dim and 2 <= j <= dim):
                raise InvalidTable(f"product ({i},{j}) outside the non-identity range of dim {dim}")
            grid[i - 1][j - 1] = entry
        for i in range(2, dim + 1):
            for j in range(2, dim + 1):
                if grid[i - 1][j - 1] is None:
                    raise InvalidTable(f"missing product e{i} * e{j}")
        return cls(grid)

    def entry(self, i: int, j: int) -> BasisProduct:
        """e_i * e_j with 1-based indices."""
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise IndexError(f"basis indices ({i},{j}) outside [1,{self.dim}]")
        return self._entries[i - 1][j - 1]

    def mul_combination(self, x: BasisProduct, y: BasisProduct) -> BasisProduct:
        """Exact product of two sparse combinations under this table."""
        acc: dict[int, Fraction] = {}
        for cx, i in x.terms:
            for cy, j in y.terms:
                cxy = cx * cy
                for ck, k in self.entry(i, j).terms:
                    acc[k] = acc.get(k, Fraction(0)) + cxy * ck
        return BasisProduct(list((c, k) for k, c in acc.items()))

    def flat_terms(self) -> tuple[tuple[int, int, int, float], ...]:
        """Structural constants as (i, j, k, coeff) with 0-based indices.

        Cached; iteration order is row-major and deterministic, which keeps
        float accumulation reproducible.
        """
        if self._flat is None:
            flat = []
            for i in range(self.dim):
                for j in range(self.dim):
                    for c, k in self._entries[i][j].terms:
                        flat.append((i, j, k - 1, float(c)))
            object.__setattr__(self, "_flat", tuple(flat))
        return self._flat

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiplicationTable):
            return NotImplemented
        return self.dim == other.dim and self._entries == other._entries

    __hash__ = None

    def __repr__(self) -> str:
        return f"MultiplicationTable(dim={self.dim})"


class Algebra:
    """A named, validated multiplication table.

    Two algebras are the same (for operand-mixing purposes) when both the name
    and the table match; distinct handles built from equal data interoperate.
    """

    __slots__ = ("name", "table")

    def __init__(self, name: str, table: MultiplicationTable):
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError("Algebra is immutable")

    @property
    def dim(self) -> int:
        return self.table.dim

    def element(self, coeffs: Iterable[float]) -> Element:
        return Element(self, coeffs)

    def basis(self, index: int) -> Element:
        if not (1 <= index <= self.dim):
            raise IndexError(f"basis index {index} outside [1,{self.dim}]")
        return Element(self, [1.0 if k == index else 0.0 for k in range(1, self.dim + 1)])

    def one(self) -> Element:
        return self.basis(1)

    def zero(self) -> Element:
        return Element(self, [0.0] * self.dim)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.name == other.name and self.table == other.table

    __hash__ = None

    def __repr__(self) -> str:
        return f"Algebra({self.name!r}, dim={self.dim})"


class Element:
    """An element of an algebra: a float coefficient vector over the basis."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs: Iterable[float]):
        coeffs = tuple(float(c) for c in coeffs)
        if len(coeffs) != algebra.dim:
            raise ValueError(
                f"expected {algebra.dim} coefficients for {algebra.name}, got {len(coeffs)}"
            )
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def _require_same_algebra(self, other: Element) -> None:
        if self.algebra is other.algebra:
            return
        if self.algebra != other.algebra:
            raise AlgebraMismatch(
                f"operands belong to different algebras: "
                f"{self.algebra.name} vs {other.algebra.name}"
            )

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_algebra(other)
        return Element(self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_algebra(other)
        return Element(self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> Element:
        return Element(self.algebra, [-a for a in self.coeffs])

    def scale(self, k: float) -> Element:
        return Element(self.algebra, [k * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Element):
            self._require_same_algebra(other)
            x, y = self.coeffs, other.coeffs
            out = [0.0] * self.algebra.dim
            for i, j, k, c in self.algebra.table.flat_terms():
                out[k] += c * (x[i] * y[j])
            return Element(self.algebra, out)
        if isinstance(other, (int, float)):
            return self.scale(float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(float(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self) -> str:
        return f"Element({self.algebra.name}, {self.coeffs})"


def left_mul_matrix(w: Element) -> np.ndarray:
    """Left-regular representation of w: column j = coefficients of w * e_j."""
    dim = w.algebra.dim
    m = np.zeros((dim, dim))
    coeffs = w.coeffs
    for i, j, k, c in w.algebra.table.flat_terms():
        m[k, j] += c * coeffs[i]
    return m


def norm_det(w: Element) -> float:
    """Norm of w: determinant of its left-regular matrix (LAPACK LU)."""
    return float(np.linalg.det(left_mul_matrix(w)))


def norm_is_zero(w: Element, eps: float = 1e-9) -> bool:
    """Scale-aware test of whether the norm vanishes."""
    m = left_mul_matrix(w)
    bound = eps * (1.0 + float(np.max(np.abs(m)))) ** w.algebra.dim
    return abs(float(np.linalg.det(m))) < bound


def check_associativity(algebra: Algebra):
    """Exhaustively test (e_i e_j) e_k == e_i (e_j e_k) with exact rationals.

    Returns (True, None) or (False, (i, j, k)) with the first failing triple
    in row-major order.
    """
    table = algebra.table
    basis = [BasisProduct.basis(k) for k in range(1, algebra.dim + 1)]
    for i, ei in enumerate(basis, start=1):
        for j, ej in enumerate(basis, start=1):
            ij = table.mul_combination(ei, ej)
            for k, ek in enumerate(basis, start=1):
                left = table.mul_combination(ij, ek)
                right = table.mul_combination(ei, table.mul_combination(ej, ek))
                if left != right:
                    return False, (i, j, k)
    return True, None


def check_commutativity(algebra: Algebra):
    """Test e_i e_j == e_j e_i for all basis pairs; exact.

    Returns (True, None) or (False, (i, j)) with the first failing pair.
    """
    table = algebra.table
    for i in range(1, algebra.dim + 1):
        for j in range(i + 1, algebra.dim + 1):
            if table.entry(i, j) != table.entry(j, i):
                return False, (i, j)
    return True, None


def _bp(sign: int, k: int) -> BasisProduct:
    return BasisProduct([(sign, k)])


# Built-in tables.  The 4-dimensional ones are written out explicitly so they
# can serve as regression targets for the doubling construction.
_BUILTINS: dict[str, Algebra] = {}


def _builtin(name: str, dim: int, products: dict[tuple[int, int], BasisProduct]) -> Algebra:
    algebra = _BUILTINS.get(name)
    if algebra is None:
        algebra = Algebra(name, MultiplicationTable.from_products(dim, products))
        _BUILTINS[name] = algebra
    return algebra


def complex_numbers() -> Algebra:
    """C: two-dimensional system with e2 * e2 = -e1."""
    return _builtin("C", 2, {(2, 2): _bp(-1, 1)})


def double_numbers() -> Algebra:
    """W: two-dimensional commutative system with e2 * e2 = e1."""
    return _builtin("W", 2, {(2, 2): _bp(1, 1)})


def quaternions() -> Algebra:
    """H: the quaternion table."""
    return _builtin("H", 4, {
        (2, 2): _bp(-1, 1), (2, 3): _bp(1, 4), (2, 4): _bp(-1, 3),
        (3, 2): _bp(-1, 4), (3, 3): _bp(-1, 1), (3, 4): _bp(1, 2),
        (4, 2): _bp(1, 3), (4, 3): _bp(-1, 2), (4, 4): _bp(-1, 1),
    })


def antiquaternions() -> Algebra:
    """AH: the split-quaternion (antiquaternion) table.

    Differs from H in that e3 and e4 square to +e1; e2 still squares to -e1.
    """
    return _builtin("AH", 4, {
        (2, 2): _bp(-1, 1), (2, 3): _bp(1, 4), (2, 4): _bp(-1, 3),
        (3, 2): _bp(-1, 4), (3, 3): _bp(1, 1), (3, 4): _bp(-1, 2),
        (4, 2): _bp(1, 3), (4, 3): _bp(1, 2), (4, 4): _bp(1, 1),
    })
