"""Closed-form arithmetic for antiquaternions (split-quaternions).

An antiquaternion is w = a1*e1 + a2*e2 + a3*e3 + a4*e4 over the table where
e2*e2 = -e1 and e3*e3 = e4*e4 = +e1.  This module is the fast path: product,
conjugation, pseudonorm, zero-divisor test, inverse and the two one-sided
quotients are all closed forms, each verified elsewhere against the generic
table engine.

The pseudonorm a1^2 + a2^2 - a3^2 - a4^2 is signed and multiplicative; the
norm is its square and equals the determinant of the left-regular matrix.
Division is undefined not only at zero but on the whole zero-divisor cone
where the pseudonorm vanishes.

Values are immutable; all operations are pure and thread-safe.
"""

from __future__ import annotations

import math

import numpy as np

from . import core
from .core import AlgebraMismatch, Element

__all__ = [
    "ZeroElement",
    "NotInvertible",
    "SingularSystem",
    "AntiQuaternion",
    "div_left",
    "div_right",
    "format_real",
]


class ZeroElement(ValueError):
    """The operation requires a nonzero antiquaternion."""


class NotInvertible(ArithmeticError):
    """Division by zero or by a zero divisor."""


class SingularSystem(ArithmeticError):
    """The conjugation linear system is singular (zero or zero divisor)."""


def format_real(x: float) -> str:
    """Shortest round-trip decimal for a float, with integral values bare.

    `1.0` prints as `1`, `-0.0` as `-0`; both re-parse to the identical bits.
    """
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


class AntiQuaternion:
    """Immutable 4-component antiquaternion value.

    Components must be finite; NaN and infinity are rejected at construction
    so downstream operations never have to re-check.
    """

    __slots__ = ("a1", "a2", "a3", "a4")

    def __init__(self, a1: float = 0.0, a2: float = 0.0, a3: float = 0.0, a4: float = 0.0):
        for v in (a1, a2, a3, a4):
            if not math.isfinite(v):
                raise ValueError(f"components must be finite, got {v!r}")
        object.__setattr__(self, "a1", float(a1))
        object.__setattr__(self, "a2", float(a2))
        object.__setattr__(self, "a3", float(a3))
        object.__setattr__(self, "a4", float(a4))

    def __setattr__(self, name, value):
        raise AttributeError("AntiQuaternion is immutable")

    @classmethod
    def basis(cls, index: int) -> AntiQuaternion:
        if not 1 <= index <= 4:
            raise IndexError(f"basis index {index} outside [1,4]")
        c = [0.0] * 4
        c[index - 1] = 1.0
        return cls(*c)

    @property
    def components(self) -> tuple[float, float, float, float]:
        return (self.a1, self.a2, self.a3, self.a4)

    def is_zero(self) -> bool:
        return self.a1 == 0.0 and self.a2 == 0.0 and self.a3 == 0.0 and self.a4 == 0.0

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, AntiQuaternion):
            return NotImplemented
        return AntiQuaternion(self.a1 + other.a1, self.a2 + other.a2,
                              self.a3 + other.a3, self.a4 + other.a4)

    def __sub__(self, other):
        if not isinstance(other, AntiQuaternion):
            return NotImplemented
        return AntiQuaternion(self.a1 - other.a1, self.a2 - other.a2,
                              self.a3 - other.a3, self.a4 - other.a4)

    def __neg__(self) -> AntiQuaternion:
        return AntiQuaternion(-self.a1, -self.a2, -self.a3, -self.a4)

    def scale(self, k: float) -> AntiQuaternion:
        return AntiQuaternion(k * self.a1, k * self.a2, k * self.a3, k * self.a4)

    def __mul__(self, other):
        if isinstance(other, AntiQuaternion):
            a1, a2, a3, a4 = self.components
            b1, b2, b3, b4 = other.components
            return AntiQuaternion(
                a1 * b1 - a2 * b2 + a3 * b3 + a4 * b4,
                a1 * b2 + a2 * b1 - a3 * b4 + a4 * b3,
                a1 * b3 + a3 * b1 - a2 * b4 + a4 * b2,
                a1 * b4 + a4 * b1 + a2 * b3 - a3 * b2,
            )
        if isinstance(other, (int, float)):
            return self.scale(float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(float(other))
        return NotImplemented

    # -- conjugation and norms ----------------------------------------------

    def conjugate(self) -> AntiQuaternion:
        """Scalar part kept, vector part negated; w * conjugate(w) is scalar."""
        return AntiQuaternion(self.a1, -self.a2, -self.a3, -self.a4)

    __invert__ = conjugate

    def conjugate_via_solve(self) -> AntiQuaternion:
        """Recover the conjugate by solving the defining linear system.

        The conjugate is the solution b of  w * b = pseudonorm(w) * e1, a 4x4
        linear system whose matrix is the left-regular matrix of w.  Solved
        numerically (LU with partial pivoting); exists only when w is neither
        zero nor a zero divisor, since the matrix determinant is the squared
        pseudonorm.  The closed form `conjugate` is the production path; this
        exists to replay the derivation and cross-check it.
        """
        m = core.left_mul_matrix(self.to_generic())
        if abs(self.pseudonorm()) <= _invertibility_cutoff(self):
            raise SingularSystem("conjugation system is singular: zero or zero divisor")
        rhs = np.array([self.pseudonorm(), 0.0, 0.0, 0.0])
        try:
            solution = np.linalg.solve(m, rhs)
        except np.linalg.LinAlgError as exc:
            raise SingularSystem("conjugation system is singular") from exc
        return AntiQuaternion(*solution)

    def pseudonorm(self) -> float:
        """Signed quadratic form a1^2 + a2^2 - a3^2 - a4^2; multiplicative."""
        return self.a1 * self.a1 + self.a2 * self.a2 - self.a3 * self.a3 - self.a4 * self.a4

    def norm(self) -> float:
        """Squared pseudonorm; equals the left-regular matrix determinant."""
        p = self.pseudonorm()
        return p * p

    # -- zero divisors and inversion -----------------------------------------

    def is_zero_divisor(self, eps: float = 1e-9) -> bool:
        """True when a1^2 + a2^2 and a3^2 + a4^2 agree within a scaled eps.

        Zero divisors are exactly the nonzero elements of vanishing
        pseudonorm; the zero element itself is rejected.
        """
        if self.is_zero():
            raise ZeroElement("the zero element is not classified as a zero divisor")
        plus = self.a1 * self.a1 + self.a2 * self.a2
        minus = self.a3 * self.a3 + self.a4 * self.a4
        return abs(plus - minus) <= eps * (plus + minus)

    def is_invertible(self, eps: float = 1e-9) -> bool:
        return abs(self.pseudonorm()) > _invertibility_cutoff(self, eps)

    def inverse(self, eps: float = 1e-9) -> AntiQuaternion:
        """Multiplicative inverse: conjugate divided by the signed pseudonorm."""
        p = self.pseudonorm()
        if abs(p) <= _invertibility_cutoff(self, eps):
            raise NotInvertible("zero pseudonorm: zero divisors and zero have no inverse")
        return self.conjugate().scale(1.0 / p)

    # -- generic-engine bridge -------------------------------------------------

    def to_generic(self) -> Element:
        return Element(core.antiquaternions(), self.components)

    @classmethod
    def from_generic(cls, x: Element) -> AntiQuaternion:
        if x.algebra != core.antiquaternions():
            raise AlgebraMismatch(
                f"expected an element of AH, got {x.algebra.name}"
            )
        return cls(*x.coeffs)

    # -- value protocol ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, AntiQuaternion):
            return NotImplemented
        return self.components == other.components

    __hash__ = None

    def __repr__(self) -> str:
        return f"AntiQuaternion{self.components!r}"

    def __str__(self) -> str:
        return "(" + ", ".join(format_real(c) for c in self.components) + ")"


def _invertibility_cutoff(w: AntiQuaternion, eps: float = 1e-9) -> float:
    biggest = max(abs(w.a1), abs(w.a2), abs(w.a3), abs(w.a4))
    return eps * (1.0 + biggest * biggest)


def div_left(w1: AntiQuaternion, w2: AntiQuaternion, eps: float = 1e-9) -> AntiQuaternion:
    """Left quotient: the solution x of w2 * x = w1.

    Computed as conjugate(w2) * w1 divided by the signed pseudonorm of w2;
    dividing by the absolute value instead would break the defining equation
    whenever the divisor's pseudonorm is negative.
    """
    p = w2.pseudonorm()
    if abs(p) <= _invertibility_cutoff(w2, eps):
        raise NotInvertible("division by zero or a zero divisor")
    return (w2.conjugate() * w1).scale(1.0 / p)


def div_right(w1: AntiQuaternion, w2: AntiQuaternion, eps: float = 1e-9) -> AntiQuaternion:
    """Right quotient: the solution x of x * w2 = w1."""
    p = w2.pseudonorm()
    if abs(p) <= _invertibility_cutoff(w2, eps):
        raise NotInvertible("division by zero or a zero divisor")
    return (w1 * w2.conjugate()).scale(1.0 / p)
