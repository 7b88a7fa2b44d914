"""Anticommutative doubling of two-dimensional number systems.

Given seeds A (basis e_1, e_2) and B (basis f_1, f_2), the doubled system has
basis (e_1f_1, e_2f_1, e_1f_2, e_2f_2), renamed e_1..e_4 in that order.
Factors from the same seed multiply by that seed's table; a seed identity
commutes with everything; transposing the two non-identity generators (moving
f_2 across e_2) contributes a factor of -1.  This reproduces the quaternion
table as double(C, C) and the split-quaternion table as double(C, W).
"""

from __future__ import annotations

from fractions import Fraction

from .core import Algebra, BasisProduct, MultiplicationTable

__all__ = ["InvalidSeed", "Seed2", "seed_complex", "seed_double_numbers",
           "double_anticommutative"]


class InvalidSeed(ValueError):
    """A doubling seed violates its invariants."""


class Seed2:
    """Two-dimensional seed system: e_1 is the identity and the second basis
    element squares to ``square_sign`` times the identity.

    ``square_sign`` must be an exact rational (-1 for complex numbers, +1 for
    double numbers); floats are rejected to keep the synthesized structural
    constants exact.
    """

    __slots__ = ("name", "square_sign")

    def __init__(self, name: str, square_sign):
        if isinstance(square_sign, float):
            raise InvalidSeed("square_sign must be an exact rational, not a float")
        try:
            sign = Fraction(square_sign)
        except (TypeError, ValueError) as exc:
            raise InvalidSeed(f"square_sign {square_sign!r} is not a rational") from exc
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "square_sign", sign)

    def __setattr__(self, name, value):
        raise AttributeError("Seed2 is immutable")

    def table(self) -> MultiplicationTable:
        return MultiplicationTable.from_products(
            2, {(2, 2): BasisProduct([(self.square_sign, 1)])}
        )

    def algebra(self) -> Algebra:
        return Algebra(self.name, self.table())

    def __repr__(self) -> str:
        return f"Seed2({self.name!r}, square_sign={self.square_sign})"


def seed_complex() -> Seed2:
    """C: second basis element squares to -1."""
    return Seed2("C", -1)


def seed_double_numbers() -> Seed2:
    """W: second basis element squares to +1."""
    return Seed2("W", 1)


def _seed_mul(seed: Seed2, u1: int, u2: int) -> tuple[Fraction, int]:
    """Product of seed basis elements: coefficient and resulting index."""
    if u1 == 1:
        return Fraction(1), u2
    if u2 == 1:
        return Fraction(1), u1
    return seed.square_sign, 1


def double_anticommutative(a: Seed2, b: Seed2, name: str) -> Algebra:
    """Synthesize the 4-dimensional doubled algebra of two seeds.

    Basis order is fixed to (e_1f_1, e_2f_1, e_1f_2, e_2f_2); any other order
    would give a permuted (isomorphic but different) table.
    """
    for seed in (a, b):
        if not isinstance(seed, Seed2):
            raise InvalidSeed(f"doubling seed must be a Seed2, got {type(seed).__name__}")

    def index(u: int, v: int) -> int:
        return u + 2 * (v - 1)

    pairs = {index(u, v): (u, v) for v in (1, 2) for u in (1, 2)}
    products: dict[tuple[int, int], BasisProduct] = {}
    for gi in range(2, 5):
        for gj in range(2, 5):
            u1, v1 = pairs[gi]
            u2, v2 = pairs[gj]
            # One sign flip when f_2 from the left factor crosses e_2 on the right.
            sign = Fraction(-1 if (v1 == 2 and u2 == 2) else 1)
            cu, u3 = _seed_mul(a, u1, u2)
            cv, v3 = _seed_mul(b, v1, v2)
            products[(gi, gj)] = BasisProduct([(sign * cu * cv, index(u3, v3))])
    return Algebra(name, MultiplicationTable.from_products(4, products))
