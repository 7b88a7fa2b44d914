"""Randomized and exhaustive verification of the algebraic identities.

Each check returns a PropertyResult; the CLI prints one line per result.
Given the same algebra, trial count and seed, the whole run is deterministic,
including the residuals in the detail strings.

The generic checks run for any algebra.  When the target's table is the
split-quaternion table, the closed-form fast path is additionally checked
against the table engine and its own identities (pseudonorm multiplicativity,
conjugation laws, zero-divisor closure, one-sided division residuals).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import core
from .antiquaternion import AntiQuaternion, div_left, div_right, format_real
from .core import Algebra, Element

__all__ = ["PropertyResult", "run_suite", "DEFAULT_TRIALS", "DEFAULT_SEED"]

DEFAULT_TRIALS = 10000
DEFAULT_SEED = 42

_COEFF_RANGE = 10.0
_SCALAR_RANGE = 2.0


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    detail: str


def _random_element(rng: random.Random, algebra: Algebra) -> Element:
    return algebra.element([rng.uniform(-_COEFF_RANGE, _COEFF_RANGE)
                            for _ in range(algebra.dim)])


def _random_aq(rng: random.Random) -> AntiQuaternion:
    return AntiQuaternion(*(rng.uniform(-_COEFF_RANGE, _COEFF_RANGE) for _ in range(4)))


def _random_invertible(rng: random.Random, eps: float) -> AntiQuaternion:
    while True:
        w = _random_aq(rng)
        if w.is_invertible(eps):
            return w


def _max_abs_diff(x: Element, y: Element) -> float:
    return max(abs(a - b) for a, b in zip(x.coeffs, y.coeffs))


def _residual_result(name: str, worst: float, bound_desc: str, passed: bool) -> PropertyResult:
    return PropertyResult(name, passed, f"max_residual={format_real(worst)} bound={bound_desc}")


# -- generic checks ------------------------------------------------------------


def _check_identity_law(algebra: Algebra, trials: int, rng: random.Random) -> PropertyResult:
    one = algebra.one()
    for _ in range(trials):
        x = _random_element(rng, algebra)
        if one * x != x or x * one != x:
            return PropertyResult("identity_law", False,
                                  f"violated at coefficients {x.coeffs}")
    return PropertyResult("identity_law", True, f"exact over {trials} elements")


def _check_distributivity(algebra: Algebra, trials: int, rng: random.Random) -> PropertyResult:
    worst = 0.0
    for _ in range(trials):
        x = _random_element(rng, algebra)
        y = _random_element(rng, algebra)
        z = _random_element(rng, algebra)
        worst = max(worst, _max_abs_diff(x * (y + z), x * y + x * z))
    return _residual_result("distributivity", worst, "1e-12", worst <= 1e-12)


def _check_scalar_compatibility(algebra: Algebra, trials: int, rng: random.Random) -> PropertyResult:
    worst = 0.0
    for _ in range(trials):
        k1 = rng.uniform(-_SCALAR_RANGE, _SCALAR_RANGE)
        k2 = rng.uniform(-_SCALAR_RANGE, _SCALAR_RANGE)
        x = _random_element(rng, algebra)
        y = _random_element(rng, algebra)
        worst = max(worst, _max_abs_diff(x.scale(k1) * y.scale(k2), (x * y).scale(k1 * k2)))
    return _residual_result("scalar_compatibility", worst, "1e-12", worst <= 1e-12)


def _check_associativity_basis(algebra: Algebra) -> PropertyResult:
    ok, witness = core.check_associativity(algebra)
    if ok:
        return PropertyResult("associativity_basis", True,
                              f"exhaustive over {algebra.dim ** 3} basis triples")
    i, j, k = witness
    return PropertyResult("associativity_basis", False,
                          f"witness: (e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})")


# -- split-quaternion fast-path checks ------------------------------------------


def _check_mul_oracle(trials: int, rng: random.Random) -> PropertyResult:
    worst = 0.0
    for _ in range(trials):
        w1 = _random_aq(rng)
        w2 = _random_aq(rng)
        fast = (w1 * w2).components
        generic = (w1.to_generic() * w2.to_generic()).coeffs
        worst = max(worst, max(abs(a - b) for a, b in zip(fast, generic)))
    return _residual_result("mul_matches_table_oracle", worst, "1e-12", worst <= 1e-12)


def _check_norm_closed_form(trials: int, rng: random.Random) -> PropertyResult:
    worst = 0.0
    passed = True
    for _ in range(trials):
        w = _random_aq(rng)
        closed = w.norm()
        det = core.norm_det(w.to_generic())
        residual = abs(det - closed) / (1.0 + abs(closed))
        worst = max(worst, residual)
        passed = passed and residual <= 1e-9
    return _residual_result("norm_matches_determinant", worst, "1e-9 relative", passed)


def _check_pseudonorm_multiplicative(trials: int, rng: random.Random) -> PropertyResult:
    worst = 0.0
    passed = True
    for _ in range(trials):
        w1 = _random_aq(rng)
        w2 = _random_aq(rng)
        product = w1.pseudonorm() * w2.pseudonorm()
        residual = abs((w1 * w2).pseudonorm() - product) / (1.0 + abs(product))
        worst = max(worst, residual)
        passed = passed and residual <= 1e-9
    return _residual_result("pseudonorm_multiplicative", worst, "1e-9 relative", passed)


def _check_conjugate_product_scalar(trials: int, rng: random.Random) -> PropertyResult:
    worst = 0.0
    for _ in range(trials):
        w = _random_aq(rng)
        product = w * w.conjugate()
        expected = AntiQuaternion(w.pseudonorm())
        worst = max(worst, max(abs(a - b) for a, b in
                               zip(product.components, expected.components)))
    return _residual_result("conjugate_product_is_pseudonorm", worst, "1e-12", worst <= 1e-12)


def _check_conjugate_sum_laws(trials: int, rng: random.Random) -> PropertyResult:
    for _ in range(trials):
        w1 = _random_aq(rng)
        w2 = _random_aq(rng)
        s = w1 + w1.conjugate()
        if not (s.a2 == 0.0 and s.a3 == 0.0 and s.a4 == 0.0):
            return PropertyResult("conjugate_sum_laws", False,
                                  f"w + conj(w) not scalar at {w1.components}")
        if (w1 + w2).conjugate() != w1.conjugate() + w2.conjugate():
            return PropertyResult("conjugate_sum_laws", False,
                                  f"conj(w1+w2) != conj(w1)+conj(w2) at {w1.components}")
    return PropertyResult("conjugate_sum_laws", True, f"exact over {trials} pairs")


def _check_conjugate_reverses_products(trials: int, rng: random.Random) -> PropertyResult:
    worst = 0.0
    for _ in range(trials):
        w1 = _random_aq(rng)
        w2 = _random_aq(rng)
        lhs = (w1 * w2).conjugate()
        rhs = w2.conjugate() * w1.conjugate()
        worst = max(worst, max(abs(a - b) for a, b in zip(lhs.components, rhs.components)))
    return _residual_result("conjugate_reverses_products", worst, "1e-12", worst <= 1e-12)


def _check_noncommutativity_witness() -> PropertyResult:
    e2, e3 = AntiQuaternion.basis(2), AntiQuaternion.basis(3)
    forward = e2 * e3
    backward = e3 * e2
    ok = forward == -backward and not forward.is_zero()
    return PropertyResult("noncommutativity_witness", ok,
                          f"e2*e3={forward} e3*e2={backward}")


def _check_associativity_random(trials: int, rng: random.Random) -> PropertyResult:
    worst = 0.0
    passed = True
    for _ in range(trials):
        w1, w2, w3 = _random_aq(rng), _random_aq(rng), _random_aq(rng)
        left = (w1 * w2) * w3
        right = w1 * (w2 * w3)
        scale = 1.0 + max(abs(c) for c in left.components)
        residual = max(abs(a - b) for a, b in zip(left.components, right.components)) / scale
        worst = max(worst, residual)
        passed = passed and residual <= 1e-9
    return _residual_result("associativity_random", worst, "1e-9 relative", passed)


def _random_zero_divisor(rng: random.Random) -> AntiQuaternion:
    while True:
        a1 = rng.uniform(-_COEFF_RANGE, _COEFF_RANGE)
        a2 = rng.uniform(-_COEFF_RANGE, _COEFF_RANGE)
        radius = math.hypot(a1, a2)
        if radius == 0.0:
            continue
        angle = rng.uniform(0.0, 2.0 * math.pi)
        return AntiQuaternion(a1, a2, radius * math.cos(angle), radius * math.sin(angle))


def _check_zero_divisor_closure(trials: int, rng: random.Random, eps: float) -> PropertyResult:
    w = AntiQuaternion(1.0, 0.0, 1.0, 0.0)
    annihilator = AntiQuaternion(1.0, 0.0, -1.0, 0.0)
    if not (w.is_zero_divisor(eps) and (w * annihilator).is_zero()):
        return PropertyResult("zero_divisor_closure", False,
                              "canonical zero divisor (1,0,1,0) not recognized")
    for _ in range(trials):
        z = _random_zero_divisor(rng)
        if not z.is_zero_divisor(eps):
            return PropertyResult("zero_divisor_closure", False,
                                  f"constructed zero divisor {z.components} not flagged")
        if not z.conjugate().is_zero_divisor(eps):
            return PropertyResult("zero_divisor_closure", False,
                                  f"conjugate of zero divisor {z.components} not flagged")
    return PropertyResult("zero_divisor_closure", True,
                          f"{trials} constructed zero divisors and conjugates flagged")


def _check_division_residuals(trials: int, rng: random.Random, eps: float) -> PropertyResult:
    worst = 0.0
    passed = True
    for _ in range(trials):
        w1 = _random_aq(rng)
        w2 = _random_invertible(rng, eps)
        bound = 1e-9 * (1.0 + max(abs(c) for c in w1.components))
        left_residual = max(abs(a - b) for a, b in
                            zip((w2 * div_left(w1, w2)).components, w1.components))
        right_residual = max(abs(a - b) for a, b in
                             zip((div_right(w1, w2) * w2).components, w1.components))
        residual = max(left_residual, right_residual)
        worst = max(worst, residual)
        passed = passed and residual <= bound
    return _residual_result("division_residuals", worst, "1e-9 scaled", passed)


def _check_conjugate_via_solve(trials: int, rng: random.Random, eps: float) -> PropertyResult:
    worst = 0.0
    passed = True
    for _ in range(trials):
        w = _random_invertible(rng, eps)
        solved = w.conjugate_via_solve()
        expected = w.conjugate()
        scale = 1.0 + max(abs(c) for c in expected.components)
        residual = max(abs(a - b) for a, b in
                       zip(solved.components, expected.components)) / scale
        worst = max(worst, residual)
        passed = passed and residual <= 1e-9
    return _residual_result("conjugate_via_solve", worst, "1e-9 relative", passed)


def run_suite(
    algebra: Algebra,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    eps: float = 1e-9,
) -> list[PropertyResult]:
    """Run every applicable check; deterministic for a fixed seed."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    results = [
        _check_identity_law(algebra, trials, rng),
        _check_distributivity(algebra, trials, rng),
        _check_scalar_compatibility(algebra, trials, rng),
        _check_associativity_basis(algebra),
    ]
    if algebra.table == core.antiquaternions().table:
        results += [
            _check_mul_oracle(trials, rng),
            _check_norm_closed_form(trials, rng),
            _check_pseudonorm_multiplicative(trials, rng),
            _check_conjugate_product_scalar(trials, rng),
            _check_conjugate_sum_laws(trials, rng),
            _check_conjugate_reverses_products(trials, rng),
            _check_noncommutativity_witness(),
            _check_associativity_random(trials, rng),
            _check_zero_divisor_closure(trials, rng, eps),
            _check_division_residuals(trials, rng, eps),
            _check_conjugate_via_solve(min(trials, 2000), rng, eps),
        ]
    return results
