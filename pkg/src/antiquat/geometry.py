"""Level sets of the pseudonorm in the imaginary (a2, a3, a4) space.

Fixing the scalar part a1 and a pseudonorm value p constrains the vector part
to the quadric a3^2 + a4^2 - a2^2 = a1^2 - p, which is a cone, a one-sheet
hyperboloid or a two-sheet hyperboloid depending on the sign of a1^2 - p.
Sampling produces point meshes for external plotting tools (CSV with a
``sheet`` column distinguishing the two branches where there are two).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, TextIO

from .antiquaternion import format_real

__all__ = [
    "InvalidSampling",
    "SurfaceKind",
    "SurfaceClass",
    "classify_surface",
    "sample_surface",
    "write_surface_csv",
    "classification_line",
]


class InvalidSampling(ValueError):
    """Mesh parameters outside their valid range."""


class SurfaceKind(enum.Enum):
    CONE = "Cone"
    ONE_SHEET_HYPERBOLOID = "OneSheetHyperboloid"
    TWO_SHEET_HYPERBOLOID = "TwoSheetHyperboloid"


@dataclass(frozen=True)
class SurfaceClass:
    """Classified level set: ``discriminant`` is a1^2 - p, ``scale`` its
    magnitude (zero for the cone case)."""

    kind: SurfaceKind
    discriminant: float
    scale: float


def classify_surface(a1: float, p: float, eps: float | None = None) -> SurfaceClass:
    """Classify the quadric a3^2 + a4^2 - a2^2 = a1^2 - p.

    ``eps`` is the half-width of the cone band around zero discriminant; the
    default scales with the inputs.
    """
    if eps is None:
        eps = 1e-9 * (1.0 + a1 * a1 + abs(p))
    if eps < 0:
        raise ValueError("classification tolerance must be nonnegative")
    d = a1 * a1 - p
    if abs(d) <= eps:
        return SurfaceClass(SurfaceKind.CONE, d, 0.0)
    if d > 0:
        return SurfaceClass(SurfaceKind.ONE_SHEET_HYPERBOLOID, d, d)
    return SurfaceClass(SurfaceKind.TWO_SHEET_HYPERBOLOID, d, -d)


def sample_surface(
    surface: SurfaceClass,
    u_steps: int = 64,
    v_steps: int = 33,
    v_max: float = 2.0,
) -> list[tuple[float, float, float, int]]:
    """Mesh the classified surface as (a2, a3, a4, sheet) points.

    u indexes the angle around the a3/a4 plane (u_steps >= 3, endpoint
    excluded); v indexes the radial/axial direction (v_steps >= 2).  Every
    point satisfies a3^2 + a4^2 - a2^2 = discriminant up to roundoff:

    - cone: (a2, a3, a4) = (+-r, r cos t, r sin t), r in [0, v_max];
    - one sheet: a2 = s sinh v, a3 = s cosh v cos t, a4 = s cosh v sin t with
      s = sqrt(scale), v in [-v_max, v_max], a single sheet;
    - two sheets: cosh and sinh swap roles and both signs of a2 are emitted,
      labeled sheet 0 and 1.
    """
    if u_steps < 3:
        raise InvalidSampling(f"u_steps must be at least 3, got {u_steps}")
    if v_steps < 2:
        raise InvalidSampling(f"v_steps must be at least 2, got {v_steps}")
    if not v_max > 0:
        raise InvalidSampling(f"v_max must be positive, got {v_max}")

    angles = [2.0 * math.pi * u / u_steps for u in range(u_steps)]
    points: list[tuple[float, float, float, int]] = []

    if surface.kind is SurfaceKind.CONE:
        for step in range(v_steps):
            r = v_max * step / (v_steps - 1)
            for t in angles:
                a3, a4 = r * math.cos(t), r * math.sin(t)
                points.append((r, a3, a4, 0))
                points.append((-r, a3, a4, 1))
        return points

    s = math.sqrt(surface.scale)
    if surface.kind is SurfaceKind.ONE_SHEET_HYPERBOLOID:
        for step in range(v_steps):
            v = -v_max + 2.0 * v_max * step / (v_steps - 1)
            a2 = s * math.sinh(v)
            ring = s * math.cosh(v)
            for t in angles:
                points.append((a2, ring * math.cos(t), ring * math.sin(t), 0))
        return points

    for step in range(v_steps):
        v = v_max * step / (v_steps - 1)
        height = s * math.cosh(v)
        ring = s * math.sinh(v)
        for t in angles:
            a3, a4 = ring * math.cos(t), ring * math.sin(t)
            points.append((height, a3, a4, 0))
            points.append((-height, a3, a4, 1))
    return points


def write_surface_csv(points: Iterable[tuple[float, float, float, int]], out: TextIO) -> None:
    """Write sampled points as CSV with header ``a2,a3,a4,sheet``."""
    out.write("a2,a3,a4,sheet\n")
    for a2, a3, a4, sheet in points:
        out.write(f"{format_real(a2)},{format_real(a3)},{format_real(a4)},{sheet}\n")


def classification_line(surface: SurfaceClass) -> str:
    """One-line report, e.g. ``kind=Cone discriminant=0``."""
    return f"kind={surface.kind.value} discriminant={format_real(surface.discriminant)}"
