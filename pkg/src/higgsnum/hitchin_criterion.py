"""Decision procedure for non-emptiness of a generic spectral fiber.

Fix a surface, a cover degree r and candidate invariants (c1, c2).  The
fiber over a generic, integral spectral surface is nonempty exactly when
two Diophantine conditions hold: the determinant equation

    r . delta = c1 + r(r-1)/2 . c1(L)

has a solution delta in the lattice, and the point count forced by

    (r-1) c1^2 - 2 r c2 = r^2(r^2-1)/12 . c1(L)^2 - 2 r . n

is a nonnegative integer.  The threshold where n = 0 is

    c2_gbun = (r-1)/(2r) . c1^2 - r(r^2-1)/24 . c1(L)^2,

and n = c2 - c2_gbun, so the classification by regime is a comparison
of c2 against the threshold once delta exists.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ns_lattice import NSVector, Rat, divide, ratnorm
from .surface_chow import HiggsNumerics, SurfaceGeometry

__all__ = [
    "FiberWitness",
    "Regime",
    "RegimeReport",
    "c2_gbun",
    "classify",
    "n_points",
    "solve_delta",
]


class Regime(str, enum.Enum):
    """Outcome of the classification."""

    NO_DELTA_SOLUTION = "NoDeltaSolution"
    EMPTY = "Empty"
    BOUNDARY = "Boundary"
    GENERIC = "Generic"


@dataclass(frozen=True)
class FiberWitness:
    """Spectral data of a fiber point: a line bundle class and a point count."""

    delta: NSVector
    n_points: int


@dataclass(frozen=True)
class RegimeReport:
    regime: Regime
    c2gbun: Rat
    witness: Optional[FiberWitness]


def solve_delta(x: SurfaceGeometry, h: HiggsNumerics) -> Optional[NSVector]:
    """Lattice solution of r delta = c1 + r(r-1)/2 L, or None."""
    x.lattice.check_vector(h.c1)
    shift = (h.r * (h.r - 1) // 2) * x.polarization
    return divide(x.lattice, h.c1 + shift, h.r)


def c2_gbun(x: SurfaceGeometry, h: HiggsNumerics) -> tuple[Rat, bool]:
    """Threshold value of c2 and whether it is an integer.

    (r-1)/(2r) c1^2 - r(r^2-1)/24 L^2.  Integrality is reported, not
    assumed; it holds in practice whenever the determinant equation is
    solvable.
    """
    x.lattice.check_vector(h.c1)
    r = h.r
    value = Fraction(r - 1, 2 * r) * x.pair(h.c1, h.c1) - Fraction(
        r * (r * r - 1), 24
    ) * x.l_squared
    value = ratnorm(value)
    return value, isinstance(value, int)


def n_points(x: SurfaceGeometry, h: HiggsNumerics) -> Rat:
    """Point count forced by the second Chern equation, as an exact value.

    (r^2(r^2-1)/12 L^2 - (r-1) c1^2 + 2 r c2) / (2r); equals
    c2 - c2_gbun identically.  Nonnegative integrality is exactly the
    condition checked by classify.
    """
    x.lattice.check_vector(h.c1)
    r = h.r
    numerator = (
        Fraction(r * r * (r * r - 1), 12) * x.l_squared
        - (r - 1) * Fraction(x.pair(h.c1, h.c1))
        + 2 * r * h.c2
    )
    return ratnorm(numerator / (2 * r))


def classify(x: SurfaceGeometry, h: HiggsNumerics) -> RegimeReport:
    """Full classification of (r, c1, c2) against the two conditions.

    NoDeltaSolution when the determinant equation has no lattice
    solution; otherwise Empty, Boundary or Generic by comparing c2 with
    the threshold.  Boundary and Generic carry a witness.
    """
    threshold, _ = c2_gbun(x, h)
    delta = solve_delta(x, h)
    if delta is None:
        return RegimeReport(Regime.NO_DELTA_SOLUTION, threshold, None)
    if h.c2 < threshold:
        return RegimeReport(Regime.EMPTY, threshold, None)
    n = h.c2 - threshold
    if not isinstance(n, int):
        # solvable determinant equation forces an integral threshold;
        # reaching this means the input violated that arithmetic fact
        raise ArithmeticError(
            f"threshold {threshold} is non-integral although delta = {delta} exists"
        )
    if n == 0:
        return RegimeReport(Regime.BOUNDARY, threshold, FiberWitness(delta, 0))
    return RegimeReport(Regime.GENERIC, threshold, FiberWitness(delta, n))
