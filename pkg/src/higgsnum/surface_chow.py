"""Truncated rational intersection ring of a polarized surface.

A class lives in three graded pieces: degree 0 (a multiple of the
fundamental class), degree 1 (a rational divisor class), degree 2 (a
rational multiple of the point class).  Products above the dimension of
the surface vanish, so the ring multiplication is

    (a0, a1, a2) * (b0, b1, b2)
        = (a0*b0, a0*b1 + b0*a1, a0*b2 + b0*a2 + a1.b1)

with a1.b1 the intersection pairing.  On top of the ring this module
provides Chern characters of line bundles and of the cotangent bundle,
the surface Todd class, the Riemann-Roch integral, Hilbert polynomial
values and the discriminant of rank/c1/c2 data.

The geometry of the surface itself enters only through the lattice, the
canonical class, the polarization and the topological Euler number; the
constructor checks the Noether constraint that K^2 + c2 is divisible by
12, so every valid instance has an integral chi(O).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .ns_lattice import (
    LatticeError,
    NSLattice,
    NSVector,
    QNSVector,
    Rat,
    pair,
    qvec,
    ratnorm,
)

__all__ = [
    "ChowClass",
    "HiggsNumerics",
    "SurfaceGeometry",
    "ValidationError",
    "chi",
    "chow_inverse",
    "chow_mul",
    "cotangent_ch",
    "discriminant",
    "hilbert_polynomial",
    "ideal_twist_ch",
    "line_bundle_ch",
    "todd_surface",
]


class ValidationError(ValueError):
    """Surface or sheaf data violating a structural invariant."""


@dataclass(frozen=True)
class SurfaceGeometry:
    """Numerical data of a smooth projective polarized surface.

    canonical and polarization are classes in the lattice; c2_top is the
    topological Euler number.  The polarization must have positive
    self-intersection and (K^2 + c2_top) must be divisible by 12.
    """

    lattice: NSLattice
    canonical: NSVector
    polarization: NSVector
    c2_top: int
    name: str = ""

    def __post_init__(self) -> None:
        self.lattice.check_vector(self.canonical)
        self.lattice.check_vector(self.polarization)
        if not isinstance(self.c2_top, int):
            raise ValidationError(f"c2_top must be an integer, got {self.c2_top!r}")
        l2 = pair(self.lattice, self.polarization, self.polarization)
        if l2 <= 0:
            raise ValidationError(
                f"polarization must have positive self-intersection, got {l2}"
            )
        k2 = pair(self.lattice, self.canonical, self.canonical)
        if (k2 + self.c2_top) % 12 != 0:
            raise ValidationError(
                f"Noether integrality fails: K^2 + c2 = {k2 + self.c2_top} "
                "is not divisible by 12"
            )

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def k_squared(self) -> Rat:
        return pair(self.lattice, self.canonical, self.canonical)

    @property
    def l_squared(self) -> Rat:
        return pair(self.lattice, self.polarization, self.polarization)

    @property
    def chi_structure_sheaf(self) -> int:
        return (self.k_squared + self.c2_top) // 12

    def pair(self, v, w) -> Rat:
        return pair(self.lattice, v, w)


@dataclass(frozen=True)
class ChowClass:
    """Element of the truncated intersection ring of a surface.

    deg0 and deg2 are exact rationals, deg1 a rational divisor class.
    Addition and scalar multiplication are defined here; the ring
    product needs the pairing and lives in chow_mul.
    """

    deg0: Rat
    deg1: QNSVector
    deg2: Rat

    def __post_init__(self) -> None:
        object.__setattr__(self, "deg0", ratnorm(Fraction(self.deg0)))
        object.__setattr__(self, "deg1", qvec(self.deg1))
        object.__setattr__(self, "deg2", ratnorm(Fraction(self.deg2)))

    @classmethod
    def zero(cls, rank: int) -> "ChowClass":
        return cls(0, QNSVector.zero(rank), 0)

    @classmethod
    def unit(cls, rank: int) -> "ChowClass":
        return cls(1, QNSVector.zero(rank), 0)

    @classmethod
    def of_divisor(cls, v: Union[NSVector, QNSVector]) -> "ChowClass":
        return cls(0, qvec(v), 0)

    @classmethod
    def of_points(cls, x: Rat, rank: int) -> "ChowClass":
        return cls(0, QNSVector.zero(rank), x)

    @property
    def rank(self) -> int:
        return len(self.deg1)

    def __add__(self, other: "ChowClass") -> "ChowClass":
        if not isinstance(other, ChowClass):
            return NotImplemented
        return ChowClass(self.deg0 + other.deg0, self.deg1 + other.deg1,
                         self.deg2 + other.deg2)

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        if not isinstance(other, ChowClass):
            return NotImplemented
        return ChowClass(self.deg0 - other.deg0, self.deg1 - other.deg1,
                         self.deg2 - other.deg2)

    def __neg__(self) -> "ChowClass":
        return ChowClass(-self.deg0, -self.deg1, -self.deg2)

    def __mul__(self, k: Rat) -> "ChowClass":
        if isinstance(k, (int, Fraction)):
            return ChowClass(k * self.deg0, k * self.deg1, k * self.deg2)
        return NotImplemented

    __rmul__ = __mul__


def _check_class(x: SurfaceGeometry, a: ChowClass) -> None:
    if a.rank != x.lattice.rank:
        raise LatticeError(
            f"class over a rank-{a.rank} lattice used on a rank-{x.lattice.rank} surface"
        )


def chow_mul(x: SurfaceGeometry, a: ChowClass, b: ChowClass) -> ChowClass:
    """Product in the truncated intersection ring of x."""
    _check_class(x, a)
    _check_class(x, b)
    return ChowClass(
        a.deg0 * b.deg0,
        a.deg0 * b.deg1 + b.deg0 * a.deg1,
        a.deg0 * b.deg2 + b.deg0 * a.deg2 + pair(x.lattice, a.deg1, b.deg1),
    )


def chow_inverse(x: SurfaceGeometry, a: ChowClass) -> ChowClass:
    """Multiplicative inverse of a class with invertible degree-0 part."""
    _check_class(x, a)
    if a.deg0 == 0:
        raise ValidationError("class with deg0 = 0 is not invertible")
    c0 = Fraction(a.deg0)
    d1 = -a.deg1 / (c0 * c0)
    d2 = pair(x.lattice, a.deg1, a.deg1) / c0**3 - Fraction(a.deg2) / (c0 * c0)
    return ChowClass(1 / c0, d1, d2)


def line_bundle_ch(x: SurfaceGeometry, d: Union[NSVector, QNSVector]) -> ChowClass:
    """Chern character exp(D) = (1, D, D^2/2) of a line bundle class."""
    x.lattice.check_vector(d)
    return ChowClass(1, qvec(d), Fraction(pair(x.lattice, d, d), 2))


def todd_surface(x: SurfaceGeometry) -> ChowClass:
    """Todd class (1, -K/2, (K^2 + c2)/12) of the surface."""
    return ChowClass(
        1,
        qvec(x.canonical) * Fraction(-1, 2),
        Fraction(x.k_squared + x.c2_top, 12),
    )


def cotangent_ch(x: SurfaceGeometry) -> ChowClass:
    """Chern character (2, K, (K^2 - 2 c2)/2) of the cotangent bundle."""
    return ChowClass(2, qvec(x.canonical), Fraction(x.k_squared - 2 * x.c2_top, 2))


def chi(x: SurfaceGeometry, ch: ChowClass) -> Rat:
    """Euler characteristic by Riemann-Roch: degree-2 part of ch * Td.

    The value is exact; for the Chern character of an actual sheaf it is
    an integer, but non-integral inputs are legitimate and the result is
    returned as is.
    """
    return chow_mul(x, ch, todd_surface(x)).deg2


def hilbert_polynomial(x: SurfaceGeometry, ch: ChowClass, n: int) -> Rat:
    """chi of ch twisted by the n-th power of the polarization.

    As a function of n this is the quadratic
    (r L^2 / 2) n^2 + (ch1 - (r/2) K).L n + chi(ch).
    """
    twist = line_bundle_ch(x, n * x.polarization)
    return chi(x, chow_mul(x, ch, twist))


def ideal_twist_ch(x: SurfaceGeometry, m: NSVector, n_points: int) -> ChowClass:
    """Chern character of a line bundle twisted by the ideal of n points."""
    if n_points < 0:
        raise ValidationError(f"point count must be nonnegative, got {n_points}")
    c = line_bundle_ch(x, m)
    return ChowClass(c.deg0, c.deg1, c.deg2 - n_points)


@dataclass(frozen=True)
class HiggsNumerics:
    """Rank, first and second Chern class of a torsion-free sheaf."""

    r: int
    c1: NSVector
    c2: int

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or self.r < 1:
            raise ValidationError(f"rank must be a positive integer, got {self.r!r}")
        if not isinstance(self.c2, int):
            raise ValidationError(f"c2 must be an integer, got {self.c2!r}")


def discriminant(h: HiggsNumerics, x: SurfaceGeometry) -> Rat:
    """Bogomolov discriminant 2 r c2 - (r - 1) c1^2."""
    x.lattice.check_vector(h.c1)
    return ratnorm(2 * h.r * h.c2 - (h.r - 1) * Fraction(x.pair(h.c1, h.c1)))
