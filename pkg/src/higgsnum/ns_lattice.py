"""Exact arithmetic on the numerical divisor lattice of a surface.

The lattice is free of finite rank, carries an integer-valued symmetric
intersection form, and is required to have signature (1, rank-1), which
is what the Hodge index theorem forces for divisor classes of a smooth
projective surface modulo numerical equivalence.  Torsion never enters:
we work with the image of divisor classes in rational cohomology, which
is free by construction.

Everything here is computed with integers and `fractions.Fraction`.
There are no floating-point numbers and no tolerances anywhere in the
package; equality always means exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

__all__ = [
    "LatticeError",
    "NSLattice",
    "NSVector",
    "QNSVector",
    "Rat",
    "divide",
    "inertia",
    "pair",
    "qvec",
    "ratnorm",
    "signature",
]

Rat = Union[int, Fraction]


class LatticeError(ValueError):
    """Malformed lattice data, or vectors that do not fit the lattice."""


def ratnorm(x: Rat) -> Rat:
    """Collapse an exact rational to a plain int when it is integral."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass(frozen=True)
class NSVector:
    """Integer coordinate vector in a fixed basis of the lattice."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(self.coords)
        for c in coords:
            if not isinstance(c, int):
                raise LatticeError(f"integer coordinates required, got {c!r}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, rank: int) -> "NSVector":
        return cls((0,) * rank)

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "NSVector") -> "NSVector":
        if isinstance(other, NSVector):
            _same_length(self, other)
            return NSVector(tuple(a + b for a, b in zip(self.coords, other.coords)))
        return NotImplemented

    def __sub__(self, other: "NSVector") -> "NSVector":
        if isinstance(other, NSVector):
            _same_length(self, other)
            return NSVector(tuple(a - b for a, b in zip(self.coords, other.coords)))
        return NotImplemented

    def __neg__(self) -> "NSVector":
        return NSVector(tuple(-a for a in self.coords))

    def __mul__(self, k: Rat) -> Union["NSVector", "QNSVector"]:
        if isinstance(k, int):
            return NSVector(tuple(k * a for a in self.coords))
        if isinstance(k, Fraction):
            return QNSVector(tuple(k * a for a in self.coords))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, k: int) -> "QNSVector":
        return QNSVector(tuple(Fraction(a, k) for a in self.coords))

    def as_rational(self) -> "QNSVector":
        return QNSVector(tuple(Fraction(a) for a in self.coords))


@dataclass(frozen=True)
class QNSVector:
    """Rational coordinate vector, used for intermediate divisions."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> "QNSVector":
        return cls((Fraction(0),) * rank)

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: Union["QNSVector", NSVector]) -> "QNSVector":
        o = qvec(other) if isinstance(other, (QNSVector, NSVector)) else None
        if o is None:
            return NotImplemented
        _same_length(self, o)
        return QNSVector(tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other: Union["QNSVector", NSVector]) -> "QNSVector":
        o = qvec(other) if isinstance(other, (QNSVector, NSVector)) else None
        if o is None:
            return NotImplemented
        _same_length(self, o)
        return QNSVector(tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other: Union["QNSVector", NSVector]) -> "QNSVector":
        return qvec(other).__sub__(self)

    def __neg__(self) -> "QNSVector":
        return QNSVector(tuple(-a for a in self.coords))

    def __mul__(self, k: Rat) -> "QNSVector":
        if isinstance(k, (int, Fraction)):
            return QNSVector(tuple(k * a for a in self.coords))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, k: Rat) -> "QNSVector":
        return QNSVector(tuple(a / k for a in self.coords))

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def to_integral(self) -> Optional[NSVector]:
        """The same vector with int coordinates, or None if any is fractional."""
        if not self.is_integral():
            return None
        return NSVector(tuple(int(a) for a in self.coords))


AnyVector = Union[NSVector, QNSVector]


def qvec(v: AnyVector) -> QNSVector:
    """Promote a lattice vector to rational coordinates."""
    if isinstance(v, QNSVector):
        return v
    if isinstance(v, NSVector):
        return v.as_rational()
    raise LatticeError(f"not a lattice vector: {v!r}")


def _same_length(v, w) -> None:
    if len(v) != len(w):
        raise LatticeError(f"dimension mismatch: {len(v)} vs {len(w)}")


def inertia(gram: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Exact inertia (positive count, negative count) of a symmetric matrix.

    Symmetric reduction over the rationals: pick a nonzero diagonal
    pivot, record its sign, replace the trailing block by its Schur
    complement and repeat.  When the remaining diagonal vanishes but
    some off-diagonal entry a_ij does not, the basis change
    e_i -> e_i + e_j first produces the nonzero diagonal entry 2*a_ij.
    Raises LatticeError if the form is degenerate.
    """
    a = [[Fraction(x) for x in row] for row in gram]
    n = len(a)
    pos = neg = 0
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            off = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0),
                None,
            )
            if off is None:
                raise LatticeError("gram matrix is degenerate (nonzero kernel)")
            i, j = off
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            piv = i
        if piv != k:
            a[piv], a[k] = a[k], a[piv]
            for row in a:
                row[piv], row[k] = row[k], row[piv]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            f = a[i][k] / p
            for j in range(k + 1, n):
                a[i][j] -= f * a[k][j]
    return pos, neg


@dataclass(frozen=True)
class NSLattice:
    """Free lattice with an integral intersection form of signature (1, rank-1).

    The gram matrix is the intersection pairing in a fixed basis.  It is
    validated on construction: square of the stated rank, symmetric,
    integer entries, nondegenerate and of hyperbolic-type signature.
    """

    rank: int
    gram: tuple[tuple[int, ...], ...]
    basis_labels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or self.rank < 1:
            raise LatticeError(f"rank must be a positive integer, got {self.rank!r}")
        gram = tuple(tuple(row) for row in self.gram)
        if len(gram) != self.rank or any(len(row) != self.rank for row in gram):
            raise LatticeError(
                f"gram matrix must be {self.rank}x{self.rank}, got rows of lengths "
                f"{[len(row) for row in gram]}"
            )
        for row in gram:
            for x in row:
                if not isinstance(x, int):
                    raise LatticeError(f"gram entries must be integers, got {x!r}")
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if gram[i][j] != gram[j][i]:
                    raise LatticeError(f"gram matrix not symmetric at ({i},{j})")
        object.__setattr__(self, "gram", gram)
        if self.basis_labels is not None:
            labels = tuple(self.basis_labels)
            if len(labels) != self.rank:
                raise LatticeError("basis_labels length does not match rank")
            object.__setattr__(self, "basis_labels", labels)
        pos, neg = inertia(gram)
        if (pos, neg) != (1, self.rank - 1):
            raise LatticeError(
                f"signature must be (1, {self.rank - 1}), got ({pos}, {neg})"
            )

    def check_vector(self, v: AnyVector) -> None:
        if len(v) != self.rank:
            raise LatticeError(
                f"vector of length {len(v)} does not fit lattice of rank {self.rank}"
            )

    def zero(self) -> NSVector:
        return NSVector.zero(self.rank)

    def basis(self, i: int) -> NSVector:
        return NSVector(tuple(1 if j == i else 0 for j in range(self.rank)))


def pair(lat: NSLattice, v: AnyVector, w: AnyVector) -> Rat:
    """Intersection pairing v.w, exact.

    Integer for integral vectors, rational in general.
    """
    lat.check_vector(v)
    lat.check_vector(w)
    vq, wq = qvec(v), qvec(w)
    total = Fraction(0)
    for i, vi in enumerate(vq.coords):
        if vi == 0:
            continue
        row = lat.gram[i]
        total += vi * sum(row[j] * wj for j, wj in enumerate(wq.coords))
    return ratnorm(total)


def divide(lat: NSLattice, v: AnyVector, r: int) -> Optional[NSVector]:
    """v/r as a lattice vector, or None when v is not divisible by r."""
    if not isinstance(r, int) or r < 1:
        raise LatticeError(f"divisor must be a positive integer, got {r!r}")
    lat.check_vector(v)
    return (qvec(v) / r).to_integral()


def signature(lat: NSLattice) -> tuple[int, int]:
    """Counts of positive and negative squares of the intersection form."""
    return inertia(lat.gram)
