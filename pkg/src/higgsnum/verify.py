"""Self-contained oracle suites behind the verify subcommand.

Each suite draws deterministic pseudo-random inputs from a seeded
generator, checks an exact identity or inequality, and reports the
number of checks with any failures.  The identities come in pairs of
independent computations (ring product vs. axioms, chi upstairs vs.
downstairs, enumeration vs. recurrence), so a bookkeeping slip in one
path cannot cancel in the other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .ns_lattice import NSLattice, NSVector, QNSVector, pair
from .surface_chow import (
    ChowClass,
    HiggsNumerics,
    SurfaceGeometry,
    chow_mul,
    line_bundle_ch,
)
from .proj_bundle import (
    canonical_y,
    dinfty_class,
    hyperplane_class,
    pullback,
    restrict_to_spectral,
    spectral_divisor_class,
    y_mul,
    y_pushforward,
)
from .spectral import SpectralCover, chi_two_ways
from .hitchin_criterion import c2_gbun, classify, n_points, solve_delta
from .hn_branches import (
    HNFactor,
    HNType,
    discriminant_identity,
    iter_partitions_at_most,
    monopole_components,
    olympic_verify,
)
from . import presets

__all__ = ["DEFAULT_SEED", "SUITE_NAMES", "SuiteResult", "run_suites"]

DEFAULT_SEED = 1729

SUITE_NAMES = (
    "ring",
    "chi",
    "adjunction",
    "olympic",
    "discriminant",
    "partition",
    "hodge",
)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, detail: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(detail)


def _blowup_plane() -> SurfaceGeometry:
    # plane blown up in a point: rank-2 lattice diag(1, -1)
    return SurfaceGeometry(
        lattice=NSLattice(2, ((1, 0), (0, -1)), basis_labels=("H", "E")),
        canonical=NSVector((-3, 1)),
        polarization=NSVector((2, -1)),
        c2_top=4,
        name="blowup-p2",
    )


def _surfaces() -> list[SurfaceGeometry]:
    return [presets.p2(), presets.hypersurface(4), presets.hypersurface(5), _blowup_plane()]


def _rand_rat(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, 3))


def _rand_qvec(rng: random.Random, rank: int) -> QNSVector:
    return QNSVector(tuple(_rand_rat(rng) for _ in range(rank)))


def _rand_vec(rng: random.Random, rank: int, low: int = -9, high: int = 9) -> NSVector:
    return NSVector(tuple(rng.randint(low, high) for _ in range(rank)))


def _rand_chow(rng: random.Random, rank: int) -> ChowClass:
    return ChowClass(_rand_rat(rng), _rand_qvec(rng, rank), _rand_rat(rng))


def _suite_ring(rng: random.Random) -> SuiteResult:
    res = SuiteResult("ring")
    for x in _surfaces():
        rank = x.rank
        unit = ChowClass.unit(rank)
        for _ in range(60):
            a, b, c = (_rand_chow(rng, rank) for _ in range(3))
            res.check(
                chow_mul(x, a, b) == chow_mul(x, b, a),
                f"commutativity on {x.name}",
            )
            res.check(
                chow_mul(x, a, chow_mul(x, b, c)) == chow_mul(x, chow_mul(x, a, b), c),
                f"associativity on {x.name}",
            )
            res.check(
                chow_mul(x, a, b + c) == chow_mul(x, a, b) + chow_mul(x, a, c),
                f"distributivity on {x.name}",
            )
            res.check(chow_mul(x, a, unit) == a, f"unit on {x.name}")
        for _ in range(40):
            d = _rand_vec(rng, rank)
            e = _rand_vec(rng, rank)
            res.check(
                line_bundle_ch(x, d + e)
                == chow_mul(x, line_bundle_ch(x, d), line_bundle_ch(x, e)),
                f"exponential property on {x.name}",
            )
    return res


def _suite_chi(rng: random.Random) -> SuiteResult:
    res = SuiteResult("chi")
    surfaces = _surfaces()
    for _ in range(500):
        x = rng.choice(surfaces)
        s = SpectralCover(x, rng.randint(1, 6))
        delta = _rand_vec(rng, x.rank, -5, 5)
        n = rng.randint(0, 20)
        upstairs, downstairs = chi_two_ways(s, delta, n)
        res.check(
            upstairs == downstairs,
            f"chi mismatch on {x.name}, r={s.r}, delta={delta.coords}, n={n}: "
            f"{upstairs} vs {downstairs}",
        )
    return res


def _suite_adjunction(rng: random.Random) -> SuiteResult:
    res = SuiteResult("adjunction")
    for x in _surfaces():
        eta = hyperplane_class(x)
        eta3 = y_mul(y_mul(eta, eta), eta)
        res.check(
            y_pushforward(eta3).deg2 == x.l_squared,
            f"eta^3 integral on {x.name}",
        )
        res.check(
            y_mul(eta, dinfty_class(x)) == 0 * eta,
            f"eta . D_inf on {x.name}",
        )
        for r in range(1, 9):
            restricted = restrict_to_spectral(canonical_y(x) + spectral_divisor_class(x, r), r)
            expected = ChowClass.of_divisor(x.canonical + (r - 1) * x.polarization)
            res.check(
                restricted == expected,
                f"adjunction on {x.name}, r={r}",
            )
            res.check(
                spectral_divisor_class(x, r)
                == r * (dinfty_class(x) + pullback(x, x.polarization)),
                f"cover class decomposition on {x.name}, r={r}",
            )
    return res


def _suite_olympic(rng: random.Random) -> SuiteResult:
    res = SuiteResult("olympic")
    for row in olympic_verify(12):
        res.check(row["ok"], f"composition bound at r={row['r']}: {row}")
    return res


def _suite_discriminant(rng: random.Random) -> SuiteResult:
    res = SuiteResult("discriminant")
    for x in _surfaces():
        for _ in range(250):
            m = rng.randint(1, 5)
            factors = tuple(
                HNFactor(rng.randint(1, 4), _rand_vec(rng, x.rank, -5, 5), rng.randint(-10, 10))
                for _ in range(m)
            )
            lhs, rhs = discriminant_identity(x, HNType(factors))
            res.check(
                lhs == rhs,
                f"discriminant identity on {x.name} with {m} factors: {lhs} vs {rhs}",
            )
    return res


@lru_cache(maxsize=None)
def partition_count(n: int, k: int) -> int:
    """Partitions of n into at most k parts, by the standard recurrence."""
    if n == 0:
        return 1
    if k == 0 or n < 0:
        return 0
    return partition_count(n, k - 1) + partition_count(n - k, k)


def _suite_partition(rng: random.Random) -> SuiteResult:
    res = SuiteResult("partition")
    for n in range(41):
        for k in range(1, 7):
            enumerated = sum(1 for _ in iter_partitions_at_most(n, k))
            res.check(
                enumerated == partition_count(n, k),
                f"partition count at n={n}, k={k}: {enumerated} vs {partition_count(n, k)}",
            )
    x = presets.hypersurface(5)
    for _ in range(50):
        r = rng.randint(1, 4)
        delta = _rand_vec(rng, 1, -4, 4)
        c1 = r * delta - (r * (r - 1) // 2) * x.polarization
        n = rng.randint(0, 12)
        threshold, integral = c2_gbun(x, HiggsNumerics(r, c1, 0))
        if not integral:
            res.check(False, f"non-integral threshold with solvable delta, r={r}")
            continue
        h = HiggsNumerics(r, c1, threshold + n)
        comps = monopole_components(x, h)
        res.check(
            len(comps) == partition_count(n, r),
            f"component count r={r}, n={n}: {len(comps)} vs {partition_count(n, r)}",
        )
    return res


def _suite_hodge(rng: random.Random) -> SuiteResult:
    res = SuiteResult("hodge")
    for x in _surfaces():
        lat = x.lattice
        for _ in range(250):
            d = _rand_vec(rng, lat.rank)
            p = x.polarization if rng.random() < 0.5 else _rand_vec(rng, lat.rank)
            p2 = pair(lat, p, p)
            if p2 <= 0:
                p = x.polarization
                p2 = x.l_squared
            dl = pair(lat, d, p)
            res.check(
                dl * dl >= pair(lat, d, d) * p2,
                f"index inequality on {x.name}: D={d.coords}, P={p.coords}",
            )
    return res


_SUITES = {
    "ring": _suite_ring,
    "chi": _suite_chi,
    "adjunction": _suite_adjunction,
    "olympic": _suite_olympic,
    "discriminant": _suite_discriminant,
    "partition": _suite_partition,
    "hodge": _suite_hodge,
}


def run_suites(names: tuple[str, ...], seed: int) -> list[SuiteResult]:
    """Run the named suites, each on its own generator derived from seed."""
    out = []
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        out.append(_SUITES[name](rng))
    return out
