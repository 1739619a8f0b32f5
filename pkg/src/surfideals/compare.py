"""Side-by-side comparison of multiplier and test ideals over prime sweeps.

For each pair the characteristic-zero multiplier ideal is computed once
(its combinatorics are characteristic-free) and the test ideal once per
prime; verdicts are exact generator-set comparisons.  The built-in
catalog is the desk-scale grid that the acceptance suite and the CLI
share: every cyclic quotient 1/r(1,a) with 2 <= r <= 12, Z in
{0, toric boundary}, lambda in {0, 1/2, 2/3, 1, 5/4}.

A report never claims anything about untested primes: it records the
smallest tested prime from which agreement is unbroken, and the verdict
for each tested prime (including skips at wild primes p | r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .divisors import DivisorVector, rat
from .errors import Unstabilized
from .frobenius import (
    CharPContext,
    boundary_containment_check,
    numerical_containment_check,
    test_ideal_detailed,
)
from .multiplier import PairSpec, multiplier_ideal
from .toric import MonomialIdeal, ToricSurfaceModel, hj_resolve

PRIMES_DEFAULT = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)

CATALOG_LAMBDAS = (Fraction(0), Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(5, 4))
CATALOG_Z_KINDS = ("zero", "boundary")
CATALOG_R_MAX = 12

EQUAL = "equal"
MULTIPLIER_LARGER = "multiplier-strictly-larger"
TEST_LARGER = "test-strictly-larger"
INCOMPARABLE = "incomparable"
SKIPPED = "skipped(p|r)"
UNSTABLE = "unstabilized"


@dataclass(frozen=True)
class PrimeVerdict:
    p: int
    verdict: str
    test_gens: Optional[tuple[tuple[int, int], ...]] = None
    easy_inclusion: Optional[bool] = None
    boundary_check: Optional[bool] = None
    sweeps: Optional[int] = None

    def to_dict(self) -> dict:
        doc: dict = {"p": self.p, "verdict": self.verdict}
        if self.sweeps is not None:
            doc["sweeps"] = self.sweeps
        if self.easy_inclusion is not None:
            doc["easy_inclusion"] = self.easy_inclusion
        if self.boundary_check is not None:
            doc["boundary_containment"] = self.boundary_check
        if self.test_gens is not None:
            doc["test_ideal"] = [list(g) for g in self.test_gens]
        return doc


@dataclass(frozen=True)
class ComparisonReport:
    pair_id: str
    multiplier_gens: tuple[tuple[int, int], ...]
    verdicts: tuple[PrimeVerdict, ...]
    stable_from_prime: Optional[int]

    def all_equal(self) -> bool:
        return all(v.verdict in (EQUAL, SKIPPED) for v in self.verdicts)

    def to_dict(self) -> dict:
        return {
            "pair": self.pair_id,
            "multiplier_ideal": [list(g) for g in self.multiplier_gens],
            "primes": [v.to_dict() for v in self.verdicts],
            "stable_from_prime": self.stable_from_prime,
        }


def pair_id(model: ToricSurfaceModel, z_kind: str, lam: Fraction) -> str:
    return f"cyclic:{model.r}/{model.a}|z={z_kind}|lam={lam}"


def z_divisor(model: ToricSurfaceModel, z_kind: str) -> DivisorVector:
    if z_kind == "zero":
        return DivisorVector.zero()
    if z_kind == "boundary":
        return model.boundary_divisor()
    raise ValueError(f"unknown Z choice {z_kind!r}")


@dataclass(frozen=True)
class CatalogEntry:
    r: int
    a: int
    z_kind: str
    lam: Fraction

    @property
    def entry_id(self) -> str:
        return f"cyclic:{self.r}/{self.a}|z={self.z_kind}|lam={self.lam}"

    def model(self) -> ToricSurfaceModel:
        return hj_resolve(self.r, self.a)

    def pair(self) -> PairSpec:
        model = self.model()
        return PairSpec(model, z_divisor(model, self.z_kind), self.lam)


def catalog_entries() -> tuple[CatalogEntry, ...]:
    entries = []
    for r in range(2, CATALOG_R_MAX + 1):
        for a in range(1, r):
            if math.gcd(r, a) != 1:
                continue
            for z_kind in CATALOG_Z_KINDS:
                for lam in CATALOG_LAMBDAS:
                    entries.append(CatalogEntry(r, a, z_kind, lam))
    return tuple(entries)


def _classify(j: MonomialIdeal, tau: MonomialIdeal) -> str:
    tau_in_j = tau.issubset(j)
    j_in_tau = j.issubset(tau)
    if tau_in_j and j_in_tau:
        return EQUAL
    if tau_in_j:
        return MULTIPLIER_LARGER
    if j_in_tau:
        return TEST_LARGER
    return INCOMPARABLE


def compare_pair(
    pair: PairSpec,
    primes: Sequence[int] = PRIMES_DEFAULT,
    e_max: int = 4,
    pair_name: Optional[str] = None,
    with_checks: bool = True,
) -> ComparisonReport:
    """Run the multiplier/test comparison for one pair over a prime sweep.

    Wild primes (p | r) are recorded as skipped; an unstabilized fixed
    point (never observed on the catalog) is recorded without aborting
    the sweep.
    """
    model = pair.model
    j = multiplier_ideal(pair)
    gamma_sample = model.boundary_divisor().scale(Fraction(1, 2))
    verdicts = []
    for p in sorted(primes):
        if model.r % p == 0:
            verdicts.append(PrimeVerdict(p, SKIPPED))
            continue
        ctx = CharPContext(p, e_max)
        try:
            detail = test_ideal_detailed(model, ctx, pair.z, pair.lam)
        except Unstabilized:
            verdicts.append(PrimeVerdict(p, UNSTABLE))
            continue
        tau = detail.ideal
        verdict = _classify(j, tau)
        easy = boundary = None
        if with_checks:
            easy = numerical_containment_check(model, ctx, pair.z, pair.lam)
            boundary = boundary_containment_check(model, ctx, pair.z, pair.lam, gamma_sample)
        verdicts.append(
            PrimeVerdict(
                p,
                verdict,
                test_gens=tau.gens if verdict != EQUAL else None,
                easy_inclusion=easy,
                boundary_check=boundary,
                sweeps=detail.sweeps,
            )
        )
    computed = [v for v in verdicts if v.verdict not in (SKIPPED,)]
    stable_from = None
    for v in computed:
        if all(w.verdict == EQUAL for w in computed if w.p >= v.p):
            stable_from = v.p
            break
    if pair.z.is_zero():
        z_kind = "zero"
    elif pair.z == model.boundary_divisor():
        z_kind = "boundary"
    else:
        z_kind = "custom"
    name = pair_name or pair_id(model, z_kind, pair.lam)
    return ComparisonReport(name, j.gens, tuple(verdicts), stable_from)


def compare_entry(entry: CatalogEntry, primes: Sequence[int] = PRIMES_DEFAULT, e_max: int = 4) -> ComparisonReport:
    return compare_pair(entry.pair(), primes=primes, e_max=e_max, pair_name=entry.entry_id)
