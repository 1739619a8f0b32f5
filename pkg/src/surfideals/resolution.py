"""Resolutions of normal surface singularities as intersection data.

A `ResolutionModel` records the exceptional curves of a projective
resolution pi: Y -> X of one normal surface point, their intersection
matrix (negative definite by the classical contractibility criterion),
and optional non-exceptional divisors ("extras": strict transforms or
boundary components) through their intersection numbers with the E_i.

On this data the module computes Mumford's numerical pullback, the
numerical relative canonical divisor K_Y - pi*_num(K_X) whose
exceptional coefficients are the discrepancies, the surface negativity
check, and the discrepancy inequality for effective boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from . import linalg
from .divisors import DivisorLabel, DivisorVector, RatLike, rat
from .errors import AsymmetricMatrix, InvalidModel, NonEffectiveGamma, NotNegativeDefinite


@dataclass(frozen=True)
class ExceptionalCurve:
    label: DivisorLabel
    self_intersection: int
    genus: int = 0

    def __post_init__(self):
        if self.label.kind != "exceptional":
            raise InvalidModel(f"curve {self.label.name!r} must have kind 'exceptional'")
        if self.self_intersection > -1:
            raise InvalidModel(f"curve {self.label.name!r} needs self-intersection <= -1")
        if self.genus < 0:
            raise InvalidModel(f"curve {self.label.name!r} has negative genus")


@dataclass(frozen=True)
class Extra:
    """A non-exceptional prime divisor seen through the resolution.

    `meets` lists its intersection number with each exceptional curve;
    `pushforward` is the coefficient of its image on X (1 for a prime
    divisor mapped to itself).
    """

    label: DivisorLabel
    meets: tuple[int, ...]
    pushforward: Fraction = Fraction(1)

    def __post_init__(self):
        if self.label.kind == "exceptional":
            raise InvalidModel(f"extra {self.label.name!r} cannot be exceptional")
        if any(m < 0 for m in self.meets):
            raise InvalidModel(f"extra {self.label.name!r} has negative intersection numbers")


@dataclass(frozen=True)
class ResolutionModel:
    curves: tuple[ExceptionalCurve, ...]
    matrix: tuple[tuple[int, ...], ...]
    extras: tuple[Extra, ...] = ()

    def __post_init__(self):
        n = len(self.curves)
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise InvalidModel("intersection matrix shape does not match curve list")
        for i in range(n):
            for j in range(n):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise AsymmetricMatrix(f"matrix entry ({i},{j}) != ({j},{i})")
                if i != j and self.matrix[i][j] < 0:
                    raise InvalidModel("off-diagonal intersection numbers must be >= 0")
            if self.matrix[i][i] != self.curves[i].self_intersection:
                raise InvalidModel(f"diagonal entry {i} disagrees with self-intersection")
        names = [c.label.name for c in self.curves] + [x.label.name for x in self.extras]
        if len(set(names)) != len(names):
            raise InvalidModel("divisor labels must be unique within a model")
        for x in self.extras:
            if len(x.meets) != n:
                raise InvalidModel(f"extra {x.label.name!r} has {len(x.meets)} intersection numbers, expected {n}")
        if not linalg.is_negative_definite(self.matrix):
            raise NotNegativeDefinite("intersection matrix is not negative definite")

    # -- structure --------------------------------------------------------

    @property
    def labels(self) -> tuple[DivisorLabel, ...]:
        return tuple(c.label for c in self.curves)

    def extra_by_name(self, name: str) -> Extra:
        for x in self.extras:
            if x.label.name == name:
                return x
        raise InvalidModel(f"model has no extra divisor named {name!r}")

    def canonical_intersections(self) -> tuple[int, ...]:
        """K_Y . E_i by adjunction: -E_i^2 - 2 + 2 genus(E_i)."""
        return tuple(-c.self_intersection - 2 + 2 * c.genus for c in self.curves)

    def intersect_with_curves(self, d: DivisorVector) -> tuple[Fraction, ...]:
        """The vector (D . E_j)_j for a divisor supported on model labels."""
        dots = [Fraction(0)] * len(self.curves)
        for label, c in d.items():
            if label.kind == "exceptional":
                try:
                    i = self.labels.index(label)
                except ValueError:
                    raise InvalidModel(f"unknown exceptional label {label.name!r}") from None
                for j in range(len(self.curves)):
                    dots[j] += c * self.matrix[i][j]
            else:
                x = self.extra_by_name(label.name)
                for j in range(len(self.curves)):
                    dots[j] += c * x.meets[j]
        return tuple(dots)


def _exceptional_completion(model: ResolutionModel, dots: Sequence[Fraction]) -> list[Fraction]:
    """Coefficients a with (sum a_i E_i) . E_j = dots_j for all j.

    Unique because the intersection matrix is negative definite.
    """
    return linalg.solve(model.matrix, list(dots))


@lru_cache(maxsize=None)
def relative_canonical(model: ResolutionModel) -> DivisorVector:
    """K_Y - pi*_num(K_X), supported on the exceptional curves.

    The coefficient of E_i is its (numerical) discrepancy: the unique
    exceptional a with (K_Y - sum a_i E_i) . E_j = 0 for every j.
    """
    k_dots = [Fraction(v) for v in model.canonical_intersections()]
    a = _exceptional_completion(model, k_dots)
    return DivisorVector(zip(model.labels, a))


def discrepancies(model: ResolutionModel) -> dict[str, Fraction]:
    rc = relative_canonical(model)
    return {c.label.name: rc.coeff(c.label) for c in model.curves}


def numerical_pullback(model: ResolutionModel, coeffs: Mapping[str, RatLike]) -> DivisorVector:
    """Numerical pullback of D = sum coeff * (image of extra) on X.

    Returns strict transform + exceptional correction: the unique divisor
    with zero intersection against every E_j that pushes forward to D.
    """
    strict = DivisorVector([(model.extra_by_name(n).label, rat(c)) for n, c in coeffs.items()])
    dots = model.intersect_with_curves(strict)
    a = _exceptional_completion(model, [-d for d in dots])
    return strict + DivisorVector(zip(model.labels, a))


def negativity_check(model: ResolutionModel, d: DivisorVector) -> bool:
    """Surface negativity lemma as a runtime assertion.

    Tests the hypotheses (D . E_j >= 0 for all j, pushforward of D <= 0)
    and, when they hold, returns whether D <= 0 — which negative
    definiteness forces to be true.  Vacuously true otherwise.
    """
    dots = model.intersect_with_curves(d)
    if any(v < 0 for v in dots):
        return True
    if any(c > 0 for label, c in d.items() if label.kind != "exceptional"):
        return True
    return all(c <= 0 for _, c in d.items())


def pair_inequality_check(model: ResolutionModel, gamma: Mapping[str, RatLike]) -> bool:
    """K_Y - pi*_num(K_X + Gamma) <= K_Y - pi*_num(K_X) on exceptional labels.

    Gamma is an effective divisor on X given through extras.  Holds for
    every effective Gamma because the inverse intersection matrix has
    nonpositive entries.
    """
    g = {name: rat(c) for name, c in gamma.items()}
    if any(c < 0 for c in g.values()):
        raise NonEffectiveGamma("Gamma must have nonnegative coefficients")
    k_dots = [Fraction(v) for v in model.canonical_intersections()]
    strict = DivisorVector([(model.extra_by_name(n).label, c) for n, c in g.items()])
    g_dots = model.intersect_with_curves(strict)
    # pullback of K_X + Gamma has exceptional part a with M a = -(K+Gamma).E
    a = _exceptional_completion(model, [-(kd + gd) for kd, gd in zip(k_dots, g_dots)])
    lhs = DivisorVector(zip(model.labels, (-ai for ai in a)))
    return lhs <= relative_canonical(model)
