"""Toric models of cyclic quotient surface singularities.

The singularity 1/r(1,a) (gcd(r,a)=1) is presented on the lattice
N = Z^2 by the cone spanned by v_left = (0,1) and v_right = (r,-a);
this is the quotient presentation rewritten in the basis
(1/r)(1,a), (0,1) of Z^2 + Z*(1/r)(1,a).  Its minimal resolution is
the fan refinement along the rays u_1=(1,0), u_{i+1} = b_i u_i - u_{i-1}
where r/a = [[b_1,...,b_s]] is the negative-regular continued fraction;
consecutive rays span unimodular cones and the dual graph is the chain
of rational curves with self-intersections -b_i.

The orientation of the continued fraction is pinned by two
convention-free identities checked in the test suite: 1/3(1,1) resolves
to a single -3 curve, and 1/r(1,r-1) to a chain of r-1 curves of
self-intersection -2.

Monomials live in the dual lattice M = Z^2 with the standard pairing;
ord_{D_v}(x^u) = <u, v>.  Ideals and section modules of torus-invariant
divisors are represented by their finite minimal generating antichains,
found by bounded lattice enumeration (exact, desk scale).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .divisors import DivisorLabel, DivisorVector, RatLike, rat
from .errors import BadParameters, InvalidModel, NotIntegral
from .resolution import ExceptionalCurve, Extra, ResolutionModel

Point = tuple[int, int]

LEFT = "BL"
RIGHT = "BR"

# Hard cap on lattice points visited by one enumeration; generous for the
# desk-scale inputs this library targets (r <= 12, coefficients <= ~40).
ENUMERATION_LIMIT = 4_000_000


def _ceildiv(a: int, b: int) -> int:
    return -((-a) // b)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[0] + u[1] * v[1]


def negative_continued_fraction(num: int, den: int) -> tuple[int, ...]:
    """Expansion num/den = b_1 - 1/(b_2 - 1/(...)) with all b_i >= 2."""
    if den <= 0 or num <= den or math.gcd(num, den) != 1:
        raise BadParameters(f"expected coprime num > den >= 1, got {num}/{den}")
    bs = []
    while den:
        b = _ceildiv(num, den)
        bs.append(b)
        num, den = den, b * den - num
    return tuple(bs)


@dataclass(frozen=True)
class ToricSurfaceModel:
    """Resolved cyclic quotient 1/r(1,a), with r=1 for the smooth chart."""

    r: int
    a: int
    v_left: Point
    v_right: Point
    exceptional_rays: tuple[Point, ...]
    hj: tuple[int, ...]

    # -- labels and rays ---------------------------------------------------

    @property
    def boundary_labels(self) -> tuple[DivisorLabel, DivisorLabel]:
        return (DivisorLabel(LEFT, "boundary"), DivisorLabel(RIGHT, "boundary"))

    @property
    def exceptional_labels(self) -> tuple[DivisorLabel, ...]:
        return tuple(DivisorLabel(f"E{i+1}", "exceptional") for i in range(len(self.exceptional_rays)))

    @property
    def labels(self) -> tuple[DivisorLabel, ...]:
        bl, br = self.boundary_labels
        return (bl,) + self.exceptional_labels + (br,)

    def rays(self) -> tuple[tuple[DivisorLabel, Point], ...]:
        """All rays of the resolution fan, left boundary to right boundary."""
        bl, br = self.boundary_labels
        pairs = [(bl, self.v_left)]
        pairs += list(zip(self.exceptional_labels, self.exceptional_rays))
        pairs.append((br, self.v_right))
        return tuple(pairs)

    def ray(self, name: str) -> Point:
        for label, vec in self.rays():
            if label.name == name:
                return vec
        raise InvalidModel(f"model has no ray named {name!r}")

    def label(self, name: str) -> DivisorLabel:
        for label, _ in self.rays():
            if label.name == name:
                return label
        raise InvalidModel(f"model has no ray named {name!r}")

    def divisor(self, coeffs: Mapping[str, RatLike]) -> DivisorVector:
        """Torus-invariant divisor from a ray-name -> coefficient map."""
        return DivisorVector([(self.label(n), rat(c)) for n, c in coeffs.items()])

    def boundary_divisor(self) -> DivisorVector:
        bl, br = self.boundary_labels
        return DivisorVector([(bl, 1), (br, 1)])

    def in_monoid(self, u: Point) -> bool:
        return dot(u, self.v_left) >= 0 and dot(u, self.v_right) >= 0

    def __str__(self) -> str:
        return f"cyclic:{self.r}/{self.a}"


def hj_resolve(r: int, a: int) -> ToricSurfaceModel:
    """Minimal resolution of 1/r(1,a); (1,1) gives the smooth chart."""
    if not (isinstance(r, int) and isinstance(a, int)):
        raise BadParameters("r and a must be integers")
    if r == 1:
        if a != 1:
            raise BadParameters("the smooth chart is addressed as (r, a) = (1, 1)")
        return ToricSurfaceModel(1, 1, (0, 1), (1, 0), (), ())
    if r < 1 or not (1 <= a < r) or math.gcd(r, a) != 1:
        raise BadParameters(f"need gcd(r, a) = 1 and 1 <= a < r, got r={r}, a={a}")
    bs = negative_continued_fraction(r, a)
    rays = [(0, 1), (1, 0)]
    for b in bs:
        prev, cur = rays[-2], rays[-1]
        rays.append((b * cur[0] - prev[0], b * cur[1] - prev[1]))
    if rays[-1] != (r, -a):
        raise AssertionError("continued-fraction recursion left the cone open")
    return ToricSurfaceModel(r, a, (0, 1), (r, -a), tuple(rays[1:-1]), bs)


def monomial_valuation(model: ToricSurfaceModel, ray_name: str, u: Point) -> int:
    """ord along the divisor of `ray_name` of the monomial x^u: <u, v>."""
    return dot(u, model.ray(ray_name))


def support_function(model: ToricSurfaceModel, c_left: Fraction, c_right: Fraction) -> tuple[Fraction, Fraction]:
    """The linear functional ell in M_Q with <ell, v_left> = c_left and
    <ell, v_right> = c_right.  Unique since the boundary rays are a basis
    of N_Q; its denominators certify Q-Cartier indices."""
    vl, vr = model.v_left, model.v_right
    det = vl[0] * vr[1] - vl[1] * vr[0]
    l0 = Fraction(c_left * vr[1] - c_right * vl[1], 1) / det
    l1 = Fraction(vl[0] * c_right - vr[0] * c_left, 1) / det
    return (l0, l1)


def _pair_fraction(ell: tuple[Fraction, Fraction], v: Point) -> Fraction:
    return ell[0] * v[0] + ell[1] * v[1]


def pullback_divisor(model: ToricSurfaceModel, z: DivisorVector) -> DivisorVector:
    """Pullback to the resolution of a boundary-supported Q-divisor on X.

    Every torus-invariant Q-divisor on the affine surface is Q-Cartier,
    so the pullback is computed from the support function; it agrees with
    the numerical pullback by uniqueness.
    """
    bl, br = model.boundary_labels
    if any(l not in (bl, br) for l in z.support):
        raise InvalidModel("divisors on the base are supported on boundary rays only")
    ell = support_function(model, z.coeff(bl), z.coeff(br))
    return DivisorVector([(label, _pair_fraction(ell, vec)) for label, vec in model.rays()])


@lru_cache(maxsize=None)
def cartier_index(model: ToricSurfaceModel) -> int:
    """Smallest m >= 1 with m*K_X Cartier (K_X = -sum of boundary divisors)."""
    ell = support_function(model, Fraction(-1), Fraction(-1))
    return math.lcm(ell[0].denominator, ell[1].denominator)


def canonical_divisor_on_resolution(model: ToricSurfaceModel) -> DivisorVector:
    """K_Y = -(sum of all torus-invariant prime divisors of the fan)."""
    return DivisorVector([(label, Fraction(-1)) for label, _ in model.rays()])


@lru_cache(maxsize=None)
def to_resolution(model: ToricSurfaceModel) -> ResolutionModel:
    """Intersection-theoretic shadow: the chain of -b_i rational curves,
    with both boundary divisors as extras meeting the ends of the chain."""
    s = len(model.exceptional_rays)
    curves = tuple(
        ExceptionalCurve(label, -b, 0) for label, b in zip(model.exceptional_labels, model.hj)
    )
    matrix = tuple(
        tuple(-model.hj[i] if i == j else (1 if abs(i - j) == 1 else 0) for j in range(s))
        for i in range(s)
    )
    bl, br = model.boundary_labels
    left_meets = tuple(1 if i == 0 else 0 for i in range(s))
    right_meets = tuple(1 if i == s - 1 else 0 for i in range(s))
    extras = (Extra(bl, left_meets), Extra(br, right_meets))
    return ResolutionModel(curves, matrix, extras)


# -- minimal generators of section modules --------------------------------


def section_module_min_gens(model: ToricSurfaceModel, bounds: Mapping[str, int]) -> tuple[Point, ...]:
    """Minimal generating antichain of {u in M : <u, v_j> >= bounds[j]}.

    Both boundary rays must be constrained (otherwise the solution set is
    not finitely generated over the monoid).  Minimality is with respect
    to divisibility in S = sigma-dual cap M, i.e. dominance of both
    boundary pairings.
    """
    if LEFT not in bounds or RIGHT not in bounds:
        raise InvalidModel("section bounds must constrain both boundary rays")
    return _section_min_gens_cached(model, tuple(sorted((str(k), int(v)) for k, v in bounds.items())))


@lru_cache(maxsize=None)
def _section_min_gens_cached(model: ToricSurfaceModel, bounds_key: tuple[tuple[str, int], ...]) -> tuple[Point, ...]:
    bounds = dict(bounds_key)
    vl, vr = model.v_left, model.v_right
    det = vl[0] * vr[1] - vl[1] * vr[0]
    step = abs(det)
    c_left = bounds.pop(LEFT)
    c_right = bounds.pop(RIGHT)

    exc = []
    for name, c in bounds.items():
        vec = model.ray(name)
        alpha = Fraction(vec[0] * vr[1] - vec[1] * vr[0], det)
        beta = Fraction(vl[0] * vec[1] - vl[1] * vec[0], det)
        if alpha <= 0 or beta <= 0:
            raise InvalidModel(f"ray {name!r} is not interior to the cone")
        exc.append((vec, c, alpha, beta))

    # Every minimal element u has  <u, v_left> <= s_cap  and
    # <u, v_right> <= t_cap:  it realizes the least v_right-pairing among
    # module points with its v_left-pairing (and vice versa), and those
    # minima are bounded by the constraint data plus one lattice step.
    s_cap = max([c_left] + [math.ceil((c - beta * c_right) / alpha) for _, c, alpha, beta in exc]) + step
    t_cap = max([c_right] + [math.ceil((c - alpha * c_left) / beta) for _, c, alpha, beta in exc]) + step

    if (s_cap - c_left + 1) * (t_cap - c_right + 1) > ENUMERATION_LIMIT:
        raise InvalidModel("section enumeration exceeds the desk-scale bound")

    pts = []
    for s in range(c_left, s_cap + 1):
        for t in range(c_right, t_cap + 1):
            num0 = s * vr[1] - t * vl[1]
            num1 = t * vl[0] - s * vr[0]
            if num0 % det or num1 % det:
                continue
            u = (num0 // det, num1 // det)
            if all(dot(u, vec) >= c for vec, c, _, _ in exc):
                pts.append((s, t, u))

    pts.sort()
    gens = []
    best_t = None
    cur_s = None
    for s, t, u in pts:
        if s == cur_s:
            continue
        cur_s = s
        if best_t is None or t < best_t:
            gens.append(u)
            best_t = t
    return tuple(sorted(gens))


# -- monomial ideals -------------------------------------------------------


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in the coordinate monoid of X, as its minimal antichain.

    The generator list is lexicographically sorted; ((0, 0),) is the unit
    ideal.  All comparisons are exact generator-set comparisons.
    """

    model: ToricSurfaceModel
    gens: tuple[Point, ...]

    @classmethod
    def from_points(cls, model: ToricSurfaceModel, points: Iterable[Point]) -> "MonomialIdeal":
        pts = set()
        for u in points:
            u = (int(u[0]), int(u[1]))
            if not model.in_monoid(u):
                raise InvalidModel(f"generator {u} lies outside the coordinate monoid")
            pts.add((dot(u, model.v_left), dot(u, model.v_right), u))
        ordered = sorted(pts)
        gens = []
        best_t = None
        cur_s = None
        for s, t, u in ordered:
            if s == cur_s:
                continue
            cur_s = s
            if best_t is None or t < best_t:
                gens.append(u)
                best_t = t
        return cls(model, tuple(sorted(gens)))

    @classmethod
    def unit(cls, model: ToricSurfaceModel) -> "MonomialIdeal":
        return cls(model, ((0, 0),))

    def is_unit(self) -> bool:
        return self.gens == ((0, 0),)

    def is_zero(self) -> bool:
        return not self.gens

    def contains_point(self, u: Point) -> bool:
        return any(
            dot(u, self.model.v_left) >= dot(g, self.model.v_left)
            and dot(u, self.model.v_right) >= dot(g, self.model.v_right)
            for g in self.gens
        )

    def issubset(self, other: "MonomialIdeal") -> bool:
        if self.model != other.model:
            raise InvalidModel("ideals live on different models")
        return all(other.contains_point(g) for g in self.gens)

    def sum(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.model != other.model:
            raise InvalidModel("ideals live on different models")
        return MonomialIdeal.from_points(self.model, self.gens + other.gens)

    def shift(self, u: Point) -> "MonomialIdeal":
        """Multiply by the monomial x^u."""
        if not self.model.in_monoid(u):
            raise InvalidModel(f"{u} is not a monomial of the coordinate ring")
        return MonomialIdeal(self.model, tuple(sorted((g[0] + u[0], g[1] + u[1]) for g in self.gens)))

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.model != other.model:
            raise InvalidModel("ideals live on different models")
        model = self.model
        pts: list[Point] = []
        for g in self.gens:
            for h in other.gens:
                bounds = {
                    LEFT: max(dot(g, model.v_left), dot(h, model.v_left)),
                    RIGHT: max(dot(g, model.v_right), dot(h, model.v_right)),
                }
                pts.extend(section_module_min_gens(model, bounds))
        return MonomialIdeal.from_points(model, pts)


def pushforward_sections(model: ToricSurfaceModel, d: DivisorVector) -> MonomialIdeal:
    """pi_* O_Y(D) meet O_X as a monomial ideal, for integral D on Y.

    A monomial x^u lies in the result iff u is in the coordinate monoid
    and <u, v> + D_v >= 0 for every ray v of the resolution fan.
    """
    if not d.is_integral():
        raise NotIntegral("pushforward needs integer coefficients; round first")
    ray_names = {label.name for label, _ in model.rays()}
    bounds: dict[str, int] = {}
    for label, c in d.items():
        if label.name not in ray_names:
            raise InvalidModel(f"divisor label {label.name!r} is not a ray of the model")
        bounds[label.name] = -int(c)
    for name in (LEFT, RIGHT):
        bounds[name] = max(0, bounds.get(name, 0))
    gens = section_module_min_gens(model, bounds)
    return MonomialIdeal(model, gens)


def fractional_canonical_pullback(model: ToricSurfaceModel, m: int) -> DivisorVector:
    """The divisor of the inverse image on Y of the module O_X(-m K_X).

    O_X(-m K_X) is the set of u with <u, v> >= -m on both boundary rays
    (K_X has coefficient -1 on each boundary divisor); its inverse-image
    ideal sheaf on Y is divisorial with multiplicity along each ray v the
    minimum of <u, v> over the module's minimal generators.  Dividing by
    m and subtracting from K_Y yields the m-limiting relative canonical.
    """
    if m < 1:
        raise BadParameters("m must be a positive integer")
    gens = section_module_min_gens(model, {LEFT: -m, RIGHT: -m})
    coeffs = []
    for label, vec in model.rays():
        coeffs.append((label, Fraction(min(dot(u, vec) for u in gens))))
    return DivisorVector(coeffs)


def m_limiting_relative_canonical(model: ToricSurfaceModel, m: int) -> DivisorVector:
    """K_Y - (1/m) * (pullback divisor of O_X(-m K_X)).

    Equals the numerical relative canonical whenever the Cartier index of
    K_X divides m, and is componentwise <= it for every m.
    """
    fsharp = fractional_canonical_pullback(model, m)
    return canonical_divisor_on_resolution(model) - fsharp.scale(Fraction(1, m))
