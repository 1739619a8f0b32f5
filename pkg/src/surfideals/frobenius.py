"""Characteristic-p engine: Frobenius trace maps and test ideals.

On a normal affine toric surface R = k[S], S = sigma-dual cap M, the
maps F^e_* O(ceil((p^e - 1) W)) -> O are monomial: each is

    phi_c(x^u) = x^((u + c) / p^e)   (zero unless p^e divides u + c),

indexed by lattice points c with <c, v> >= (1 - p^e) + ceil((p^e - 1) w_v)
on both boundary rays v.  The normalization is pinned by the calibration
identity phi(x^(p-1) y^(p-1)) = 1 for the minimal twist at e = 1 on the
smooth chart, and validated against the monomial closed form for test
ideals on that chart.

The test ideal of (X, W) is the smallest nonzero ideal closed under all
such maps.  It is computed as a fixed point: seed with a torus-invariant
test element, close upward under the (finitely many generating) trace
maps for e = 1..E until two consecutive sweeps change nothing, run the
closure from two independent seeds, and intersect.

The depth cutoff E is adaptive.  Sweep-stability at a fixed depth cannot
detect that a strictly deeper map would still enlarge the ideal (the
round-ups in the twist bounds are superadditive, so deep maps are not
compositions of shallow ones).  The twist data is eventually periodic in
e with period the multiplicative order of p modulo the prime-to-p part
of the pair's denominator lcm; after the sweeps stabilize, one full
period of deeper maps is probed, the cutoff is extended if any of them
still moves the ideal, and `Unstabilized` is raised past a hard cap
rather than ever returning a silently truncated ideal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .divisors import DivisorVector, RatLike, rat
from .errors import InvalidModel, NonEffectiveGamma, Unstabilized, WildPrime
from .multiplier import PairSpec, multiplier_ideal
from .toric import (
    LEFT,
    RIGHT,
    MonomialIdeal,
    Point,
    ToricSurfaceModel,
    dot,
    section_module_min_gens,
)

_SWEEP_LIMIT = 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class CharPContext:
    """A prime together with the Frobenius-depth cutoff for iterations."""

    p: int
    e_max: int = 4

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidModel(f"{self.p} is not prime")
        if self.e_max < 1:
            raise InvalidModel("e_max must be >= 1")


@dataclass(frozen=True)
class TraceMap:
    """phi_c at depth e: x^u -> x^((u + twist) / p^e), or 0."""

    e: int
    twist: Point


def _ceildiv(a: int, b: int) -> int:
    return -((-a) // b)


def _boundary_coeffs(model: ToricSurfaceModel, w: DivisorVector) -> tuple[Fraction, Fraction]:
    bl, br = model.boundary_labels
    if any(l not in (bl, br) for l in w.support):
        raise InvalidModel("pair divisors live on the boundary rays of X")
    if not w.is_effective():
        raise InvalidModel("pair divisors must be effective")
    return (w.coeff(bl), w.coeff(br))


@lru_cache(maxsize=None)
def _trace_maps_cached(model: ToricSurfaceModel, p: int, e: int, wl: Fraction, wr: Fraction) -> tuple[TraceMap, ...]:
    pe = p**e
    bounds = {
        LEFT: (1 - pe) + math.ceil((pe - 1) * wl),
        RIGHT: (1 - pe) + math.ceil((pe - 1) * wr),
    }
    return tuple(TraceMap(e, c) for c in section_module_min_gens(model, bounds))


def trace_maps(model: ToricSurfaceModel, ctx: CharPContext, e: int, w: DivisorVector) -> tuple[TraceMap, ...]:
    """Generators of the module of depth-e trace maps twisted by W.

    Every admissible map is a monomial multiple of one of these, so
    closure under the returned maps is closure under all of them.
    """
    wl, wr = _boundary_coeffs(model, w)
    return _trace_maps_cached(model, ctx.p, e, wl, wr)


def trace_value(model: ToricSurfaceModel, p: int, tm: TraceMap, u: Point):
    """phi_c applied to the single monomial x^u; None encodes 0."""
    pe = p**tm.e
    n0, n1 = u[0] + tm.twist[0], u[1] + tm.twist[1]
    if n0 % pe or n1 % pe:
        return None
    return (n0 // pe, n1 // pe)


@lru_cache(maxsize=None)
def _trace_image_cached(model: ToricSurfaceModel, p: int, tm: TraceMap, gens: tuple[Point, ...]) -> tuple[Point, ...]:
    pe = p**tm.e
    pts: list[Point] = []
    for u in gens:
        shifted = (u[0] + tm.twist[0], u[1] + tm.twist[1])
        bounds = {
            LEFT: max(0, _ceildiv(dot(shifted, model.v_left), pe)),
            RIGHT: max(0, _ceildiv(dot(shifted, model.v_right), pe)),
        }
        pts.extend(section_module_min_gens(model, bounds))
    return MonomialIdeal.from_points(model, pts).gens


def trace_apply(model: ToricSurfaceModel, ctx: CharPContext, tm: TraceMap, ideal: MonomialIdeal) -> MonomialIdeal:
    """Image ideal phi(F^e_* I) for a nonzero monomial ideal I.

    For a generator x^u of I the values of phi on u + S sweep out the
    sections w with <w, v> >= ceil(<u + c, v> / p^e) on both boundary
    rays; the image ideal is generated by the minimal such sections over
    all generators.
    """
    if ideal.is_zero():
        raise InvalidModel("trace image of the zero ideal is not defined")
    return MonomialIdeal(model, _trace_image_cached(model, ctx.p, tm, ideal.gens))


# -- test ideals -----------------------------------------------------------


def _lexmin_section(model: ToricSurfaceModel, bounds: dict[str, int]) -> Point:
    return min(section_module_min_gens(model, bounds))


def boundary_monomial(model: ToricSurfaceModel) -> Point:
    """Least monomial vanishing on the whole toric boundary (and hence on
    the singular point); the designated test element."""
    return _lexmin_section(model, {LEFT: 1, RIGHT: 1})


def _seed_monomials(model: ToricSurfaceModel, w: DivisorVector) -> tuple[Point, Point]:
    wl, wr = _boundary_coeffs(model, w)
    above_w = _lexmin_section(model, {LEFT: max(0, math.ceil(wl)), RIGHT: max(0, math.ceil(wr))})
    b = boundary_monomial(model)
    seed1 = (b[0] + above_w[0], b[1] + above_w[1])
    seed2 = (seed1[0] + b[0], seed1[1] + b[1])
    return seed1, seed2


def _multiplicative_order(p: int, n: int) -> int:
    order = 1
    x = p % n
    while x != 1:
        x = (x * p) % n
        order += 1
    return order


def _depth_period(model: ToricSurfaceModel, p: int, w: DivisorVector) -> tuple[int, int]:
    """(p-adic part, period) of the pair's twist data as a function of e.

    The relevant denominators are those of the boundary coefficients of W
    together with r (which governs the lattice pattern of the twist
    antichains).
    """
    wl, wr = _boundary_coeffs(model, w)
    n = model.r * math.lcm(wl.denominator, wr.denominator)
    k0 = 0
    while n % p == 0:
        n //= p
        k0 += 1
    return k0, (_multiplicative_order(p, n) if n > 1 else 1)


def _closure(model: ToricSurfaceModel, ctx: CharPContext, w: DivisorVector, seed: Point) -> tuple[MonomialIdeal, int, int]:
    k0, period = _depth_period(model, ctx.p, w)
    depth = max(ctx.e_max, k0 + 1)
    depth_cap = max(depth + 8 * period, 60)
    ideal = MonomialIdeal.from_points(model, [seed])
    sweeps = 0
    while True:
        quiet = 0
        while quiet < 2:
            if sweeps >= _SWEEP_LIMIT:
                raise Unstabilized(f"no fixed point after {_SWEEP_LIMIT} sweeps (depth={depth})")
            changed = False
            for e in range(1, depth + 1):
                for tm in trace_maps(model, ctx, e, w):
                    bigger = ideal.sum(trace_apply(model, ctx, tm, ideal))
                    if bigger != ideal:
                        ideal = bigger
                        changed = True
            sweeps += 1
            quiet = 0 if changed else quiet + 1
        grew = False
        for e in range(depth + 1, depth + period + 1):
            for tm in trace_maps(model, ctx, e, w):
                bigger = ideal.sum(trace_apply(model, ctx, tm, ideal))
                if bigger != ideal:
                    ideal = bigger
                    grew = True
        if not grew:
            return ideal, sweeps, depth
        depth += period
        if depth > depth_cap:
            raise Unstabilized(f"fixed point keeps moving past depth {depth_cap}")


@dataclass(frozen=True)
class TestIdealResult:
    ideal: MonomialIdeal
    sweeps: int
    seeds_agreed: bool
    depth_used: int = 0


def _check_tame(model: ToricSurfaceModel, p: int) -> None:
    if model.r % p == 0:
        raise WildPrime(f"p = {p} divides r = {model.r}; wild quotients are out of scope")


@lru_cache(maxsize=None)
def _test_ideal_cached(model: ToricSurfaceModel, ctx: CharPContext, w: DivisorVector) -> TestIdealResult:
    _check_tame(model, ctx.p)
    seed1, seed2 = _seed_monomials(model, w)
    ideal1, sweeps1, depth1 = _closure(model, ctx, w, seed1)
    ideal2, sweeps2, depth2 = _closure(model, ctx, w, seed2)
    agreed = ideal1 == ideal2
    result = ideal1 if agreed else ideal1.intersect(ideal2)
    depth = max(depth1, depth2)
    if not agreed:
        # The intersection of trace-closed ideals is trace-closed; verify.
        for e in range(1, depth + 1):
            for tm in trace_maps(model, ctx, e, w):
                if not trace_apply(model, ctx, tm, result).issubset(result):
                    raise Unstabilized("seed closures disagree and their intersection is not stable")
    return TestIdealResult(result, max(sweeps1, sweeps2), agreed, depth)


def test_ideal_detailed(model: ToricSurfaceModel, ctx: CharPContext, z: DivisorVector, lam: RatLike) -> TestIdealResult:
    lam = rat(lam)
    if lam < 0:
        raise InvalidModel("the scaling factor must be >= 0")
    return _test_ideal_cached(model, ctx, z.scale(lam))


def test_ideal(model: ToricSurfaceModel, ctx: CharPContext, z: DivisorVector, lam: RatLike) -> MonomialIdeal:
    """tau(X, lambda Z): the smallest nonzero ideal J with
    phi(F^e_* J) included in J for every twisted trace map phi."""
    return test_ideal_detailed(model, ctx, z, lam).ideal


def test_ideal_of_divisor(model: ToricSurfaceModel, ctx: CharPContext, w: DivisorVector) -> MonomialIdeal:
    """tau(X, W) for an arbitrary effective boundary Q-divisor W."""
    return _test_ideal_cached(model, ctx, w).ideal


def boundary_containment_check(
    model: ToricSurfaceModel,
    ctx: CharPContext,
    z: DivisorVector,
    lam: RatLike,
    gamma: DivisorVector,
) -> bool:
    """tau(X, Gamma + lambda Z) included in tau(X, lambda Z), for effective
    Gamma with K + Gamma Q-Cartier (automatic on these models)."""
    if not gamma.is_effective():
        raise NonEffectiveGamma("Gamma must be effective")
    w = z.scale(rat(lam))
    tau_plain = test_ideal_of_divisor(model, ctx, w)
    tau_gamma = test_ideal_of_divisor(model, ctx, w + gamma)
    return tau_gamma.issubset(tau_plain)


def numerical_containment_check(model: ToricSurfaceModel, ctx: CharPContext, z: DivisorVector, lam: RatLike) -> bool:
    """tau(X, lambda Z) included in the trace image of the numerical
    multiplier module (realized as sections of ceil(K^num - pi* lambda Z))."""
    lam = rat(lam)
    tau = test_ideal(model, ctx, z, lam)
    target = multiplier_ideal(PairSpec(model, z, lam))
    return tau.issubset(target)
