"""Shared brute-force oracles, kept independent of the production code paths.

The production enumerator finds minimal module generators by a capped
sweep in pairing coordinates; the oracle here rakes a raw box of lattice
points and minimizes by pairwise domination, so the two only share the
problem statement.
"""

from __future__ import annotations

from surfideals.toric import ToricSurfaceModel, dot


def brute_module_gens(model: ToricSurfaceModel, bounds: dict[str, int]) -> list[tuple[int, int]]:
    """Minimal generators of {u : <u, v_name> >= bounds[name]} by raw search."""
    rays = {label.name: vec for label, vec in model.rays()}
    cap = (max(abs(c) for c in bounds.values()) + 3) * (model.r + 2) + 6
    box = 3 * cap
    vl, vr = model.v_left, model.v_right
    pts = []
    for u1 in range(-box, box + 1):
        for u2 in range(-box, box + 1):
            u = (u1, u2)
            if any(dot(u, rays[name]) < c for name, c in bounds.items()):
                continue
            if dot(u, vl) <= cap and dot(u, vr) <= cap:
                pts.append(u)

    def dominates(w, u):
        return w != u and dot(u, vl) >= dot(w, vl) and dot(u, vr) >= dot(w, vr)

    return sorted(u for u in pts if not any(dominates(w, u) for w in pts))


def brute_ideal_points(model: ToricSurfaceModel, gens, box: int = 20) -> set[tuple[int, int]]:
    """All monomials of the ideal generated by `gens` within a pairing box."""
    vl, vr = model.v_left, model.v_right
    pts = set()
    for u1 in range(-box, box + 1):
        for u2 in range(-box, box + 1):
            u = (u1, u2)
            for g in gens:
                if dot(u, vl) >= dot(g, vl) and dot(u, vr) >= dot(g, vr):
                    pts.add(u)
                    break
    return pts
