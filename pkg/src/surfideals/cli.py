"""Command-line front end with deterministic JSON output.

Every subcommand writes a single JSON document to stdout (keys sorted,
rationals as exact "num/den" strings, ideals as sorted generator
exponent lists) and exits 0.  Domain errors produce a machine-readable
error object and exit code 1; usage errors exit 2 without printing any
partial result.  Models are addressed as ``cyclic:R/A``, as a path to a
JSON model file, or (for ``compare``) the literal ``catalog``.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Optional, Union

from . import compare as compare_mod
from . import frobenius, multiplier, resolution, toric
from .divisors import DivisorLabel, DivisorVector, rat
from .errors import BadParameters, DomainError, ModelFileError
from .frobenius import CharPContext
from .multiplier import PairSpec


# -- serialization ----------------------------------------------------------


def frac_str(x: Fraction) -> str:
    return str(x)


def divisor_doc(d: DivisorVector) -> dict:
    return {label.name: frac_str(c) for label, c in d.items()}


def ideal_doc(ideal: toric.MonomialIdeal) -> dict:
    return {"generators": [list(g) for g in ideal.gens], "is_unit": ideal.is_unit()}


def emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


# -- model loading ----------------------------------------------------------


def _parse_rat(value, where: str) -> Fraction:
    try:
        return rat(value)
    except (TypeError, ValueError) as exc:
        raise ModelFileError(f"{where}: bad rational {value!r} ({exc})") from None


def _model_from_dict(doc: dict, where: str) -> Union[toric.ToricSurfaceModel, resolution.ResolutionModel]:
    kind = doc.get("kind")
    if kind == "cyclic":
        for field in ("r", "a"):
            if not isinstance(doc.get(field), int):
                raise ModelFileError(f"{where}: field {field!r} must be an integer")
        return toric.hj_resolve(doc["r"], doc["a"])
    if kind == "dualgraph":
        curves = doc.get("curves")
        if not isinstance(curves, list) or not curves:
            raise ModelFileError(f"{where}: field 'curves' must be a nonempty list")
        curve_objs = []
        for i, c in enumerate(curves):
            if "label" not in c or "self_intersection" not in c:
                raise ModelFileError(f"{where}: curves[{i}] needs 'label' and 'self_intersection'")
            label = DivisorLabel(str(c["label"]), "exceptional")
            curve_objs.append(
                resolution.ExceptionalCurve(label, int(c["self_intersection"]), int(c.get("genus", 0)))
            )
        n = len(curve_objs)
        matrix = [[0] * n for _ in range(n)]
        for i, c in enumerate(curve_objs):
            matrix[i][i] = c.self_intersection
        for k, triple in enumerate(doc.get("intersections", [])):
            try:
                i, j, v = (int(x) for x in triple)
            except (TypeError, ValueError):
                raise ModelFileError(f"{where}: intersections[{k}] must be [i, j, value]") from None
            if not (0 <= i < n and 0 <= j < n and i != j):
                raise ModelFileError(f"{where}: intersections[{k}] has bad curve indices")
            matrix[i][j] = matrix[j][i] = v
        extras = []
        for k, x in enumerate(doc.get("extras", [])):
            if "label" not in x or "meets" not in x:
                raise ModelFileError(f"{where}: extras[{k}] needs 'label' and 'meets'")
            xkind = x.get("kind", "strict-transform")
            extras.append(
                resolution.Extra(
                    DivisorLabel(str(x["label"]), xkind),
                    tuple(int(m) for m in x["meets"]),
                    _parse_rat(x.get("pushforward", 1), f"{where}: extras[{k}].pushforward"),
                )
            )
        return resolution.ResolutionModel(tuple(curve_objs), tuple(tuple(row) for row in matrix), tuple(extras))
    raise ModelFileError(f"{where}: 'kind' must be 'cyclic' or 'dualgraph', got {kind!r}")


def load_model(address: str) -> Union[toric.ToricSurfaceModel, resolution.ResolutionModel]:
    if address.startswith("cyclic:"):
        body = address[len("cyclic:"):]
        try:
            r_str, a_str = body.split("/")
            return toric.hj_resolve(int(r_str), int(a_str))
        except ValueError:
            raise BadParameters(f"bad cyclic address {address!r}; expected cyclic:R/A") from None
    try:
        with open(address, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ModelFileError(f"cannot read model file {address!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ModelFileError(f"{address}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ModelFileError(f"{address}: top-level value must be an object")
    return _model_from_dict(doc, address)


def require_toric(model) -> toric.ToricSurfaceModel:
    if not isinstance(model, toric.ToricSurfaceModel):
        raise BadParameters("this subcommand needs a cyclic (toric) model")
    return model


def parse_boundary_divisor(model: toric.ToricSurfaceModel, text: str) -> DivisorVector:
    """Accepts '0', 'boundary', or a JSON object {ray-name: rational-string}."""
    if text == "0":
        return DivisorVector.zero()
    if text == "boundary":
        return model.boundary_divisor()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadParameters(f"bad divisor {text!r}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise BadParameters("divisor must be a JSON object of ray coefficients")
    return model.divisor({str(k): rat(v) for k, v in doc.items()})


def parse_coeff_map(text: str) -> dict[str, Fraction]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadParameters(f"bad divisor {text!r}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise BadParameters("divisor must be a JSON object of coefficients")
    return {str(k): rat(v) for k, v in doc.items()}


def parse_primes(text: str) -> tuple[int, ...]:
    try:
        primes = tuple(sorted({int(tok) for tok in text.split(",") if tok.strip()}))
    except ValueError:
        raise BadParameters(f"bad prime list {text!r}") from None
    for p in primes:
        if not frobenius.is_prime(p):
            raise BadParameters(f"{p} is not prime")
    if not primes:
        raise BadParameters("empty prime list")
    return primes


# -- subcommand handlers ----------------------------------------------------


def _model_doc(model: toric.ToricSurfaceModel) -> dict:
    return {
        "r": model.r,
        "a": model.a,
        "rays": {label.name: list(vec) for label, vec in model.rays()},
        "hj_coefficients": list(model.hj),
    }


def cmd_resolve(args) -> dict:
    model = toric.hj_resolve(args.r, args.a)
    res = toric.to_resolution(model)
    disc = resolution.discrepancies(res)
    return {
        "model": _model_doc(model),
        "chain": [-b for b in model.hj],
        "discrepancies": {name: frac_str(v) for name, v in disc.items()},
        "cartier_index": toric.cartier_index(model),
        "class_group_order": model.r,
    }


def _as_resolution(model) -> resolution.ResolutionModel:
    if isinstance(model, toric.ToricSurfaceModel):
        return toric.to_resolution(model)
    return model


def cmd_pullback(args) -> dict:
    res = _as_resolution(load_model(args.model))
    coeffs = parse_coeff_map(args.d)
    return {"pullback": divisor_doc(resolution.numerical_pullback(res, coeffs))}


def cmd_discrepancy(args) -> dict:
    res = _as_resolution(load_model(args.model))
    rc = resolution.relative_canonical(res)
    return {
        "relative_canonical": divisor_doc(rc),
        "discrepancies": {n: frac_str(v) for n, v in resolution.discrepancies(res).items()},
    }


def _pair_from_args(args) -> PairSpec:
    model = require_toric(load_model(args.model))
    z = parse_boundary_divisor(model, args.z)
    return PairSpec(model, z, rat(args.lam))


def cmd_mult_ideal(args) -> dict:
    model = load_model(args.model)
    if isinstance(model, resolution.ResolutionModel):
        coeffs = parse_coeff_map(args.z) if args.z not in ("0",) else {}
        d = multiplier.numerical_multiplier_divisor(model, coeffs, rat(args.lam))
        return {"divisor": divisor_doc(d)}
    pair = _pair_from_args(args)
    return {"ideal": ideal_doc(multiplier.multiplier_ideal(pair))}


def cmd_m_limiting(args) -> dict:
    pair = _pair_from_args(args)
    ideal = multiplier.multiplier_m_limiting(pair, args.m)
    km = toric.m_limiting_relative_canonical(pair.model, args.m)
    return {"ideal": ideal_doc(ideal), "m": args.m, "relative_canonical_m": divisor_doc(km)}


def cmd_jumps(args) -> dict:
    model = require_toric(load_model(args.model))
    z = parse_boundary_divisor(model, args.z)
    pair = PairSpec(model, z, Fraction(1))
    jumps = multiplier.jumping_numbers(pair, rat(args.lam_max))
    return {"jumps": [{"lambda": frac_str(t), **ideal_doc(ideal)} for t, ideal in jumps]}


def cmd_test_ideal(args) -> dict:
    model = require_toric(load_model(args.model))
    z = parse_boundary_divisor(model, args.z)
    ctx = CharPContext(args.p, args.e_max)
    detail = frobenius.test_ideal_detailed(model, ctx, z, rat(args.lam))
    return {
        "ideal": ideal_doc(detail.ideal),
        "p": args.p,
        "e_max": args.e_max,
        "sweeps": detail.sweeps,
        "seeds_agreed": detail.seeds_agreed,
    }


def cmd_compare(args) -> dict:
    primes = parse_primes(args.primes)
    if args.model == "catalog":
        entries = compare_mod.catalog_entries()
        run = lambda entry: compare_mod.compare_entry(entry, primes=primes, e_max=args.e_max)
        if args.jobs > 1:
            with ThreadPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(run, entries))
        else:
            reports = [run(entry) for entry in entries]
        return {
            "catalog_size": len(entries),
            "e_max": args.e_max,
            "primes": list(primes),
            "reports": [rep.to_dict() for rep in reports],
            "all_equal": all(rep.all_equal() for rep in reports),
        }
    pair = _pair_from_args(args)
    report = compare_mod.compare_pair(pair, primes=primes, e_max=args.e_max)
    return {"report": report.to_dict(), "all_equal": report.all_equal()}


def cmd_check_negativity(args) -> dict:
    res = _as_resolution(load_model(args.model))
    coeffs = parse_coeff_map(args.d)
    by_name = {c.label.name: c.label for c in res.curves}
    by_name.update({x.label.name: x.label for x in res.extras})
    try:
        d = DivisorVector([(by_name[name], c) for name, c in coeffs.items()])
    except KeyError as exc:
        raise BadParameters(f"unknown divisor label {exc.args[0]!r}") from None
    dots = res.intersect_with_curves(d)
    hypotheses = all(v >= 0 for v in dots) and all(
        c <= 0 for label, c in d.items() if label.kind != "exceptional"
    )
    return {
        "hypotheses_hold": hypotheses,
        "nonpositive": all(c <= 0 for _, c in d.items()),
        "verdict": resolution.negativity_check(res, d),
    }


def cmd_catalog(_args) -> dict:
    entries = compare_mod.catalog_entries()
    return {
        "pairs": [
            {"id": e.entry_id, "r": e.r, "a": e.a, "z": e.z_kind, "lambda": frac_str(e.lam)}
            for e in entries
        ],
        "primes": list(compare_mod.PRIMES_DEFAULT),
    }


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfideals",
        description="Exact multiplier and test ideals on cyclic quotient surface singularities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resolve", help="Hirzebruch-Jung resolution of 1/r(1,a)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.set_defaults(handler=cmd_resolve)

    def add_model(sp):
        sp.add_argument("model", help="cyclic:R/A or a JSON model file")

    p = sub.add_parser("pullback", help="numerical pullback of a divisor given through extras")
    add_model(p)
    p.add_argument("--d", required=True, help="JSON map extra-label -> rational")
    p.set_defaults(handler=cmd_pullback)

    p = sub.add_parser("discrepancy", help="numerical relative canonical divisor")
    add_model(p)
    p.set_defaults(handler=cmd_discrepancy)

    def add_pair(sp):
        add_model(sp)
        sp.add_argument("--z", default="0", help="'0', 'boundary', or JSON ray map")
        sp.add_argument("--lambda", dest="lam", default="1", help="rational scaling of Z")

    p = sub.add_parser("mult-ideal", help="numerical multiplier ideal")
    add_pair(p)
    p.set_defaults(handler=cmd_mult_ideal)

    p = sub.add_parser("m-limiting", help="m-limiting multiplier ideal")
    add_pair(p)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=cmd_m_limiting)

    p = sub.add_parser("jumps", help="jumping numbers of the multiplier ideal in (0, lambda-max]")
    add_model(p)
    p.add_argument("--z", default="boundary")
    p.add_argument("--lambda-max", dest="lam_max", default="2")
    p.set_defaults(handler=cmd_jumps)

    p = sub.add_parser("test-ideal", help="Frobenius test ideal in characteristic p")
    add_pair(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e-max", dest="e_max", type=int, default=4)
    p.set_defaults(handler=cmd_test_ideal)

    p = sub.add_parser("compare", help="multiplier vs test ideal over a prime sweep")
    p.add_argument("model", help="cyclic:R/A, a JSON model file, or 'catalog'")
    p.add_argument("--z", default="0")
    p.add_argument("--lambda", dest="lam", default="1")
    p.add_argument("--primes", default=",".join(str(p) for p in compare_mod.PRIMES_DEFAULT))
    p.add_argument("--e-max", dest="e_max", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("check-negativity", help="surface negativity-lemma check for a divisor")
    add_model(p)
    p.add_argument("--d", required=True, help="JSON map label -> rational")
    p.set_defaults(handler=cmd_check_negativity)

    p = sub.add_parser("catalog", help="list the acceptance catalog of pairs")
    p.set_defaults(handler=cmd_catalog)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.handler(args)
    except DomainError as exc:
        emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return 1
    emit(doc)
    return 0


if __name__ == "__main__":
    sys.exit(main())
