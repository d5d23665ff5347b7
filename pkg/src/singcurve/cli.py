"""Command-line front end.

Every command builds a plain dict result; ``--format machine`` prints it as
a sorted, indented JSON document, ``--format text`` as aligned lines.

Exit status: 0 success, 2 parse error, 3 validation error, 4 work bound
exceeded, 5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from singcurve import __version__, bounds, gluing, limits, oracle
from singcurve.errors import BoundExceeded, SpecParseError, ValidationError
from singcurve.zeta import (
    SmoothZeta,
    census_from_counts,
    closed_point_census,
    elliptic_zeta_from_count,
    genus0_zeta,
    zeta_from_numerator,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_BOUND = 4
EXIT_FAIL = 5

PASS, FAIL = "PASS", "FAIL"


# -- documents -------------------------------------------------------------------


def make_document(command: str, inputs: dict, result: dict) -> dict:
    return {"tool": "singcurve", "version": __version__, "command": command, "input": inputs, "result": result}


def dump_document(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def load_document(text: str) -> dict:
    return json.loads(text)


# -- glue spec files ----------------------------------------------------------------

_SPEC_KEYS = {"q", "base", "singularities", "horizon", "external_nqg"}
_BASE_KEYS = {
    "p1": {"kind"},
    "zeta_numerator": {"kind", "coeffs"},
    "elliptic_from_count": {"kind", "n1"},
}


def _require_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecParseError(f"{where}: expected an integer, got {value!r}")
    return value


def _reject_unknown(obj: dict, allowed: set, where: str) -> None:
    extra = sorted(set(obj) - allowed)
    if extra:
        raise SpecParseError(f"{where}: unknown field(s) {', '.join(extra)}")


def base_from_descriptor(q: int, desc: Any, where: str = "base") -> SmoothZeta:
    """``"p1"``, ``{"kind": "zeta_numerator", "coeffs": [...]}`` or
    ``{"kind": "elliptic_from_count", "n1": N}``."""
    if desc == "p1":
        desc = {"kind": "p1"}
    if not isinstance(desc, dict) or desc.get("kind") not in _BASE_KEYS:
        raise SpecParseError(f"{where}: expected \"p1\" or an object with kind in {sorted(_BASE_KEYS)}")
    kind = desc["kind"]
    _reject_unknown(desc, _BASE_KEYS[kind], where)
    if kind == "p1":
        return genus0_zeta(q)
    if kind == "zeta_numerator":
        coeffs = desc.get("coeffs")
        if not isinstance(coeffs, list):
            raise SpecParseError(f"{where}.coeffs: expected a list of integers")
        return zeta_from_numerator(q, [_require_int(c, f"{where}.coeffs[{i}]") for i, c in enumerate(coeffs)])
    return elliptic_zeta_from_count(q, _require_int(desc.get("n1"), f"{where}.n1"))


def parse_glue_spec(text: str) -> tuple[gluing.SingularCurveModel, int, Optional[int]]:
    """Parse a glue-spec document into ``(model, horizon, external_nqg)``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise SpecParseError("top level must be an object")
    _reject_unknown(doc, _SPEC_KEYS, "spec")
    for key in ("q", "base"):
        if key not in doc:
            raise SpecParseError(f"spec: missing field {key!r}")
    q = _require_int(doc["q"], "q")
    horizon = _require_int(doc.get("horizon", gluing.DEFAULT_HORIZON), "horizon")
    if horizon < 1:
        raise SpecParseError("horizon: must be >= 1")
    nqg = doc.get("external_nqg")
    if nqg is not None:
        nqg = _require_int(nqg, "external_nqg")
    base = base_from_descriptor(q, doc["base"])
    sings = doc.get("singularities", [])
    if not isinstance(sings, list):
        raise SpecParseError("singularities: expected a list")
    prescriptions = []
    for i, s in enumerate(sings):
        where = f"singularities[{i}]"
        if not isinstance(s, dict):
            raise SpecParseError(f"{where}: expected an object")
        _reject_unknown(s, {"branches"}, where)
        branches = s.get("branches")
        if not isinstance(branches, list):
            raise SpecParseError(f"{where}.branches: expected a list")
        specs = []
        for j, b in enumerate(branches):
            bw = f"{where}.branches[{j}]"
            if not isinstance(b, dict):
                raise SpecParseError(f"{bw}: expected an object")
            _reject_unknown(b, {"degree", "multiplicity"}, bw)
            specs.append(
                gluing.BranchSpec(_require_int(b.get("degree"), f"{bw}.degree"),
                                  _require_int(b.get("multiplicity", 1), f"{bw}.multiplicity"))
            )
        prescriptions.append(gluing.SingularityPrescription(tuple(specs)))
    return gluing.SingularCurveModel(base, tuple(prescriptions)), horizon, nqg


# -- commands ---------------------------------------------------------------------


def cmd_bounds(q: int, g: int, pi: int, nqg: Optional[int] = None) -> dict:
    return bounds.bound_set(q, g, pi, nqg).to_dict()


def cmd_glue(text: str, horizon: Optional[int] = None, nqg: Optional[int] = None) -> dict:
    model, spec_horizon, spec_nqg = parse_glue_spec(text)
    horizon = horizon or spec_horizon
    nqg = nqg if nqg is not None else spec_nqg
    gluing.validate(model)
    rep = gluing.report(model, horizon, nqg)
    result = rep.to_dict()
    result["zeta_counts_agree"] = gluing.zeta_point_counts(model, horizon) == list(rep.point_counts)
    return result


def _curve_b_model(q: int) -> gluing.SingularCurveModel:
    base = genus0_zeta(q)
    return gluing.construct_principal(base, {2: bounds.delta_optimal_pi_max(q, 0)})


def cmd_verify_b(q: int, n: int = 1, work_bound: int = limits.WORK_BOUND) -> dict:
    brute = oracle.curve_b_count(q, n, work_bound)
    model = _curve_b_model(q)
    predicted = gluing.rational_points(model, n)
    from_zeta = gluing.zeta_point_counts(model, n)[-1]
    return {
        "q": q,
        "n": n,
        "brute": brute,
        "predicted": predicted,
        "predicted_from_zeta": from_zeta,
        "arithmetic_genus": gluing.arithmetic_genus(model),
        "status": PASS if brute == predicted == from_zeta else FAIL,
    }


def cmd_scan_elliptic(q: int, work_bound: int = limits.WORK_BOUND) -> dict:
    scan = oracle.scan_weierstrass(q, work_bound, keep=1)
    expected = bounds.nq(q, 1)
    best = scan.representatives[scan.max_n1][0]
    n1 = scan.max_n1
    n2 = oracle.weierstrass_count(best, 2, work_bound)
    b2 = (n2 - n1) // 2
    b2_formula = bounds.delta_optimal_pi_max(q, 1) - 1
    ok = n1 == expected and b2 == b2_formula
    return {
        "q": q,
        "distribution": [[k, v] for k, v in sorted(scan.distribution.items())],
        "max_n1": n1,
        "nq": expected,
        "optimal_curve": repr(best),
        "optimal_n2": n2,
        "optimal_b2_brute": b2,
        "optimal_b2_formula": b2_formula,
        "status": PASS if ok else FAIL,
    }


def _base_from_args(q: int, kind: str, n1: Optional[int], numer: Optional[str]) -> SmoothZeta:
    if kind == "p1":
        return genus0_zeta(q)
    if kind == "elliptic":
        if n1 is None:
            raise SpecParseError("--n1 is required with --base elliptic")
        return elliptic_zeta_from_count(q, n1)
    if numer is None:
        raise SpecParseError("--numer is required with --base zeta")
    return zeta_from_numerator(q, _parse_int_list(numer))


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise SpecParseError(f"expected comma-separated integers, got {text!r}") from None


def cmd_census(
    q: int,
    d_max: int,
    base_kind: str = "p1",
    n1: Optional[int] = None,
    numer: Optional[str] = None,
    work_bound: int = limits.WORK_BOUND,
) -> dict:
    """Closed points by degree, with a brute-force column where one is affordable.

    For P^1 the brute column lists irreducible polynomials.  For an elliptic
    base it counts a Weierstrass curve with the requested N_1 over each
    F_{q^n} and inverts the counts.
    """
    base = _base_from_args(q, base_kind, n1, numer)
    census = closed_point_census(base, d_max)
    brute: dict[int, Optional[int]] = {d: None for d in census}
    witness = None
    if base_kind == "p1":
        for d in census:
            try:
                brute[d] = oracle.closed_points_p1_brute(q, d, work_bound)
            except BoundExceeded:
                break
    elif base_kind == "elliptic":
        try:
            curve = oracle.find_weierstrass(q, base.n1, work_bound)
        except BoundExceeded:
            curve = None
        if curve is not None:
            witness = repr(curve)
            counts = []
            for n in range(1, d_max + 1):
                try:
                    counts.append(oracle.weierstrass_count(curve, n, work_bound))
                except BoundExceeded:
                    break
            brute.update(census_from_counts(counts, strict=False))
    rows = [[d, census[d], brute[d]] for d in sorted(census)]
    agree = all(b is None or b == c for _, c, b in rows)
    result = {
        "q": q,
        "g": base.g,
        "numerator": list(base.numer),
        "rows": rows,
        "brute_witness": witness,
        "status": PASS if agree else FAIL,
    }
    return result


def cmd_zeta(q: int, numer: str, horizon: int = gluing.DEFAULT_HORIZON) -> dict:
    z = zeta_from_numerator(q, _parse_int_list(numer), max(horizon, 8))
    counts = z.counts(horizon)
    census = closed_point_census(z, horizon)
    return {
        "q": q,
        "g": z.g,
        "numerator": list(z.numer),
        "point_counts": counts,
        "census": [[d, census[d]] for d in sorted(census)],
    }


# -- rendering ----------------------------------------------------------------------


def render_text(command: str, result: dict) -> str:
    lines = [f"singcurve {command}"]
    if command == "census":
        lines.append(f"q = {result['q']}, g = {result['g']}, numerator = {result['numerator']}")
        lines.append(f"{'d':>4} {'B_d':>12} {'brute':>12}")
        for d, b, brute in result["rows"]:
            lines.append(f"{d:>4} {b:>12} {'-' if brute is None else brute:>12}")
        if result["brute_witness"]:
            lines.append(f"brute column from {result['brute_witness']}")
        lines.append(f"status: {result['status']}")
        return "\n".join(lines) + "\n"
    if command == "scan-elliptic":
        lines.append(f"q = {result['q']}")
        lines.append("N_1 distribution: " + ", ".join(f"{k}:{v}" for k, v in result["distribution"]))
        for key in ("max_n1", "nq", "optimal_curve", "optimal_n2", "optimal_b2_brute", "optimal_b2_formula", "status"):
            lines.append(f"{key}: {result[key]}")
        return "\n".join(lines) + "\n"
    width = max(len(k) for k in result)
    for key in sorted(result):
        value = result[key]
        if value is None:
            value = "unknown"
        lines.append(f"{key:<{width}}  {value}")
    return "\n".join(lines) + "\n"


# -- entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--work-bound", type=int, default=limits.WORK_BOUND)

    parser = argparse.ArgumentParser(prog="singcurve", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[common], help="bounds and attainability for (q, g, pi)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--pi", type=int, required=True)
    p.add_argument("--nqg", type=int)

    p = sub.add_parser("glue", parents=[common], help="report on a glued curve described in a spec file")
    p.add_argument("--spec", required=True)
    p.add_argument("--horizon", type=int)
    p.add_argument("--nqg", type=int)

    p = sub.add_parser("verify-b", parents=[common], help="brute-force check of the curve (s^{q+1}: s^q t + s t^q: t^{q+1})")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=1)

    p = sub.add_parser("scan-elliptic", parents=[common], help="count every Weierstrass curve over F_q")
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("census", parents=[common], help="closed points by degree")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--base", choices=("p1", "elliptic", "zeta"), default="p1")
    p.add_argument("--n1", type=int)
    p.add_argument("--numer", help="comma-separated numerator coefficients, constant first")

    p = sub.add_parser("zeta", parents=[common], help="point counts and closed points of a zeta numerator")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--numer", required=True)
    p.add_argument("--horizon", type=int, default=gluing.DEFAULT_HORIZON)
    return parser


def _dispatch(args: argparse.Namespace) -> tuple[dict, dict]:
    wb = args.work_bound
    if args.command == "bounds":
        inputs = {"q": args.q, "g": args.g, "pi": args.pi, "nqg": args.nqg}
        return inputs, cmd_bounds(args.q, args.g, args.pi, args.nqg)
    if args.command == "glue":
        try:
            with open(args.spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SpecParseError(f"cannot read {args.spec}: {exc.strerror}") from None
        result = cmd_glue(text, args.horizon, args.nqg)
        return {"spec": json.loads(text), "horizon": args.horizon, "nqg": args.nqg}, result
    if args.command == "verify-b":
        return {"q": args.q, "n": args.n}, cmd_verify_b(args.q, args.n, wb)
    if args.command == "scan-elliptic":
        return {"q": args.q}, cmd_scan_elliptic(args.q, wb)
    if args.command == "census":
        inputs = {"q": args.q, "d_max": args.d_max, "base": args.base, "n1": args.n1, "numer": args.numer}
        return inputs, cmd_census(args.q, args.d_max, args.base, args.n1, args.numer, wb)
    inputs = {"q": args.q, "numer": args.numer, "horizon": args.horizon}
    return inputs, cmd_zeta(args.q, args.numer, args.horizon)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        inputs, result = _dispatch(args)
    except SpecParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    if args.format == "machine":
        sys.stdout.write(dump_document(make_document(args.command, inputs, result)))
    else:
        sys.stdout.write(render_text(args.command, result))
    return EXIT_FAIL if result.get("status") == FAIL else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
