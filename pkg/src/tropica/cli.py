"""Command line front end.

Exit codes: 0 on success, 1 on domain errors, 2 on parse/syntax errors.
Errors are emitted as JSON objects on stderr.  The environment variable
TROPICA_SEED overrides any --seed value.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from .krull import EmptyVarietyError, coordinate_dimension
from .parsing import (
    ParseError,
    format_monomial,
    format_polynomial,
    parse_matrix_json,
    parse_point,
    parse_polynomial,
)
from .polynomials import LAURENT, POLY, Polynomial
from .primes import (
    AdmissibilityError,
    admissibility_violations,
    bend_ideal_member,
    check_admissible,
    classify_prime,
    compare_terms,
    leading_class,
    variety_of_prime,
)
from .rendering import render_svg
from .sampling import random_member_polynomial
from .scalars import scalar_str
from .traces import load_trace, verify_trace
from .tropical_linear import (
    CircuitSet,
    MembershipSample,
    TropVector,
    check_tropical_axiom,
    monomial_window,
    truncated_tropicalization,
    vector_from_polynomial,
)
from .varieties import (
    affine_prevariety,
    complex_from_json,
    complex_to_json,
    hypersurface,
    prevariety,
)


def _emit(data, args) -> None:
    if getattr(args, "format", "json") == "text":
        print(_as_text(data))
    else:
        print(json.dumps(data, indent=2, sort_keys=True))


def _as_text(data, indent: str = "") -> str:
    if isinstance(data, dict):
        lines = []
        for key in sorted(data):
            value = data[key]
            if isinstance(value, (dict, list)):
                lines.append(f"{indent}{key}:")
                lines.append(_as_text(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {value}")
        return "\n".join(lines)
    if isinstance(data, list):
        return "\n".join(_as_text(v, indent + "  ") if isinstance(v, (dict, list)) else f"{indent}- {v}" for v in data)
    return f"{indent}{data}"


def _load_json_arg(text: str):
    candidate = Path(text)
    if not text.lstrip().startswith(("[", "{")) and candidate.exists():
        return json.loads(candidate.read_text())
    return json.loads(text)


def _polynomials(args) -> list[Polynomial]:
    texts = list(args.poly or [])
    if getattr(args, "file", None):
        texts.extend(
            line.strip()
            for line in Path(args.file).read_text().splitlines()
            if line.strip() and not line.strip().startswith("#")
        )
    if not texts:
        raise ValueError("no polynomials given (use --poly or --file)")
    inferred = args.nvars
    if inferred is None:
        inferred = 0
        for text in texts:
            inferred = max(inferred, parse_polynomial(text, args.mode).n)
    return [parse_polynomial(text, args.mode, inferred) for text in texts]


def _matrix(args):
    rows = parse_matrix_json(_load_json_arg(args.matrix))
    n = len(rows[0]) - 1
    return check_admissible(rows, n, args.mode)


def _seed(args) -> int:
    env = os.environ.get("TROPICA_SEED")
    if env is not None:
        return int(env)
    return args.seed


# -- subcommand implementations ----------------------------------------------


def _cmd_eval(args):
    (f,) = _polynomials(args)
    point = parse_point(args.point)
    _emit({"value": scalar_str(f.evaluate(point)), "vanishes": f.vanishes_at(point)}, args)


def _cmd_bend(args):
    (f,) = _polynomials(args)
    pairs = [[format_polynomial(p.left), format_polynomial(p.right)] for p in f.bend_pairs()]
    _emit({"pairs": pairs}, args)


def _cmd_hypersurface(args):
    (f,) = _polynomials(args)
    _emit(complex_to_json(hypersurface(f)), args)


def _cmd_prevariety(args):
    _emit(complex_to_json(prevariety(_polynomials(args))), args)


def _cmd_affine_prevariety(args):
    args.mode = POLY
    _emit(complex_to_json(affine_prevariety(_polynomials(args))), args)


def _cmd_dim(args):
    report = coordinate_dimension(_polynomials(args))
    _emit(report.to_json(), args)


def _cmd_prime_check(args):
    rows = parse_matrix_json(_load_json_arg(args.matrix))
    n = len(rows[0]) - 1
    problems = admissibility_violations(rows, n)
    if problems:
        _emit({"admissible": False, "violations": problems}, args)
        return
    matrix = check_admissible(rows, n, args.mode)
    kind, r = classify_prime(matrix)
    _emit({"admissible": True, "rank": r, "kind": kind}, args)


def _term(text: str, mode: str, nvars: int):
    poly = parse_polynomial(text, mode, nvars)
    if not poly.is_monomial():
        raise ValueError(f"{text!r} is not a single term")
    expo = poly.support()[0]
    return poly.coefficient(expo), expo


def _cmd_prime_compare(args):
    matrix = _matrix(args)
    t1 = _term(args.term1, args.mode, matrix.n)
    t2 = _term(args.term2, args.mode, matrix.n)
    _emit({"order": compare_terms(matrix, t1, t2)}, args)


def _cmd_prime_variety(args):
    matrix = _matrix(args)
    point = variety_of_prime(matrix)
    _emit({"point": None if point is None else [str(x) for x in point]}, args)


def _cmd_prime_member(args):
    matrix = _matrix(args)
    args.nvars = matrix.n
    (f,) = _polynomials(args)
    _emit({"member": bend_ideal_member(matrix, f)}, args)


def _cmd_trace_verify(args):
    result = verify_trace(load_trace(args.trace))
    payload = {"accepted": result.accepted}
    if not result.accepted:
        payload["failed_step"] = result.failed_step
        payload["reason"] = result.reason
    _emit(payload, args)


def _cmd_tideal_check(args):
    degree = args.degree
    if args.circuits:
        data = _load_json_arg(args.circuits)
        window = monomial_window(int(data["nvars"]), data.get("mode", POLY), int(data["degree"]))
        circuits = tuple(
            TropVector.make(
                window, {tuple(int(v) for v in expo): Fraction(0) for expo in support}
            )
            for support in data["circuits"]
        )
        description = CircuitSet(window, circuits)
    elif args.point:
        point = parse_point(args.point)
        n = len(point)
        window = monomial_window(n, args.mode, degree)
        rng = random.Random(_seed(args))
        oracle = lambda h: h.is_zero() or h.to_polynomial().vanishes_at(point)
        samples, seen = [], set()
        while len(samples) < args.trials:
            poly = random_member_polynomial(rng, point, args.mode, max_deg=degree)
            if poly.degree() <= degree and poly not in seen:
                seen.add(poly)
                samples.append(vector_from_polynomial(poly, window))
        description = MembershipSample(tuple(samples), oracle, point)
    elif args.matrix:
        matrix = _matrix(args)
        window = monomial_window(matrix.n, args.mode, degree)
        rng = random.Random(_seed(args))
        oracle = lambda h: bend_ideal_member(matrix, h.to_polynomial())
        # a geometric prime carries an evaluation point; the witness search
        # needs it for the second-level tie candidates
        point = variety_of_prime(matrix) if classify_prime(matrix)[0] == "geometric" else None
        samples, seen = [], set()
        attempts = 0

        def record(poly):
            if bend_ideal_member(matrix, poly) and not poly.is_zero() and poly not in seen:
                seen.add(poly)
                samples.append(vector_from_polynomial(poly, window))

        while len(samples) < args.trials and attempts < args.trials * 200:
            attempts += 1
            poly = Polynomial(
                {
                    expo: Fraction(rng.randint(-2, 2))
                    for expo in rng.sample(window.monomials, k=min(3, len(window)))
                },
                matrix.n,
                args.mode,
            )
            if not bend_ideal_member(matrix, poly) or poly.is_zero():
                continue
            record(poly)
            # partner sharing the leading terms but with one low term moved:
            # the shape on which the elimination axiom can genuinely fail
            leaders = set(leading_class(matrix, poly))
            low = [e for e in poly.support() if e not in leaders]
            if low:
                moved = rng.choice(low)
                target = rng.choice(window.monomials)
                if target not in poly.support():
                    partner = poly.delete_term(moved) + Polynomial(
                        {target: poly.coefficient(moved)}, matrix.n, args.mode
                    )
                    record(partner)
        description = MembershipSample(tuple(samples), oracle, point)
    else:
        raise ValueError("one of --circuits, --point or --matrix is required")
    result = check_tropical_axiom(description)
    payload = {"passed": result.passed}
    if result.counterexample:
        f, g, u = result.counterexample
        payload["counterexample"] = {
            "f": format_polynomial(f.to_polynomial()),
            "g": format_polynomial(g.to_polynomial()),
            "monomial": format_monomial(u, f.window.n) or "1",
        }
    _emit(payload, args)


def _parse_classical(text: str, nvars: int | None):
    """Classical rational polynomial, e.g. "x - y" or "x^2 - 2*x*y"."""
    out: dict[tuple[int, ...], Fraction] = {}
    pieces = []
    current = ""
    for ch in text:
        if ch in "+-" and current.strip():
            pieces.append(current)
            current = ch
        else:
            current += ch
    if current.strip():
        pieces.append(current)
    terms = []
    for piece in pieces:
        piece = piece.strip()
        sign = Fraction(1)
        if piece.startswith("-"):
            sign, piece = Fraction(-1), piece[1:].strip()
        elif piece.startswith("+"):
            piece = piece[1:].strip()
        poly = parse_polynomial(piece, POLY, nvars)
        if not poly.is_monomial():
            raise ValueError(f"classical term {piece!r} did not parse to a single term")
        expo = poly.support()[0]
        coeff = poly.coefficient(expo)
        coeff = Fraction(1) if coeff == 0 else coeff  # tropical unit marks "no coefficient"
        terms.append((expo, sign * coeff))
    n = nvars if nvars is not None else max(len(e) for e, _ in terms)
    for expo, value in terms:
        key = tuple(expo) + (0,) * (n - len(expo))
        out[key] = out.get(key, Fraction(0)) + value
    return {k: v for k, v in out.items() if v != 0}, n


def _cmd_tideal_trop(args):
    nvars = args.nvars
    parsed = []
    n = 0
    for text in args.gens:
        coeffs, gn = _parse_classical(text, nvars)
        parsed.append(coeffs)
        n = max(n, gn)
    parsed = [
        {tuple(e) + (0,) * (n - len(e)): c for e, c in g.items()} for g in parsed
    ]
    circuits = truncated_tropicalization(parsed, n, args.degree)
    payload = {
        "nvars": n,
        "degree": args.degree,
        "mode": POLY,
        "trivial": circuits.trivial,
        "circuits": [
            sorted([format_monomial(e, n) or "1" for e in c.support()])
            for c in circuits.circuits
        ],
    }
    _emit(payload, args)


def _cmd_plot(args):
    if args.complex:
        x = complex_from_json(_load_json_arg(args.complex))
    else:
        x = hypersurface(_polynomials(args)[0])
    bbox = parse_point(args.bbox)
    if len(bbox) != 4:
        raise ValueError("--bbox expects xmin,ymin,xmax,ymax")
    svg = render_svg(x, bbox)
    if args.output:
        Path(args.output).write_text(svg)
    else:
        sys.stdout.write(svg)


def _add_common(sub, poly_inputs: bool = True):
    sub.add_argument("--mode", choices=[LAURENT, POLY], default=LAURENT)
    sub.add_argument("--format", choices=["json", "text"], default="json")
    sub.add_argument("--seed", type=int, default=0)
    if poly_inputs:
        sub.add_argument("--poly", action="append", help="polynomial text (repeatable)")
        sub.add_argument("--file", help="file with one polynomial per line")
        sub.add_argument("--nvars", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropica",
        description="Exact tropical commutative algebra workbench.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a polynomial at a rational point")
    _add_common(p)
    p.add_argument("--point", required=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("bend", help="bend pairs of a polynomial")
    _add_common(p)
    p.set_defaults(func=_cmd_bend)

    p = sub.add_parser("hypersurface", help="tropical hypersurface as a cell complex")
    _add_common(p)
    p.set_defaults(func=_cmd_hypersurface)

    p = sub.add_parser("prevariety", help="intersection of hypersurfaces over R^n")
    _add_common(p)
    p.set_defaults(func=_cmd_prevariety)

    p = sub.add_parser("affine-prevariety", help="stratified prevariety over T^n")
    _add_common(p)
    p.set_defaults(func=_cmd_affine_prevariety)

    p = sub.add_parser("dim", help="dimension report for the coordinate semiring")
    _add_common(p)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("prime-check", help="validate an admissible matrix")
    _add_common(p, poly_inputs=False)
    p.add_argument("--matrix", required=True, help="JSON array of rows (or a file path)")
    p.set_defaults(func=_cmd_prime_check)

    p = sub.add_parser("prime-compare", help="order two terms under a prime")
    _add_common(p, poly_inputs=False)
    p.add_argument("--matrix", required=True)
    p.add_argument("--term1", required=True)
    p.add_argument("--term2", required=True)
    p.set_defaults(func=_cmd_prime_compare)

    p = sub.add_parser("prime-variety", help="the at-most-one point of a prime")
    _add_common(p, poly_inputs=False)
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=_cmd_prime_variety)

    p = sub.add_parser("prime-member", help="do all bend pairs of f lie in the prime?")
    _add_common(p)
    p.add_argument("--matrix", required=True)
    p.set_defaults(func=_cmd_prime_member)

    p = sub.add_parser("trace-verify", help="verify a derivation trace file")
    _add_common(p, poly_inputs=False)
    p.add_argument("--trace", required=True)
    p.set_defaults(func=_cmd_trace_verify)

    p = sub.add_parser("tideal-check", help="monomial elimination axiom check")
    _add_common(p, poly_inputs=False)
    p.add_argument("--circuits", help="circuit JSON (or file path)")
    p.add_argument("--point", help="geometric point, e.g. 0,0")
    p.add_argument("--matrix", help="admissible matrix JSON")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--trials", type=int, default=15)
    p.set_defaults(func=_cmd_tideal_check)

    p = sub.add_parser("tideal-trop", help="circuits of a tropicalized rational ideal")
    _add_common(p, poly_inputs=False)
    p.add_argument("--gens", action="append", required=True, help="classical polynomial, e.g. 'x - y'")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--nvars", type=int, default=None)
    p.set_defaults(func=_cmd_tideal_trop)

    p = sub.add_parser("plot", help="render a planar complex to SVG")
    _add_common(p)
    p.add_argument("--complex", help="complex JSON (or file path)")
    p.add_argument("--bbox", default="-5,-5,5,5")
    p.add_argument("--output", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ParseError as exc:
        json.dump({"error": "parse", "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except (ValueError, KeyError, AdmissibilityError, EmptyVarietyError, ZeroDivisionError) as exc:
        json.dump({"error": "domain", "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
