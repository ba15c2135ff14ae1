"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 semantic precondition
failure, 4 a check found mismatches.
"""
from __future__ import annotations

import argparse
import json
import sys

from .compositions import DomainError, compositions_up_to, format_composition
from .families import FAMILIES, expand_F, expand_M, family, symmetry_predicate, symmetry_witness_extended
from .qsym import evaluate_truncated, is_symmetric, to_monomial_symmetric
from .shapes import parse_shape
from .verify import (
    check_chromatic,
    check_skew_consistency,
    psi_pairing_failures,
    scan_theorem,
)

MAX_SIZE_CEILING = 9
EXIT_OK, EXIT_USAGE, EXIT_SEMANTIC, EXIT_MISMATCH = 0, 2, 3, 4


class UsageError(Exception):
    pass


class SemanticError(Exception):
    pass


def _parse_family_shape(name: str, text: str):
    try:
        return family(name), parse_shape(text)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _check_size(n: int):
    if not 1 <= n <= MAX_SIZE_CEILING:
        raise UsageError(f"max size must be between 1 and {MAX_SIZE_CEILING}, got {n}")


def _emit(args, text: str, payload):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def format_polynomial(p: dict) -> str:
    if not p:
        return "0"
    terms = []
    for exps in sorted(p, reverse=True):
        mono = "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps, 1) if e)
        c = p[exps]
        terms.append(f"{c}*{mono}" if mono and c != 1 else mono or str(c))
    return " + ".join(terms)


# -- commands -----------------------------------------------------------------


def cmd_expand(args) -> int:
    fam, s = _parse_family_shape(args.family, args.shape)
    try:
        m = expand_M(fam, s)
        if args.basis == "F":
            out = expand_F(fam, s)
        elif args.basis == "m":
            if not is_symmetric(m):
                raise SemanticError(f"{fam.name} on {s} is not symmetric; no m-expansion")
            out = to_monomial_symmetric(m)
        else:
            out = m
    except DomainError as exc:
        raise SemanticError(str(exc)) from None
    payload = out.to_json()
    text = str(out)
    if args.vars is not None:
        if args.vars < 1:
            raise UsageError("--vars needs a positive integer")
        poly = evaluate_truncated(m, args.vars)
        payload = {"expansion": payload, "truncated": [{"exponents": list(e), "coeff": c} for e, c in sorted(poly.items())]}
        text += f"\nwith {args.vars} variables: {format_polynomial(poly)}"
    _emit(args, text, payload)
    return EXIT_OK


def cmd_symmetric(args) -> int:
    fam, s = _parse_family_shape(args.family, args.shape)
    try:
        computed = is_symmetric(expand_M(fam, s))
    except DomainError as exc:
        raise SemanticError(str(exc)) from None
    t = s.normalize()
    # the criterion is only stated for connected shapes
    predicted = symmetry_predicate(fam, t) if t.is_connected() else None
    verdict = "symmetric" if computed else "not symmetric"
    note = {None: "no criterion for disconnected shapes", True: "criterion agrees", False: "criterion DISAGREES"}
    agrees = None if predicted is None else predicted == computed
    _emit(
        args,
        f"{fam.name} {s}: {verdict} ({note[agrees]})",
        {"family": fam.name, "shape": str(s), "symmetric": computed, "predicted": predicted},
    )
    return EXIT_MISMATCH if agrees is False else EXIT_OK


def cmd_classify(args) -> int:
    try:
        fam = family(args.family)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    _check_size(args.max_size)
    report = scan_theorem(fam, args.max_size, workers=args.workers)
    lines = [f"family={report.family} max_size={report.max_size} shapes={report.shapes} mismatches={len(report.mismatches)}"]
    lines += [f"  {m['shape']}: expected {m['expected']}, computed {m['computed']}" for m in report.mismatches]
    _emit(args, "\n".join(lines), report.to_json())
    return EXIT_OK if report.confirmed else EXIT_MISMATCH


def cmd_psi_check(args) -> int:
    _check_size(args.max_size)
    bad = psi_pairing_failures(args.max_size)
    text = f"psi pairings up to size {args.max_size}: {len(bad)} failures"
    text += "".join(f"\n  psi({a}) != {b} on {s}" for a, b, s in bad)
    _emit(args, text, {"max_size": args.max_size, "failures": [list(t) for t in bad]})
    return EXIT_OK if not bad else EXIT_MISMATCH


def cmd_skew_check(args) -> int:
    _check_size(args.max_size)
    names = [args.family] if args.family else list(FAMILIES)
    bad, checked = [], 0
    for name in names:
        try:
            fam = family(name)
        except DomainError as exc:
            raise UsageError(str(exc)) from None
        for a in compositions_up_to(args.max_size):
            checked += 1
            if not check_skew_consistency(fam, a):
                bad.append((fam.name, format_composition(a)))
    text = f"skew coproduct consistency, {checked} cases: {len(bad)} failures"
    text += "".join(f"\n  {f} at {a}" for f, a in bad)
    _emit(args, text, {"max_size": args.max_size, "cases": checked, "failures": [list(t) for t in bad]})
    return EXIT_OK if not bad else EXIT_MISMATCH


def cmd_chromatic_check(args) -> int:
    _check_size(args.max_size)
    bad = check_chromatic(args.max_size)
    text = f"top chromatic coefficient vs sAex up to size {args.max_size}: {len(bad)} failures"
    text += "".join(f"\n  {s}" for s in bad)
    _emit(args, text, {"max_size": args.max_size, "failures": bad})
    return EXIT_OK if not bad else EXIT_MISMATCH


def cmd_witness(args) -> int:
    try:
        s = parse_shape(args.shape)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    try:
        w = symmetry_witness_extended(s)
        e = expand_M("ex", s)
    except DomainError as exc:
        raise SemanticError(str(exc)) from None
    cg, cgp = e[w.gamma], e[w.gamma_prime]
    payload = {
        "shape": str(s),
        "I": w.I,
        "K": w.K,
        "gamma": list(w.gamma),
        "gamma_prime": list(w.gamma_prime),
        "coeff_gamma": cg,
        "coeff_gamma_prime": cgp,
        "strict": cg < cgp,
    }
    text = (
        f"I={w.I} K={w.K}\n"
        f"gamma=({format_composition(w.gamma)}) coefficient {cg}\n"
        f"gamma'=({format_composition(w.gamma_prime)}) coefficient {cgp}\n"
        f"{'strict inequality holds' if cg < cgp else 'INEQUALITY FAILS'}"
    )
    _emit(args, text, payload)
    return EXIT_OK if cg < cgp else EXIT_MISMATCH


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="qsymlab", description="Quasisymmetric Schur-like functions: expansions and checks.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", parents=[common], help="expand a family on a shape")
    e.add_argument("family")
    e.add_argument("shape", help='e.g. "3,4,4,3,1/2,1,2"')
    e.add_argument("--basis", choices=("M", "F", "m"), default="M")
    e.add_argument("--vars", type=int, default=None, help="also print the polynomial in this many variables")
    e.set_defaults(func=cmd_expand)

    s = sub.add_parser("symmetric", parents=[common], help="symmetry verdict and criterion")
    s.add_argument("family")
    s.add_argument("shape")
    s.set_defaults(func=cmd_symmetric)

    c = sub.add_parser("classify", parents=[common], help="scan all shapes up to a size")
    c.add_argument("family")
    c.add_argument("max_size", type=int)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=cmd_classify)

    for name, func, default in (
        ("psi-check", cmd_psi_check, 5),
        ("chromatic-check", cmd_chromatic_check, 6),
    ):
        q = sub.add_parser(name, parents=[common])
        q.add_argument("--max-size", type=int, default=default)
        q.set_defaults(func=func)

    k = sub.add_parser("skew-check", parents=[common], help="skew coproduct consistency")
    k.add_argument("family", nargs="?")
    k.add_argument("--max-size", type=int, default=5)
    k.set_defaults(func=cmd_skew_check)

    w = sub.add_parser("witness", parents=[common], help="non-symmetry witness for ex")
    w.add_argument("shape")
    w.set_defaults(func=cmd_witness)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qsymlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SemanticError as exc:
        print(f"qsymlab: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
