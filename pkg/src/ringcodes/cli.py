"""Command-line front end.

Every subcommand prints one report (text or JSON) and exits with
0 when the verdict holds, 1 when it fails and 2 on usage, parse or cap
errors.  Errors in JSON mode are still emitted as a report with verdict
``"error"``.
"""

from __future__ import annotations

import argparse
import re
import sys

import numpy as np
from numpy.polynomial import Polynomial

from . import analysis, codes, galois
from .errors import ParseError, PreconditionError, RingCodesError
from .fields import FieldCtx, field_of_order, format_zp_poly, is_prime
from .galois import GaloisRingCtx, gr_construct
from .grammar import parse_expression
from .poly import QuotientCtx, RingPoly, format_poly, parse_poly
from .report import ERROR, FAILS, HOLDS, Report
from .rings import RingSpec, elem_inverse, elem_is_unit, nilpotency_index, parse_elem, ring_construct

EXIT_CODES = {HOLDS: 0, FAILS: 1, ERROR: 2}

_DESCRIPTOR = re.compile(r"^(Fq|R|S|T|GR)\[(.*)\]$")
_KEYS = {
    "Fq": ("p", "r"),
    "R": ("i", "q"),
    "S": ("i", "q"),
    "T": ("i", "j", "q"),
    "GR": ("p", "r", "n"),
}


def parse_ring_descriptor(text: str) -> RingSpec | FieldCtx | GaloisRingCtx:
    """``Fq[p=2,r=1]``, ``R[i=3,q=4]``, ``S[i=2,q=2]``, ``T[i=3,j=2,q=4]``, ``GR[p=2,r=2,n=2]``."""
    m = _DESCRIPTOR.match("".join(text.split()))
    if not m:
        raise ParseError(f"malformed ring descriptor {text!r}")
    kind, body = m.groups()
    vals: dict[str, int] = {}
    for part in filter(None, body.split(",")):
        key, sep, val = part.partition("=")
        if not sep or not val.isdigit() or key in vals:
            raise ParseError(f"malformed parameter {part!r} in {text!r}")
        vals[key] = int(val)
    if set(vals) != set(_KEYS[kind]):
        raise ParseError(f"{kind}[...] needs exactly the parameters {', '.join(_KEYS[kind])}")
    if kind in ("Fq", "GR") and not is_prime(vals["p"]):
        raise ParseError(f"p = {vals['p']} is not prime")
    if kind == "Fq":
        if vals["r"] < 1:
            raise ParseError(f"r must be >= 1 in {text!r}")
        return field_of_order(vals["p"] ** vals["r"])
    if kind == "GR":
        return gr_construct(vals["p"], vals["r"], vals["n"])
    try:
        fld = field_of_order(vals["q"])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return ring_construct(kind, vals["i"], vals.get("j"), fld)


def parse_int_poly(text: str) -> list[int]:
    """Integer polynomial in ``x``, e.g. ``x^2-2``; coefficients lowest degree first."""

    def number(n: int) -> Polynomial:
        return Polynomial(np.array([n], dtype=object))

    def ident(name: str) -> Polynomial:
        if name != "x":
            raise ParseError(f"unknown variable {name!r} in {text!r}")
        return Polynomial(np.array([0, 1], dtype=object))

    coeffs = [int(c) for c in parse_expression(text, number, ident).coef]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def coefficient_ring(text: str) -> RingSpec:
    """Descriptor as a coefficient ring; a field F_q is read as R_1 over F_q."""
    obj = parse_ring_descriptor(text)
    if isinstance(obj, FieldCtx):
        return ring_construct("R", 1, None, obj)
    if isinstance(obj, GaloisRingCtx):
        raise PreconditionError("Galois rings are not coefficient rings for codes")
    return obj


# -- subcommand handlers ----------------------------------------------------------

def _cap(value: int | None, default: int) -> int:
    return default if value is None else value


def _code_cap(args) -> int:
    return _cap(args.max_enum, codes.DEFAULT_CODE_ENUM)


def _ctx(args) -> QuotientCtx:
    return QuotientCtx(coefficient_ring(args.ring), args.n)


def _polys(ctx: QuotientCtx, texts) -> list[RingPoly]:
    return [ctx.parse(t) for t in texts or []]


def cmd_ring_info(args) -> Report:
    obj = parse_ring_descriptor(args.ring)
    if isinstance(obj, FieldCtx):
        return Report("ring-info", {"ring": obj.descriptor}, HOLDS,
                      {"q": obj.q, "modulus": format_zp_poly(obj.modulus)})
    if isinstance(obj, GaloisRingCtx):
        return Report("ring-info", {"ring": obj.descriptor}, HOLDS,
                      {"size": obj.size, "modulus": format_zp_poly(obj.modulus, "x")})
    spec = obj
    witness = {"size": spec.size, "fq_dimension": spec.s, "basis": list(spec.labels)}
    cap = _cap(args.max_enum, analysis.DEFAULT_MAX_ENUM)
    if spec.size <= cap:
        witness["units"] = int(spec.unit_mask(spec.vector_array(cap)).sum())
    if args.elem is not None:
        a = parse_elem(spec, args.elem)
        witness["element"] = spec.format(a)
        witness["is_unit"] = elem_is_unit(spec, a)
        if witness["is_unit"]:
            witness["inverse"] = spec.format(elem_inverse(spec, a))
        witness["nilpotency_index"] = nilpotency_index(spec, a)
    return Report("ring-info", {"ring": spec.descriptor}, HOLDS, witness)


def cmd_code_build(args) -> Report:
    ctx = _ctx(args)
    code = codes.code_build(ctx, _polys(ctx, args.gen), max_dim=args.max_dim)
    witness = {
        "fq_dimension": code.rank,
        "cardinality": code.cardinality,
        "fq_basis": [format_poly(b) for b in code.basis_polys()],
    }
    return Report("code-build", {"ring": ctx.ring.descriptor, "n": ctx.n,
                                 "generators": [format_poly(g) for g in code.generators]}, HOLDS, witness)


def cmd_code_rank(args) -> Report:
    ctx = _ctx(args)
    return codes.free_rank_check(ctx, parse_poly(ctx.ring, args.h), max_enum=_code_cap(args), max_dim=args.max_dim)


def cmd_code_card(args) -> Report:
    ctx = _ctx(args)
    if args.h is not None:
        return codes.cardinality_formula_check(ctx, parse_poly(ctx.ring, args.h), max_enum=_code_cap(args),
                                               max_dim=args.max_dim)
    if not args.gen:
        raise PreconditionError("code-card needs --h or at least one --gen")
    code = codes.code_build(ctx, _polys(ctx, args.gen), max_dim=args.max_dim)
    return codes.cardinality_bound_check(code)


def cmd_code_distance(args) -> Report:
    ctx = _ctx(args)
    code = codes.code_build(ctx, _polys(ctx, args.gen), max_dim=args.max_dim)
    d, word = codes.min_weight_word(code, _code_cap(args))
    return Report("min-distance", {"ring": ctx.ring.descriptor, "n": ctx.n,
                                   "generators": [format_poly(g) for g in code.generators]},
                  HOLDS, {"d": d, "min_weight_word": format_poly(word), "cardinality": code.cardinality})


def cmd_code_twogen(args) -> Report:
    ctx = _ctx(args)
    _, report = codes.two_generator_build(ctx, *(parse_poly(ctx.ring, t) for t in (args.g, args.p, args.a)),
                                          max_enum=_code_cap(args), max_dim=args.max_dim)
    return report


def cmd_classify(args) -> Report:
    return codes.classify_report(args.n, args.p)


def _parent(args):
    spec = coefficient_ring(args.ring)
    return spec if args.n is None else QuotientCtx(spec, args.n)


def cmd_analyze_local(args) -> Report:
    return analysis.is_local(_parent(args), _cap(args.max_enum, analysis.DEFAULT_MAX_ENUM))


def cmd_analyze_principal(args) -> Report:
    parent = _parent(args)
    if isinstance(parent, QuotientCtx):
        gens = _polys(parent, args.gen)
    else:
        gens = [parse_elem(parent, t) for t in args.gen or []]
    ideal = analysis.ideal_span(parent, gens, args.max_dim)
    return analysis.is_principal(parent, ideal, _cap(args.max_enum, analysis.DEFAULT_MAX_ENUM))


def cmd_analyze_chain(args) -> Report:
    return analysis.chain_check(coefficient_ring(args.ring), _cap(args.max_enum, analysis.CHAIN_LIMIT))


def cmd_analyze_factor(args) -> Report:
    spec = coefficient_ring(args.ring)
    if args.search:
        return analysis.factorization_search(spec, args.n, _cap(args.max_enum, analysis.DEFAULT_MAX_ENUM))
    if not args.candidate:
        raise PreconditionError("analyze-factor needs --candidate or --search")
    cands = [[parse_poly(spec, f) for f in c.split(";")] for c in args.candidate]
    return analysis.factorization_witness(spec, args.n, cands)


def cmd_gr_build(args) -> Report:
    ctx = parse_ring_descriptor(args.ring)
    if not isinstance(ctx, GaloisRingCtx):
        raise PreconditionError("gr-build needs a GR[p=..,r=..,n=..] descriptor")
    report = galois.gr_basis_check(ctx, _cap(args.max_enum, galois.DEFAULT_MAX_ENUM))
    if args.lift is not None:
        if args.root is None:
            raise PreconditionError("--lift needs --root")
        f = parse_int_poly(args.lift)
        sigma = galois.hensel_lift(ctx.p, f, args.root, ctx.r)
        report.witness["hensel_root"] = {"coefficients": f, "root_mod_p": args.root % ctx.p,
                                         "lifted": sigma, "modulus": ctx.p**ctx.r}
    return report


def cmd_prop42(args) -> Report:
    spec = coefficient_ring(args.ring)
    return codes.distance_doubling_check(spec, args.p, args.r, args.a, parse_poly(spec, args.g1),
                                         max_enum=_code_cap(args), max_dim=args.max_dim)


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringcodes", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-enum", type=int, help="enumeration cap (default: per operation)")
    common.add_argument("--max-dim", type=int, default=analysis.DEFAULT_MAX_DIM)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("ring-info", cmd_ring_info, "size, basis and units of a ring")
    p.add_argument("--ring", required=True)
    p.add_argument("--elem")

    for name, handler, help_text in (
        ("code-build", cmd_code_build, "F_q basis of the code generated by --gen"),
        ("code-distance", cmd_code_distance, "minimum Hamming distance by enumeration"),
    ):
        p = add(name, handler, help_text)
        p.add_argument("--ring", required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--gen", action="append", required=True)

    p = add("code-rank", cmd_code_rank, "free rank of (h) for a monic divisor h of x^n-1")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", required=True)

    p = add("code-card", cmd_code_card, "cardinality formula for (h), or the bound for --gen codes")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h")
    p.add_argument("--gen", action="append")

    p = add("code-twogen", cmd_code_twogen, "two-generator code (g + u p, u a) over R_2")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--a", required=True)

    p = add("classify", cmd_classify, "classify the base-p expansion of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = add("analyze-local", cmd_analyze_local, "is the ring (or R[x]/(x^n-1)) local?")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int)

    p = add("analyze-principal", cmd_analyze_principal, "is the ideal spanned by --gen principal?")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--gen", action="append")

    p = add("analyze-chain", cmd_analyze_chain, "are the ideals of the ring totally ordered?")
    p.add_argument("--ring", required=True)

    p = add("analyze-factor", cmd_analyze_factor, "verify or search factorizations of x^n-1")
    p.add_argument("--ring", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--candidate", action="append",
                   help="factors separated by ';', e.g. 'x-1;x-1'")
    p.add_argument("--search", action="store_true",
                   help="try every x-(1+m) with m nilpotent")

    p = add("gr-build", cmd_gr_build, "build a Galois ring and check its θ-basis")
    p.add_argument("--ring", required=True)
    p.add_argument("--lift", help="integer polynomial f in x whose root mod p is lifted, e.g. 'x^2-2'")
    p.add_argument("--root", type=int, help="simple root of f mod p to lift")

    p = add("prop42", cmd_prop42, "distance doubling d((x^(a p^(r-1))-1) g1) = 2 d((g1))")
    p.add_argument("--ring", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--g1", required=True)
    return parser


def _emit(report: Report, fmt: str, out) -> None:
    print(report.to_json() if fmt == "json" else report.to_text(), file=out)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        report = args.handler(args)
    except (RingCodesError, ValueError, ZeroDivisionError) as exc:
        report = Report(args.command, {"argv": list(argv if argv is not None else sys.argv[1:])},
                        ERROR, {"error": f"{type(exc).__name__}: {exc}"})
    _emit(report, args.format, out)
    return EXIT_CODES[report.verdict]


if __name__ == "__main__":
    sys.exit(main())
