"""Command-line interface: JSON documents in, canonical JSON out."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from .coeffgroup import CoeffElem, from_rational, generator
from .exactring import zparse, ztrim
from .lattice import GhnfBasis, Vector, groebner, kernel_syzygy
from .saturation import full_sat, p_saturation_check, sat_x, sat_z, sat_zx
from .sigma_ideal import (
    IdealPresentation, SigmaChain, char_set, classify, dec_laurent,
    make_binomial, perfect_closure, reflexive_closure,
)
from .toric import implicitize, order_bound, parametrize

EXIT_INPUT = 2
EXIT_COEFF = 3
EXIT_USAGE = 64


class InputError(ValueError):
    pass


class UnsupportedCoefficient(ValueError):
    pass


# ---------------------------------------------------------------------------
# parsing

def parse_poly(obj: Any) -> tuple[int, ...]:
    if isinstance(obj, bool):
        raise InputError(f"not a polynomial: {obj!r}")
    if isinstance(obj, int):
        return ztrim((obj,))
    if isinstance(obj, str):
        try:
            return zparse(obj)
        except ValueError as e:
            raise InputError(f"bad polynomial {obj!r}: {e}") from None
    if isinstance(obj, list) and all(isinstance(c, int) and not isinstance(c, bool) for c in obj):
        return ztrim(obj)
    raise InputError(f"not a polynomial: {obj!r}")


def parse_vector(obj: Any, n: int | None = None) -> Vector:
    if not isinstance(obj, list):
        raise InputError(f"not a vector: {obj!r}")
    v = tuple(parse_poly(a) for a in obj)
    if n is not None and len(v) != n:
        raise InputError(f"vector {obj!r} does not have length {n}")
    return v


def parse_matrix(doc: Any) -> tuple[list[Vector], int]:
    """A list of columns, or {"n": rows, "columns": [...]}."""
    if isinstance(doc, dict):
        cols, n = doc.get("columns"), doc.get("n")
        if not isinstance(cols, list) or (n is not None and not isinstance(n, int)):
            raise InputError('expected {"n": int, "columns": [vector, ...]}')
    elif isinstance(doc, list):
        cols, n = doc, None
    else:
        raise InputError("expected a list of column vectors")
    if n is None:
        if not cols:
            raise InputError("empty column list needs an explicit n")
        n = len(cols[0]) if isinstance(cols[0], list) else None
    out = [parse_vector(c, n) for c in cols]
    return out, n


def _fraction(s: Any) -> Fraction:
    if isinstance(s, bool):
        raise InputError(f"not a number: {s!r}")
    try:
        return Fraction(s) if isinstance(s, (int, str)) else Fraction(str(s))
    except (ValueError, ZeroDivisionError):
        raise UnsupportedCoefficient(f"unsupported coefficient field: {s!r}") from None


def parse_coeff(obj: Any) -> CoeffElem:
    if isinstance(obj, (int, str)) and not isinstance(obj, bool):
        q = _fraction(obj)
        if q == 0:
            raise InputError("coefficient must be nonzero")
        return from_rational(q)
    if not isinstance(obj, dict):
        raise InputError(f"not a coefficient: {obj!r}")
    unknown = set(obj) - {"torsion", "rational", "trans"}
    if unknown:
        raise InputError(f"unknown coefficient keys {sorted(unknown)}")
    c = CoeffElem(_fraction(obj.get("torsion", "0")))
    for p, e in (obj.get("rational") or {}).items():
        try:
            prime = int(p)
        except ValueError:
            raise InputError(f"bad prime {p!r}") from None
        part = from_rational(prime)
        if part.torsion or len(part.rational) != 1 or part.rational[0][1] != 1:
            raise InputError(f"{p!r} is not a prime")
        e = _fraction(e)
        c = c * CoeffElem(0, ((prime, e),) if e else (), ())
    for name, f in (obj.get("trans") or {}).items():
        if not isinstance(f, dict) or not isinstance(f.get("lo", 0), int) or not isinstance(f.get("coeffs"), list):
            raise InputError(f'trans exponent of {name!r} must be {{"lo": int, "coeffs": [...]}}')
        exps = [_fraction(v) for v in f["coeffs"]]
        if any(exps):
            c = c * generator(str(name), exps, f.get("lo", 0))
    return c


def parse_presentation(doc: Any, family: int | None) -> IdealPresentation:
    if not isinstance(doc, dict) or not isinstance(doc.get("generators"), list):
        raise InputError('expected {"n": int, "family": "+1"|"-1", "generators": [...]}')
    n = doc.get("n")
    gens = doc["generators"]
    if n is None and gens and isinstance(gens[0], dict) and isinstance(gens[0].get("support"), list):
        n = len(gens[0]["support"])
    if not isinstance(n, int):
        raise InputError("presentation needs an integer n")
    if family is None:
        family = parse_family(str(doc.get("family", "+1")))
    out = []
    for g in gens:
        if not isinstance(g, dict) or "support" not in g:
            raise InputError(f"not a binomial: {g!r}")
        try:
            out.append(make_binomial(parse_vector(g["support"], n), parse_coeff(g.get("coeff", 1))))
        except ValueError as e:
            if isinstance(e, (InputError, UnsupportedCoefficient)):
                raise
            raise InputError(str(e)) from None
    return IdealPresentation(n, tuple(out), family)


def parse_family(s: str) -> int:
    if s in ("+1", "1"):
        return 1
    if s == "-1":
        return -1
    raise InputError(f"family must be +1 or -1, got {s!r}")


# ---------------------------------------------------------------------------
# printing

def fmt_poly(p) -> list[int]:
    return list(p)


def fmt_vector(v: Vector) -> list[list[int]]:
    return [fmt_poly(a) for a in v]


def fmt_lattice(B: GhnfBasis) -> dict:
    return {"n": B.n, "columns": [fmt_vector(c) for c in B.columns], "rank": B.rank}


def _fstr(q: Fraction) -> str:
    return str(Fraction(q))


def fmt_coeff(c: CoeffElem) -> dict:
    return {
        "torsion": f"{c.torsion.numerator}/{c.torsion.denominator}",
        "rational": {str(p): _fstr(e) for p, e in c.rational},
        "trans": {name: {"lo": lo, "coeffs": [_fstr(v) for v in cs]} for name, (lo, cs) in c.trans},
    }


def fmt_family(u: int) -> str:
    return "+1" if u == 1 else "-1"


def fmt_binomials(n: int, family: int, elems) -> dict:
    return {"n": n, "family": fmt_family(family),
            "generators": [{"support": fmt_vector(e.support), "coeff": fmt_coeff(e.coeff)} for e in elems]}


def fmt_presentation(P: IdealPresentation) -> dict:
    return fmt_binomials(P.n, P.family, P.generators)


def fmt_chain(A: SigmaChain) -> dict:
    return fmt_binomials(A.n, A.family, A.elements)


# ---------------------------------------------------------------------------
# commands

def _lattice_cmd(fn):
    def run(doc, family):
        cols, n = parse_matrix(doc)
        return fmt_lattice(fn(cols, n))
    return run


def cmd_kernel(doc, family):
    cols, n = parse_matrix(doc)
    return {"kernel": [fmt_vector(u) for u in kernel_syzygy(cols, n)]}


def cmd_pcheck(doc, family):
    cols, n = parse_matrix(doc)
    ok, certs = p_saturation_check(groebner(cols, n), family or 1)
    return {"p_saturated": ok,
            "certificates": [{"g": fmt_vector(c.g), "m": c.m, "o": c.o, "holds": c.holds} for c in certs]}


def cmd_charset(doc, family):
    return fmt_chain(char_set(parse_presentation(doc, family)))


def cmd_classify(doc, family):
    c = classify(parse_presentation(doc, family))
    return {"proper": c.proper, "prime": c.prime, "reflexive": c.reflexive, "perfect": c.perfect,
            "toric": c.toric, "dimension": c.dimension, "notes": list(c.notes)}


def cmd_reflexive(doc, family):
    return fmt_presentation(reflexive_closure(parse_presentation(doc, family)))


def cmd_declaurent(doc, family):
    return {"components": [fmt_chain(A) for A in dec_laurent(parse_presentation(doc, family))]}


def cmd_perfect(doc, family):
    P = perfect_closure(parse_presentation(doc, family))
    return {"closure": P if isinstance(P, str) else fmt_presentation(P)}


def cmd_implicitize(doc, family):
    cols, m = parse_matrix(doc)
    return fmt_presentation(implicitize(cols, m, family or 1))


def cmd_parametrize(doc, family):
    cols, n = parse_matrix(doc)
    return {"matrix": [fmt_vector(c) for c in parametrize(cols, n)]}


def cmd_orderbound(doc, family):
    cols, m = parse_matrix(doc)
    return {"order_bound": order_bound(cols, m)}


COMMANDS = {
    "ghnf": _lattice_cmd(groebner),
    "kernel": cmd_kernel,
    "satx": _lattice_cmd(sat_x),
    "satz": _lattice_cmd(sat_z),
    "satzx": _lattice_cmd(sat_zx),
    "sat": _lattice_cmd(full_sat),
    "pcheck": cmd_pcheck,
    "charset": cmd_charset,
    "classify": cmd_classify,
    "reflexive": cmd_reflexive,
    "declaurent": cmd_declaurent,
    "perfect": cmd_perfect,
    "implicitize": cmd_implicitize,
    "parametrize": cmd_parametrize,
    "orderbound": cmd_orderbound,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zxlat", description="Z[x] lattices and binomial difference ideals")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--in", dest="infile", help="input JSON file (default: standard input)")
    ap.add_argument("--out", dest="outfile", help="output file (default: standard output)")
    ap.add_argument("--family", choices=["+1", "-1"], default=None,
                    help="sigma family u; overrides the document (default +1)")
    return ap


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and not argv[0].startswith("-") and argv[0] not in COMMANDS:
        print(f"zxlat: unknown subcommand {argv[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    family = parse_family(args.family) if args.family else None
    try:
        if args.infile:
            with open(args.infile, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        doc = json.loads(text)
        result = COMMANDS[args.command](doc, family)
    except UnsupportedCoefficient as e:
        print(f"zxlat: {e}", file=sys.stderr)
        return EXIT_COEFF
    except (OSError, json.JSONDecodeError, ValueError) as e:
        print(f"zxlat: {e}", file=sys.stderr)
        return EXIT_INPUT
    out = json.dumps(result, sort_keys=True) + "\n"
    if args.outfile:
        with open(args.outfile, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
