"""x-, Z-, Z[x]- and P-saturation of Z[x] lattices.

Each ``*factor`` routine inspects a GHNF and returns witnesses h with
h outside the lattice and multiplier * h inside it; the ``sat_*``
routines adjoin witnesses until the factor routine comes back empty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .coeffgroup import o_m
from .exactring import (
    GF, ZZ, DomainMatrix, PolyRing, QuotientField, ZPoly, factor_over_Q, hnf,
    kernel, prime_factors, zcontent, zdivexact, zmul, zneg, zscale,
    zshift, zsub, ztrim,
)
from .lattice import (
    GhnfBasis, Vector, extension_prefix, groebner, is_ghnf, is_zero, leading_term,
    reduce, vcombine, vneg, vscale, vterm,
)


@dataclass(frozen=True)
class SaturationWitness:
    """h outside the lattice with multiplier * h = sum combination_j * c_j."""

    h: Vector
    kind: str  # "x", "p" or "poly"
    multiplier: ZPoly
    factor: ZPoly
    combination: tuple[ZPoly, ...]


def _as_basis(B: GhnfBasis | Sequence[Vector], n: int | None = None) -> GhnfBasis:
    if isinstance(B, GhnfBasis):
        if not B.checked:
            ok, why = is_ghnf(B.columns, B.n)
            if not ok:
                raise ValueError(f"not a generalized Hermite normal form: {why}")
        return B
    cols = tuple(B)
    ok, why = is_ghnf(cols, n)
    if not ok:
        raise ValueError(f"not a generalized Hermite normal form: {why}")
    if n is None:
        n = len(cols[0])
    return GhnfBasis(n, cols)


def _witness(B: GhnfBasis, h: Vector, kind: str, multiplier: ZPoly, factor: ZPoly,
             comb: Sequence[ZPoly]) -> SaturationWitness | None:
    """Reduce h modulo B, fix its sign and verify it; None if h is in B."""
    r, q = reduce(h, B.columns, canonical=True)
    if is_zero(r):
        return None
    comb = [zsub(c, zmul(multiplier, qj)) for c, qj in zip(comb, q)]
    if leading_term(r).coeff < 0:
        r, comb = vneg(r), [zneg(c) for c in comb]
    mh = vscale(r, multiplier)
    if vcombine(comb, B.columns, B.n) != mh or not B.contains(mh) or B.contains(r):
        raise AssertionError("saturation witness failed verification")
    return SaturationWitness(r, kind, multiplier, factor, tuple(ztrim(c) for c in comb))


def _lift(p: int, a: Sequence[int]) -> ZPoly:
    return ztrim(int(v) % p for v in a)


def _div_int(v: Vector, p: int) -> Vector:
    out = []
    for a in v:
        if any(c % p for c in a):
            raise AssertionError("lifted combination is not divisible by p")
        out.append(tuple(c // p for c in a))
    return tuple(out)


# ---------------------------------------------------------------------------
# x-saturation

def xfactor(B: GhnfBasis | Sequence[Vector], kernel_basis: Sequence[Sequence[int]] | None = None
            ) -> list[SaturationWitness]:
    """Witnesses x^k h in the lattice with h outside it; empty iff x-saturated.

    ``kernel_basis`` overrides the integer kernel of [f_1(0), ..., f_s(0)],
    which lets callers replay a particular choice of kernel vectors.
    """
    B = _as_basis(B)
    cols = B.columns
    if kernel_basis is None:
        F = DomainMatrix.from_columns(ZZ, B.n, [[a[0] if a else 0 for a in c] for c in cols])
        kernel_basis = kernel(F)
    out = []
    for g in kernel_basis:
        comb = [ztrim((int(v),)) for v in g]
        v = vcombine(comb, cols, B.n)
        if is_zero(v):
            continue
        k = min(next(i for i, c in enumerate(a) if c) for a in v if a)
        if k == 0:
            raise ValueError("vector is not in the kernel at x = 0")
        h = tuple(a[k:] for a in v)
        w = _witness(B, h, "x", zshift((1,), k), (0, 1), comb)
        if w is not None:
            out.append(w)
    return out


# ---------------------------------------------------------------------------
# Z-saturation

def _first_and_last(B: GhnfBasis) -> tuple[list[int], list[int]]:
    firsts = [B.blocks[p][0] for p in sorted(B.blocks)]
    lasts = [B.blocks[p][-1] for p in sorted(B.blocks)]
    return firsts, lasts


def _zfactor_prime(B: GhnfBasis, p: int) -> list[SaturationWitness]:
    n, s, cols = B.n, len(B.columns), B.columns
    R = PolyRing(GF(p))
    _, lasts = _first_and_last(B)

    def unit_comb(j: int, poly: ZPoly = (1,)) -> list[ZPoly]:
        return [poly if i == j else () for i in range(s)]

    def add_comb(a, b, c: ZPoly = (1,)):
        return [ztrim(zsub(x, zmul(zneg(c), y))) for x, y in zip(a, b)]

    def collect(cands) -> list[SaturationWitness]:
        out = []
        for v, comb in cands:
            w = _witness(B, _div_int(v, p), "p", (p,), (p,), comb)
            if w is not None:
                out.append(w)
        return out

    # kernel of the last-block columns over Z_p[x]
    F = DomainMatrix.from_columns(R, n, [[R.convert(a) for a in cols[j]] for j in lasts])
    cands = []
    for g in kernel(F):
        comb = [()] * s
        for gi, j in zip(g, lasts):
            comb = add_comb(comb, unit_comb(j), _lift(p, gi))
        cands.append((vcombine(comb, cols, n), comb))
    found = collect(cands)
    if found:
        return found

    # Hermite form of the same columns, lifted to actual lattice elements
    H, U = hnf(F)
    piv = []
    for hcol, ucol in zip(H.cols, U.cols):
        nz = [i for i in range(n) if hcol[i]]
        if not nz:
            continue
        comb = [()] * s
        for ui, j in zip(ucol, lasts):
            comb = add_comb(comb, unit_comb(j), _lift(p, ui))
        piv.append((nz[-1], hcol, comb))
    piv.sort(key=lambda t: -t[0])

    prefix = []
    for pos in sorted(B.blocks):
        idx = B.blocks[pos]
        for a, b in zip(idx, idx[1:]):
            for j in range(B.leads[b].exp - B.leads[a].exp):
                prefix.append((vterm(cols[a], 1, j), unit_comb(a, zshift((1,), j))))
    assert [v for v, _ in prefix] == extension_prefix(B)

    residues = []
    zero_hits = []
    for f, comb in prefix:
        r = [R.convert(a) for a in f]
        comb = list(comb)
        for row, hcol, hcomb in piv:
            t, _ = R.divmod(r[row], hcol[row])
            if t:
                r = [R.sub(a, R.mul(t, b)) for a, b in zip(r, hcol)]
                comb = add_comb(comb, hcomb, zneg(_lift(p, t)))
        if all(not a for a in r):
            zero_hits.append((vcombine(comb, cols, n), comb))
        residues.append((r, comb))
    found = collect(zero_hits)
    if found:
        return found

    # Z_p-linear relations among the residues
    if not residues:
        return []
    width = max([len(a) for r, _ in residues for a in r] + [1])
    K = GF(p)
    E = DomainMatrix.from_columns(
        K, n * width,
        [[(r[i][e] if e < len(r[i]) else 0) for i in range(n) for e in range(width)] for r, _ in residues])
    cands = []
    for d in kernel(E):
        comb = [()] * s
        for di, (_, rc) in zip(d, residues):
            if di:
                comb = add_comb(comb, rc, (int(di),))
        cands.append((vcombine(comb, cols, n), comb))
    return collect(cands)


def zfactor(B: GhnfBasis | Sequence[Vector]) -> list[SaturationWitness]:
    """Witnesses p h in the lattice, p prime, h outside; empty iff Z-saturated."""
    B = _as_basis(B)
    if not B.columns:
        return []
    firsts, _ = _first_and_last(B)
    q = math.prod(abs(B.leads[j].coeff) for j in firsts)
    for p, _ in prime_factors(q):
        found = _zfactor_prime(B, p)
        if found:
            return found
    return []


# ---------------------------------------------------------------------------
# Z[x]-saturation

def zxfactor(B: GhnfBasis | Sequence[Vector]) -> list[SaturationWitness]:
    """Witnesses for Z- or Q[x]-non-saturation; empty iff Z[x]-saturated."""
    B = _as_basis(B)
    found = zfactor(B)
    if found or not B.columns:
        return found
    n, s, cols = B.n, len(B.columns), B.columns
    firsts, _ = _first_and_last(B)
    prod: ZPoly = (1,)
    for j in firsts:
        prod = zmul(prod, cols[j][B.leads[j].pos])
    _, factors = factor_over_Q(prod)
    for pf, _ in factors:
        if len(pf) < 2:
            continue
        K = QuotientField(pf)
        M = DomainMatrix.from_columns(K, n, [[K.convert(a) for a in cols[j]] for j in firsts])
        out = []
        for b in kernel(M):
            den = math.lcm(*[v.denominator for e in b for v in e] or [1])
            comb = [()] * s
            for e, j in zip(b, firsts):
                comb[j] = ztrim(int(v * den) for v in e)
            v = vcombine(comb, cols, n)
            w = []
            for a in v:
                qa = zdivexact(a, pf) if a else ()
                if qa is None:
                    raise AssertionError("kernel combination not divisible by p(x)")
                w.append(qa)
            c = math.gcd(*[zcontent(a) for a in w if a] or [1])
            h = tuple(tuple(x // c for x in a) for a in w)
            wt = _witness(B, h, "poly", zscale(pf, c), pf, comb)
            if wt is not None:
                out.append(wt)
        if out:
            return out
    return []


# ---------------------------------------------------------------------------
# saturation loops

def _saturate(gens: Sequence[Vector], n: int | None,
              factor: Callable[[GhnfBasis], list[SaturationWitness]]
              ) -> tuple[GhnfBasis, list[list[SaturationWitness]]]:
    gens = list(gens.columns) if isinstance(gens, GhnfBasis) else list(gens)
    if n is None:
        if not gens:
            raise ValueError("ambient dimension unknown for an empty generator list")
        n = len(gens[0])
    B = groebner(gens, n, track=False)
    rounds = []
    while True:
        found = factor(B)
        if not found:
            return B, rounds
        rounds.append(found)
        B = groebner(list(B.columns) + [w.h for w in found], n, track=False)


def sat_x(gens, n: int | None = None) -> GhnfBasis:
    return _saturate(gens, n, xfactor)[0]


def sat_z(gens, n: int | None = None) -> GhnfBasis:
    return _saturate(gens, n, zfactor)[0]


def sat_zx(gens, n: int | None = None) -> GhnfBasis:
    return _saturate(gens, n, zxfactor)[0]


def full_sat(gens, n: int | None = None) -> GhnfBasis:
    """sat_Z(sat_x(L)), the saturation matching prime reflexive ideals."""
    B = sat_x(gens, n)
    return sat_z(B.columns, B.n)


# ---------------------------------------------------------------------------
# P-saturation

def _divisors(N: int) -> list[int]:
    out = [1]
    for p, e in prime_factors(N):
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


@dataclass(frozen=True)
class PCertificate:
    g: Vector
    m: int
    o: int
    holds: bool


def p_saturation_check(L: GhnfBasis | Sequence[Vector], family: int = 1,
                       n: int | None = None) -> tuple[bool, list[PCertificate]]:
    """For x-saturated L, test (x - o_m) g in L for every generator g of sat_Z(L)."""
    if not isinstance(L, GhnfBasis):
        L = groebner(list(L), n, track=False)
    if xfactor(L):
        raise ValueError("P-saturation test needs an x-saturated lattice")
    S, rounds = _saturate(L.columns, L.n, zfactor)
    N = 1
    for found in rounds:
        N *= math.prod({int(w.factor[0]) for w in found})
    certs = []
    for g in S.columns:
        m = next(d for d in _divisors(N) if L.contains(vterm(g, d, 0)))
        o = o_m(family, m)
        moved = vscale(g, ztrim((-o, 1)))
        certs.append(PCertificate(g, m, o, L.contains(moved)))
    return all(c.holds for c in certs), certs


def p_saturation(gens, family: int = 1, n: int | None = None) -> GhnfBasis:
    """Smallest P-saturated lattice containing (gens)."""
    L = sat_x(gens, n)
    while True:
        ok, certs = p_saturation_check(L, family)
        if ok:
            return L
        new = [vscale(c.g, ztrim((-c.o, 1))) for c in certs if not c.holds]
        L = sat_x(list(L.columns) + new, L.n)
