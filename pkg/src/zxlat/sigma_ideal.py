"""Laurent binomial difference ideals described by partial characters.

A proper Laurent binomial ideal is determined by its support lattice L and a
character rho on L with rho(x f) = sigma(rho(f)). Here L is kept as a GHNF
and rho by its values on the GHNF columns, pulled through the transform log
of the Groebner computation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .coeffgroup import MINUS_ONE, ONE, CoeffElem, check_family, kth_roots, pow_by, sigma_shift
from .exactring import ZPoly, ztrim
from .lattice import (
    GhnfBasis, Vector, groebner, is_ghnf, is_normal, is_zero, kernel_syzygy, leading_term,
    reduce, vneg, vscale, vsub, zero_vector,
)
from .saturation import p_saturation_check, xfactor, zfactor, zxfactor

UNIT_IDEAL = "[1]"


class ImproperIdealError(ValueError):
    """The binomials generate the unit ideal."""


@dataclass(frozen=True)
class LaurentBinomial:
    """Y^support - coeff with a normal support vector."""

    support: Vector
    coeff: CoeffElem

    def __post_init__(self):
        if is_zero(self.support):
            raise ValueError("a binomial needs a nonzero support")
        if not is_normal(self.support):
            raise ValueError("support is not normal; use make_binomial")


def make_binomial(f: Vector, c: CoeffElem) -> LaurentBinomial:
    """Y^f - c, replaced by its inverse Y^{-f} - 1/c when f is not normal."""
    f = tuple(ztrim(a) for a in f)
    if is_zero(f):
        raise ValueError("a binomial needs a nonzero support")
    if is_normal(f):
        return LaurentBinomial(f, c)
    return LaurentBinomial(vneg(f), c.inverse())


def _min_poly(a: ZPoly, b: ZPoly) -> ZPoly:
    m = max(len(a), len(b))
    a, b = a + (0,) * (m - len(a)), b + (0,) * (m - len(b))
    return ztrim(min(s, t) for s, t in zip(a, b))


def normalize(a: CoeffElem, exA: Vector, b: CoeffElem | None, exB: Vector | None
              ) -> tuple[Vector, LaurentBinomial]:
    """Write a Y^exA + b Y^exB as a Y^g (Y^{f+} - c Y^{f-}); return (g, Y^f - c)."""
    if b is None or exB is None:
        raise ValueError("a single term is a unit, not a proper binomial")
    exA = tuple(ztrim(e) for e in exA)
    exB = tuple(ztrim(e) for e in exB)
    if any(c < 0 for e in exA + exB for c in e):
        raise ValueError("exponents must lie in N[x]")
    if exA == exB:
        raise ValueError("both terms have the same exponent")
    g = tuple(_min_poly(s, t) for s, t in zip(exA, exB))
    c = (b / a) * MINUS_ONE
    return g, make_binomial(vsub(exA, exB), c)


# ---------------------------------------------------------------------------
# presentations and chains

@dataclass(frozen=True)
class IdealPresentation:
    """The ideal generated by Laurent binomials under a fixed sigma family."""

    n: int
    generators: tuple[LaurentBinomial, ...]
    family: int = 1

    def __post_init__(self):
        check_family(self.family)
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if len(g.support) != self.n:
                raise ValueError("binomial support has the wrong dimension")

    @cached_property
    def basis(self) -> GhnfBasis:
        return groebner([g.support for g in self.generators], self.n)

    @cached_property
    def values(self) -> tuple[CoeffElem, ...]:
        """Character values on the GHNF columns."""
        return tuple(self._product([g.coeff for g in self.generators], t) for t in self.basis.log)

    def _product(self, coeffs: Sequence[CoeffElem], exps: Sequence[ZPoly]) -> CoeffElem:
        out = ONE
        for c, e in zip(coeffs, exps):
            out = out * pow_by(c, e, self.family)
        return out

    @cached_property
    def properness(self) -> tuple[bool, tuple[ZPoly, ...] | None]:
        sup = [g.support for g in self.generators]
        if not sup:
            return True, None
        for u in kernel_syzygy(sup, self.n):
            if not self._product([g.coeff for g in self.generators], u).is_one():
                return False, u
        return True, None

    def rho(self, f: Vector) -> CoeffElem | None:
        """Character value at f, or None when f is outside the support lattice."""
        r, q = reduce(f, self.basis.columns, canonical=True)
        if not is_zero(r):
            return None
        return self._product(self.values, q)

    def with_generators(self, gens: Sequence[LaurentBinomial]) -> "IdealPresentation":
        return IdealPresentation(self.n, tuple(gens), self.family)


@dataclass(frozen=True)
class SigmaChain:
    n: int
    elements: tuple[LaurentBinomial, ...]
    family: int = 1

    @property
    def supports(self) -> tuple[Vector, ...]:
        return tuple(e.support for e in self.elements)

    @property
    def values(self) -> tuple[CoeffElem, ...]:
        return tuple(e.coeff for e in self.elements)

    def presentation(self) -> IdealPresentation:
        return IdealPresentation(self.n, self.elements, self.family)


@dataclass(frozen=True)
class Classification:
    proper: bool
    prime: bool
    reflexive: bool
    perfect: bool
    toric: bool
    dimension: int
    notes: tuple[str, ...] = ()


def is_proper(P: IdealPresentation) -> tuple[bool, tuple[ZPoly, ...] | None]:
    """(True, None), or (False, u) for a kernel vector u with prod c_i^{u_i} != 1."""
    return P.properness


def _require_proper(P: IdealPresentation) -> None:
    if not P.properness[0]:
        raise ImproperIdealError("the binomials generate the unit ideal")


def char_set(P: IdealPresentation) -> SigmaChain:
    _require_proper(P)
    elems = tuple(LaurentBinomial(h, d) for h, d in zip(P.basis.columns, P.values))
    return SigmaChain(P.n, elems, P.family)


@dataclass(frozen=True)
class Remainder:
    """Y^support - coeff; the zero polynomial when support = 0 and coeff = 1."""

    support: Vector
    coeff: CoeffElem

    @property
    def is_zero(self) -> bool:
        return is_zero(self.support) and self.coeff.is_one()


def prem(f: LaurentBinomial | Remainder, A: SigmaChain) -> Remainder:
    """Laurent remainder of f by the chain, with truncated integer quotients."""
    h, c = f.support, f.coeff
    if not A.elements:
        return Remainder(h, c)
    leads = [leading_term(e.support) for e in A.elements]
    for pos in range(A.n - 1, -1, -1):
        block = sorted((lt.exp, i) for i, lt in enumerate(leads) if lt.pos == pos)
        if not block:
            continue
        j = len(h[pos]) - 1
        while j >= block[0][0]:
            a = h[pos][j] if j < len(h[pos]) else 0
            if a:
                o, i = max(t for t in block if t[0] <= j)
                d = leads[i].coeff
                k = abs(a) // d * (1 if a > 0 else -1)
                if k:
                    shift = j - o
                    h = vsub(h, vscale(A.elements[i].support, ztrim([0] * shift + [k])))
                    c = c / pow_by(sigma_shift(A.elements[i].coeff, shift, A.family), (k,), A.family)
            j -= 1
    if not is_zero(h) and not is_normal(h):
        h, c = vneg(h), c.inverse()
    return Remainder(h, c)


def ideal_member(P: IdealPresentation, f: LaurentBinomial) -> bool:
    _require_proper(P)
    v = P.rho(f.support)
    return v is not None and v == f.coeff


def is_regular_coherent(A: SigmaChain) -> bool:
    if not A.elements:
        return True
    return is_ghnf(A.supports, A.n)[0] and A.presentation().properness[0]


# ---------------------------------------------------------------------------
# closures and decomposition

def _from_basis(P: IdealPresentation, cols: Sequence[Vector], vals: Sequence[CoeffElem]
                ) -> IdealPresentation:
    return P.with_generators([LaurentBinomial(h, d) for h, d in zip(cols, vals)])


def _canonical(P: IdealPresentation) -> IdealPresentation:
    return _from_basis(P, P.basis.columns, P.values)


def reflexive_closure(P: IdealPresentation) -> IdealPresentation:
    _require_proper(P)
    while True:
        found = xfactor(P.basis)
        if not found:
            return _canonical(P)
        extra = []
        for w in found:
            k = len(w.multiplier) - 1
            v = sigma_shift(P._product(P.values, w.combination), -k, P.family)
            extra.append(LaurentBinomial(w.h, v))
        P = _from_basis(P, list(P.basis.columns) + [e.support for e in extra],
                        list(P.values) + [e.coeff for e in extra])
        _require_proper(P)


def _chain_key(A: SigmaChain):
    return A.elements


def dec_laurent(P: IdealPresentation) -> list[SigmaChain]:
    """Reflexive prime components; empty iff the perfect closure is [1]."""
    if not P.properness[0]:
        return []
    out: list[SigmaChain] = []
    seen = set()
    work = [reflexive_closure(P)]
    while work:
        Q = work.pop(0)
        if not Q.properness[0]:
            continue
        found = zfactor(Q.basis)
        if not found:
            A = char_set(Q)
            if _chain_key(A) not in seen:
                seen.add(_chain_key(A))
                out.append(A)
            continue
        found = sorted(found, key=lambda w: (w.multiplier, w.h))
        options = []
        for w in found:
            k = w.multiplier[0]
            v = Q._product(Q.values, w.combination)
            options.append([LaurentBinomial(w.h, r) for r in kth_roots(v, k)])
        for choice in itertools.product(*options):
            R = Q.with_generators(Q.generators + tuple(choice))
            if R.properness[0]:
                work.append(reflexive_closure(R))
    return out


def perfect_closure(P: IdealPresentation) -> IdealPresentation | str:
    """The perfect closure, or "[1]" when it is the unit ideal."""
    if not dec_laurent(P):
        return UNIT_IDEAL
    Q = reflexive_closure(P)
    while True:
        ok, certs = p_saturation_check(Q.basis, Q.family)
        if ok:
            return Q
        extra = []
        for cert in certs:
            if cert.holds:
                continue
            shift = ztrim((-cert.o, 1))
            v = Q.rho(vscale(cert.g, (cert.m,)))
            targets = {pow_by(a, shift, Q.family) for a in kth_roots(v, cert.m)}
            if len(targets) != 1:
                raise ValueError("value of the adjoined binomial depends on the choice of root")
            extra.append(LaurentBinomial(vscale(cert.g, shift), targets.pop()))
        Q = reflexive_closure(Q.with_generators(Q.generators + tuple(extra)))


def classify(P: IdealPresentation) -> Classification:
    ok, u = P.properness
    if not ok:
        return Classification(False, False, False, False, False, -1,
                              ("improper: the ideal is [1]",))
    L = P.basis
    notes = []
    reflexive = not xfactor(L)
    prime = not zfactor(L)
    trivial = all(v.is_one() for v in P.values)
    toric = trivial and not zxfactor(L)
    perfect = False
    if reflexive:
        if not dec_laurent(P):
            notes.append("perfect closure is [1]")
        else:
            perfect = p_saturation_check(L, P.family)[0]
    return Classification(True, prime, reflexive, perfect, toric, P.n - L.rank, tuple(notes))


# ---------------------------------------------------------------------------
# non-Laurent form

@dataclass(frozen=True)
class Binomial:
    """Y^plus - coeff * Y^minus with exponents in N[x]^n."""

    plus: Vector
    minus: Vector
    coeff: CoeffElem


def _split(a: ZPoly) -> tuple[ZPoly, ZPoly]:
    return ztrim(max(v, 0) for v in a), ztrim(max(-v, 0) for v in a)


def laurent_lift(A: SigmaChain | Sequence[LaurentBinomial]) -> list[Binomial]:
    elems = A.elements if isinstance(A, SigmaChain) else A
    out = []
    for e in elems:
        parts = [_split(a) for a in e.support]
        out.append(Binomial(tuple(p for p, _ in parts), tuple(m for _, m in parts), e.coeff))
    return out


def laurent_form(b: Binomial) -> LaurentBinomial:
    return make_binomial(vsub(b.plus, b.minus), b.coeff)


@dataclass(frozen=True)
class Component:
    """Variables set to zero and a chain in the remaining variables."""

    variables: tuple[int, ...]
    chain: tuple[Binomial, ...]


def dec_binomial_restricted(chains: Sequence[Sequence[Binomial | int]], n: int, family: int = 1
                            ) -> list[Component]:
    """Components of pre-decomposed chains; an int entry i stands for the variable y_i."""
    out = []
    for chain in chains:
        ys = sorted({e for e in chain if isinstance(e, int)})
        zs = [i for i in range(n) if i not in ys]
        binoms = [e for e in chain if not isinstance(e, int)]
        local = []
        for b in binoms:
            if any(not is_zero((b.plus[i], b.minus[i])) for i in ys):
                raise ValueError("binomial involves a variable of the chain")
            lf = laurent_form(b)
            local.append(make_binomial(tuple(lf.support[i] for i in zs), lf.coeff))
        A = SigmaChain(len(zs), tuple(local), family)
        if not is_regular_coherent(A):
            raise ValueError("input chain is not regular and coherent")
        for comp in dec_laurent(A.presentation()):
            lifted = []
            for b in laurent_lift(comp):
                plus, minus = list(zero_vector(n)), list(zero_vector(n))
                for k, i in enumerate(zs):
                    plus[i], minus[i] = b.plus[k], b.minus[k]
                lifted.append(Binomial(tuple(plus), tuple(minus), b.coeff))
            out.append(Component(tuple(ys), tuple(lifted)))
    return out
