"""Exact divisible coefficient group with a difference-operator action.

An element is zeta^torsion * prod p^{e_p} * prod name^{f_name(x)}: a root of
unity, a rational number with rational exponents, and named transcendental
generators whose exponents are Laurent polynomials in x. sigma fixes the
rationals, sends zeta to zeta^u for a global u in {+1, -1}, and multiplies
transcendental exponents by x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .exactring import ZPoly, prime_factors, zeval

# (lo, coeffs): sum coeffs[i] * x^(lo + i), trimmed at both ends
Laurent = tuple[int, tuple[Fraction, ...]]


def check_family(u: int) -> int:
    if u not in (1, -1):
        raise ValueError("sigma family must be +1 or -1")
    return u


def o_m(u: int, m: int) -> int:
    """Exponent with sigma(zeta_m) = zeta_m^{o_m}."""
    return check_family(u) % m


def _laurent(lo: int, coeffs: Iterable) -> Laurent | None:
    c = [Fraction(v) for v in coeffs]
    while c and not c[-1]:
        c.pop()
    k = 0
    while k < len(c) and not c[k]:
        k += 1
    if k == len(c):
        return None
    return lo + k, tuple(c[k:])


def _laurent_add(a: Laurent, b: Laurent) -> Laurent | None:
    lo = min(a[0], b[0])
    hi = max(a[0] + len(a[1]), b[0] + len(b[1]))
    out = [Fraction(0)] * (hi - lo)
    for base, cs in (a, b):
        for i, v in enumerate(cs):
            out[base - lo + i] += v
    return _laurent(lo, out)


def _laurent_mul(a: Laurent, p: ZPoly) -> Laurent | None:
    if not p:
        return None
    out = [Fraction(0)] * (len(a[1]) + len(p) - 1)
    for i, v in enumerate(a[1]):
        for j, w in enumerate(p):
            out[i + j] += v * w
    return _laurent(a[0], out)


def _clean(m: Mapping) -> tuple:
    return tuple(sorted((k, v) for k, v in m.items() if v is not None and v != 0))


@dataclass(frozen=True, order=True)
class CoeffElem:
    torsion: Fraction = Fraction(0)
    rational: tuple[tuple[int, Fraction], ...] = ()
    trans: tuple[tuple[str, Laurent], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", Fraction(self.torsion) % 1)

    def __mul__(self, other: "CoeffElem") -> "CoeffElem":
        rat = dict(self.rational)
        for p, e in other.rational:
            rat[p] = rat.get(p, 0) + e
        tr: dict[str, Laurent | None] = dict(self.trans)
        for name, f in other.trans:
            tr[name] = _laurent_add(tr[name], f) if name in tr else f
        return CoeffElem(self.torsion + other.torsion, _clean(rat), _clean(tr))

    def inverse(self) -> "CoeffElem":
        return CoeffElem(-self.torsion, tuple((p, -e) for p, e in self.rational),
                         tuple((n, (f[0], tuple(-v for v in f[1]))) for n, f in self.trans))

    def __truediv__(self, other: "CoeffElem") -> "CoeffElem":
        return self * other.inverse()

    def is_one(self) -> bool:
        return self == ONE

    def __str__(self) -> str:
        parts = []
        if self.torsion:
            t = self.torsion
            parts.append("-1" if t == Fraction(1, 2) else f"zeta{t.denominator}^{t.numerator}")
        for p, e in self.rational:
            parts.append(f"{p}" if e == 1 else f"{p}^({e})")
        for name, (lo, cs) in self.trans:
            terms = [f"{v}*x^{lo + i}" for i, v in enumerate(cs) if v]
            parts.append(f"{name}^({' + '.join(terms)})")
        return "*".join(parts) or "1"


ONE = CoeffElem()
MINUS_ONE = CoeffElem(Fraction(1, 2))


def root_of_unity(j: int, m: int) -> CoeffElem:
    return CoeffElem(Fraction(j, m))


def from_rational(q) -> CoeffElem:
    """Embed a nonzero rational number."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero is not a group element")
    rat: dict[int, Fraction] = {}
    for p, e in prime_factors(abs(q.numerator)):
        rat[p] = rat.get(p, 0) + e
    for p, e in prime_factors(q.denominator):
        rat[p] = rat.get(p, 0) - e
    return CoeffElem(Fraction(1, 2) if q < 0 else Fraction(0), _clean(rat), ())


def generator(name: str, exponent: Iterable = (1,), lo: int = 0) -> CoeffElem:
    """name^(sum exponent[i] x^(lo+i)) for a sigma-transcendental generator."""
    return CoeffElem(0, (), _clean({name: _laurent(lo, exponent)}))


def as_rational(c: CoeffElem) -> Fraction | None:
    """The rational number c, or None if c is not rational."""
    if c.trans or c.torsion not in (0, Fraction(1, 2)):
        return None
    q = Fraction(1)
    for p, e in c.rational:
        if e.denominator != 1:
            return None
        q *= Fraction(p) ** int(e)
    return -q if c.torsion else q


def pow_by(c: CoeffElem, p: ZPoly, family: int = 1) -> CoeffElem:
    """c^p = prod (sigma^i c)^{p_i} for p in Z[x]."""
    u = check_family(family)
    if not p:
        return ONE
    s1 = sum(p)
    return CoeffElem(c.torsion * zeval(p, u),
                     _clean({q: e * s1 for q, e in c.rational}),
                     _clean({n: _laurent_mul(f, p) for n, f in c.trans}))


def sigma_shift(c: CoeffElem, k: int, family: int = 1) -> CoeffElem:
    """sigma^k(c) for any integer k."""
    u = check_family(family)
    return CoeffElem(c.torsion * u ** abs(k), c.rational,
                     tuple((n, (f[0] + k, f[1])) for n, f in c.trans))


def kth_roots(c: CoeffElem, k: int) -> list[CoeffElem]:
    """All k elements r with r^k = c, ordered by torsion offset l/k."""
    if k < 1:
        raise ValueError("k must be positive")
    rat = tuple((p, e / k) for p, e in c.rational)
    tr = tuple((n, (f[0], tuple(v / k for v in f[1]))) for n, f in c.trans)
    return [CoeffElem(c.torsion / k + Fraction(l, k), rat, tr) for l in range(k)]
