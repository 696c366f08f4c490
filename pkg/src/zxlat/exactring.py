"""Exact univariate polynomial arithmetic and linear algebra over PIDs.

Two layers live here.  The hot path for lattice code works on integer
polynomials stored as little-endian tuples of ``int`` (``ZPoly``).  The
generic layer wraps a handful of Euclidean rings (Z, Z_p, Q, Q[x], Z_p[x]
and the fields Q[x]/(p(x))) behind one small interface so that column
Hermite forms and kernels can be written once.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

ZPoly = tuple[int, ...]

__all__ = [
    "ZPoly", "ztrim", "zadd", "zsub", "zneg", "zmul", "zscale", "zshift", "zdeg",
    "zlc", "zeval", "zcontent", "zprimitive", "zdivexact", "zparse", "zformat",
    "ZZ", "QQ", "GF", "PolyRing", "QuotientField", "DomainPoly", "DomainMatrix",
    "poly_arith", "hnf", "kernel", "factor_over_Q", "prime_factors",
]


# ---------------------------------------------------------------------------
# Z[x] on int tuples

def ztrim(c: Iterable[int]) -> ZPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def zadd(a: ZPoly, b: ZPoly) -> ZPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return ztrim(out)


def zneg(a: ZPoly) -> ZPoly:
    return tuple(-v for v in a)


def zsub(a: ZPoly, b: ZPoly) -> ZPoly:
    return zadd(a, zneg(b))


def zmul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return ztrim(out)


def zscale(a: ZPoly, k: int) -> ZPoly:
    if k == 0:
        return ()
    return tuple(k * v for v in a)


def zshift(a: ZPoly, k: int) -> ZPoly:
    """Multiply by x^k (k >= 0)."""
    if not a:
        return ()
    return (0,) * k + a


def zdeg(a: ZPoly) -> int:
    return len(a) - 1


def zlc(a: ZPoly) -> int:
    return a[-1] if a else 0


def zeval(a: ZPoly, v: Any) -> Any:
    acc = 0
    for c in reversed(a):
        acc = acc * v + c
    return acc


def zcontent(a: ZPoly) -> int:
    g = 0
    for v in a:
        g = math.gcd(g, v)
    return g


def zprimitive(a: ZPoly) -> ZPoly:
    g = zcontent(a)
    if g == 0:
        return ()
    if a[-1] < 0:
        g = -g
    return tuple(v // g for v in a)


def zdivexact(a: ZPoly, b: ZPoly) -> ZPoly | None:
    """Quotient a/b in Z[x] when it exists, else None."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        if c % lb:
            return None
        t = c // lb
        q[k - db] = t
        for i, v in enumerate(b):
            rem[k - db + i] -= t * v
    if any(rem):
        return None
    return ztrim(q)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(\*?\s*x\s*(\^\s*(\d+))?)?")


def zparse(text: str) -> ZPoly:
    """Parse strings such as ``"2*x^2-1"`` or ``"-x + 3"``."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial string")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        sign, num, xpart, _, exp = m.groups()
        if pos > 0 and not sign:
            raise ValueError(f"cannot parse polynomial {text!r}")
        if not num and not xpart:
            raise ValueError(f"cannot parse polynomial {text!r}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        k = (int(exp) if exp else 1) if xpart else 0
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
    top = max(coeffs)
    return ztrim(coeffs.get(i, 0) for i in range(top + 1))


def zformat(a: ZPoly, var: str = "x") -> str:
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        m = abs(c)
        if k == 0:
            body = str(m)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if m == 1 else f"{m}*{mono}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f"{sign}{body}"
    return out


# ---------------------------------------------------------------------------
# Euclidean rings behind one interface

class _Ring:
    name = "?"
    is_field = False
    zero: Any
    one: Any

    def is_zero(self, a) -> bool:
        return a == self.zero

    def neg(self, a):
        return self.sub(self.zero, a)

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))

    def __repr__(self):
        return self.name


class _IntegerRing(_Ring):
    name = "Z"
    zero = 0
    one = 1

    def convert(self, a):
        return int(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def divmod(self, a, b):
        # remainder in [0, |b|)
        q, r = divmod(a, b)
        if r < 0:
            r -= b
            q += 1
        return q, r

    def size(self, a):
        return abs(a)

    def unit_normal(self, a):
        return -1 if a < 0 else 1


class _RationalField(_Ring):
    name = "Q"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, a):
        return Fraction(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return 1 / Fraction(a)

    def divmod(self, a, b):
        return a / b, self.zero

    def size(self, a):
        return 0

    def unit_normal(self, a):
        return 1 / a


class GF(_Ring):
    """Integers modulo a prime p, stored as residues in [0, p)."""

    is_field = True
    zero = 0
    one = 1

    def __init__(self, p: int):
        if p < 2:
            raise ValueError("modulus must be a prime >= 2")
        self.p = p
        self.name = f"Z{p}"

    def convert(self, a):
        return int(a) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero mod p")
        return pow(a, -1, self.p)

    def divmod(self, a, b):
        return self.mul(a, self.inv(b)), 0

    def size(self, a):
        return 0

    def unit_normal(self, a):
        return self.inv(a)


ZZ = _IntegerRing()
QQ = _RationalField()


def _ptrim(K, c) -> tuple:
    c = list(c)
    while c and K.is_zero(c[-1]):
        c.pop()
    return tuple(c)


def _padd(K, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = K.add(out[i], v)
    return _ptrim(K, out)


def _pneg(K, a):
    return tuple(K.neg(v) for v in a)


def _pmul(K, a, b):
    if not a or not b:
        return ()
    out = [K.zero] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if K.is_zero(u):
            continue
        for j, v in enumerate(b):
            out[i + j] = K.add(out[i + j], K.mul(u, v))
    return _ptrim(K, out)


def _pdivmod(K, a, b):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a)
    db = len(b) - 1
    inv_lb = K.inv(b[-1])
    q = [K.zero] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if K.is_zero(c):
            continue
        t = K.mul(c, inv_lb)
        q[k - db] = t
        for i, v in enumerate(b):
            rem[k - db + i] = K.sub(rem[k - db + i], K.mul(t, v))
    return _ptrim(K, q), _ptrim(K, rem)


def _pgcdex(K, a, b):
    """(g, s, t) with s*a + t*b = g monic (or zero)."""
    r0, r1 = a, b
    s0, s1 = (K.one,), ()
    t0, t1 = (), (K.one,)
    while r1:
        q, r = _pdivmod(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(K, s0, _pneg(K, _pmul(K, q, s1)))
        t0, t1 = t1, _padd(K, t0, _pneg(K, _pmul(K, q, t1)))
    if r0:
        u = (K.inv(r0[-1]),)
        r0, s0, t0 = _pmul(K, r0, u), _pmul(K, s0, u), _pmul(K, t0, u)
    return r0, s0, t0


def qgcdex(a: Sequence, b: Sequence) -> tuple[tuple[Fraction, ...], ...]:
    """(g, s, t) over Q[x] with s*a + t*b = g monic."""
    return _pgcdex(QQ, _ptrim(QQ, (Fraction(v) for v in a)), _ptrim(QQ, (Fraction(v) for v in b)))


class PolyRing(_Ring):
    """K[x] for a field K (Q or Z_p); elements are little-endian tuples."""

    def __init__(self, K: _Ring):
        if not K.is_field:
            raise ValueError("PolyRing needs a coefficient field")
        self.K = K
        self.name = f"{K.name}[x]"
        self.zero = ()
        self.one = (K.one,)

    def convert(self, a):
        if isinstance(a, (int, Fraction)):
            return _ptrim(self.K, (self.K.convert(a),))
        return _ptrim(self.K, (self.K.convert(v) for v in a))

    def add(self, a, b):
        return _padd(self.K, a, b)

    def sub(self, a, b):
        return _padd(self.K, a, _pneg(self.K, b))

    def mul(self, a, b):
        return _pmul(self.K, a, b)

    def divmod(self, a, b):
        return _pdivmod(self.K, a, b)

    def size(self, a):
        return len(a) - 1

    def unit_normal(self, a):
        return (self.K.inv(a[-1]),)

    def gcd(self, a, b):
        return _pgcdex(self.K, a, b)[0]


class QuotientField(_Ring):
    """Q[x]/(m(x)) for an irreducible m; elements reduced to degree < deg m."""

    is_field = True

    def __init__(self, modulus: Sequence[int | Fraction]):
        m = _ptrim(QQ, (Fraction(v) for v in modulus))
        if len(m) < 2:
            raise ValueError("modulus must have positive degree")
        self.modulus = m
        self.name = f"Q[x]/({zformat(tuple(int(v) for v in m)) if all(v.denominator == 1 for v in m) else m})"
        self.zero = ()
        self.one = (Fraction(1),)

    def convert(self, a):
        if isinstance(a, (int, Fraction)):
            a = (a,)
        return _pdivmod(QQ, _ptrim(QQ, (Fraction(v) for v in a)), self.modulus)[1]

    def add(self, a, b):
        return _padd(QQ, a, b)

    def sub(self, a, b):
        return _padd(QQ, a, _pneg(QQ, b))

    def mul(self, a, b):
        return _pdivmod(QQ, _pmul(QQ, a, b), self.modulus)[1]

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in a quotient field")
        g, s, _ = _pgcdex(QQ, a, self.modulus)
        if g != (Fraction(1),):
            raise ValueError("modulus is not irreducible: zero divisor found")
        return _pdivmod(QQ, s, self.modulus)[1]

    def divmod(self, a, b):
        return self.mul(a, self.inv(b)), ()

    def size(self, a):
        return 0

    def unit_normal(self, a):
        return self.inv(a)


# ---------------------------------------------------------------------------
# user-facing polynomial value

@dataclass(frozen=True)
class DomainPoly:
    """A polynomial over Z, Q or Z_p, or a residue in Q[x]/(p(x)).

    ``domain`` is ``ZZ``, ``QQ``, ``GF(p)`` or ``QuotientField(p)``;
    ``coeffs`` is little-endian and trimmed.
    """

    domain: Any
    coeffs: tuple

    def __post_init__(self):
        if isinstance(self.domain, QuotientField):
            c = self.domain.convert(self.coeffs)
        else:
            c = _ptrim(self.domain, (self.domain.convert(v) for v in self.coeffs))
        object.__setattr__(self, "coeffs", c)

    def _ring(self):
        if isinstance(self.domain, QuotientField):
            return self.domain
        if self.domain is ZZ or isinstance(self.domain, _IntegerRing):
            return None
        return PolyRing(self.domain)

    def _wrap(self, c):
        return DomainPoly(self.domain, c)

    def _check(self, other):
        if not isinstance(other, DomainPoly) or other.domain != self.domain:
            raise TypeError("domain mismatch")

    def __add__(self, other):
        self._check(other)
        R = self._ring()
        return self._wrap(zadd(self.coeffs, other.coeffs) if R is None else R.add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        R = self._ring()
        return self._wrap(zsub(self.coeffs, other.coeffs) if R is None else R.sub(self.coeffs, other.coeffs))

    def __mul__(self, other):
        self._check(other)
        R = self._ring()
        return self._wrap(zmul(self.coeffs, other.coeffs) if R is None else R.mul(self.coeffs, other.coeffs))

    def __neg__(self):
        return self._wrap(tuple(self.domain.neg(v) for v in self.coeffs) if not isinstance(self.domain, QuotientField) else _pneg(QQ, self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs


def poly_arith(a: DomainPoly, b: DomainPoly | None, op: str):
    """add, sub, mul, divrem, gcd, content or primitive_part."""
    if op in ("content", "primitive_part"):
        if not (a.domain is ZZ):
            raise ValueError("content is defined for integer polynomials")
        if op == "content":
            return zcontent(a.coeffs)
        return DomainPoly(ZZ, zprimitive(a.coeffs))
    if b is None:
        raise ValueError(f"{op} needs two operands")
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divrem":
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if a.domain is ZZ:
            q = zdivexact(a.coeffs, b.coeffs)
            if q is None:
                raise ValueError("inexact division over Z")
            return DomainPoly(ZZ, q), DomainPoly(ZZ, ())
        if isinstance(a.domain, QuotientField):
            return DomainPoly(a.domain, a.domain.divmod(a.coeffs, b.coeffs)[0]), DomainPoly(a.domain, ())
        q, r = _pdivmod(a.domain, a.coeffs, b.coeffs)
        return DomainPoly(a.domain, q), DomainPoly(a.domain, r)
    if op == "gcd":
        if a.domain is ZZ:
            # gcd in Z[x]: content gcd times the primitive gcd over Q
            c = math.gcd(zcontent(a.coeffs), zcontent(b.coeffs))
            g = _pgcdex(QQ, tuple(map(Fraction, a.coeffs)), tuple(map(Fraction, b.coeffs)))[0]
            if not g:
                return DomainPoly(ZZ, ())
            den = math.lcm(*(v.denominator for v in g))
            return DomainPoly(ZZ, zscale(zprimitive(tuple(int(v * den) for v in g)), c))
        if isinstance(a.domain, QuotientField):
            one = () if (a.is_zero() and b.is_zero()) else (Fraction(1),)
            return DomainPoly(a.domain, one)
        return DomainPoly(a.domain, _pgcdex(a.domain, a.coeffs, b.coeffs)[0])
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# matrices, Hermite forms and kernels

@dataclass(frozen=True)
class DomainMatrix:
    """n x s matrix stored column by column over a ring from this module."""

    domain: Any
    nrows: int
    cols: tuple

    @staticmethod
    def from_columns(domain, nrows: int, cols: Sequence[Sequence]) -> "DomainMatrix":
        conv = tuple(tuple(domain.convert(v) for v in c) for c in cols)
        for c in conv:
            if len(c) != nrows:
                raise ValueError("ragged matrix")
        return DomainMatrix(domain, nrows, conv)

    @staticmethod
    def from_rows(domain, rows: Sequence[Sequence]) -> "DomainMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        s = len(rows[0]) if rows else 0
        if any(len(r) != s for r in rows):
            raise ValueError("ragged matrix")
        return DomainMatrix.from_columns(domain, n, [[rows[i][j] for i in range(n)] for j in range(s)])

    @property
    def ncols(self) -> int:
        return len(self.cols)

    def rows(self) -> list[list]:
        return [[c[i] for c in self.cols] for i in range(self.nrows)]

    def apply(self, v: Sequence) -> tuple:
        """The product A.v."""
        R = self.domain
        out = [R.zero] * self.nrows
        for c, a in zip(self.cols, v):
            if R.is_zero(a):
                continue
            for i in range(self.nrows):
                out[i] = R.add(out[i], R.mul(c[i], a))
        return tuple(out)


def _axpy(R, y, a, x):
    """y - a*x on columns."""
    return [R.sub(u, R.mul(a, v)) for u, v in zip(y, x)]


def _echelon(A: DomainMatrix):
    """Column reduction; returns (H columns, U columns, pivot rows or None)."""
    R = A.domain
    s = A.ncols
    cols = [list(c) for c in A.cols]
    U = [[R.one if i == j else R.zero for i in range(s)] for j in range(s)]
    active = list(range(s))
    pivot_of: dict[int, int] = {}
    for r in range(A.nrows - 1, -1, -1):
        nz = [j for j in active if not R.is_zero(cols[j][r])]
        if not nz:
            continue
        while len(nz) > 1:
            nz.sort(key=lambda j: (R.size(cols[j][r]), j))
            p = nz[0]
            for j in nz[1:]:
                q, _ = R.divmod(cols[j][r], cols[p][r])
                cols[j] = _axpy(R, cols[j], q, cols[p])
                U[j] = _axpy(R, U[j], q, U[p])
            nz = [j for j in nz if not R.is_zero(cols[j][r])]
        p = nz[0]
        u = R.unit_normal(cols[p][r])
        cols[p] = [R.mul(u, v) for v in cols[p]]
        U[p] = [R.mul(u, v) for v in U[p]]
        active.remove(p)
        pivot_of[p] = r
    pivots = sorted(pivot_of, key=lambda j: pivot_of[j])
    # reduce the pivot-row entries of later pivot columns
    for idx, j in enumerate(pivots):
        for k in reversed(pivots[:idx]):
            rk = pivot_of[k]
            q, _ = R.divmod(cols[j][rk], cols[k][rk])
            if not R.is_zero(q):
                cols[j] = _axpy(R, cols[j], q, cols[k])
                U[j] = _axpy(R, U[j], q, U[k])
    order = sorted(active) + pivots
    return [cols[j] for j in order], [U[j] for j in order], [pivot_of.get(j) for j in order]


def hnf(A: DomainMatrix) -> tuple[DomainMatrix, DomainMatrix]:
    """Column Hermite normal form H = A.U with U invertible.

    Pivots sit at the last nonzero row of each column and are normalized
    (positive over Z, monic over K[x]); zero columns come first, pivot
    columns follow in increasing pivot row; each pivot-row entry of a later
    column is reduced modulo the pivot.
    """
    R = A.domain
    if not (R is ZZ or isinstance(R, PolyRing)):
        raise ValueError(f"hnf needs Z, Q[x] or Z_p[x], got {R!r}")
    H, U, _ = _echelon(A)
    return (DomainMatrix(R, A.nrows, tuple(map(tuple, H))),
            DomainMatrix(R, A.ncols, tuple(map(tuple, U))))


def kernel(A: DomainMatrix) -> list[tuple]:
    """Basis of {X : A X = 0} over Z, a field, or K[x]."""
    R = A.domain
    if not (R is ZZ or R.is_field or isinstance(R, PolyRing)):
        raise ValueError(f"kernel is not available over {R!r}")
    H, U, piv = _echelon(A)
    return [tuple(U[j]) for j in range(len(H)) if piv[j] is None]


def hnf_solve(H: DomainMatrix, b: Sequence) -> tuple | None:
    """Solve H.y = b for a matrix in the form produced by ``hnf``."""
    R = H.domain
    rem = [R.convert(v) for v in b]
    y = [R.zero] * H.ncols
    pivot_cols = []
    for j, c in enumerate(H.cols):
        nz = [i for i in range(H.nrows) if not R.is_zero(c[i])]
        if nz:
            pivot_cols.append((nz[-1], j))
    for r, j in sorted(pivot_cols, reverse=True):
        c = H.cols[j]
        if any(not R.is_zero(rem[i]) for i in range(r + 1, H.nrows)):
            return None
        q, rr = R.divmod(rem[r], c[r])
        if not R.is_zero(rr):
            return None
        y[j] = q
        rem = _axpy(R, rem, q, c)
    if any(not R.is_zero(v) for v in rem):
        return None
    return tuple(y)


# ---------------------------------------------------------------------------
# factorization (delegated to sympy)

def factor_over_Q(f: ZPoly | DomainPoly, degree_cap: int = 64) -> tuple[int, list[tuple[ZPoly, int]]]:
    """content and irreducible primitive factors with multiplicities."""
    import sympy

    c = f.coeffs if isinstance(f, DomainPoly) else ztrim(f)
    if not c:
        raise ValueError("cannot factor the zero polynomial")
    if len(c) - 1 > degree_cap:
        raise ValueError(f"degree {len(c) - 1} exceeds the factorization cap {degree_cap}")
    x = sympy.Symbol("x")
    cont, facs = sympy.Poly(list(reversed(c)), x, domain="ZZ").factor_list()
    cont = int(cont)
    out = []
    for g, m in facs:
        gc = ztrim(int(v) for v in reversed(g.all_coeffs()))
        if gc[-1] < 0:
            gc = zneg(gc)
            if m % 2:
                cont = -cont
        out.append((gc, int(m)))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return cont, out


def prime_factors(n: int) -> list[tuple[int, int]]:
    import sympy

    if n < 1:
        raise ValueError("prime_factors needs a positive integer")
    return sorted((int(p), int(m)) for p, m in sympy.factorint(n).items())
