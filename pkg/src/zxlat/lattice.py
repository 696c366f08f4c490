"""Z[x] lattices: monomial order, reduction, Groebner bases and kernels.

A vector of Z[x]^n is a tuple of ``ZPoly`` entries.  Positions are
0-based in code; position ``n-1`` is the most significant one, so the
leading term of a vector sits at its last nonzero entry.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .exactring import (
    GF, QQ, ZZ, DomainMatrix, PolyRing, ZPoly, hnf, hnf_solve, kernel, qgcdex, zadd, zcontent, zdeg, zdivexact, zprimitive,
    zmul, zneg, zparse, zscale, zshift, zsub, ztrim,
)

Vector = tuple[ZPoly, ...]
UNKNOWN = "unknown"


# ---------------------------------------------------------------------------
# vectors

def as_poly(p) -> ZPoly:
    if isinstance(p, str):
        return zparse(p)
    if isinstance(p, int):
        return ztrim((p,))
    return ztrim(int(v) for v in p)


def vec(*entries) -> Vector:
    """Build a vector from ints, coefficient lists or strings like "x-1"."""
    return tuple(as_poly(e) for e in entries)


def zero_vector(n: int) -> Vector:
    return ((),) * n


def is_zero(f: Vector) -> bool:
    return not any(f)


def vadd(f: Vector, g: Vector) -> Vector:
    return tuple(zadd(a, b) for a, b in zip(f, g))


def vsub(f: Vector, g: Vector) -> Vector:
    return tuple(zsub(a, b) for a, b in zip(f, g))


def vneg(f: Vector) -> Vector:
    return tuple(zneg(a) for a in f)


def vscale(f: Vector, p: ZPoly) -> Vector:
    return tuple(zmul(a, p) for a in f)


def vterm(f: Vector, c: int, k: int) -> Vector:
    """c * x^k * f."""
    return tuple(zshift(zscale(a, c), k) for a in f)


def vcombine(coeffs: Sequence[ZPoly], vecs: Sequence[Vector], n: int) -> Vector:
    out = zero_vector(n)
    for c, v in zip(coeffs, vecs):
        if c:
            out = vadd(out, vscale(v, c))
    return out


def unit(n: int, i: int) -> Vector:
    return tuple((1,) if j == i else () for j in range(n))


# ---------------------------------------------------------------------------
# monomial order

class LatticeMonomial(NamedTuple):
    """coeff * x^exp * e_pos."""

    coeff: int
    exp: int
    pos: int

    def key(self) -> tuple[int, int, int]:
        return (self.pos, self.exp, abs(self.coeff))

    def divides(self, other: "LatticeMonomial") -> bool:
        """True when other is a Z[x]-multiple of self."""
        return self.pos == other.pos and self.exp <= other.exp and other.coeff % self.coeff == 0


def leading_term(f: Vector) -> LatticeMonomial:
    for i in range(len(f) - 1, -1, -1):
        if f[i]:
            return LatticeMonomial(f[i][-1], zdeg(f[i]), i)
    raise ValueError("the zero vector has no leading term")


def is_normal(f: Vector) -> bool:
    return not is_zero(f) and leading_term(f).coeff > 0


def normalized(f: Vector) -> Vector:
    """f or -f, whichever has a positive leading coefficient."""
    if not is_zero(f) and leading_term(f).coeff < 0:
        return vneg(f)
    return f


def compare(f: Vector, g: Vector) -> int:
    """-1, 0, 1 comparing by the leading terms of f and g."""
    if is_zero(f) or is_zero(g):
        return (not is_zero(f)) - (not is_zero(g))
    a, b = leading_term(f).key(), leading_term(g).key()
    return (a > b) - (a < b)


def s_vector(f: Vector, g: Vector) -> Vector:
    lf, lg = leading_term(f), leading_term(g)
    if lf.pos != lg.pos:
        return zero_vector(len(f))
    m = max(lf.exp, lg.exp)
    L = math.lcm(lf.coeff, lg.coeff)
    return vsub(vterm(f, L // lf.coeff, m - lf.exp), vterm(g, L // lg.coeff, m - lg.exp))


# ---------------------------------------------------------------------------
# reduction

def reduce(f: Vector, G: Sequence[Vector], canonical: bool = False,
           skip_leading: bool = False) -> tuple[Vector, list[ZPoly]]:
    """Reduce f by G, returning (remainder, quotients) with f = rem + sum q_i G_i.

    Exact mode removes a monomial a x^k e_i only when some LT(g) = b x^d e_i
    has d <= k and b | a.  Canonical mode (for a Groebner basis) brings every
    coefficient into [0, b) using the applicable leading term of largest d.
    """
    n = len(f)
    lts = [leading_term(g) for g in G]
    q: list[list[int]] = [[] for _ in G]
    rows = [list(a) for a in f]
    top = leading_term(f) if skip_leading and not is_zero(f) else None
    by_pos: dict[int, list[int]] = {}
    for j, t in enumerate(lts):
        by_pos.setdefault(t.pos, []).append(j)
    for i in range(n - 1, -1, -1):
        cands = sorted(by_pos.get(i, []), key=lambda j: (-lts[j].exp, lts[j].coeff))
        if not cands:
            continue
        k = len(rows[i]) - 1
        while k >= 0:
            a = rows[i][k] if k < len(rows[i]) else 0
            if a == 0 or (top is not None and i == top.pos and k == top.exp):
                k -= 1
                continue
            pick = None
            mult = 0
            for j in cands:
                t = lts[j]
                if t.exp > k:
                    continue
                if canonical:
                    b = abs(t.coeff)
                    pick, mult = j, (a // b) * (1 if t.coeff > 0 else -1)
                    break
                if a % t.coeff == 0:
                    pick, mult = j, a // t.coeff
                    break
            if pick is not None and mult:
                t = lts[pick]
                shift = k - t.exp
                g = G[pick]
                for r in range(i + 1):
                    if g[r]:
                        row = rows[r]
                        need = len(g[r]) + shift
                        if len(row) < need:
                            row.extend([0] * (need - len(row)))
                        for e, v in enumerate(g[r]):
                            row[e + shift] -= mult * v
                qj = q[pick]
                if len(qj) <= shift:
                    qj.extend([0] * (shift + 1 - len(qj)))
                qj[shift] += mult
            k -= 1
    return tuple(ztrim(r) for r in rows), [ztrim(x) for x in q]


def grem(f: Vector, G: Sequence[Vector]) -> Vector:
    return reduce(f, G)[0]


# ---------------------------------------------------------------------------
# Groebner bases / GHNF

@dataclass(frozen=True)
class GhnfBasis:
    """Columns of a generalized Hermite normal form in increasing order."""

    n: int
    columns: tuple[Vector, ...]
    log: tuple[tuple[ZPoly, ...], ...] | None = field(default=None, compare=False, repr=False)
    checked: bool = field(default=False, compare=False, repr=False)

    @cached_property
    def leads(self) -> tuple[LatticeMonomial, ...]:
        return tuple(leading_term(c) for c in self.columns)

    @cached_property
    def blocks(self) -> dict[int, list[int]]:
        """pivot position -> column indices, in increasing degree."""
        out: dict[int, list[int]] = {}
        for j, t in enumerate(self.leads):
            out.setdefault(t.pos, []).append(j)
        return out

    @property
    def rank(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return len(self.columns)

    def contains(self, f: Vector) -> bool:
        return is_zero(reduce(f, self.columns)[0])

    def nf(self, f: Vector) -> Vector:
        """Canonical representative of f modulo the lattice."""
        return reduce(f, self.columns, canonical=True)[0]

    def rows(self) -> list[list[ZPoly]]:
        return [[c[i] for c in self.columns] for i in range(self.n)]


def _check_dims(vectors: Sequence[Vector], n: int | None) -> int:
    if n is None:
        if not vectors:
            raise ValueError("ambient dimension unknown for an empty generator list")
        n = len(vectors[0])
    for v in vectors:
        if len(v) != n:
            raise ValueError("vectors of different lengths")
    return n


def _ucombine(terms: Iterable[tuple[int, int, tuple[ZPoly, ...]]], s: int) -> tuple[ZPoly, ...]:
    out = [()] * s
    for c, k, t in terms:
        for i in range(s):
            if t[i]:
                out[i] = zadd(out[i], zshift(zscale(t[i], c), k))
    return tuple(out)


def _gcd_combination(f: Vector, g: Vector, pos: int) -> Vector | None:
    """Integer combination a f + b g whose pos entry is a multiple of the Q[x]-gcd.

    Lets the completion jump straight to the lowest degree instead of
    descending through a remainder sequence with exploding coefficients.
    """
    _, a, b = qgcdex(f[pos], g[pos])
    den = math.lcm(*[c.denominator for c in a + b] or [1])
    a = ztrim(int(c * den) for c in a)
    b = ztrim(int(c * den) for c in b)
    v = vadd(vscale(f, a), vscale(g, b))
    return None if is_zero(v) else v


def _gb_core(gens: Sequence[Vector]) -> list[Vector]:
    """Reduced strong Groebner basis, sorted by increasing leading term."""
    live: dict[int, tuple[Vector, LatticeMonomial]] = {}
    pairs: set[tuple[int, int]] = set()
    pending = [g for g in gens if not is_zero(g)]
    counter = 0

    def insert(v: Vector) -> None:
        nonlocal counter
        ids = list(live)
        r, _ = reduce(v, [live[i][0] for i in ids], canonical=True)
        if is_zero(r):
            return
        r = normalized(r)
        lt = leading_term(r)
        # elements whose leading term the new one divides go back for reduction
        for i in ids:
            if lt.divides(live[i][1]):
                pending.append(live.pop(i)[0])
                pairs.difference_update({pr for pr in pairs if i in pr})
        idx = counter
        counter += 1
        same = [i for i, (_, u) in live.items() if u.pos == lt.pos]
        live[idx] = (r, lt)
        for i in same:
            pairs.add((i, idx))
        if same:
            low = min(same, key=lambda i: live[i][1].key())
            shortcut = _gcd_combination(r, live[low][0], lt.pos)
            if shortcut is not None and zdeg(shortcut[lt.pos]) < live[low][1].exp:
                pending.append(shortcut)

    def pair_key(pr):
        lf, lg = live[pr[0]][1], live[pr[1]][1]
        return (lf.pos, max(lf.exp, lg.exp), math.lcm(lf.coeff, lg.coeff), pr)

    while pending or pairs:
        if pending:
            insert(pending.pop())
            continue
        pr = min(pairs, key=pair_key)
        pairs.discard(pr)
        (f, lf), (g, lg) = live[pr[0]], live[pr[1]]
        pending.append(s_vector(f, g))
        if lf.coeff % lg.coeff and lg.coeff % lf.coeff:
            m = max(lf.exp, lg.exp)
            _, u, w = _xgcd(lf.coeff, lg.coeff)
            pending.append(vadd(vterm(f, u, m - lf.exp), vterm(g, w, m - lg.exp)))

    # minimize
    basis = [v for v, _ in live.values()]
    lts = [t for _, t in live.values()]
    keep = [i for i, t in enumerate(lts)
            if not any(j != i and u.divides(t) and (u.key() != t.key() or j < i)
                       for j, u in enumerate(lts))]
    keep.sort(key=lambda i: lts[i].key())
    cols = [basis[i] for i in keep]
    # tail reduction to the canonical remainders
    for idx in range(len(cols)):
        others = cols[:idx] + cols[idx + 1:]
        cols[idx] = reduce(cols[idx], others, canonical=True, skip_leading=True)[0]
    return cols


def _augmented(gens: Sequence[Vector], n: int) -> tuple[list[Vector], list[tuple[ZPoly, ...]],
                                                         list[tuple[ZPoly, ...]]]:
    """Groebner basis of the vectors (e_i, g_i): GHNF columns, their logs, kernel basis.

    With the g-part in the higher positions the order eliminates it, so the
    elements with zero g-part form a Groebner basis of the syzygies, and the
    logs of the other elements come out reduced modulo those syzygies.
    Seeding the syzygies up front keeps the log coefficients from growing.
    """
    s = len(gens)
    aug = [tuple((1,) if j == i else () for j in range(s)) + tuple(g) for i, g in enumerate(gens)]
    aug += [tuple(k) + zero_vector(n) for k in kernel_generators(gens, n)]
    G = _gb_core(aug)
    cols, logs, kern = [], [], []
    for v in G:
        if is_zero(v[s:]):
            kern.append(v[:s])
        else:
            cols.append(v[s:])
            logs.append(v[:s])
    return cols, logs, kern


def groebner(gens: Sequence[Vector], n: int | None = None, track: bool = True) -> GhnfBasis:
    """Reduced Groebner basis (a GHNF), with its transform log over ``gens`` when tracked."""
    n = _check_dims(gens, n)
    if not track:
        return GhnfBasis(n, tuple(_gb_core(gens)), None, True)
    cols, logs, _ = _augmented(gens, n)
    return GhnfBasis(n, tuple(cols), tuple(logs), True)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def lattice(gens: Sequence[Vector], n: int | None = None) -> GhnfBasis:
    """The GHNF of the lattice generated by ``gens``."""
    return groebner(gens, n)


def is_ghnf(M: Sequence[Vector], n: int | None = None) -> tuple[bool, str]:
    """Check the four GHNF conditions; returns (ok, first violation)."""
    cols = list(M)
    if not cols:
        return True, ""
    _check_dims(cols, n)
    if any(is_zero(c) for c in cols):
        return False, "zero column"
    lts = [leading_term(c) for c in cols]
    for a, b in zip(lts, lts[1:]):
        if b.pos < a.pos:
            return False, "columns not ordered by pivot row"
    blocks: dict[int, list[int]] = {}
    for j, t in enumerate(lts):
        blocks.setdefault(t.pos, []).append(j)
    for idx in blocks.values():
        for a, b in zip(idx, idx[1:]):
            if not lts[a].exp < lts[b].exp:
                return False, "condition 1: pivot degrees not strictly increasing"
    for idx in blocks.values():
        for a, b in zip(idx, idx[1:]):
            if lts[a].coeff % lts[b].coeff:
                return False, "condition 2: leading coefficients do not form a divisibility chain"
    for idx in blocks.values():
        for a, b in itertools.combinations(idx, 2):
            if not is_zero(grem(s_vector(cols[a], cols[b]), cols)):
                return False, "condition 3: an S-vector does not reduce to zero"
    for j, c in enumerate(cols):
        for k, t in enumerate(lts):
            if k == j:
                continue
            for m in _monomials(c):
                if t.divides(m):
                    return False, "condition 4: a column is not G-reduced"
    return True, ""


def _monomials(f: Vector) -> Iterable[LatticeMonomial]:
    for i, a in enumerate(f):
        for k, c in enumerate(a):
            if c:
                yield LatticeMonomial(c, k, i)


def rank(B: GhnfBasis) -> int:
    return B.rank


def contains(B: GhnfBasis, f: Vector) -> bool:
    return B.contains(f)


def same_lattice(a: Sequence[Vector], b: Sequence[Vector], n: int | None = None) -> bool:
    if n is None:
        n = len((list(a) or list(b))[0])
    return groebner(list(a), n, track=False).columns == groebner(list(b), n, track=False).columns


# ---------------------------------------------------------------------------
# kernels

def _ghnf_syzygies(cols: Sequence[Vector]) -> list[tuple[ZPoly, ...]]:
    """Consecutive-column syzygies of a GHNF; a free basis of its kernel."""
    s = len(cols)
    lts = [leading_term(c) for c in cols]
    blocks: dict[int, list[int]] = {}
    for j, t in enumerate(lts):
        blocks.setdefault(t.pos, []).append(j)
    out = []
    for pos in sorted(blocks):
        idx = blocks[pos]
        for a, b in zip(idx, idx[1:]):
            shift = lts[b].exp - lts[a].exp
            ratio = lts[a].coeff // lts[b].coeff
            sv = vsub(vterm(cols[a], 1, shift), vterm(cols[b], ratio, 0))
            r, q = reduce(sv, cols)
            if not is_zero(r):
                raise ValueError("input is not a generalized Hermite normal form")
            syz = [zneg(x) for x in q] + [()] * (s - len(q))
            syz[a] = zadd(syz[a], zshift((1,), shift))
            syz[b] = zadd(syz[b], (-ratio,))
            out.append(tuple(syz))
    return out


def kernel_generators(M: Sequence[Vector], n: int | None = None) -> list[tuple[ZPoly, ...]]:
    """A Groebner basis of ker(M) (columns of M are the f_i).

    ker(M) is Z[x]-saturated, so it is the Z[x]-saturation of any Q[x]-kernel
    basis with denominators cleared.
    """
    from .saturation import sat_zx

    cols = list(M)
    s = len(cols)
    if not cols:
        return []
    n = _check_dims(cols, n)
    if is_ghnf(cols)[0]:
        return _ghnf_syzygies(cols)
    R = PolyRing(QQ)
    A = DomainMatrix.from_columns(R, n, [[R.convert(a) for a in c] for c in cols])
    vecs = []
    for u in kernel(A):
        den = math.lcm(*[c.denominator for a in u for c in a] or [1])
        vecs.append(tuple(ztrim(int(c * den) for c in a) for a in u))
    if not vecs:
        return []
    return list(sat_zx(vecs, s).columns)


def _zdet(rows: list[list[ZPoly]]) -> ZPoly:
    """Determinant over Z[x] by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    k, sign, prev = len(m), 1, (1,)
    for i in range(k):
        piv = next((r for r in range(i, k) if m[r][i]), None)
        if piv is None:
            return ()
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                num = zsub(zmul(m[i][i], m[r][c]), zmul(m[r][i], m[i][c]))
                m[r][c] = zdivexact(num, prev) if num else ()
        prev = m[i][i]
    return zscale(m[k - 1][k - 1], sign)


def _zgcd(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        c = a or b
        return zneg(c) if c and c[-1] < 0 else c
    g = qgcdex(a, b)[0]
    den = math.lcm(*(v.denominator for v in g))
    return zscale(zprimitive(tuple(int(v * den) for v in g)), math.gcd(zcontent(a), zcontent(b)))


def _minors(vectors: Sequence[tuple[ZPoly, ...]], s: int) -> list[ZPoly]:
    r = len(vectors)
    return [_zdet([[v[i] for v in vectors] for i in rows]) for rows in itertools.combinations(range(s), r)]


def _unit_ideal(entries: Iterable[ZPoly]) -> bool:
    gens = [(e,) for e in entries if e]
    return bool(gens) and groebner(gens, 1, track=False).columns == (((1,),),)


def _complete_basis(gens: list[tuple[ZPoly, ...]], s: int, r: int,
                    budget: int = 50) -> list[tuple[ZPoly, ...]] | None:
    """r free generators of the saturated lattice (gens), or None.

    The r x r minor vectors of elements of the lattice are all multiples of one
    primitive vector, and the multiplier lam(v_1..v_r) is the determinant in a
    free basis.  With r-2 base vectors fixed, lam(base, a, b) is an alternating
    form whose row space is free of rank 2; an element w of it with unit
    content ideal gives h with lam(base, h, -) unimodular, and a Bezout
    relation for w gives the last vector.
    """
    N = len(gens)
    first = next((d for t in itertools.combinations(gens, r) if any(d := _minors(t, s))), None)
    if first is None:
        return None
    c = functools.reduce(_zgcd, first)
    mu = [zdivexact(v, c) if v else () for v in first]
    k = next(i for i, v in enumerate(mu) if v)
    rows_k = list(itertools.combinations(range(s), r))[k]

    def lam(vs):
        d = _zdet([[v[i] for v in vs] for i in rows_k])
        return zdivexact(d, mu[k]) if d else ()

    rng = random.Random(0)
    randoms = ([vcombine([rng.choice(_MULTIPLIERS) for _ in gens], gens, s) for _ in range(r - 2)]
               for _ in range(budget))
    for base in itertools.chain(itertools.combinations(gens, r - 2), randoms):
        base = list(base)
        rows = [tuple(lam(base + [a, b]) if i != j else () for j, b in enumerate(gens))
                for i, a in enumerate(gens)]
        if all(is_zero(row) for row in rows):
            continue
        for perm in itertools.islice(itertools.permutations(range(N)), 24):
            B = groebner([tuple(row[p] for p in perm) for row in rows], N)
            for col, log in zip(B.columns, B.log):
                if not _unit_ideal(col):
                    continue
                w = [col[perm.index(j)] for j in range(N)]
                h = vcombine(log, gens, s)
                bez = groebner([(e,) for e in w], 1).log[0]
                last = vcombine(bez, gens, s)
                return sorted((normalized(v) for v in base + [h, last]), key=lambda v: leading_term(v).key())
    return None


_MULTIPLIERS = ((0,), (1,), (-1,), (2,), (-2,), (0, 1), (0, -1), (1, 1), (-1, 1), (1, -1))


def _free_gb(vectors: list[tuple[ZPoly, ...]], s: int, target: int) -> list[tuple[ZPoly, ...]]:
    """A free basis of the saturated lattice spanned by ``vectors``.

    The Groebner basis itself is used when it is free in the given or the
    reversed coordinate order; otherwise a basis is built from minors.
    """
    best = None
    for perm in dict.fromkeys([tuple(range(s)), tuple(reversed(range(s)))]):
        pv = [tuple(v[p] for p in perm) for v in vectors]
        B = groebner(pv, s, track=False)
        cols = [normalized(tuple(c[perm.index(i)] for i in range(s))) for c in B.columns]
        if best is None:
            best = cols
        if len(B.columns) == target:
            return cols
    gens = best or []
    if len(gens) <= target:
        return gens
    return _complete_basis(gens, s, target) or gens


def kernel_syzygy(M: Sequence[Vector], n: int | None = None) -> list[tuple[ZPoly, ...]]:
    """Free basis of ker(M) in Z[x]^s.

    For GHNF input the consecutive-column syzygies are returned as is.
    Otherwise the kernel is free but its Groebner basis need not be, so a
    basis is searched for in changed coordinates (see ``_free_gb``).
    """
    cols = list(M)
    s = len(cols)
    if s == 0:
        return []
    n = _check_dims(cols, n)
    if is_ghnf(cols)[0]:
        return _ghnf_syzygies(cols)
    gens = kernel_generators(cols, n)
    if not gens:
        return []
    return _free_gb(gens, s, len(groebner(gens, s, track=False).blocks))


def transpose(M: Sequence[Vector], n: int) -> list[Vector]:
    return [tuple(c[i] for c in M) for i in range(n)]


def orth_complement(B: GhnfBasis | Sequence[Vector], n: int | None = None) -> list[Vector]:
    """Free basis of {u : u . f = 0 for all f in L}."""
    if isinstance(B, GhnfBasis):
        cols, n = list(B.columns), B.n
    else:
        cols = list(B)
        n = _check_dims(cols, n)
    if not cols:
        return [unit(n, i) for i in range(n)]
    return kernel_syzygy(transpose(cols, n), len(cols))


def extension_prefix(B: GhnfBasis) -> list[Vector]:
    """The finite part C_- of the extension of a GHNF."""
    out = []
    for pos in sorted(B.blocks):
        idx = B.blocks[pos]
        for a, b in zip(idx, idx[1:]):
            gap = B.leads[b].exp - B.leads[a].exp
            for j in range(gap):
                out.append(vterm(B.columns[a], 1, j))
    return out


# ---------------------------------------------------------------------------
# brute-force membership

def member_oracle(gens: Sequence[Vector], f: Vector, degree_cap: int | None = None):
    """Decide f in (gens) by integer linear algebra; True, False or UNKNOWN.

    ``True`` comes from an explicit solution with deg q_i <= D for some
    D <= degree_cap.  ``False`` needs a certificate: f outside the Q[x]-span
    of gens, or f mod p outside the Z_p[x]-span of gens mod p for a small
    prime p.
    """
    n = len(f)
    gens = [g for g in gens if not is_zero(g)]
    if is_zero(f):
        return True
    if not gens:
        return False
    if degree_cap is None:
        degree_cap = max(len(a) for a in f) + sum(max(len(a) for a in g) for g in gens) + 8
    for R in [PolyRing(QQ)] + [PolyRing(GF(p)) for p in (2, 3, 5, 7)]:
        A = DomainMatrix.from_columns(R, n, [[R.convert(a) for a in g] for g in gens])
        H, _ = hnf(A)
        if hnf_solve(H, [R.convert(a) for a in f]) is None:
            return False
    gdeg = max(len(a) for g in gens for a in g) - 1
    fdeg = max(len(a) for a in f) - 1
    for D in range(degree_cap + 1):
        top = max(fdeg, D + gdeg)
        nrows = n * (top + 1)
        cols = []
        for g in gens:
            for j in range(D + 1):
                col = [0] * nrows
                for i, a in enumerate(g):
                    for e, c in enumerate(a):
                        col[i * (top + 1) + e + j] = c
                cols.append(col)
        rhs = [0] * nrows
        for i, a in enumerate(f):
            for e, c in enumerate(a):
                rhs[i * (top + 1) + e] = c
        H, _ = hnf(DomainMatrix.from_columns(ZZ, nrows, cols))
        if hnf_solve(H, rhs) is not None:
            return True
    return UNKNOWN
