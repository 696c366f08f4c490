"""Toric difference ideals: implicitization, parametrization and order bounds."""

from __future__ import annotations

import math
import warnings
from typing import Sequence

from .coeffgroup import ONE
from .exactring import ZPoly, ztrim
from .lattice import GhnfBasis, Vector, groebner, is_zero, kernel_syzygy, orth_complement
from .saturation import zxfactor
from .sigma_ideal import IdealPresentation, make_binomial

NEG_INF = -math.inf


def _check_matrix(A: Sequence[Vector], m: int | None) -> tuple[list[Vector], int]:
    """A is given by its columns, the exponent vectors of the monomials."""
    cols = [tuple(ztrim(a) for a in c) for c in A]
    if m is None:
        if not cols:
            raise ValueError("empty defining matrix needs an explicit row count")
        m = len(cols[0])
    if any(len(c) != m for c in cols):
        raise ValueError("columns of the defining matrix differ in length")
    for i in range(m):
        if all(not c[i] for c in cols):
            raise ValueError(f"defining matrix has a zero row ({i})")
    if any(is_zero(c) for c in cols):
        warnings.warn("defining matrix has a zero column; its variable is constant 1", stacklevel=3)
    return cols, m


def implicitize(A: Sequence[Vector], m: int | None = None, family: int = 1) -> IdealPresentation:
    """Toric ideal of the monomial map with exponent vectors A: support ker(A), character 1."""
    cols, m = _check_matrix(A, m)
    gens = kernel_syzygy(cols, m)
    return IdealPresentation(len(cols), tuple(make_binomial(u, ONE) for u in gens), family)


def is_toric_lattice(L: GhnfBasis | Sequence[Vector], n: int | None = None) -> bool:
    if not isinstance(L, GhnfBasis):
        L = groebner(list(L), n)
    return not zxfactor(L)


def parametrize(L: GhnfBasis | Sequence[Vector], n: int | None = None,
                require_toric: bool = True) -> list[Vector]:
    """Defining matrix (as columns) whose toric ideal has support lattice L."""
    if not isinstance(L, GhnfBasis):
        L = groebner(list(L), n)
    if require_toric and zxfactor(L):
        raise ValueError("lattice is not Z[x]-saturated")
    rows = orth_complement(L)
    return [tuple(r[i] for r in rows) for i in range(L.n)]


def _deg(a: ZPoly) -> float:
    return len(a) - 1 if a else NEG_INF


def _lowdeg(a: ZPoly) -> int:
    return next((i for i, c in enumerate(a) if c), 0)


def order_bound(A: Sequence[Vector], m: int | None = None) -> int:
    """Sum over rows of (max degree - min low degree)."""
    cols, m = _check_matrix(A, m)
    total = 0
    for i in range(m):
        row = [c[i] for c in cols]
        total += max(_deg(a) for a in row) - min(_lowdeg(a) for a in row)
    return int(total)


def jacobi_number(M: Sequence[Sequence[float]]) -> float:
    """Maximal diagonal sum over all permutations; -inf when none is finite."""
    m = len(M)
    if any(len(r) != m for r in M):
        raise ValueError("Jacobi number needs a square matrix")
    # best[mask]: max sum over rows 0..|mask|-1 assigned to the columns in mask
    best = {0: 0}
    for i in range(m):
        nxt: dict[int, float] = {}
        for mask, v in best.items():
            for j in range(m):
                if not mask >> j & 1:
                    key = mask | 1 << j
                    nxt[key] = max(nxt.get(key, NEG_INF), v + M[i][j])
        best = nxt
    return best[(1 << m) - 1]
