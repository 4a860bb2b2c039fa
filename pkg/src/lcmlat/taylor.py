"""Independent Betti-number oracle via the Taylor complex.

Builds the full exterior-algebra complex on the generators, restricts to one
multidegree at a time (keeping only subsets whose lcm equals it, and only the
differential terms whose coefficient is a unit), and takes ranks of the tiny
dense matrices.  Nothing here touches the lattice or order-complex machinery;
only the field conventions are shared, so the two Betti routes fail in
uncorrelated ways.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import ResourceLimit
from .fields import FieldSpec
from .ideals import Monomial, MonomialIdeal

MAX_GENERATORS = 16


def _dense_rank_mod_p(mat: np.ndarray, p: int) -> int:
    a = np.mod(mat.astype(np.int64), p)
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if a[r, c]:
                pivot = r
                break
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = a[rank] * inv % p
        for r in range(rows):
            if r != rank and a[r, c]:
                a[r] = (a[r] - a[r, c] * a[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def _dense_rank_rational(mat: np.ndarray) -> int:
    rows = [[Fraction(int(v)) for v in row] for row in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    for c in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if rows[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][c]
        rows[rank] = [v / pv for v in rows[rank]]
        for r in range(nrows):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank(mat: np.ndarray, field: FieldSpec) -> int:
    if mat.size == 0:
        return 0
    if field.characteristic:
        return _dense_rank_mod_p(mat, field.characteristic)
    return _dense_rank_rational(mat)


def taylor_betti(ideal: MonomialIdeal, field: FieldSpec) -> dict:
    """Multigraded Betti numbers of S/I as {(i, monomial): rank}."""
    q = ideal.ngens
    if q > MAX_GENERATORS:
        raise ResourceLimit(f"Taylor oracle limited to {MAX_GENERATORS} generators")
    gens = ideal.gens
    nvars = ideal.nvars
    lcm_of = {(): (0,) * nvars}
    subsets_by_lcm = {}
    for size in range(q + 1):
        for sigma in combinations(range(q), size):
            if size:
                prev = lcm_of[sigma[:-1]]
                cur = tuple(map(max, prev, gens[sigma[-1]].exps))
                lcm_of[sigma] = cur
            subsets_by_lcm.setdefault(lcm_of[sigma], []).append(sigma)
    out = {}
    for exps, subsets in subsets_by_lcm.items():
        by_size = {}
        for sigma in subsets:
            by_size.setdefault(len(sigma), []).append(sigma)
        index = {
            sigma: k
            for size in by_size
            for k, sigma in enumerate(by_size[size])
        }
        ranks = {}
        for size, cols in by_size.items():
            targets = by_size.get(size - 1, [])
            mat = np.zeros((len(targets), len(cols)), dtype=np.int64)
            for j, sigma in enumerate(cols):
                for pos in range(size):
                    tau = sigma[:pos] + sigma[pos + 1 :]
                    if lcm_of[tau] == exps:
                        mat[index[tau], j] = 1 if pos % 2 == 0 else -1
            ranks[size] = _rank(mat, field)
        for size, cols in by_size.items():
            betti = len(cols) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            if betti:
                out[(size, Monomial(exps))] = betti
    return out
