"""Independent cross-checks for the Gröbner kernel.

These use plain linear algebra over the base field and never call the
Buchberger code. They are verification utilities, not decision procedures.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .polyring import Poly
from .randomgen import monomials_up_to


def default_degree_bound(gens: Sequence[Poly], f: Poly | None = None) -> int:
    degs = [g.total_degree for g in gens]
    if f is not None:
        degs.append(f.total_degree)
    return 2 * max(degs) + 2


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows or not rows[0]:
        return 0
    A = np.array(rows, dtype=np.int64) % p
    nrows, ncols = A.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(A[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), -1, p)
        A[rank] = (A[rank] * inv) % p
        below = A[rank + 1:, col].copy()
        nzb = np.nonzero(below)[0]
        if nzb.size:
            idx = rank + 1 + nzb
            A[idx] = (A[idx] - np.outer(below[nzb], A[rank])) % p
        rank += 1
    return rank


def _rank_exact(rows: list[list[Fraction]]) -> int:
    A = [list(r) for r in rows]
    if not A:
        return 0
    nrows, ncols = len(A), len(A[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if A[i][col]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        pr = A[rank]
        inv = 1 / Fraction(pr[col])
        pr = [v * inv for v in pr]
        A[rank] = pr
        for i in range(rank + 1, nrows):
            c = A[i][col]
            if c:
                A[i] = [a - c * b for a, b in zip(A[i], pr)]
        rank += 1
        if rank == nrows:
            break
    return rank


def membership_oracle(f: Poly, gens: Sequence[Poly], degree_bound: int | None = None) -> bool:
    """Whether ``f = sum q_i g_i`` with ``deg q_i <= degree_bound``.

    Solvability is decided by comparing ranks of the coefficient matrix with
    and without ``f`` appended. A ``False`` answer only means no certificate
    exists below the bound.
    """
    gens = [g for g in gens if g]
    if not f:
        return True
    if not gens:
        return False
    ring = f.ring
    if degree_bound is None:
        degree_bound = default_degree_bound(gens, f)
    multipliers = monomials_up_to(ring.nvars, degree_bound)
    columns: list[dict] = []
    for g in gens:
        for m in multipliers:
            columns.append({tuple(a + b for a, b in zip(gm, m)): c for gm, c in g.terms.items()})
    support = sorted({mono for col in columns for mono in col} | set(f.terms))
    if not set(f.terms) <= {mono for col in columns for mono in col}:
        return False
    pos = {mono: i for i, mono in enumerate(support)}
    # rows are the generator products; f lies in their span iff appending it keeps the rank
    vecs = []
    for col in columns:
        v = [0] * len(support)
        for mono, c in col.items():
            v[pos[mono]] = c
        vecs.append(v)
    fv = [0] * len(support)
    for mono, c in f.terms.items():
        fv[pos[mono]] = c
    p = ring.field.modulus
    if p is not None:
        r1 = _rank_mod_p(vecs, p)
        r2 = _rank_mod_p(vecs + [fv], p)
    else:
        r1 = _rank_exact(vecs)
        r2 = _rank_exact(vecs + [fv])
    return r1 == r2
