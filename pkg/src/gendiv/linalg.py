"""Matrices of polynomials and fraction-free determinants."""

from __future__ import annotations

from typing import Callable, Sequence

from .groebner import exact_divide
from .polyring import Poly, PolyRing


def bareiss_det(rows: Sequence[Sequence[Poly]], ring: PolyRing) -> Poly:
    """Determinant over the polynomial ring ``ring`` by Bareiss elimination.

    Every intermediate division is exact in ``k[vars]``. The 0x0 determinant is 1.
    """
    n = len(rows)
    if n == 0:
        return ring.one
    M = [list(r) for r in rows]
    if any(len(r) != n for r in M):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = exact_divide(M[i][j] * pivot - M[i][k] * M[k][j], prev)
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


class BMatrix:
    """A matrix of polynomials over ``ring``; entries normalized by ``reduce``."""

    def __init__(
        self,
        ring: PolyRing,
        rows: Sequence[Sequence[Poly]],
        reduce: Callable[[Poly], Poly] | None = None,
    ) -> None:
        self.ring = ring
        self._reduce = reduce or (lambda p: p)
        self.rows: tuple[tuple[Poly, ...], ...] = tuple(
            tuple(self._reduce(ring.convert(e)) for e in r) for r in rows
        )
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, idx: tuple[int, int]) -> Poly:
        i, j = idx
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[Poly, ...]]:
        return [self.column(j) for j in range(self.shape[1])]

    @classmethod
    def from_columns(cls, ring, cols, reduce=None) -> "BMatrix":
        n = len(cols[0]) if cols else 0
        return cls(ring, [[c[i] for c in cols] for i in range(n)], reduce)

    def hstack(self, *others: "BMatrix") -> "BMatrix":
        rows = [list(r) for r in self.rows]
        for o in others:
            if o.shape[0] != self.shape[0]:
                raise ValueError("row counts differ")
            for r, extra in zip(rows, o.rows):
                r.extend(extra)
        return BMatrix(self.ring, rows, self._reduce)

    def __matmul__(self, other: "BMatrix") -> "BMatrix":
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ValueError("shape mismatch")
        zero = self.ring.zero
        rows = []
        for i in range(n):
            row = []
            for j in range(p):
                acc = zero
                for k in range(m):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(row)
        return BMatrix(self.ring, rows, self._reduce)

    def det(self) -> Poly:
        return self._reduce(bareiss_det(self.rows, self.ring))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in r) for r in self.rows)
        return f"BMatrix[{body}]"

    def tolist(self) -> list[list[str]]:
        return [[str(e) for e in r] for r in self.rows]
