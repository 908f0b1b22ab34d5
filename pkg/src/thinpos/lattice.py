"""Exact integer matrix routines: Smith normal form, cokernels, determinants, signatures.

Matrices are plain lists (or tuples) of integer rows. A matrix with no rows
carries its column count separately where it matters (``ncols`` arguments).
All arithmetic is on Python integers, so nothing wraps around.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import _kernels

Matrix = list[list[int]]


class SmithForm(NamedTuple):
    u: Matrix
    d: Matrix
    v: Matrix


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^free_rank + Z/d1 + ... + Z/dk``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        t = tuple(int(x) for x in self.torsion)
        if any(x < 2 for x in t):
            raise ValueError(f"torsion divisors must be >= 2, got {t}")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion divisors must form a divisibility chain, got {t}")
        object.__setattr__(self, "torsion", t)

    @property
    def is_free(self) -> bool:
        return not self.torsion

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def shape(a: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[int, int]:
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not rectangular")
    if ncols is not None and m and n != ncols:
        raise ValueError(f"expected {ncols} columns, got {n}")
    return m, n


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    m, n = shape(a, ncols)
    return [[a[i][j] for i in range(m)] for j in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*b)) if b else []
    if a and len(a[0]) != len(b):
        raise ValueError("inner dimensions differ")
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def smith_normal_form(a: Sequence[Sequence[int]], ncols: int | None = None) -> SmithForm:
    """Return ``(U, D, V)`` with ``U @ A @ V == D``.

    U and V are unimodular; D is diagonal with nonnegative entries
    d1 | d2 | ... (zeros last).
    """
    m, n = shape(a, ncols)
    rows = [[int(x) for x in row] for row in a]
    u, d, v = _kernels.smith_decomp(rows, m, n)
    if not m:
        d = []
    return SmithForm(u, d, v)


def invariant_factors(a: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Diagonal of the Smith form, length ``min(m, n)``."""
    d = smith_normal_form(a, ncols).d
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def rank(a: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    return sum(1 for x in invariant_factors(a, ncols) if x)


def cokernel(a: Sequence[Sequence[int]], ncols: int | None = None) -> AbelianGroup:
    """Cokernel of the map ``Z^n -> Z^m`` given by the ``m`` x ``n`` matrix ``a``."""
    m, _ = shape(a, ncols)
    diag = [x for x in invariant_factors(a, ncols) if x]
    return AbelianGroup(m - len(diag), tuple(x for x in diag if x > 1))


def kernel_rank(a: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    _, n = shape(a, ncols)
    return n - rank(a, ncols)


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n, n2 = shape(a)
    if n != n2:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_symmetric(a: Sequence[Sequence[int]]) -> bool:
    n = len(a)
    return all(len(row) == n for row in a) and all(
        a[i][j] == a[j][i] for i in range(n) for j in range(i)
    )


def signature(a: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric integer matrix by congruence over the rationals."""
    if not is_symmetric(a):
        raise ValueError("signature needs a symmetric matrix")
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    sig = 0
    for k in range(n):
        if m[k][k] == 0:
            j = next((j for j in range(k + 1, n) if m[j][j] != 0), None)
            if j is not None:
                _swap_sym(m, k, j)
            else:
                j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if j is None:
                    continue
                # e_k <- e_k + e_j makes the pivot 2 * m[k][j]
                _add_sym(m, k, j, Fraction(1))
        p = m[k][k]
        sig += 1 if p > 0 else -1
        for i in range(k + 1, n):
            if m[i][k]:
                _add_sym(m, i, k, -m[i][k] / p)
    return sig


def _swap_sym(m, i, j):
    m[i], m[j] = m[j], m[i]
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_sym(m, i, j, c):
    # basis change e_i <- e_i + c * e_j applied on both sides
    n = len(m)
    for t in range(n):
        m[i][t] += c * m[j][t]
    for t in range(n):
        m[t][i] += c * m[t][j]
