"""Dense square linear systems over F_r."""

from __future__ import annotations

from dataclasses import dataclass

from .field import PrimeField


class SingularMatrix(ArithmeticError):
    def __init__(self, rank: int, size: int):
        super().__init__(f"rank {rank} < {size}")
        self.rank = rank
        self.size = size


def _eliminate(F: PrimeField, rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int], int]:
    """Reduce ``rows`` to row echelon form in place over its first ``ncols`` columns.

    Returns the rows, the pivot columns and the sign of the row permutation.
    """
    r = F.modulus
    pivots: list[int] = []
    sign = 1
    top = 0
    n = len(rows)
    for col in range(ncols):
        pivot = next((i for i in range(top, n) if rows[i][col]), None)
        if pivot is None:
            continue
        if pivot != top:
            rows[top], rows[pivot] = rows[pivot], rows[top]
            sign = -sign
        inv = F.inv(rows[top][col])
        prow = rows[top]
        for i in range(top + 1, n):
            factor = rows[i][col] * inv % r
            if factor:
                row = rows[i]
                for j in range(col, len(row)):
                    row[j] = (row[j] - factor * prow[j]) % r
        pivots.append(col)
        top += 1
        if top == n:
            break
    return rows, pivots, sign


def rank(F: PrimeField, matrix: list[list[int]]) -> int:
    rows = [list(row) for row in matrix]
    ncols = len(rows[0]) if rows else 0
    return len(_eliminate(F, rows, ncols)[1])


def determinant(F: PrimeField, matrix: list[list[int]]) -> int:
    n = len(matrix)
    rows = [list(row) for row in matrix]
    rows, pivots, sign = _eliminate(F, rows, n)
    if len(pivots) < n:
        return 0
    r = F.modulus
    det = sign % r
    for i in range(n):
        det = det * rows[i][i] % r
    return det


def solve(F: PrimeField, matrix: list[list[int]], rhs: list[int]) -> list[int]:
    """Unique solution of ``matrix @ x = rhs``; raises :class:`SingularMatrix`."""
    n = len(matrix)
    r = F.modulus
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots, _ = _eliminate(F, rows, n)
    if len(pivots) < n:
        raise SingularMatrix(len(pivots), n)
    x = [0] * n
    for i in range(n - 1, -1, -1):
        acc = rows[i][n]
        for j in range(i + 1, n):
            acc -= rows[i][j] * x[j]
        x[i] = acc * F.inv(rows[i][i]) % r
    return x


def cramer(F: PrimeField, matrix: list[list[int]], rhs: list[int]) -> tuple[int, list[int]]:
    """``(det M, [det M_1, ..., det M_n])`` with M_j = M, column j replaced by ``rhs``."""
    n = len(matrix)
    dets = []
    for j in range(n):
        Mj = [row[:j] + [b] + row[j + 1:] for row, b in zip(matrix, rhs)]
        dets.append(determinant(F, Mj))
    return determinant(F, matrix), dets


@dataclass(frozen=True)
class LinearSystem:
    """A square system ``matrix @ x = rhs`` over ``field``."""

    field: PrimeField
    matrix: list[list[int]]
    rhs: list[int]

    def __post_init__(self):
        n = len(self.matrix)
        if len(self.rhs) != n or any(len(row) != n for row in self.matrix):
            raise ValueError("LinearSystem must be n x n with an n-vector right-hand side")

    @property
    def size(self) -> int:
        return len(self.matrix)

    def solve(self) -> list[int]:
        return solve(self.field, self.matrix, self.rhs)

    def cramer(self) -> tuple[int, list[int]]:
        return cramer(self.field, self.matrix, self.rhs)

    def rank(self) -> int:
        return rank(self.field, self.matrix)
