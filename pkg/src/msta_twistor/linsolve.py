"""Dense Gaussian elimination with partial pivoting for small square systems."""

from __future__ import annotations

from typing import Sequence


class SingularMatrixError(ArithmeticError):
    pass


def solve(a: Sequence[Sequence[float]], b: Sequence[float], rtol: float = 1e-12) -> list[float]:
    """Solve ``a x = b``.

    Rows are equilibrated to unit max-norm first; a pivot smaller than
    ``rtol`` (relative to that unit row norm) is treated as singular.
    """
    n = len(b)
    m = [list(map(float, row)) + [float(rhs)] for row, rhs in zip(a, b)]
    if len(m) != n or any(len(row) != n + 1 for row in m):
        raise ValueError("matrix must be square and match the right-hand side")
    for row in m:
        norm = max(abs(x) for x in row[:n])
        if norm == 0.0:
            raise SingularMatrixError("zero row in coefficient matrix")
        for j in range(n + 1):
            row[j] /= norm

    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(m[i][k]))
        if abs(m[p][k]) < rtol:
            raise SingularMatrixError(f"pivot {m[p][k]:.3e} below tolerance at column {k}")
        if p != k:
            m[k], m[p] = m[p], m[k]
        pivot_row = m[k]
        for i in range(k + 1, n):
            factor = m[i][k] / pivot_row[k]
            if factor:
                row = m[i]
                for j in range(k, n + 1):
                    row[j] -= factor * pivot_row[j]

    x = [0.0] * n
    for k in range(n - 1, -1, -1):
        acc = m[k][n] - sum(m[k][j] * x[j] for j in range(k + 1, n))
        x[k] = acc / m[k][k]
    return x
