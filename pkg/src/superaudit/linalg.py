"""Exact Gaussian elimination over the Gaussian rationals.

Pivoting always takes the first nonzero entry in column order, so reduced
forms and nullspace bases are reproducible.
"""

from __future__ import annotations

from typing import Sequence

from .gaussian import ONE, ZERO, GaussianRational


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[GaussianRational]], list[int]]:
    m = [[GaussianRational.coerce(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv if x else ZERO for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[GaussianRational]]:
    """Basis of ``{x : rows @ x = 0}``; each vector has a 1 at its own free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, pc in zip(red, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return basis


def rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return len(rref(vectors, len(vectors[0]))[1])


def solve(columns: Sequence[Sequence], target: Sequence) -> list[GaussianRational] | None:
    """Coefficients ``x`` with ``sum_k x[k] * columns[k] == target``, or None.

    When the columns are dependent the free coefficients are set to zero.
    """
    n = len(columns)
    dim = len(target)
    rows = [[columns[k][i] for k in range(n)] + [target[i]] for i in range(dim)]
    red, pivots = rref(rows, n + 1)
    if n in pivots:
        return None
    x = [ZERO] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    return x
