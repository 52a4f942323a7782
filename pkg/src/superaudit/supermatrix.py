"""Block-graded matrices over a supercommutative ring.

Row and column parities give each position a parity; a homogeneous even
matrix has entry ``(i, j)`` of parity ``row_parity[i] + col_parity[j]``.
Products carry no extra signs: the signs live in the ring multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import EVEN, ODD, AlgebraError, Context, SuperPoly, conjugate, invert_even
from .gaussian import I


class MatrixError(AlgebraError):
    pass


@dataclass(frozen=True)
class BlockFormat:
    row_parities: tuple[int, ...]
    col_parities: tuple[int, ...]

    @classmethod
    def square(cls, p: int, q: int) -> BlockFormat:
        par = (EVEN,) * p + (ODD,) * q
        return cls(par, par)

    @property
    def is_square(self) -> bool:
        return self.row_parities == self.col_parities


class SuperMatrix:
    __slots__ = ("format", "entries", "ctx")

    def __init__(self, format: BlockFormat, entries: Sequence[Sequence[SuperPoly]]):
        rows = tuple(tuple(r) for r in entries)
        if len(rows) != len(format.row_parities) or any(len(r) != len(format.col_parities) for r in rows):
            raise MatrixError("entry grid does not match the block format")
        ctx = rows[0][0].ctx
        for r in rows:
            for x in r:
                if x.ctx != ctx:
                    raise MatrixError("matrix entries from different contexts")
        object.__setattr__(self, "format", format)
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "ctx", ctx)

    def __setattr__(self, name, value):
        raise AttributeError("SuperMatrix is immutable")

    @classmethod
    def square(cls, p: int, q: int, rows) -> SuperMatrix:
        ctx = next(x.ctx for r in rows for x in r if isinstance(x, SuperPoly))
        rows = [[x if isinstance(x, SuperPoly) else ctx.const(x) for x in r] for r in rows]
        return cls(BlockFormat.square(p, q), rows)

    @classmethod
    def identity(cls, ctx: Context, format: BlockFormat) -> SuperMatrix:
        n = len(format.row_parities)
        return cls(format, [[ctx.one if i == j else ctx.zero for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    def __getitem__(self, ij) -> SuperPoly:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, SuperMatrix) and self.format == other.format and self.entries == other.entries

    def __hash__(self):
        return hash((self.format, self.entries))

    def __matmul__(self, other: SuperMatrix) -> SuperMatrix:
        return matmul(self, other)

    def map(self, fn) -> SuperMatrix:
        return SuperMatrix(self.format, [[fn(x) for x in r] for r in self.entries])

    def render(self) -> str:
        return "\n".join("[" + ", ".join(x.render() for x in r) + "]" for r in self.entries)

    __str__ = render

    def __repr__(self):
        return f"SuperMatrix({'; '.join(self.render().splitlines())})"


def matmul(A: SuperMatrix, B: SuperMatrix) -> SuperMatrix:
    if A.format.col_parities != B.format.row_parities:
        raise MatrixError("formats do not compose")
    if A.ctx != B.ctx:
        raise MatrixError("context mismatch")
    n, m = A.shape
    k = B.shape[1]
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = A.ctx.zero
            for t in range(m):
                a, b = A.entries[i][t], B.entries[t][j]
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return SuperMatrix(BlockFormat(A.format.row_parities, B.format.col_parities), out)


def matrix_parity(A: SuperMatrix) -> int | None:
    """0/1 if A is homogeneous of that parity, None if mixed; zero matrices count as even."""
    seen = set()
    for i, rp in enumerate(A.format.row_parities):
        for j, cp in enumerate(A.format.col_parities):
            x = A.entries[i][j]
            if x.is_zero:
                continue
            if not x.is_homogeneous:
                return None
            seen.add((x.parity + rp + cp) % 2)
    if len(seen) > 1:
        return None
    return seen.pop() if seen else EVEN


def is_homogeneous(A: SuperMatrix) -> bool:
    """Even homogeneity: entry (i, j) has parity row(i) + col(j) or is zero."""
    return matrix_parity(A) == EVEN


def supercommutator(A: SuperMatrix, B: SuperMatrix) -> SuperMatrix:
    pa, pb = matrix_parity(A), matrix_parity(B)
    if pa is None or pb is None:
        raise MatrixError("supercommutator needs homogeneous matrices")
    AB, BA = matmul(A, B), matmul(B, A)
    sign = -1 if pa and pb else 1
    return SuperMatrix(AB.format, [[x - y if sign == 1 else x + y for x, y in zip(r, s)] for r, s in zip(AB.entries, BA.entries)])


def _det(m: list[list[SuperPoly]], ctx: Context) -> SuperPoly:
    # cofactor expansion; entries are even so they commute
    n = len(m)
    if n == 0:
        return ctx.one
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = ctx.zero
    for j in range(n):
        if m[0][j].is_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor, ctx)
        total = total + term if j % 2 == 0 else total - term
    return total


def _inverse_even(m: list[list[SuperPoly]], ctx: Context) -> list[list[SuperPoly]]:
    n = len(m)
    if n == 0:
        return []
    try:
        dinv = invert_even(_det(m, ctx))
    except AlgebraError as exc:
        raise MatrixError(f"even block is not invertible: {exc}") from None
    if n == 1:
        return [[dinv]]
    adj = [[ctx.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            c = _det(minor, ctx)
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    return [[x * dinv for x in row] for row in adj]


def _mm(a, b, ctx):
    if not a or not b or not b[0]:
        return [[] for _ in a] if a else []
    return [[sum((a[i][t] * b[t][j] for t in range(len(b))), ctx.zero) for j in range(len(b[0]))] for i in range(len(a))]


def _sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _blocks(A: SuperMatrix):
    if not A.format.is_square:
        raise MatrixError("square block format required")
    if not is_homogeneous(A):
        raise MatrixError("matrix is not homogeneous")
    par = A.format.row_parities
    ev = [i for i, p in enumerate(par) if p == EVEN]
    od = [i for i, p in enumerate(par) if p == ODD]
    e = A.entries

    def blk(rs, cs):
        return [[e[i][j] for j in cs] for i in rs]

    return ev, od, blk(ev, ev), blk(ev, od), blk(od, ev), blk(od, od)


def inverse(A: SuperMatrix) -> SuperMatrix:
    """Two-sided inverse by block elimination on the odd-odd block."""
    ctx = A.ctx
    ev, od, a, b, c, d = _blocks(A)
    dinv = _inverse_even(d, ctx)
    s = _sub(a, _mm(_mm(b, dinv, ctx), c, ctx)) if od else a
    sinv = _inverse_even(s, ctx)
    if od and ev:
        tr = [[-x for x in r] for r in _mm(_mm(sinv, b, ctx), dinv, ctx)]
        bl = [[-x for x in r] for r in _mm(_mm(dinv, c, ctx), sinv, ctx)]
        br = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(dinv, _mm(_mm(_mm(_mm(dinv, c, ctx), sinv, ctx), b, ctx), dinv, ctx))]
    else:
        tr, bl, br = [[]] * len(ev), [[]] * len(od), dinv
    n = len(ev) + len(od)
    out = [[ctx.zero] * n for _ in range(n)]
    for x, i in enumerate(ev):
        for y, j in enumerate(ev):
            out[i][j] = sinv[x][y]
        for y, j in enumerate(od):
            out[i][j] = tr[x][y]
    for x, i in enumerate(od):
        for y, j in enumerate(ev):
            out[i][j] = bl[x][y]
        for y, j in enumerate(od):
            out[i][j] = br[x][y]
    return SuperMatrix(A.format, out)


def berezinian(A: SuperMatrix) -> SuperPoly:
    """``det(A - B D^-1 C) * det(D)^-1`` for blocks ``(A, B; C, D)``."""
    ctx = A.ctx
    ev, od, a, b, c, d = _blocks(A)
    try:
        ddet_inv = invert_even(_det(d, ctx))
    except AlgebraError as exc:
        raise MatrixError(f"odd-odd block is not invertible: {exc}") from None
    s = _sub(a, _mm(_mm(b, _inverse_even(d, ctx), ctx), c, ctx)) if od and ev else a
    return _det(s, ctx) * ddet_inv


def phi_map(M: SuperMatrix) -> SuperMatrix:
    """``(a, b; c, d) -> (d^-1, -i a^-2 c; -i a^-2 b, a^-1)`` on format (1|1)."""
    if M.format != BlockFormat.square(1, 1):
        raise MatrixError("phi acts on (1|1) matrices")
    (a, b), (c, d) = M.entries
    ainv = invert_even(a)
    a2 = ainv * ainv
    return SuperMatrix(M.format, [[invert_even(d), (a2 * c).scale(-I)], [(a2 * b).scale(-I), ainv]])


def sigma_map(M: SuperMatrix, mode) -> SuperMatrix:
    """Complex conjugation of every entry of ``phi_map(M)``."""
    return phi_map(M).map(lambda x: conjugate(x, mode))


@dataclass(frozen=True)
class MatrixMap:
    """A named map on (1|1) matrices, e.g. phi or sigma in a given conjugation mode."""

    name: str
    formula: str
    mode: str | None = None

    def __call__(self, M: SuperMatrix) -> SuperMatrix:
        if self.mode is None:
            return phi_map(M)
        return sigma_map(M, self.mode)

    def render(self) -> str:
        suffix = f" [conjugation: {self.mode}]" if self.mode else ""
        return f"{self.name}: {self.formula}{suffix}"
