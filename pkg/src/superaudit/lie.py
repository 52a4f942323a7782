"""Finite-dimensional Lie superalgebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .algebra import AlgebraError
from .gaussian import ZERO, GaussianRational
from .groups import CheckResult, SpanError
from .linalg import rank, solve


def render_vector(names: Sequence[str], vec: Sequence[GaussianRational]) -> str:
    parts = [f"{c.render()}*{n}" for n, c in zip(names, vec) if c]
    return " + ".join(parts) if parts else "0"


class LieSuperAlgebra:
    """Basis ``[(name, parity)]`` and constants ``(i, j) -> coefficient vector``.

    Brackets not given are zero; a bracket given only for ``(i, j)`` is
    extended to ``(j, i)`` by graded antisymmetry.
    """

    def __init__(self, basis: Sequence[tuple[str, int]], constants: Mapping[tuple[int, int], Sequence]):
        self.basis = [(str(n), int(p)) for n, p in basis]
        n = len(self.basis)
        zero = (ZERO,) * n
        table: dict[tuple[int, int], tuple[GaussianRational, ...]] = {}
        for (i, j), vec in constants.items():
            vec = tuple(GaussianRational.coerce(c) for c in vec)
            if len(vec) != n:
                raise AlgebraError("structure constant vector has the wrong length")
            table[(i, j)] = vec
        for i in range(n):
            for j in range(n):
                sign = 1 if self.parity(i) and self.parity(j) else -1
                if (i, j) in table and (j, i) not in table:
                    table[(j, i)] = tuple(c * sign for c in table[(i, j)])
        for i in range(n):
            for j in range(n):
                table.setdefault((i, j), zero)
        self.constants = table
        for (i, j), vec in table.items():
            sign = 1 if self.parity(i) and self.parity(j) else -1
            if table[(j, i)] != tuple(c * sign for c in vec):
                raise AlgebraError(f"constants violate graded antisymmetry at ({self.names[i]}, {self.names[j]})")
            want = (self.parity(i) + self.parity(j)) % 2
            if any(c and self.parity(k) != want for k, c in enumerate(vec)):
                raise AlgebraError(f"bracket ({self.names[i]}, {self.names[j]}) has the wrong parity")

    @classmethod
    def from_brackets(cls, basis: Sequence[tuple[str, int]], brackets: Mapping[tuple[str, str], Mapping[str, object]]):
        names = [n for n, _ in basis]
        idx = {n: k for k, n in enumerate(names)}
        consts = {}
        for (a, b), combo in brackets.items():
            vec = [ZERO] * len(names)
            for name, c in combo.items():
                vec[idx[name]] = GaussianRational.coerce(c)
            consts[(idx[a], idx[b])] = vec
        return cls(basis, consts)

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.basis]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def parity(self, i: int) -> int:
        return self.basis[i][1]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def unit_vector(self, name: str) -> tuple[GaussianRational, ...]:
        k = self.index(name)
        return tuple(GaussianRational(1) if j == k else ZERO for j in range(self.dim))

    def vector(self, combo: Mapping[str, object]) -> tuple[GaussianRational, ...]:
        vec = [ZERO] * self.dim
        for name, c in combo.items():
            vec[self.index(name)] = GaussianRational.coerce(c)
        return tuple(vec)

    def bracket(self, x: Sequence, y: Sequence) -> tuple[GaussianRational, ...]:
        out = [ZERO] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.constants[(i, j)]):
                    if c:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, LieSuperAlgebra) and self.basis == other.basis and self.constants == other.constants

    def render(self) -> str:
        names = self.names
        lines = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                lines.append(f"bracket({names[i]}, {names[j]}) = {render_vector(names, self.constants[(i, j)])}")
        return "\n".join(lines)

    __str__ = render


def check_super_jacobi(g: LieSuperAlgebra) -> CheckResult:
    n = g.dim
    e = [g.unit_vector(name) for name in g.names]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                px, py, pz = g.parity(x), g.parity(y), g.parity(z)
                t1 = g.bracket(e[x], g.bracket(e[y], e[z]))
                t2 = g.bracket(e[y], g.bracket(e[z], e[x]))
                t3 = g.bracket(e[z], g.bracket(e[x], e[y]))
                s1 = -1 if px * pz else 1
                s2 = -1 if py * px else 1
                s3 = -1 if pz * py else 1
                total = tuple(a * s1 + b * s2 + c * s3 for a, b, c in zip(t1, t2, t3))
                if any(total):
                    w = f"({g.names[x]}, {g.names[y]}, {g.names[z]}): {render_vector(g.names, total)}"
                    return CheckResult("super Jacobi", False, w)
    return CheckResult("super Jacobi", True, "")


def check_antisymmetry(g: LieSuperAlgebra) -> CheckResult:
    for (i, j), vec in g.constants.items():
        sign = 1 if g.parity(i) and g.parity(j) else -1
        if g.constants[(j, i)] != tuple(c * sign for c in vec):
            return CheckResult("graded antisymmetry", False, f"({g.names[i]}, {g.names[j]})")
    return CheckResult("graded antisymmetry", True, "")


def _realify(vec: Sequence[GaussianRational]) -> list[GaussianRational]:
    return [GaussianRational(c.re) for c in vec] + [GaussianRational(c.im) for c in vec]


def _complexify(real: Sequence[GaussianRational]) -> tuple[GaussianRational, ...]:
    n = len(real) // 2
    return tuple(GaussianRational(real[k].re, real[k + n].re) for k in range(n))


@dataclass(frozen=True)
class RealSpan:
    """The real span of complex coefficient vectors in an ambient algebra."""

    ambient: LieSuperAlgebra
    vectors: tuple
    names: tuple = ()

    def __post_init__(self):
        vecs = tuple(tuple(GaussianRational.coerce(c) for c in v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if not self.names:
            object.__setattr__(self, "names", tuple(f"v{k + 1}" for k in range(len(vecs))))
        if rank([_realify(v) for v in vecs]) < len(vecs):
            raise SpanError("span vectors are dependent over the reals")

    def render(self) -> str:
        return "\n".join(f"{n} = {render_vector(self.ambient.names, v)}" for n, v in zip(self.names, self.vectors))


@dataclass(frozen=True)
class ClosureDefect:
    left: str
    right: str
    bracket: tuple
    escaping: tuple


@dataclass
class ClosureReport:
    closed: bool
    table: dict = field(default_factory=dict)
    defects: list = field(default_factory=list)

    def render(self, ambient: LieSuperAlgebra, names: Sequence[str]) -> str:
        lines = []
        for (a, b), coeffs in self.table.items():
            combo = " + ".join(f"{c.render()}*{n}" for n, c in zip(names, coeffs) if c) or "0"
            lines.append(f"[{a}, {b}] = {combo}")
        for d in self.defects:
            lines.append(
                f"[{d.left}, {d.right}] = {render_vector(ambient.names, d.bracket)} escapes; "
                f"escaping component {render_vector(ambient.names, d.escaping)}"
            )
        return "\n".join(lines)


def _escaping(span_real: list, target_real: list) -> list[GaussianRational]:
    dim = len(target_real)
    basis = list(span_real)
    complement = []
    for k in range(dim):
        e = [GaussianRational(1) if j == k else ZERO for j in range(dim)]
        if rank(basis + [e]) > len(basis):
            basis.append(e)
            complement.append(e)
    coeffs = solve(basis, target_real)
    out = [ZERO] * dim
    for c, v in zip(coeffs[len(span_real):], complement):
        out = [a + c * b for a, b in zip(out, v)]
    return out


def bracket_span_closure(s: RealSpan) -> ClosureReport:
    g = s.ambient
    real = [_realify(v) for v in s.vectors]
    report = ClosureReport(True)
    n = len(s.vectors)
    for i in range(n):
        for j in range(i, n):
            b = g.bracket(s.vectors[i], s.vectors[j])
            coeffs = solve(real, _realify(b))
            if coeffs is None:
                report.closed = False
                report.defects.append(ClosureDefect(s.names[i], s.names[j], b, _complexify(_escaping(real, _realify(b)))))
            else:
                report.table[(s.names[i], s.names[j])] = tuple(coeffs)
    return report


def complexified_span_check(s: RealSpan) -> bool:
    return rank([list(v) for v in s.vectors]) == s.ambient.dim
