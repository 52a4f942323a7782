"""Supergroups in coordinates.

A group law is written over a doubled context holding an unprimed copy ``x``
and a primed copy ``x'`` of every coordinate; ``mult[x]`` is the ``x``
coordinate of the product ``(x) . (x')``.

Conventions used by every check here:

* a *left* invariant field is obtained by differentiating the primed slot of
  the law at the unit, ``X(x) = sum_j v_j d/dx'_j mult[x] |_{x'=e}``, and is
  certified by ``mult* X = (id (x) X) mult*``;
* a *right* invariant field differentiates the unprimed slot and satisfies
  ``mult* X = (X (x) id) mult*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .algebra import EVEN, ODD, AlgebraError, Context, Generator, SuperPoly, invert_even
from .fields import Derivation, Morphism, _check_inverse_pair, bracket, derive, partial
from .gaussian import GaussianRational
from .linalg import rank, solve


class SpanError(AlgebraError):
    """A bracket leaves the span of the given fields, or the fields are dependent."""


def primed(name: str, copy: int) -> str:
    return name + "'" * copy


@lru_cache(maxsize=None)
def copies(ctx: Context, n: int) -> Context:
    """``n`` primed copies of a coordinate context (partners dropped)."""
    return Context(
        Generator(primed(g.name, k), g.parity, g.invertible) for k in range(n) for g in ctx.generators
    )


def _slot_map(ctx: Context, target: Context, copy_of: Sequence[int]) -> Morphism:
    """Map copy ``k`` of ``ctx`` (inside a multi-copy context) onto copy ``copy_of[k]`` of target."""
    src = copies(ctx, len(copy_of))
    images = {}
    for k, c in enumerate(copy_of):
        for n in ctx.names:
            images[primed(n, k)] = target.gen(primed(n, c))
    return Morphism(src, target, images)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    witness: str = ""


@dataclass(frozen=True)
class TangentVector:
    parity: int
    components: Mapping[str, object]


@dataclass(frozen=True, eq=False)
class GroupPresentation:
    coords: Context
    mult: Mapping[str, SuperPoly]
    unit: Mapping[str, object]
    inv: Mapping[str, SuperPoly]
    name: str = ""

    def __post_init__(self):
        dbl = self.doubled
        for g in self.coords.generators:
            n = g.name
            if n not in self.mult or n not in self.unit or n not in self.inv:
                raise AlgebraError(f"presentation missing data for coordinate {n}")
            if self.mult[n].ctx != dbl:
                raise AlgebraError(f"mult[{n}] must live on the doubled context")
            if self.inv[n].ctx != self.coords:
                raise AlgebraError(f"inv[{n}] must live on the coordinate context")
            if not self.mult[n].has_parity(g.parity) or not self.inv[n].has_parity(g.parity):
                raise AlgebraError(f"parity of mult/inv for {n} does not match the coordinate")
            if g.parity == ODD and GaussianRational.coerce(self.unit[n]):
                raise AlgebraError(f"unit must vanish on odd coordinate {n}")

    @property
    def doubled(self) -> Context:
        return copies(self.coords, 2)

    @property
    def tripled(self) -> Context:
        return copies(self.coords, 3)

    def mult_morphism(self) -> Morphism:
        """``mult*``: coordinates -> doubled context."""
        return Morphism(self.coords, self.doubled, dict(self.mult))

    def unit_const(self, name: str) -> GaussianRational:
        return GaussianRational.coerce(self.unit[name])

    def render(self) -> str:
        lines = [f"{n}'' = {self.mult[n].render()}" for n in self.coords.names]
        lines.append("unit: " + ", ".join(f"{n}={self.unit_const(n).render()}" for n in self.coords.names))
        lines += [f"inv {n} = {self.inv[n].render()}" for n in self.coords.names]
        return "\n".join(lines)


def _defects(lhs: Mapping[str, SuperPoly], rhs: Mapping[str, SuperPoly]) -> str:
    bad = []
    for n in lhs:
        d = lhs[n] - rhs[n]
        if not d.is_zero:
            bad.append(f"{n}: {d.render()}")
    return "; ".join(bad)


def check_group_axioms(G: GroupPresentation) -> list[CheckResult]:
    coords, dbl, tri = G.coords, G.doubled, G.tripled
    names = coords.names
    m01 = _slot_map(coords, tri, (0, 1))
    m12 = _slot_map(coords, tri, (1, 2))
    m_a = {n: m01(G.mult[n]) for n in names}  # x.x'
    m_b = {n: m12(G.mult[n]) for n in names}  # x'.x''
    left_first = Morphism(dbl, tri, {**{n: m_a[n] for n in names}, **{primed(n, 1): tri.gen(primed(n, 2)) for n in names}})
    right_first = Morphism(dbl, tri, {**{n: tri.gen(n) for n in names}, **{primed(n, 1): m_b[n] for n in names}})
    assoc_l = {n: left_first(G.mult[n]) for n in names}
    assoc_r = {n: right_first(G.mult[n]) for n in names}

    ident = {n: coords.gen(n) for n in names}
    unit = {n: coords.const(G.unit_const(n)) for n in names}
    e_left = Morphism(dbl, coords, {**unit, **{primed(n, 1): coords.gen(n) for n in names}})
    e_right = Morphism(dbl, coords, {**ident, **{primed(n, 1): unit[n] for n in names}})
    i_left = Morphism(dbl, coords, {**dict(G.inv), **{primed(n, 1): coords.gen(n) for n in names}})
    i_right = Morphism(dbl, coords, {**ident, **{primed(n, 1): G.inv[n] for n in names}})

    out = []
    for label, lhs, rhs in [
        ("associativity", assoc_l, assoc_r),
        ("left unit", {n: e_left(G.mult[n]) for n in names}, ident),
        ("right unit", {n: e_right(G.mult[n]) for n in names}, ident),
        ("left inverse", {n: i_left(G.mult[n]) for n in names}, unit),
        ("right inverse", {n: i_right(G.mult[n]) for n in names}, unit),
    ]:
        w = _defects(lhs, rhs)
        out.append(CheckResult(label, not w, w))
    return out


def _side(side: str) -> str:
    if side not in ("left", "right"):
        raise AlgebraError(f"side must be 'left' or 'right', got {side!r}")
    return side


def invariant_field(G: GroupPresentation, v: TangentVector, side: str = "left") -> Derivation:
    _side(side)
    coords, dbl = G.coords, G.doubled
    names = coords.names
    for n, c in v.components.items():
        if GaussianRational.coerce(c) and coords.parity_of(n) != v.parity:
            raise AlgebraError(f"tangent component along {n} has the wrong parity")
    slot = 1 if side == "left" else 0
    unit = {primed(n, slot): coords.const(G.unit_const(n)) for n in names}
    keep = {primed(n, 1 - slot): coords.gen(n) for n in names}
    at_unit = Morphism(dbl, coords, {**unit, **keep})
    images = {}
    for x in names:
        acc = coords.zero
        for n, c in v.components.items():
            c = GaussianRational.coerce(c)
            if c:
                acc = acc + at_unit(derive(partial(dbl, primed(n, slot)), G.mult[x])).scale(c)
        images[x] = acc
    return Derivation(coords, v.parity, images)


def _on_copy(X: Derivation, dbl: Context, slot: int) -> Derivation:
    lift = _slot_map(X.ctx, dbl, (slot,))
    return Derivation(dbl, X.parity, {primed(n, slot): lift(X.image(n)) for n in X.ctx.names})


def invariance_check(G: GroupPresentation, X: Derivation, side: str = "left") -> CheckResult:
    _side(side)
    if X.ctx != G.coords:
        raise AlgebraError("derivation does not live on the group's coordinates")
    mstar = G.mult_morphism()
    Xs = _on_copy(X, G.doubled, 1 if side == "left" else 0)
    names = G.coords.names
    w = _defects({n: mstar(X.image(n)) for n in names}, {n: derive(Xs, G.mult[n]) for n in names})
    return CheckResult(f"{side} invariance", not w, w)


def _flatten(X: Derivation) -> dict:
    out = {}
    for gi, img in enumerate(X.images):
        for key, c in img.terms.items():
            out[(gi, key)] = c
    return out


def express_in_basis(target: Derivation, basis: Sequence[Derivation]) -> list[GaussianRational] | None:
    flats = [_flatten(b) for b in basis]
    t = _flatten(target)
    keys = sorted(set(t).union(*flats), key=repr)
    cols = [[f.get(k, GaussianRational(0)) for k in keys] for f in flats]
    return solve(cols, [t.get(k, GaussianRational(0)) for k in keys])


def structure_constants_from_fields(fields: Sequence[Derivation], names: Sequence[str] | None = None):
    """Structure constants of the span of ``fields`` under the supercommutator."""
    from .lie import LieSuperAlgebra

    fields = list(fields)
    names = list(names) if names is not None else [f"X{k + 1}" for k in range(len(fields))]
    flats = [_flatten(f) for f in fields]
    keys = sorted(set().union(*flats), key=repr) if flats else []
    if rank([[f.get(k, GaussianRational(0)) for k in keys] for f in flats]) < len(fields):
        raise SpanError("fields are linearly dependent")
    table = {}
    for i, X in enumerate(fields):
        for j, Y in enumerate(fields):
            b = bracket(X, Y)
            coeffs = express_in_basis(b, fields)
            if coeffs is None:
                raise SpanError(f"[{names[i]}, {names[j]}] = {b.render()} leaves the span")
            table[(i, j)] = tuple(coeffs)
    return LieSuperAlgebra([(n, f.parity) for n, f in zip(names, fields)], table)


@dataclass(frozen=True)
class ScalingResult:
    ok: bool
    k: SuperPoly | None
    witness: str = ""


def _ratio(num: SuperPoly, den: SuperPoly) -> SuperPoly | None:
    """An even k with ``num == k * den`` when den is invertible or both are single terms."""
    try:
        return num * invert_even(den)
    except AlgebraError:
        pass
    if len(num.terms) == 1 and len(den.terms) == 1:
        (ke, c1), = num.terms.items()
        (kd, c2), = den.terms.items()
        if ke[1] == kd[1]:
            e = tuple(a - b for a, b in zip(ke[0], kd[0]))
            try:
                num.ctx.check_key((e, 0))
            except AlgebraError:
                return None
            return SuperPoly._make(num.ctx, {(e, 0): c1 / c2})
    return None


def susy_scaling_check(F: Morphism, F_inv: Morphism, D: Derivation) -> ScalingResult:
    """Find k with ``F*(D g) = k D(F* g)`` for every generator g."""
    _check_inverse_pair(F, F_inv)
    ctx = D.ctx
    sides = [(n, F(D.image(n)), derive(D, F.images[n])) for n in ctx.names]
    k = None
    for n, lhs, rhs in sides:
        if rhs.is_zero:
            continue
        k = _ratio(lhs, rhs)
        if k is not None:
            break
    if k is None:
        return ScalingResult(False, None, "no candidate scalar: " + "; ".join(f"{n}: {l.render()} vs {r.render()}" for n, l, r in sides))
    bad = [f"{n}: F*(D {n}) = {l.render()} but k*D(F* {n}) = {(k * r).render()}" for n, l, r in sides if l != k * r]
    if bad or not k.has_parity(EVEN):
        return ScalingResult(False, k, "; ".join(bad) or "scalar is not even")
    return ScalingResult(True, k, "")
