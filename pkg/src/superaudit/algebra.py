"""Laurent superpolynomials over the Gaussian rationals.

A :class:`Context` fixes an ordered list of generators. Even generators carry
integer exponents (negative only when flagged invertible); odd generators
appear at most once per monomial and are kept in declaration order, so every
reordering contributes a Koszul sign.

Monomials are stored as ``(even_exponents, odd_mask)`` where bit ``k`` of the
mask is the ``k``-th odd generator of the context.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .gaussian import ONE, ZERO, GaussianRational

EVEN, ODD = 0, 1


class AlgebraError(ValueError):
    """Raised on invalid algebraic input (context mismatch, non-units, ...)."""


class ConjugationMode(str, enum.Enum):
    MULTIPLICATIVE = "multiplicative"
    GRADED = "graded"


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int
    invertible: bool = False
    partner: str | None = None

    def __post_init__(self):
        if self.parity not in (EVEN, ODD):
            raise AlgebraError(f"parity of {self.name} must be 0 or 1")
        if self.parity == ODD and self.invertible:
            raise AlgebraError(f"odd generator {self.name} cannot be invertible")


def even(name: str, partner: str | None = None) -> Generator:
    return Generator(name, EVEN, False, partner)


def unit(name: str, partner: str | None = None) -> Generator:
    return Generator(name, EVEN, True, partner)


def odd(name: str, partner: str | None = None) -> Generator:
    return Generator(name, ODD, False, partner)


@lru_cache(maxsize=1 << 16)
def _koszul(m1: int, m2: int) -> int:
    """Parity of the number of transpositions needed to sort ``m1 . m2``."""
    n = 0
    b = m2
    while b:
        low = b & -b
        n += bin(m1 & ~((low << 1) - 1)).count("1")
        b ^= low
    return n & 1


def _bits(mask: int) -> list[int]:
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


class Context:
    """An ordered, immutable set of generators."""

    __slots__ = ("generators", "index", "even_names", "odd_names", "_slot", "_hash")

    def __init__(self, generators: Iterable[Generator]):
        gens = tuple(generators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise AlgebraError(f"duplicate generator names in {names}")
        by_name = {g.name: g for g in gens}
        for g in gens:
            if g.partner is None:
                continue
            p = by_name.get(g.partner)
            if p is None:
                raise AlgebraError(f"partner {g.partner} of {g.name} not in context")
            if p.partner != g.name or p.parity != g.parity or p.invertible != g.invertible:
                raise AlgebraError(f"partner of {g.name} must be symmetric and of matching type")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "index", {g.name: i for i, g in enumerate(gens)})
        evens = tuple(g.name for g in gens if g.parity == EVEN)
        odds = tuple(g.name for g in gens if g.parity == ODD)
        object.__setattr__(self, "even_names", evens)
        object.__setattr__(self, "odd_names", odds)
        slot = {n: (EVEN, i) for i, n in enumerate(evens)}
        slot.update({n: (ODD, i) for i, n in enumerate(odds)})
        object.__setattr__(self, "_slot", slot)
        object.__setattr__(self, "_hash", hash(gens))

    def __setattr__(self, name, value):
        raise AttributeError("Context is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Context) and self.generators == other.generators

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Context({', '.join(self.names)})"

    def __contains__(self, name: str) -> bool:
        return name in self.index

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def generator(self, name: str) -> Generator:
        try:
            return self.generators[self.index[name]]
        except KeyError:
            raise AlgebraError(f"undeclared generator {name!r}") from None

    def slot(self, name: str) -> tuple[int, int]:
        try:
            return self._slot[name]
        except KeyError:
            raise AlgebraError(f"undeclared generator {name!r}") from None

    @property
    def n_even(self) -> int:
        return len(self.even_names)

    # -- constructors -------------------------------------------------
    @property
    def zero(self) -> SuperPoly:
        return SuperPoly._make(self, {})

    @property
    def one(self) -> SuperPoly:
        return self.const(1)

    def const(self, c) -> SuperPoly:
        c = GaussianRational.coerce(c)
        if not c:
            return self.zero
        return SuperPoly._make(self, {((0,) * self.n_even, 0): c})

    def gen(self, name: str, power: int = 1) -> SuperPoly:
        kind, k = self.slot(name)
        if kind == ODD:
            if power < 0:
                raise AlgebraError(f"negative power of odd generator {name}")
            if power == 0:
                return self.one
            if power > 1:
                return self.zero
            return SuperPoly._make(self, {((0,) * self.n_even, 1 << k): ONE})
        if power < 0 and not self.generator(name).invertible:
            raise AlgebraError(f"negative exponent on non-invertible generator {name}")
        e = [0] * self.n_even
        e[k] = power
        return SuperPoly._make(self, {(tuple(e), 0): ONE})

    def gens(self, *names: str) -> tuple[SuperPoly, ...]:
        return tuple(self.gen(n) for n in names)

    def monomial(self, exponents: Mapping[str, int]) -> SuperPoly:
        """Monomial from ``{name: exponent}``; odd names use exponent 1, in context order."""
        e = [0] * self.n_even
        mask = 0
        for name, k in exponents.items():
            kind, j = self.slot(name)
            if kind == ODD:
                if k < 0:
                    raise AlgebraError(f"negative power of odd generator {name}")
                if k > 1:
                    return self.zero
                mask |= k << j
            else:
                if k < 0 and not self.generator(name).invertible:
                    raise AlgebraError(f"negative exponent on non-invertible generator {name}")
                e[j] = k
        return SuperPoly._make(self, {(tuple(e), mask): ONE})

    def parity_of(self, name: str) -> int:
        return self.generator(name).parity

    def check_key(self, key) -> None:
        e, mask = key
        for k, name in zip(e, self.even_names):
            if k < 0 and not self.generator(name).invertible:
                raise AlgebraError(f"negative exponent on non-invertible generator {name}")
        if mask >> len(self.odd_names):
            raise AlgebraError("odd mask out of range")


def _check_same(a: SuperPoly, b: SuperPoly) -> None:
    if a.ctx is not b.ctx and a.ctx != b.ctx:
        raise AlgebraError(f"context mismatch: {a.ctx} vs {b.ctx}")


def _add_into(acc: dict, key, c) -> None:
    old = acc.get(key)
    acc[key] = c if old is None else old + c


def _mul_terms(t1: dict, t2: dict) -> dict:
    out: dict = {}
    for (e1, m1), c1 in t1.items():
        for (e2, m2), c2 in t2.items():
            if m1 & m2:
                continue
            c = c1 * c2
            if m1 and m2 and _koszul(m1, m2):
                c = -c
            if e1 == e2 and not any(e1):
                e = e1
            else:
                e = tuple([x + y for x, y in zip(e1, e2)])
            key = (e, m1 | m2)
            old = out.get(key)
            out[key] = c if old is None else old + c
    return {k: v for k, v in out.items() if v}


class SuperPoly:
    """An element of the Laurent superpolynomial ring of a context.

    Immutable; equality is equality of canonical term maps.
    """

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: Context, terms: Mapping | None = None):
        clean = {}
        for key, c in (terms or {}).items():
            key = (tuple(key[0]), int(key[1]))
            ctx.check_key(key)
            c = GaussianRational.coerce(c)
            if c:
                _add_into(clean, key, c)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, ctx: Context, terms: dict) -> SuperPoly:
        p = object.__new__(cls)
        object.__setattr__(p, "ctx", ctx)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("SuperPoly is immutable")

    # -- structure ----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def parity(self) -> int | None:
        """0 or 1 when homogeneous and nonzero; None for zero or mixed parity."""
        ps = {bin(m).count("1") & 1 for (_, m) in self.terms}
        return ps.pop() if len(ps) == 1 else None

    @property
    def is_homogeneous(self) -> bool:
        return len({bin(m).count("1") & 1 for (_, m) in self.terms}) <= 1

    def has_parity(self, p: int) -> bool:
        return all((bin(m).count("1") & 1) == p for (_, m) in self.terms)

    def body(self) -> SuperPoly:
        return SuperPoly._make(self.ctx, {k: c for k, c in self.terms.items() if k[1] == 0})

    def is_constant(self) -> bool:
        return all(k[1] == 0 and not any(k[0]) for k in self.terms)

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise AlgebraError(f"not a constant: {self.render()}")
        return next(iter(self.terms.values()), ZERO)

    def coefficient(self, key) -> GaussianRational:
        return self.terms.get(key, ZERO)

    # -- arithmetic ---------------------------------------------------
    def _lift(self, other) -> SuperPoly:
        if isinstance(other, SuperPoly):
            _check_same(self, other)
            return other
        return self.ctx.const(other)

    def __add__(self, other):
        if not isinstance(other, SuperPoly):
            try:
                other = self.ctx.const(other)
            except TypeError:
                return NotImplemented
        _check_same(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return SuperPoly._make(self.ctx, {k: v for k, v in out.items() if v})

    __radd__ = __add__

    def __neg__(self):
        return SuperPoly._make(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SuperPoly):
            try:
                other = self.ctx.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SuperPoly):
            try:
                c = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        _check_same(self, other)
        return SuperPoly._make(self.ctx, _mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        # scalars commute with everything
        return self.__mul__(other)

    def scale(self, c) -> SuperPoly:
        c = GaussianRational.coerce(c)
        if not c:
            return self.ctx.zero
        return SuperPoly._make(self.ctx, {k: v * c for k, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            return invert_even(self) ** (-n)
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, SuperPoly):
            return (self.ctx is other.ctx or self.ctx == other.ctx) and self.terms == other.terms
        try:
            return self.terms == self.ctx.const(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ctx, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- rendering ----------------------------------------------------
    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], _bits(kv[0][1])))

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(render_term(self.ctx, k, c) for k, c in self.sorted_terms())

    __str__ = render

    def __repr__(self):
        return f"SuperPoly({self.render()!r})"


def render_monomial(ctx: Context, key) -> str:
    e, mask = key
    parts = []
    for name, k in zip(ctx.even_names, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    parts.extend(ctx.odd_names[j] for j in _bits(mask))
    return "*".join(parts)


def render_term(ctx: Context, key, c: GaussianRational) -> str:
    mono = render_monomial(ctx, key)
    coeff = c.render()
    return f"{coeff}*{mono}" if mono else coeff


def invert_even(a: SuperPoly) -> SuperPoly:
    """Inverse of an even element whose body is a single unit monomial.

    Uses ``b^-1 * sum_k (-b^-1 n)^k`` where ``n`` is the nilpotent part;
    the sum terminates because ``n`` is nilpotent.
    """
    if a.is_zero or not a.has_parity(EVEN):
        raise AlgebraError(f"invert_even needs a nonzero even element, got {a.render()}")
    body = a.body()
    if len(body.terms) != 1:
        raise AlgebraError(f"body of {a.render()} is not a single unit term")
    (e, _), c = next(iter(body.terms.items()))
    for k, name in zip(e, a.ctx.even_names):
        if k and not a.ctx.generator(name).invertible:
            raise AlgebraError(f"body of {a.render()} contains non-invertible {name}")
    ctx = a.ctx
    binv = SuperPoly._make(ctx, {(tuple(-k for k in e), 0): c.inverse()})
    x = -(binv * (a - body))
    total = ctx.one
    power = ctx.one
    for _ in range(len(ctx.odd_names) + 1):
        power = power * x
        if power.is_zero:
            break
        total = total + power
    else:
        if not power.is_zero:
            raise AlgebraError("nilpotent series failed to terminate")
    return binv * total


def conjugate(a: SuperPoly, mode: ConjugationMode | str = ConjugationMode.MULTIPLICATIVE) -> SuperPoly:
    """Antilinear conjugation sending each generator to its partner."""
    mode = ConjugationMode(mode)
    ctx = a.ctx
    even_map = []
    for name in ctx.even_names:
        g = ctx.generator(name)
        if g.partner is None and _uses_even(a, ctx.slot(name)[1]):
            raise AlgebraError(f"generator {name} has no conjugate partner")
        even_map.append(ctx.slot(g.partner)[1] if g.partner else None)
    odd_map = []
    for name in ctx.odd_names:
        g = ctx.generator(name)
        odd_map.append(ctx.slot(g.partner)[1] if g.partner else None)
    out: dict = {}
    for (e, mask), c in a.terms.items():
        ne = [0] * ctx.n_even
        for i, k in enumerate(e):
            if k:
                ne[even_map[i]] = k
        # odd factors in original order, mapped to partners, then sorted with sign
        images = []
        for j in _bits(mask):
            p = odd_map[j]
            if p is None:
                raise AlgebraError(f"generator {ctx.odd_names[j]} has no conjugate partner")
            images.append(p)
        inversions = sum(1 for x in range(len(images)) for y in range(x + 1, len(images)) if images[x] > images[y])
        k = len(images)
        if mode is ConjugationMode.GRADED:
            inversions += k * (k - 1) // 2
        cc = c.conjugate()
        if inversions & 1:
            cc = -cc
        nm = 0
        for p in images:
            nm |= 1 << p
        _add_into(out, (tuple(ne), nm), cc)
    return SuperPoly._make(ctx, {k: v for k, v in out.items() if v})


def _uses_even(a: SuperPoly, slot: int) -> bool:
    return any(e[slot] for (e, _) in a.terms)
