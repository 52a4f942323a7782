"""Superalgebra morphisms, superderivations and one-forms.

Derivations are determined by their values on generators and extended by the
graded Leibniz rule ``X(fg) = X(f) g + (-1)^{|X||f|} f X(g)``. Partial
derivatives ``d/dx`` are the derivations sending ``x`` to 1 and every other
generator to 0, so for odd ``x`` they act as left derivatives.
"""

from __future__ import annotations

from typing import Mapping

from .algebra import EVEN, ODD, AlgebraError, Context, SuperPoly, _bits, invert_even, render_term
from .gaussian import GaussianRational


def _same_ctx(a: Context, b: Context, what: str) -> None:
    if a is not b and a != b:
        raise AlgebraError(f"context mismatch in {what}: {a} vs {b}")


class Morphism:
    """A parity-preserving algebra map given by generator images (a pullback ``F*``).

    Generators of ``source`` without an explicit image go to the same-named
    generator of ``target``.
    """

    __slots__ = ("source", "target", "images", "_powers")

    def __init__(self, source: Context, target: Context, images: Mapping[str, SuperPoly]):
        full = {}
        for g in source.generators:
            if g.name in images:
                img = images[g.name]
                if not isinstance(img, SuperPoly):
                    img = target.const(img)
            elif g.name in target:
                img = target.gen(g.name)
            else:
                raise AlgebraError(f"no image for generator {g.name}")
            _same_ctx(img.ctx, target, "morphism image")
            if not img.has_parity(g.parity):
                raise AlgebraError(f"image of {g.name} has wrong parity: {img.render()}")
            full[g.name] = img
        unknown = set(images) - set(source.names)
        if unknown:
            raise AlgebraError(f"images given for unknown generators {sorted(unknown)}")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "images", full)
        object.__setattr__(self, "_powers", {})

    def __setattr__(self, name, value):
        raise AttributeError("Morphism is immutable")

    @classmethod
    def identity(cls, ctx: Context) -> Morphism:
        return cls(ctx, ctx, {})

    def _power(self, name: str, k: int) -> SuperPoly:
        # memo is an internal cache; results are the same with or without it
        key = (name, k)
        p = self._powers.get(key)
        if p is None:
            img = self.images[name]
            p = img**k if k > 0 else invert_even(img) ** (-k)
            self._powers[key] = p
        return p

    def __call__(self, f: SuperPoly) -> SuperPoly:
        return apply_morphism(self, f)

    def __eq__(self, other):
        return (
            isinstance(other, Morphism)
            and self.source == other.source
            and self.target == other.target
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.images.values())))

    def render(self) -> str:
        return "\n".join(f"{n} -> {self.images[n].render()}" for n in self.source.names)

    def __repr__(self):
        return f"Morphism({'; '.join(self.render().splitlines())})"


def apply_morphism(F: Morphism, f: SuperPoly) -> SuperPoly:
    _same_ctx(f.ctx, F.source, "apply_morphism")
    ctx = F.source
    total = F.target.zero
    for (e, mask), c in f.terms.items():
        term = F.target.const(c)
        for name, k in zip(ctx.even_names, e):
            if k:
                term = term * F._power(name, k)
        for j in _bits(mask):
            term = term * F.images[ctx.odd_names[j]]
        total = total + term
    return total


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """The morphism ``f -> outer(inner(f))``."""
    _same_ctx(inner.target, outer.source, "compose")
    return Morphism(inner.source, outer.target, {n: outer(img) for n, img in inner.images.items()})


def is_identity(F: Morphism) -> bool:
    return F.source == F.target and all(F.images[n] == F.target.gen(n) for n in F.source.names)


class Derivation:
    """A homogeneous superderivation of a context's superalgebra."""

    __slots__ = ("ctx", "parity", "images")

    def __init__(self, ctx: Context, parity: int, images: Mapping[str, SuperPoly]):
        if parity not in (EVEN, ODD):
            raise AlgebraError("derivation parity must be 0 or 1")
        unknown = set(images) - set(ctx.names)
        if unknown:
            raise AlgebraError(f"images given for unknown generators {sorted(unknown)}")
        full = []
        for g in ctx.generators:
            img = images.get(g.name)
            if img is None:
                img = ctx.zero
            elif not isinstance(img, SuperPoly):
                img = ctx.const(img)
            _same_ctx(img.ctx, ctx, "derivation image")
            if not img.has_parity((g.parity + parity) % 2):
                raise AlgebraError(
                    f"image of {g.name} under a derivation of parity {parity} has wrong parity: {img.render()}"
                )
            full.append(img)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "parity", parity)
        object.__setattr__(self, "images", tuple(full))

    def __setattr__(self, name, value):
        raise AttributeError("Derivation is immutable")

    @classmethod
    def zero(cls, ctx: Context, parity: int = EVEN) -> Derivation:
        return cls(ctx, parity, {})

    def image(self, name: str) -> SuperPoly:
        return self.images[self.ctx.index[name]]

    def as_dict(self) -> dict[str, SuperPoly]:
        return dict(zip(self.ctx.names, self.images))

    @property
    def is_zero(self) -> bool:
        return all(img.is_zero for img in self.images)

    def __call__(self, f: SuperPoly) -> SuperPoly:
        return derive(self, f)

    def __add__(self, other: Derivation) -> Derivation:
        _same_ctx(self.ctx, other.ctx, "derivation sum")
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.parity != other.parity:
            raise AlgebraError("cannot add derivations of different parity")
        return Derivation(self.ctx, self.parity, {n: a + b for n, a, b in zip(self.ctx.names, self.images, other.images)})

    def __neg__(self) -> Derivation:
        return Derivation(self.ctx, self.parity, {n: -a for n, a in zip(self.ctx.names, self.images)})

    def __sub__(self, other: Derivation) -> Derivation:
        return self + (-other)

    def scale(self, c) -> Derivation:
        c = GaussianRational.coerce(c)
        return Derivation(self.ctx, self.parity, {n: a.scale(c) for n, a in zip(self.ctx.names, self.images)})

    def times(self, f: SuperPoly) -> Derivation:
        """Left multiplication ``f * X``, i.e. ``g -> f X(g)``."""
        _same_ctx(f.ctx, self.ctx, "f * derivation")
        if f.is_zero:
            return Derivation.zero(self.ctx, self.parity)
        if not f.is_homogeneous:
            raise AlgebraError(f"coefficient {f.render()} is not homogeneous")
        p = (f.parity + self.parity) % 2
        return Derivation(self.ctx, p, {n: f * a for n, a in zip(self.ctx.names, self.images)})

    def __rmul__(self, c):
        if isinstance(c, SuperPoly):
            return self.times(c)
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, Derivation) or self.ctx != other.ctx:
            return NotImplemented if not isinstance(other, Derivation) else False
        if self.images != other.images:
            return False
        return self.is_zero or self.parity == other.parity

    def __hash__(self):
        return hash((self.ctx, self.images))

    def render(self) -> str:
        parts = []
        for name, img in zip(self.ctx.names, self.images):
            if img.is_zero:
                continue
            if len(img.terms) == 1:
                (key, c), = img.terms.items()
                parts.append(f"{render_term(img.ctx, key, c)}*d/d{name}")
            else:
                parts.append(f"({img.render()})*d/d{name}")
        return " + ".join(parts) if parts else "0"

    __str__ = render

    def __repr__(self):
        return f"Derivation({self.render()!r})"


def partial(ctx: Context, name: str) -> Derivation:
    g = ctx.generator(name)
    return Derivation(ctx, g.parity, {name: ctx.one})


def derive(X: Derivation, f: SuperPoly) -> SuperPoly:
    _same_ctx(f.ctx, X.ctx, "derive")
    ctx = X.ctx
    even_imgs = [X.images[ctx.index[n]] for n in ctx.even_names]
    odd_imgs = [X.images[ctx.index[n]] for n in ctx.odd_names]
    nE = ctx.n_even
    total = ctx.zero
    for (e, mask), c in f.terms.items():
        odd_part = SuperPoly._make(ctx, {((0,) * nE, mask): c})
        for j, k in enumerate(e):
            if k and not even_imgs[j].is_zero:
                lowered = list(e)
                lowered[j] -= 1
                mono = SuperPoly._make(ctx, {(tuple(lowered), 0): GaussianRational(k)})
                total = total + mono * even_imgs[j] * odd_part
        if not mask:
            continue
        bits = _bits(mask)
        for pos, j in enumerate(bits):
            img = odd_imgs[j]
            if img.is_zero:
                continue
            before = sum(1 << b for b in bits[:pos])
            after = sum(1 << b for b in bits[pos + 1:])
            left = SuperPoly._make(ctx, {(e, before): c})
            right = SuperPoly._make(ctx, {((0,) * nE, after): GaussianRational(1)})
            piece = left * img * right
            if X.parity and pos % 2:
                piece = -piece
            total = total + piece
    return total


def bracket(X: Derivation, Y: Derivation) -> Derivation:
    """Supercommutator ``[X, Y] = XY - (-1)^{|X||Y|} YX``."""
    _same_ctx(X.ctx, Y.ctx, "bracket")
    sign = -1 if X.parity and Y.parity else 1
    images = {}
    for n, xi, yi in zip(X.ctx.names, X.images, Y.images):
        a = derive(X, yi)
        b = derive(Y, xi)
        images[n] = a + b if sign == -1 else a - b
    return Derivation(X.ctx, (X.parity + Y.parity) % 2, images)


def _check_inverse_pair(F: Morphism, F_inv: Morphism) -> None:
    if not (is_identity(compose(F, F_inv)) and is_identity(compose(F_inv, F))):
        raise AlgebraError("F_inv is not a two-sided inverse of F")


def conjugate_derivation(F: Morphism, F_inv: Morphism, X: Derivation) -> Derivation:
    """The derivation ``g -> F(X(F_inv(g)))``.

    With this orientation ``F* o D = k D o F*`` reads
    ``conjugate_derivation(F, F_inv, D) == k D``.
    """
    _same_ctx(F.source, X.ctx, "conjugate_derivation")
    _same_ctx(F.target, X.ctx, "conjugate_derivation")
    _check_inverse_pair(F, F_inv)
    return Derivation(X.ctx, X.parity, {n: F(derive(X, F_inv.images[n])) for n in X.ctx.names})


class OneForm:
    """``sum_x dx * f_x`` over a chosen set of coordinate generators.

    Differentials stand to the left of their coefficients; generators outside
    ``coords`` are treated as constants by ``d``.
    """

    __slots__ = ("ctx", "coords", "coefficients")

    def __init__(self, ctx: Context, coords, coefficients: Mapping[str, SuperPoly]):
        coords = tuple(coords)
        for n in coords:
            ctx.generator(n)
        unknown = set(coefficients) - set(coords)
        if unknown:
            raise AlgebraError(f"coefficients given for non-coordinates {sorted(unknown)}")
        coeffs = {}
        for n in coords:
            f = coefficients.get(n, ctx.zero)
            if not isinstance(f, SuperPoly):
                f = ctx.const(f)
            _same_ctx(f.ctx, ctx, "one-form coefficient")
            coeffs[n] = f
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("OneForm is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, OneForm)
            and self.ctx == other.ctx
            and self.coords == other.coords
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash((self.ctx, self.coords, tuple(self.coefficients.values())))

    def __add__(self, other: OneForm) -> OneForm:
        if self.ctx != other.ctx or self.coords != other.coords:
            raise AlgebraError("one-forms live on different coordinates")
        return OneForm(self.ctx, self.coords, {n: self.coefficients[n] + other.coefficients[n] for n in self.coords})

    def times(self, f: SuperPoly) -> OneForm:
        """Right multiplication ``omega * f``."""
        return OneForm(self.ctx, self.coords, {n: c * f for n, c in self.coefficients.items()})

    def render(self) -> str:
        parts = [f"d{n}*({c.render()})" for n, c in self.coefficients.items() if not c.is_zero]
        return " + ".join(parts) if parts else "0"

    __str__ = render

    def __repr__(self):
        return f"OneForm({self.render()!r})"


def differential(f: SuperPoly, coords) -> OneForm:
    ctx = f.ctx
    return OneForm(ctx, coords, {n: derive(partial(ctx, n), f) for n in coords})


def pullback_one_form(F: Morphism, omega: OneForm, coords=None) -> OneForm:
    """``F*(sum dx f_x) = sum d(F x) F(f_x)``; ``coords`` defaults to the form's coordinates."""
    _same_ctx(omega.ctx, F.source, "pullback_one_form")
    coords = tuple(omega.coords if coords is None else coords)
    total = OneForm(F.target, coords, {})
    for x, fx in omega.coefficients.items():
        if fx.is_zero:
            continue
        total = total + differential(F.images[x], coords).times(F(fx))
    return total
