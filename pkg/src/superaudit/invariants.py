"""Invariants and centralizers of vector fields on finite monomial windows."""

from __future__ import annotations

from itertools import product
from typing import Mapping

from .algebra import ODD, AlgebraError, Context, SuperPoly, _bits
from .fields import Derivation, bracket, derive
from .gaussian import ONE, ZERO
from .linalg import nullspace


class Window:
    """Monomials with even exponents in per-generator ranges and any odd subset.

    ``weights``/``max_weight`` optionally cap a weighted total degree, e.g. the
    grading ``deg z = 2, deg zeta = 1`` in which ``d/dzeta + zeta d/dz`` is
    homogeneous.
    """

    def __init__(self, ctx: Context, ranges: Mapping[str, tuple[int, int]] | None = None,
                 weights: Mapping[str, int] | None = None, max_weight: int | None = None):
        ranges = dict(ranges or {})
        for name, (lo, hi) in ranges.items():
            g = ctx.generator(name)
            if g.parity == ODD:
                raise AlgebraError(f"odd generator {name} cannot carry an exponent range")
            if lo > hi:
                raise AlgebraError(f"empty exponent range for {name}")
            if lo < 0 and not g.invertible:
                raise AlgebraError(f"window infeasible: negative exponent on non-invertible {name}")
        self.ctx = ctx
        self.ranges = {n: ranges.get(n, (0, 0)) for n in ctx.even_names}
        self.weights = dict(weights or {})
        self.max_weight = max_weight

    def _weight(self, e, mask) -> int:
        w = sum(self.weights.get(n, 0) * k for n, k in zip(self.ctx.even_names, e))
        return w + sum(self.weights.get(self.ctx.odd_names[j], 0) for j in _bits(mask))

    def keys(self) -> list:
        spans = [range(lo, hi + 1) for lo, hi in self.ranges.values()]
        out = []
        for e in product(*spans):
            for mask in range(1 << len(self.ctx.odd_names)):
                if self.max_weight is None or self._weight(e, mask) <= self.max_weight:
                    out.append((tuple(e), mask))
        return sorted(out, key=lambda k: (k[0], _bits(k[1])))

    def monomials(self) -> list[SuperPoly]:
        return [SuperPoly._make(self.ctx, {k: ONE}) for k in self.keys()]


def _solve_linear_map(images: list[dict]) -> list[list]:
    rows_keys = sorted(set().union(*images), key=repr) if images else []
    rows = [[img.get(k, ZERO) for img in images] for k in rows_keys]
    if not rows:
        rows = [[ZERO] * len(images)]
    return nullspace(rows, len(images))


def kernel_of_derivation(D: Derivation, w: Window) -> list[SuperPoly]:
    """Basis of ``{f in window : D f = 0}``."""
    if w.ctx != D.ctx:
        raise AlgebraError("window and derivation live on different contexts")
    basis = w.monomials()
    images = [derive(D, m).terms for m in basis]
    out = []
    for vec in _solve_linear_map(images):
        f = D.ctx.zero
        for c, m in zip(vec, basis):
            if c:
                f = f + m.scale(c)
        out.append(f)
    return out


def centralizer(D: Derivation, w: Window, parity: int) -> list[Derivation]:
    """Basis of derivations chi of the given parity, window-valued, with ``[chi, D] = 0``."""
    if w.ctx != D.ctx:
        raise AlgebraError("window and derivation live on different contexts")
    ctx = D.ctx
    monos = w.monomials()
    candidates = []
    for g in ctx.generators:
        want = (g.parity + parity) % 2
        for m in monos:
            if m.has_parity(want):
                candidates.append(Derivation(ctx, parity, {g.name: m}))
    flats = []
    for chi in candidates:
        b = bracket(chi, D)
        flats.append({(gi, k): c for gi, img in enumerate(b.images) for k, c in img.terms.items()})
    out = []
    for vec in _solve_linear_map(flats):
        total = Derivation.zero(ctx, parity)
        for c, chi in zip(vec, candidates):
            if c:
                total = total + chi.scale(c)
        out.append(total)
    return out


def odd_centralizer(D: Derivation, w: Window) -> list[Derivation]:
    return centralizer(D, w, ODD)
