"""Hypothesis strategies for random superpolynomials and derivations."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from superaudit.algebra import Context, even, odd, unit
from superaudit.fields import Derivation
from superaudit.gaussian import GaussianRational

CTX = Context([even("z"), unit("v"), odd("a"), odd("b"), odd("c")])
ODD_NAMES = ("a", "b", "c")

small = st.integers(-3, 3)
coeffs = st.builds(
    lambda p, q, s: GaussianRational(Fraction(p, q), s),
    small,
    st.integers(1, 3),
    st.integers(-1, 1),
)


@st.composite
def monomials(draw, ctx=CTX, parity=None):
    z = draw(st.integers(0, 2))
    v = draw(st.integers(-2, 2))
    mask = draw(st.integers(0, 7))
    if parity is not None and bin(mask).count("1") % 2 != parity:
        mask ^= 1
    exps = {"z": z, "v": v}
    exps.update({n: 1 for k, n in enumerate(ODD_NAMES) if mask >> k & 1})
    return ctx.monomial(exps)


@st.composite
def polys(draw, parity=None, max_terms=4, ctx=CTX):
    out = ctx.zero
    for _ in range(draw(st.integers(0, max_terms))):
        out = out + draw(monomials(ctx, parity)).scale(draw(coeffs))
    return out


def homogeneous(max_terms=4):
    return st.integers(0, 1).flatmap(lambda p: polys(parity=p, max_terms=max_terms).map(lambda f: (f, p)))


@st.composite
def derivations(draw, parity=None, max_terms=2):
    p = draw(st.integers(0, 1)) if parity is None else parity
    images = {}
    for g in CTX.generators:
        images[g.name] = draw(polys(parity=(g.parity + p) % 2, max_terms=max_terms))
    return Derivation(CTX, p, images)
