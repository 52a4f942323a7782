from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superaudit.algebra import (
    AlgebraError,
    ConjugationMode,
    Context,
    Generator,
    conjugate,
    even,
    invert_even,
    odd,
    unit,
)
from superaudit.gaussian import I, GaussianRational

from strategies import CTX, coeffs, homogeneous, polys

PAIRED = Context([
    even("z", "zbar"),
    even("zbar", "z"),
    even("t"),
    odd("zeta", "zetabar"),
    odd("eta", "etabar"),
    odd("zetabar", "zeta"),
    odd("etabar", "eta"),
])


def test_gaussian_normal_form():
    x = GaussianRational(Fraction(2, -4), Fraction(6, 8))
    assert x.re == Fraction(-1, 2) and x.re.denominator > 0
    assert x.conjugate() == GaussianRational(Fraction(-1, 2), Fraction(-3, 4))
    assert x.conjugate().conjugate() == x
    assert (x * x.inverse()) == 1
    assert x.render() == "(-1/2+3/4*i)"
    assert I.render() == "i" and GaussianRational(3).render() == "3"


@given(coeffs, coeffs)
def test_gaussian_field_axioms(a, b):
    assert a * b == b * a
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if a:
        assert a * a.inverse() == 1


def test_generators_validate():
    with pytest.raises(AlgebraError):
        Generator("zeta", 1, True)
    with pytest.raises(AlgebraError):
        Context([even("z"), odd("z")])
    with pytest.raises(AlgebraError):
        Context([even("z", "zbar"), odd("zbar", "z")])


def test_odd_square_vanishes():
    zeta = PAIRED.gen("zeta")
    assert (zeta * zeta).is_zero


def test_koszul_sign():
    zeta, eta = PAIRED.gens("zeta", "eta")
    assert (eta * zeta) == -(zeta * eta)
    assert (eta * zeta).render() == "-1*zeta*eta"


def test_bilinear_product():
    ctx = Context([unit("w"), odd("eta"), unit("w'"), odd("eta'")])
    w, eta, w1, eta1 = ctx.gens("w", "eta", "w'", "eta'")
    assert (w + eta) * (w1 + eta1) == w * w1 + w * eta1 + eta * w1 + eta * eta1


def test_negative_power_needs_unit():
    with pytest.raises(AlgebraError):
        CTX.gen("z", -1)
    assert (CTX.gen("v", -2) * CTX.gen("v", 2)) == CTX.one


def test_invert_even_examples():
    v = CTX.gen("v")
    assert invert_even(v) == CTX.gen("v", -1)
    ctx = Context([unit("d"), odd("beta"), odd("gamma")])
    d, beta, gamma = ctx.gens("d", "beta", "gamma")
    inv = invert_even(d + beta * gamma)
    assert inv == ctx.gen("d", -1) - ctx.gen("d", -2) * beta * gamma
    assert inv * (d + beta * gamma) == ctx.one
    with pytest.raises(AlgebraError):
        invert_even(ctx.gen("beta"))


def test_invert_even_rejects_non_unit_body():
    z, v = CTX.gens("z", "v")
    with pytest.raises(AlgebraError):
        invert_even(z)
    with pytest.raises(AlgebraError):
        invert_even(v + CTX.one)
    with pytest.raises(AlgebraError):
        invert_even(CTX.gen("a"))


def test_conjugate_examples():
    zeta, eta = PAIRED.gens("zeta", "eta")
    zb, eb = PAIRED.gens("zetabar", "etabar")
    assert conjugate(zeta.scale(I), "multiplicative") == zb.scale(-I)
    assert conjugate(zeta * eta, "multiplicative") == zb * eb
    assert conjugate(zeta * eta, "graded") == -(zb * eb)
    for mode in ConjugationMode:
        assert conjugate(conjugate(zeta * eta, mode), mode) == zeta * eta


def test_conjugate_needs_partner():
    with pytest.raises(AlgebraError):
        conjugate(PAIRED.gen("t"))


def test_render_format():
    v = CTX.gen("v")
    a, b = CTX.gens("a", "b")
    assert (b * a - v.scale(-1) ** -1 * 2).render() == "2*v^-1 + -1*a*b"
    assert CTX.zero.render() == "0"


@st.composite
def paired_polys(draw):
    out = PAIRED.zero
    for _ in range(draw(st.integers(0, 4))):
        exps = {"z": draw(st.integers(0, 2))}
        for n in ("zeta", "eta", "zetabar", "etabar"):
            if draw(st.booleans()):
                exps[n] = 1
        out = out + PAIRED.monomial(exps).scale(draw(coeffs))
    return out


@given(paired_polys(), st.sampled_from(list(ConjugationMode)))
def test_conjugation_is_an_involution(f, mode):
    assert conjugate(conjugate(f, mode), mode) == f


@given(paired_polys(), paired_polys())
def test_multiplicative_conjugation_is_multiplicative(f, g):
    assert conjugate(f * g, "multiplicative") == conjugate(f, "multiplicative") * conjugate(g, "multiplicative")


@given(homogeneous(), homogeneous())
def test_supercommutativity(fa, gb):
    (f, p), (g, q) = fa, gb
    sign = -1 if p and q else 1
    assert f * g == (g * f).scale(sign)


@given(polys(), polys(), polys())
@settings(max_examples=60)
def test_associative_and_distributive(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(polys())
def test_nilpotent_part(f):
    nil = f - f.body()
    assert (nil ** 4).is_zero


@given(polys(parity=0))
def test_invert_even_two_sided(f):
    v = CTX.gen("v")
    a = v.scale(2) + (f - f.body())
    inv = invert_even(a)
    assert a * inv == CTX.one == inv * a


@given(polys(), polys())
def test_equality_is_a_congruence(f, g):
    h = f + g - g
    assert h == f and hash(h) == hash(f)
    assert h * g == f * g
