import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superaudit import registry as R
from superaudit.algebra import Context, even, odd, unit
from superaudit.groups import copies
from superaudit.supermatrix import (
    BlockFormat,
    MatrixError,
    SuperMatrix,
    berezinian,
    inverse,
    is_homogeneous,
    matmul,
    phi_map,
)

from strategies import CTX, polys

GEN11 = Context([unit("a"), odd("beta"), odd("gamma"), unit("d"),
                 unit("a'"), odd("beta'"), odd("gamma'"), unit("d'")])


def generic11(p=""):
    a, b, c, d = (GEN11.gen(n + p) for n in ("a", "beta", "gamma", "d"))
    return SuperMatrix.square(1, 1, [[a, b], [c, d]])


def test_unitriangular_product():
    dbl = copies(R.C12, 2)
    P = matmul(R.unitri_matrix(dbl, 0), R.unitri_matrix(dbl, 1))
    z, zeta, chi, z1, zeta1, chi1 = dbl.gens("z", "zeta", "chi", "z'", "zeta'", "chi'")
    assert P[0, 1] == z + z1 + zeta * chi1
    assert P[0, 2] == zeta + zeta1
    assert P[2, 1] == chi + chi1


def test_identity_and_generic_product():
    A, B = generic11(), generic11("'")
    assert matmul(A, SuperMatrix.identity(GEN11, A.format)) == A
    a, b, c, d, a1, b1, c1, d1 = (GEN11.gen(n) for n in GEN11.names)
    assert matmul(A, B) == SuperMatrix.square(1, 1, [
        [a * a1 + b * c1, a * b1 + b * d1],
        [c * a1 + d * c1, c * b1 + d * d1],
    ])


def test_format_mismatch():
    A = generic11()
    B = R.unitri_matrix()
    with pytest.raises(MatrixError):
        matmul(A, SuperMatrix.identity(GEN11, BlockFormat.square(2, 1)))
    with pytest.raises(MatrixError):
        matmul(A, B)


def test_inverse_examples():
    v = R.SL11.gen("v")
    vi = R.SL11.gen("v", -1)
    assert inverse(SuperMatrix.square(1, 1, [[v, 0], [0, v]])) == SuperMatrix.square(1, 1, [[vi, 0], [0, vi]])
    A = generic11()
    one = SuperMatrix.identity(GEN11, A.format)
    assert matmul(A, inverse(A)) == one == matmul(inverse(A), A)
    z = CTX.gen("z")
    with pytest.raises(MatrixError):
        inverse(SuperMatrix.square(1, 1, [[z, 0], [0, 1]]))


def test_berezinian_examples():
    ctx = Context([unit("u"), unit("v")])
    u, v = ctx.gens("u", "v")
    assert berezinian(SuperMatrix.square(1, 1, [[u, 0], [0, v]])) == u * ctx.gen("v", -1)
    assert berezinian(R.sl11_matrix()) == R.SL11.one
    assert berezinian(R.x_matrix()) == R.XCTX.one
    with pytest.raises(MatrixError):
        berezinian(SuperMatrix.square(1, 1, [[u, 0], [0, ctx.zero]]))


def test_phi_on_generic_matrix():
    A = generic11()
    P = phi_map(A)
    assert P[1, 1] == GEN11.gen("a", -1)
    assert P[0, 0] == GEN11.gen("d", -1)
    with pytest.raises(MatrixError):
        phi_map(R.unitri_matrix())


def test_render():
    assert R.x_matrix().render() == "[1*x, 1*xi]\n[1*xi, 1*x]"


def _nil(f):
    return f - f.body()


@st.composite
def invertible(draw, p, q):
    n = p + q
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            par = (i >= p) ^ (j >= p)
            if par:
                row.append(draw(polys(parity=1, max_terms=2)))
            else:
                x = _nil(draw(polys(parity=0, max_terms=2)))
                if i == j:
                    x = x + CTX.gen("v", draw(st.integers(-1, 1))).scale(draw(st.integers(1, 3)))
                row.append(x)
        rows.append(row)
    return SuperMatrix(BlockFormat.square(p, q), rows)


formats = st.sampled_from([(1, 1), (2, 1)])


@given(formats.flatmap(lambda f: st.tuples(invertible(*f), invertible(*f), invertible(*f))))
@settings(max_examples=25, deadline=None)
def test_matmul_associative(triple):
    A, B, C = triple
    assert matmul(matmul(A, B), C) == matmul(A, matmul(B, C))


@given(formats.flatmap(lambda f: st.tuples(invertible(*f), invertible(*f))))
@settings(max_examples=25, deadline=None)
def test_berezinian_multiplicative(pair):
    A, B = pair
    assert berezinian(matmul(A, B)) == berezinian(A) * berezinian(B)


@given(formats.flatmap(lambda f: invertible(*f)))
@settings(max_examples=25, deadline=None)
def test_inverse_two_sided_and_homogeneous(A):
    Ai = inverse(A)
    one = SuperMatrix.identity(CTX, A.format)
    assert matmul(A, Ai) == one == matmul(Ai, A)
    assert is_homogeneous(Ai) and is_homogeneous(matmul(A, Ai))
