"""Engine results against the sympy reference in ``oracle.py``.

The oracle rebuilds laws, fields and matrices from their formulas; the engine
objects are only converted, never reused, on the oracle side.
"""

import sympy as sp

import oracle as O
from superaudit import registry as R
from superaudit.algebra import invert_even
from superaudit.fields import bracket, conjugate_derivation, derive, pullback_one_form
from superaudit.groups import structure_constants_from_fields
from superaudit.invariants import Window, kernel_of_derivation, odd_centralizer


def to_oracle(f, alg):
    ctx = f.ctx
    out = alg.el()
    for (e, mask), c in f.terms.items():
        coeff = sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(c.im.numerator, c.im.denominator)
        for name, k in zip(ctx.even_names, e):
            coeff *= sp.Symbol(name) ** k
        odds = tuple(n for j, n in enumerate(ctx.odd_names) if mask >> j & 1)
        out = out + O.G(alg, {odds: coeff})
    return out


def der_to_oracle(X, alg):
    return O.Der(alg, X.parity, {n: to_oracle(X.image(n), alg) for n in X.ctx.names})


# -- the multiplicative N=2 law ------------------------------------------------


def sl11_law(p, q):
    v, xi, eta = p
    v1, xi1, eta1 = q
    return (
        v * v1 + eta * xi1,
        v * xi1 + xi * v1 + xi * v.inv() * eta * xi1,
        eta * v1 + v * eta1 + eta * xi1 * v1.inv() * eta1,
    )


def _triple(alg, suffix):
    return tuple(alg.x(n + suffix) for n in ("v", "xi", "eta"))


def test_sl11_law_associative_in_oracle():
    alg = O.Alg(["v", "v'", "v''"], ["xi", "eta", "xi'", "eta'", "xi''", "eta''"])
    a, b, c = (_triple(alg, s) for s in ("", "'", "''"))
    lhs = sl11_law(sl11_law(a, b), c)
    rhs = sl11_law(a, sl11_law(b, c))
    assert all(x == y for x, y in zip(lhs, rhs))


def test_engine_law_matches_oracle_law():
    G = R.mult_sl11()
    alg = O.Alg(["v", "v'"], ["xi", "eta", "xi'", "eta'"])
    law = sl11_law(_triple(alg, ""), _triple(alg, "'"))
    for name, expected in zip(("v", "xi", "eta"), law):
        assert to_oracle(G.mult[name], alg) == expected


def _left_field(alg, direction):
    a, b = _triple(alg, ""), _triple(alg, "'")
    law = sl11_law(a, b)
    slot = direction + "'"
    d = O.Der(alg, 0 if direction == "v" else 1, {slot: alg.c(1)})
    unit = {"v'": alg.c(1), "xi'": alg.el(), "eta'": alg.el()}
    return [d(comp).subs(unit) for comp in law]


def test_left_fields_match_oracle():
    alg = O.Alg(["v", "v'"], ["xi", "eta", "xi'", "eta'"])
    D1, D2, E = R.sl11_fields()
    for field, direction in ((D1, "eta"), (D2, "xi"), (E, "v")):
        images = _left_field(alg, direction)
        for name, img in zip(("v", "xi", "eta"), images):
            assert to_oracle(field.image(name), alg) == img, (direction, name)


def test_sl11_bracket_table_in_oracle():
    alg = O.Alg(["v"], ["xi", "eta"])
    v, xi, eta = alg.x("v"), alg.x("xi"), alg.x("eta")
    D1 = O.Der(alg, 1, {"eta": v})
    D2 = O.Der(alg, 1, {"v": -eta, "xi": v + xi * v.inv() * eta})
    E = O.Der(alg, 0, {"v": v, "xi": xi, "eta": eta})
    assert O.bracket(D1, D2) == E.scale(-1)
    assert not (O.bracket(D1, D2) == E.scale(-2))
    assert O.bracket(D1, D1) == O.Der(alg, 0, {})
    assert O.bracket(D2, D2) == O.Der(alg, 0, {})
    engine = structure_constants_from_fields(R.sl11_fields(), ["D1", "D2", "E"])
    assert engine.bracket(engine.unit_vector("D1"), engine.unit_vector("D2")) == engine.vector({"E": -1})


def test_n1_left_bracket_in_oracle():
    alg = O.Alg(["z", "z'"], ["zeta", "zeta'"])
    z, zeta, z1, zeta1 = alg.x("z"), alg.x("zeta"), alg.x("z'"), alg.x("zeta'")
    law = (z + z1 + zeta * zeta1, zeta + zeta1)
    unit = {"z'": alg.el(), "zeta'": alg.el()}
    Zimg = [O.Der(alg, 1, {"zeta'": alg.c(1)})(c).subs(unit) for c in law]
    Cimg = [O.Der(alg, 0, {"z'": alg.c(1)})(c).subs(unit) for c in law]
    Z = O.Der(alg, 1, {"z": Zimg[0], "zeta": Zimg[1]})
    C = O.Der(alg, 0, {"z": Cimg[0], "zeta": Cimg[1]})
    assert O.bracket(Z, Z) == C.scale(-2)


def test_aut_table_in_oracle():
    alg = O.Alg(["z"], ["zeta"])
    z, zeta = alg.x("z"), alg.x("zeta")
    U1 = O.Der(alg, 0, {"z": z * 2, "zeta": zeta})
    U2 = O.Der(alg, 0, {"z": alg.c(1)})
    V = O.Der(alg, 1, {"z": zeta, "zeta": alg.c(-1)})
    assert O.bracket(V, V) == U2.scale(-2)
    assert O.bracket(U2, U1) == U2.scale(2)
    assert O.bracket(U1, V) == V.scale(-1)
    assert O.bracket(U2, V) == O.Der(alg, 1, {})
    eU1, eU2, eV = R.aut_fields()
    for x, y in ((eV, eV), (eU2, eU1), (eU1, eV), (eU2, eV)):
        ox, oy = der_to_oracle(x, alg), der_to_oracle(y, alg)
        assert der_to_oracle(bracket(x, y), alg) == O.bracket(ox, oy)


def test_scaling_factor_in_oracle():
    alg = O.Alg(["z", "r", "b"], ["zeta"])
    z, r, b, zeta = (alg.x(n) for n in ("z", "r", "b", "zeta"))
    D = O.Der(alg, 1, {"zeta": alg.c(1), "z": zeta})
    Fimg = {"z": r * r * z + b, "zeta": r * zeta}
    for g in ("z", "zeta"):
        lhs = D(alg.x(g)).subs(Fimg)
        rhs = D(Fimg[g])
        assert lhs == rhs * r.inv()
    F, F_inv = R.scaling_pair()
    assert conjugate_derivation(F, F_inv, R.susy_D(R.AUT)).render() == "1*r^-1*zeta*d/dz + 1*r^-1*d/dzeta"


def test_berezinian_in_oracle():
    alg = O.Alg(["v"], ["xi", "eta"])
    v, xi, eta = alg.x("v"), alg.x("xi"), alg.x("eta")
    u = v + xi * v.inv() * eta
    assert (u - xi * v.inv() * eta) * v.inv() == 1
    assert to_oracle(R.sl11_u(), alg) == u


def test_matrix_product_in_oracle():
    alg = O.Alg(["v", "v'"], ["xi", "eta", "xi'", "eta'"])
    a, b = _triple(alg, ""), _triple(alg, "'")

    def mat(t):
        v, xi, eta = t
        return [[v + xi * v.inv() * eta, xi], [eta, v]]

    P = O.matmul(mat(a), mat(b))
    law = sl11_law(a, b)
    assert P[1][1] == law[0] and P[0][1] == law[1] and P[1][0] == law[2]
    assert P[0][0] == law[0] + law[1] * law[0].inv() * law[2]


def test_phi_homomorphism_in_oracle():
    alg = O.Alg(["d", "d'"], ["beta", "gamma", "beta'", "gamma'"])

    def mat(s):
        d, beta, gamma = alg.x("d" + s), alg.x("beta" + s), alg.x("gamma" + s)
        return [[d + beta * d.inv() * gamma, beta], [gamma, d]]

    def phi(m):
        (a, beta), (gamma, d) = m
        a2 = a.inv() * a.inv()
        return [[d.inv(), a2 * gamma * (-sp.I)], [a2 * beta * (-sp.I), a.inv()]]

    lhs = phi(O.matmul(mat(""), mat("'")))
    rhs = O.matmul(phi(mat("")), phi(mat("'")))
    assert all(lhs[i][j] == rhs[i][j] for i in range(2) for j in range(2))


def test_stabilizer_product_in_oracle():
    alg = O.Alg(["c", "d", "c'", "d'"], ["gamma", "gamma'"])

    def mat(c, d, g):
        ci = c.inv()
        return [[c, d, g], [alg.el(), ci, alg.el()], [alg.el(), ci * g, alg.c(1)]]

    c, d, g = alg.x("c"), alg.x("d"), alg.x("gamma")
    c1, d1, g1 = alg.x("c'"), alg.x("d'"), alg.x("gamma'")
    P = O.matmul(mat(c, d, g), mat(c1, d1, g1))
    Q = mat(c * c1, c * d1 + d * c1.inv() + g * c1.inv() * g1, c * g1 + g)
    assert all(P[i][j] == Q[i][j] for i in range(3) for j in range(3))


def _linear_rows(exprs, unknowns):
    rows = []
    for v in exprs:
        for c in sp.Poly(sp.expand(v), sp.Symbol("z")).coeffs():
            rows.append([sp.diff(c, u) for u in unknowns])
    return sp.Matrix(rows)


def test_kernel_dimension_in_oracle():
    alg = O.Alg(["z"], ["zeta1", "zeta2"])
    z, zeta1, zeta2 = alg.x("z"), alg.x("zeta1"), alg.x("zeta2")
    monos = [alg.c(1), z, zeta1, zeta2, zeta1 * zeta2]
    cs = sp.symbols("c0:5")
    f = alg.el()
    for c, m in zip(cs, monos):
        f = f + m * c
    D1 = O.Der(alg, 1, {"zeta1": alg.c(1), "z": zeta2})
    rows = _linear_rows(D1(f).t.values(), cs)
    assert len(cs) - rows.rank() == 3
    assert D1(z - zeta1 * zeta2) == alg.el()
    assert not (D1(z + zeta1 * zeta2) == alg.el())
    w = Window(R.C12S, {"z": (0, 2)}, {"z": 2, "zeta1": 1, "zeta2": 1}, 2)
    D1e, _ = R.susy2_fields()
    assert [f.render() for f in kernel_of_derivation(D1e, w)] == ["1", "1*zeta2", "-1*zeta1*zeta2 + 1*z"]


def test_odd_centralizer_in_oracle():
    alg = O.Alg(["z"], ["zeta"])
    z, zeta = alg.x("z"), alg.x("zeta")
    a = sp.symbols("a0:6")
    b = sp.symbols("b0:6")
    xz = alg.el()
    xzeta = alg.el()
    for k in range(6):
        xz = xz + zeta * (sp.Symbol("z") ** k * a[k])
        xzeta = xzeta + alg.c(sp.Symbol("z") ** k * b[k])
    X = O.Der(alg, 1, {"z": xz, "zeta": xzeta})
    D = O.Der(alg, 1, {"zeta": alg.c(1), "z": zeta})
    br = O.bracket(X, D)
    rows = _linear_rows([v for img in br.im.values() for v in img.t.values()], list(a) + list(b))
    assert len(a) + len(b) - rows.rank() == 1
    (chi,) = odd_centralizer(R.susy_D(), Window(R.C11, {"z": (0, 5)}))
    assert chi.render() == "-1*zeta*d/dz + 1*d/dzeta"


def test_frozen_derived_values():
    # values computed by the oracle above, frozen as engine renderings
    B = R.RF
    d, beta, gamma = B.gens("d", "beta", "gamma")
    assert invert_even(d + beta * gamma).render() == "-1*d^-2*beta*gamma + 1*d^-1"
    D1, _ = R.susy2_fields()
    z1, z2 = R.C12S.gens("zeta1", "zeta2")
    assert derive(D1, z1 * z2).render() == "1*zeta2"
    assert bracket(R.susy_D(), R.susy_D()).render() == "2*d/dz"
    F, _ = R.scaling_pair()
    assert pullback_one_form(F, R.form_s()).render() == "dz*(1*r^2) + dzeta*(-1*r^2*zeta)"
