"""Named audit suites and report emission.

A check ends in one of three statuses:

* ``pass``: the identity holds exactly;
* ``fail``: an identity the engine expects to hold does not;
* ``discrepancy``: the computed value disagrees with a value stated in the
  source material. The computed value is always shown as the witness.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import __version__
from . import registry as R
from .algebra import EVEN, ODD, ConjugationMode, SuperPoly, invert_even
from .fields import (
    Derivation,
    Morphism,
    bracket,
    compose,
    conjugate_derivation,
    derive,
    partial,
    pullback_one_form,
)
from .gaussian import I, GaussianRational
from .groups import (
    GroupPresentation,
    SpanError,
    TangentVector,
    check_group_axioms,
    copies,
    express_in_basis,
    invariance_check,
    invariant_field,
    primed,
    structure_constants_from_fields,
    susy_scaling_check,
)
from .invariants import Window, kernel_of_derivation, odd_centralizer
from .linalg import rank, solve
from .lie import (
    LieSuperAlgebra,
    bracket_span_closure,
    check_super_jacobi,
    complexified_span_check,
    render_vector,
)
from .supermatrix import (
    SuperMatrix,
    berezinian,
    inverse,
    is_homogeneous,
    phi_map,
    sigma_map,
    supercommutator,
)

PASS, FAIL, DISCREPANCY = "pass", "fail", "discrepancy"
STATUSES = (PASS, FAIL, DISCREPANCY)

CONVENTIONS = (
    "bracket [X,Y] = XY - (-1)^(|X||Y|) YX; d/dx acts as a left derivative",
    "left field: d/dx' of mult at x' = unit, certified by mult* X = (id (x) X) mult*",
    "right field: d/dx of mult at x = unit, certified by mult* X = (X (x) id) mult*",
    "SL(1|1) entries reduced by u = v + xi*v^-1*eta",
    "compactness of even parts is not modelled",
)


class UnknownSuite(ValueError):
    pass


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: str = ""
    anchor: str = ""


@dataclass
class Report:
    suite: str
    mode: str
    version: str = __version__
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status == PASS for c in self.checks)

    def counts(self) -> dict[str, int]:
        return {s: sum(1 for c in self.checks if c.status == s) for s in STATUSES}


def _ok(flag: bool) -> str:
    return PASS if flag else FAIL


def _claim(flag: bool) -> str:
    return PASS if flag else DISCREPANCY


def _anchor(entry_id: str) -> str:
    return R.lookup(entry_id).anchor


# -- susy1 ---------------------------------------------------------------


def _axioms(gid: str) -> list[Check]:
    G = R.lookup(gid).value
    return [Check(f"{gid} {r.name}", _ok(r.ok), r.witness, _anchor(gid)) for r in check_group_axioms(G)]


def _both_sides(G: GroupPresentation, v: TangentVector):
    return {side: invariant_field(G, v, side) for side in ("left", "right")}


def _lie_table(fields, names) -> tuple[LieSuperAlgebra | None, str]:
    try:
        g = structure_constants_from_fields(fields, names)
    except SpanError as exc:
        return None, str(exc)
    return g, g.render()


def suite_susy1(mode: str) -> list[Check]:
    out = _axioms("grp.mult.c11x") + _axioms("grp.add.c11")
    add = R.lookup("grp.add.c11").value
    D = R.susy_D()
    anchor_D = _anchor("der.D.c11")

    fields = _both_sides(add, TangentVector(ODD, {"zeta": 1}))
    for side, X in fields.items():
        inv = invariance_check(add, X, side)
        out.append(Check(f"additive N=1 odd {side} field is {side}-invariant", _ok(inv.ok), X.render() if inv.ok else inv.witness, anchor_D))
    which = [side for side, X in fields.items() if X == D]
    out.append(Check(
        "additive N=1: D = d/dzeta + zeta*d/dz arises as an invariant field",
        _ok(bool(which)),
        f"side: {', '.join(which) or 'none'}; left = {fields['left'].render()}; right = {fields['right'].render()}",
        anchor_D,
    ))
    for side in ("left", "right"):
        r = invariance_check(add, partial(R.C11, "z"), side)
        out.append(Check(f"additive N=1: d/dz is {side}-invariant", _ok(r.ok), r.witness, anchor_D))

    dd = bracket(D, D)
    want = partial(R.C11, "z").scale(2)
    out.append(Check("[D,D] = 2*d/dz", _ok(dd == want), dd.render(), anchor_D))

    mult = R.lookup("grp.mult.c11x").value
    for gid, G, even_dir, odd_dir in [
        ("grp.mult.c11x", mult, "w", "eta"),
        ("grp.add.c11", add, "z", "zeta"),
    ]:
        Z = invariant_field(G, TangentVector(ODD, {odd_dir: 1}), "left")
        C = invariant_field(G, TangentVector(EVEN, {even_dir: 1}), "left")
        inv = invariance_check(G, Z, "left")
        out.append(Check(f"{gid}: left odd field Z is left-invariant", _ok(inv.ok), Z.render() if inv.ok else inv.witness, _anchor(gid)))
        g, table = _lie_table([Z, C], ["Z", "C"])
        if g is None:
            out.append(Check(f"{gid}: left fields span a Lie superalgebra", FAIL, table, _anchor(gid)))
            continue
        zz = g.constants[(0, 0)]
        out.append(Check(
            f"{gid}: [Z,Z] = 0 as stated for N=1",
            _claim(not any(zz)),
            f"computed [Z,Z] = {render_vector(g.names, zz)}; table: " + "; ".join(table.splitlines()),
            _anchor("lie.n1.printed"),
        ))
    return out


# -- susy2 ---------------------------------------------------------------


def suite_susy2(mode: str) -> list[Check]:
    out = _axioms("grp.mult.sl11") + _axioms("grp.add.c12")
    G = R.lookup("grp.mult.sl11").value
    D1, D2, E = R.sl11_fields()
    dirs = [("D1", TangentVector(ODD, {"eta": 1}), D1), ("D2", TangentVector(ODD, {"xi": 1}), D2), ("E", TangentVector(EVEN, {"v": 1}), E)]
    for label, v, printed in dirs:
        eid = f"der.{label}.sl11"
        both = _both_sides(G, v)
        X = both["left"]
        out.append(Check(f"left field {label} matches the displayed field", _ok(X == printed), X.render(), _anchor(eid)))
        for side, Y in both.items():
            r = invariance_check(G, Y, side)
            out.append(Check(f"{label}: {side} field is {side}-invariant", _ok(r.ok), Y.render() if r.ok else r.witness, _anchor(eid)))

    r = invariance_check(G, partial(R.SL11, "eta"), "left")
    out.append(Check("d/deta is not left-invariant", _ok(not r.ok), r.witness, _anchor("grp.mult.sl11")))

    b12 = bracket(D1, D2)
    g, table = _lie_table([D1, D2, E], ["D1", "D2", "E"])
    if g is None:
        out.append(Check("{D1, D2, E} closes under the bracket", FAIL, table, _anchor("der.E.sl11")))
    else:
        out.append(Check("{D1, D2, E} closes under the bracket", PASS, "; ".join(table.splitlines()), _anchor("der.E.sl11")))
        c12 = g.constants[(0, 1)]
        out.append(Check(
            "[D1,D2] = -2E as stated",
            _claim(c12 == g.vector({"E": -2})),
            f"computed [D1,D2] = {render_vector(g.names, c12)} ({b12.render()})",
            "[D1,D2] = -2E",
        ))
        same = not any(g.constants[(0, 0)]) and not any(g.constants[(1, 1)])
        out.append(Check("[Di,Di] = 0", _ok(same), f"[D1,D1] = {bracket(D1, D1).render()}; [D2,D2] = {bracket(D2, D2).render()}", "[Di,Di] = 0"))
        out.append(Check("{D1, D2, E} satisfies super Jacobi", _ok(check_super_jacobi(g).ok), check_super_jacobi(g).witness, _anchor("lie.n2")))
        central = all(not any(g.bracket(c12, g.unit_vector(n))) for n in g.names) and any(c12)
        out.append(Check("C = [D1,D2] is nonzero and central", _ok(central), render_vector(g.names, c12), _anchor("lie.n2")))

    add = R.lookup("grp.add.c12").value
    Z1 = invariant_field(add, TangentVector(ODD, {"zeta": 1}), "left")
    Z2 = invariant_field(add, TangentVector(ODD, {"chi": 1}), "left")
    Cz = invariant_field(add, TangentVector(EVEN, {"z": 1}), "left")
    g2, table2 = _lie_table([Z1, Z2, Cz], ["Z1", "Z2", "C"])
    ok2 = g2 is not None and not any(g2.constants[(0, 0)]) and not any(g2.constants[(1, 1)]) and any(g2.constants[(0, 1)])
    out.append(Check("additive N=2: left fields give <Z1, Z2, C> with [Zi,Zi] = 0", _ok(ok2), "; ".join(table2.splitlines()), _anchor("lie.n2")))

    S1, S2 = R.susy2_fields()
    want = partial(R.C12S, "z").scale(2)
    s12 = bracket(S1, S2)
    out.append(Check("[D1,D2] = 2*d/dz on C^{1|2}", _ok(s12 == want), s12.render(), "[D1,D2] = 2*d/dz"))
    sq = [bracket(S, S).scale(GaussianRational(1, 0) / 2) for S in (S1, S2)]
    out.append(Check("D1^2 = D2^2 = 0 on C^{1|2}", _ok(all(s.is_zero for s in sq)), f"D1^2 = {sq[0].render()}; D2^2 = {sq[1].render()}", "D1^2 = D2^2 = 0"))
    return out


# -- sl11-matrix ---------------------------------------------------------


def _matrix_identity(M: SuperMatrix) -> SuperMatrix:
    return SuperMatrix.identity(M.ctx, M.format)


def suite_sl11_matrix(mode: str) -> list[Check]:
    out = []
    anchor = _anchor("mat.sl11")
    M = R.sl11_matrix()
    ber = berezinian(M)
    out.append(Check("Berezinian of (u, xi; eta, v) is 1", _ok(ber == M.ctx.one), ber.render(), anchor))

    G = R.lookup("grp.mult.sl11").value
    dbl = G.doubled
    P = R.sl11_matrix(dbl, 0) @ R.sl11_matrix(dbl, 1)
    comps = {"v": P[1, 1], "xi": P[0, 1], "eta": P[1, 0]}
    bad = [f"{n}: {(comps[n] - G.mult[n]).render()}" for n in comps if comps[n] != G.mult[n]]
    out.append(Check("matrix product reproduces the N=2 multiplicative law", _ok(not bad), "; ".join(bad), _anchor("grp.mult.sl11")))
    vv, xx, ee = G.mult["v"], G.mult["xi"], G.mult["eta"]
    u_pred = vv + xx * invert_even(vv) * ee
    out.append(Check("product stays on u = v + xi*v^-1*eta", _ok(P[0, 0] == u_pred), (P[0, 0] - u_pred).render(), anchor))
    Minv = inverse(M)
    out.append(Check("M * M^-1 = 1 on SL(1|1)", _ok(M @ Minv == _matrix_identity(M)), Minv.render().replace("\n", "; "), anchor))

    add = R.lookup("grp.add.c12").value
    dbl2 = add.doubled
    Q = R.unitri_matrix(dbl2, 0) @ R.unitri_matrix(dbl2, 1)
    expect = SuperMatrix.square(2, 1, [[1, add.mult["z"], add.mult["zeta"]], [0, 1, 0], [0, add.mult["chi"], 1]])
    out.append(Check("unitriangular SL(2|1) product reproduces the additive N=2 law", _ok(Q == expect), Q.render().replace("\n", "; "), _anchor("mat.c12.unitri")))
    bu = berezinian(R.unitri_matrix())
    out.append(Check("unitriangular family has Berezinian 1", _ok(bu == R.C12.one), bu.render(), _anchor("mat.c12.unitri")))

    law1 = R.lookup("grp.mult.c11x").value
    for mid, build, base, par, sign in [("mat.X", R.x_matrix, R.XCTX, ("x", "xi"), 1), ("mat.Xhat", R.xhat_matrix, R.YCTX, ("y", "eta"), -1)]:
        b = berezinian(build())
        out.append(Check(f"{mid}: Berezinian 1", _ok(b == base.one), b.render(), _anchor(mid)))
        d2 = copies(base, 2)
        prod = build(d2, 0) @ build(d2, 1)
        even_ok = prod[0, 0] == prod[1, 1]
        odd_ok = prod[1, 0] == prod[0, 1].scale(sign)
        out.append(Check(f"{mid}: closed under multiplication", _ok(even_ok and odd_ok), prod.render().replace("\n", "; "), _anchor(mid)))
        if mid == "mat.X":
            ren = Morphism(copies(R.C11X, 2), d2, {"w": d2.gen("x"), "eta": d2.gen("xi"), "w'": d2.gen("x'"), "eta'": d2.gen("xi'")})
            same = ren(law1.mult["w"]) == prod[0, 0] and ren(law1.mult["eta"]) == prod[0, 1]
            out.append(Check("mat.X: product is the multiplicative N=1 law", _ok(same), "", _anchor("grp.mult.c11x")))

    g = R.sl11_algebra()
    mats = _sl11_matrices()
    rel_bad = []
    for i, a in enumerate(g.names):
        for j, b in enumerate(g.names):
            got = supercommutator(mats[a], mats[b])
            want = _combo_matrix(g.constants[(i, j)], g.names, mats)
            if got != want:
                rel_bad.append(f"[{a},{b}]")
    out.append(Check("C = 1, E = E12, F = E21 satisfy the sl(1|1) relations", _ok(not rel_bad), ", ".join(rel_bad), _anchor("lie.sl11")))
    for sid in ("span.X.tangent", "span.Xhat.tangent"):
        rep = bracket_span_closure(R.lookup(sid).value)
        out.append(Check(f"{sid}: bracket-closed", _ok(rep.closed), _render_closure(rep, R.lookup(sid).value), _anchor(sid)))
    return out


def _sl11_matrices() -> dict[str, SuperMatrix]:
    ctx = R.XCTX

    def m(rows):
        return SuperMatrix.square(1, 1, [[ctx.const(x) for x in r] for r in rows])

    return {"C": m([[1, 0], [0, 1]]), "E": m([[0, 1], [0, 0]]), "F": m([[0, 0], [1, 0]])}


def _combo_matrix(vec, names, mats) -> SuperMatrix:
    first = mats[names[0]]
    acc = first.map(lambda x: x.ctx.zero)
    for c, n in zip(vec, names):
        if c:
            acc = SuperMatrix(acc.format, [[x + y.scale(c) for x, y in zip(r, s)] for r, s in zip(acc.entries, mats[n].entries)])
    return acc


def _render_closure(rep, span) -> str:
    return "; ".join(rep.render(span.ambient, span.names).splitlines())


# -- incidence -----------------------------------------------------------

SUSY_WEIGHTS = {"z": 2, "zeta1": 1, "zeta2": 1}


def _basis_text(basis) -> str:
    return "{" + ", ".join(f.render() for f in basis) + "}"


def suite_incidence(mode: str) -> list[Check]:
    out = []
    S1, S2 = R.susy2_fields()
    ctx = R.C12S
    z, z1, z2 = ctx.gens("z", "zeta1", "zeta2")
    anchor = "z - z' - zeta'*zeta = 0"
    wt = Window(ctx, {"z": (0, 2)}, SUSY_WEIGHTS, 2)
    k1 = kernel_of_derivation(S1, wt)
    expect1 = [ctx.one, z2, z - z1 * z2]
    out.append(Check(
        "ker D1 in weighted degree <= 2 is {1, zeta2, z - zeta1*zeta2}",
        _ok(len(k1) == 3 and _same_span(k1, expect1)),
        f"dim {len(k1)}: {_basis_text(k1)}",
        anchor,
    ))
    lit = kernel_of_derivation(S1, Window(ctx, {"z": (0, 2)}))
    gen_ok = _same_span(lit, _products([ctx.one, z2], z - z1 * z2, 2, ctx))
    out.append(Check(
        "ker D1 with z-exponent <= 2 is generated by zeta2 and z - zeta1*zeta2",
        _ok(gen_ok),
        f"dim {len(lit)}: {_basis_text(lit)}",
        anchor,
    ))
    k2 = kernel_of_derivation(S2, wt)
    expect2 = [ctx.one, z1, z + z1 * z2]
    out.append(Check(
        "ker D2 in weighted degree <= 2 is {1, zeta1, z + zeta1*zeta2}",
        _ok(len(k2) == 3 and _same_span(k2, expect2)),
        f"dim {len(k2)}: {_basis_text(k2)}",
        anchor,
    ))
    ok = all(derive(S1, f).is_zero for f in k1 + lit) and all(derive(S2, f).is_zero for f in k2)
    out.append(Check("every reported invariant is annihilated", _ok(ok), "", anchor))

    # X-coordinates (zx, tx) = (z - zeta1*zeta2, zeta2), Xhat-coordinates (zh, th) = (z + zeta1*zeta2, zeta1)
    zx, tx, zh, th = z - z1 * z2, z2, z + z1 * z2, z1
    rel = zx - zh
    k = _ratio_const(rel, tx * th)
    out.append(Check(
        "invariants satisfy zx - zh - k*tx*th = 0 with constant k",
        _ok(k is not None),
        f"zx = {zx.render()}, zh = {zh.render()}, k = {k.render() if k is not None else 'none'}",
        anchor,
    ))
    return out


def _products(seeds, x, n, ctx):
    out = []
    p = ctx.one
    for _ in range(n + 1):
        out += [s * p for s in seeds]
        p = p * x
    return out


def _same_span(a, b) -> bool:
    keys = sorted({k for f in list(a) + list(b) for k in f.terms}, key=repr)

    def row(f):
        return [f.terms.get(k, GaussianRational(0)) for k in keys]

    ra = rank([row(f) for f in a])
    return ra == rank([row(f) for f in b]) == rank([row(f) for f in list(a) + list(b)])


def _ratio_const(num: SuperPoly, den: SuperPoly) -> GaussianRational | None:
    if den.is_zero:
        return None
    (key, c), = sorted(den.terms.items(), key=repr)[:1]
    k = num.coefficient(key) / c
    return k if num == den.scale(k) else None


# -- realform ------------------------------------------------------------


def _mat_text(M: SuperMatrix) -> str:
    return M.render().replace("\n", "; ")


def _diff_text(A: SuperMatrix, B: SuperMatrix) -> str:
    return "; ".join(
        f"({i},{j}): {(A[i, j] - B[i, j]).render()}"
        for i in range(A.shape[0])
        for j in range(A.shape[1])
        if A[i, j] != B[i, j]
    )


def _sigma_checks(mode: str, M, Mp) -> list[Check]:
    anchor = _anchor(f"inv.sigma.{mode}")
    out = []
    ss = sigma_map(sigma_map(M, mode), mode)
    out.append(Check(f"sigma o sigma = id [{mode}]", _ok(ss == M), _diff_text(ss, M) or _mat_text(sigma_map(M, mode)), anchor))
    lhs = sigma_map(M @ Mp, mode)
    rhs = sigma_map(M, mode) @ sigma_map(Mp, mode)
    out.append(Check(f"sigma(M*M') = sigma(M)*sigma(M') [{mode}]", _claim(lhs == rhs), _diff_text(lhs, rhs), anchor))
    b = berezinian(sigma_map(M, mode))
    out.append(Check(f"Ber(sigma(M)) = 1 [{mode}]", _claim(b == M.ctx.one), b.render(), anchor))
    return out


def suite_realform(mode: str) -> list[Check]:
    mode = ConjugationMode(mode).value
    other = ConjugationMode.GRADED.value if mode == ConjugationMode.MULTIPLICATIVE.value else ConjugationMode.MULTIPLICATIVE.value
    out = []
    M, Mp = R.realform_matrix(0), R.realform_matrix(1)
    anchor_phi = _anchor("mor.phi.matrix")
    lhs = phi_map(M @ Mp)
    rhs = phi_map(M) @ phi_map(Mp)
    out.append(Check("phi(M*M') = phi(M)*phi(M')", _ok(lhs == rhs), _diff_text(lhs, rhs), anchor_phi))

    # second factor exactly as displayed: primes missing on beta and gamma
    a1, d1 = Mp[0, 0], Mp[1, 1]
    beta, gamma = M[0, 1], M[1, 0]
    a1i = invert_even(a1)
    shown = SuperMatrix(M.format, [[invert_even(d1), (a1i * a1i * gamma).scale(-I)], [(a1i * a1i * beta).scale(-I), a1i]])
    rhs_shown = phi_map(M) @ shown
    out.append(Check("phi(M*M') matches the displayed right-hand side verbatim", _claim(lhs == rhs_shown), _diff_text(lhs, rhs_shown), anchor_phi))
    b = berezinian(phi_map(M))
    out.append(Check("Ber(phi(M)) = 1", _ok(b == M.ctx.one), b.render(), anchor_phi))

    G = R.lookup("grp.mult.sl11").value
    phi, phi_inv = R.phi_pullbacks()
    dbl = G.doubled
    lifts = [Morphism(G.coords, dbl, {n: dbl.gen(primed(n, k)) for n in G.coords.names}) for k in (0, 1)]
    both = Morphism(dbl, dbl, {primed(n, k): lifts[k](phi.images[n]) for k in (0, 1) for n in G.coords.names})
    mstar = G.mult_morphism()
    bad = [n for n in G.coords.names if mstar(phi.images[n]) != both(G.mult[n])]
    out.append(Check("phi* is compatible with the N=2 multiplicative law", _ok(not bad), ", ".join(bad), _anchor("mor.phi.sl11")))
    D1, D2, _ = R.sl11_fields()
    images = []
    ok = True
    for label, X in (("D1", D1), ("D2", D2)):
        Y = conjugate_derivation(phi, phi_inv, X)
        hit = [lab for lab, T in (("D1", D1), ("D2", D2)) if _const_multiple(Y, T) is not None]
        ok = ok and bool(hit)
        images.append(f"phi sends {label} to {Y.render()}" + (f" ~ {hit[0]}" if hit else ""))
    out.append(Check("phi preserves or exchanges the distributions D1, D2", _ok(ok), "; ".join(images), _anchor("mor.phi.sl11")))

    out += _sigma_checks(mode, M, Mp)
    out += [Check(c.name + " (other mode, informational)", c.status, c.witness, c.anchor) for c in _sigma_checks(other, M, Mp)[:1]]

    g = R.sl11_algebra()
    jac = check_super_jacobi(g)
    out.append(Check("sl(1|1) satisfies super Jacobi", _ok(jac.ok), jac.witness, _anchor("lie.sl11")))
    for sid in ("span.su11.variant", "span.sl11.standard", "span.su11.printed"):
        s = R.lookup(sid).value
        rep = bracket_span_closure(s)
        cx = complexified_span_check(s)
        # the printed span is a stated claim; the other two are engine expectations
        judge = _claim if sid == "span.su11.printed" else _ok
        out.append(Check(f"{sid}: bracket-closed over R", judge(rep.closed), _render_closure(rep, s), _anchor(sid)))
        out.append(Check(f"{sid}: complexification is sl(1|1)", judge(cx), f"complex rank {rank([list(v) for v in s.vectors])}", _anchor(sid)))
    return out


def _const_multiple(Y: Derivation, T: Derivation) -> GaussianRational | None:
    coeffs = express_in_basis(Y, [T])
    return coeffs[0] if coeffs is not None and coeffs[0] else None


# -- aut-c11 -------------------------------------------------------------


def suite_aut_c11(mode: str) -> list[Check]:
    out = []
    F, F_inv = R.scaling_pair()
    D = R.susy_D(R.AUT)
    anchor_F = _anchor("mor.F.aut")
    res = susy_scaling_check(F, F_inv, D)
    out.append(Check("F_{r,b} satisfies F* o D = k D o F* with a unit k", _ok(res.ok and res.k is not None), f"k = {res.k.render()}" if res.k is not None else res.witness, anchor_F))
    conj = conjugate_derivation(F, F_inv, D)
    out.append(Check("F* D (F*)^-1 = k D", _ok(res.k is not None and conj == D.times(res.k)), conj.render(), anchor_F))
    ident = Morphism.identity(R.AUT)
    rid = susy_scaling_check(ident, ident, D)
    out.append(Check("identity has k = 1", _ok(rid.ok and rid.k == R.AUT.one), rid.k.render() if rid.k is not None else rid.witness, anchor_F))
    z, zeta = R.AUT.gens("z", "zeta")
    G2 = Morphism(R.AUT, R.AUT, {"z": z.scale(2)})
    G2i = Morphism(R.AUT, R.AUT, {"z": z.scale(GaussianRational(1, 0) / 2)})
    r2 = susy_scaling_check(G2, G2i, D)
    out.append(Check("z -> 2z, zeta -> zeta admits no scalar k", _ok(not r2.ok), r2.witness, anchor_F))

    s = R.form_s()
    pb = pullback_one_form(F, s)
    r = R.AUT.gen("r")
    want = s.times(r * r)
    out.append(Check("F*(s) = r^2 * s", _ok(pb == want), pb.render(), _anchor("form.s.aut")))

    Dc = R.susy_D()
    U1, U2, V = R.aut_fields()
    for w in (0, 1, 5):
        basis = odd_centralizer(Dc, Window(R.C11, {"z": (0, w)}))
        ok = len(basis) == 1 and _const_multiple(basis[0], V) is not None
        out.append(Check(f"odd centralizer of D with z-exponent <= {w} is spanned by V", _ok(ok), f"dim {len(basis)}: " + "; ".join(b.render() for b in basis), _anchor("der.V.c11")))
    for label, X in (("U1", U1), ("U2", U2), ("V", V)):
        b = bracket(X, Dc)
        ok = b.is_zero or _const_multiple(b, Dc) is not None
        out.append(Check(f"[{label}, D] is a constant multiple of D", _ok(ok), b.render(), _anchor(f"der.{label}.c11")))

    g, table = _lie_table([U1, U2, V], ["U1", "U2", "V"])
    if g is None:
        out.append(Check("{U1, U2, V} closes under the bracket", FAIL, table, _anchor("der.V.c11")))
        return out
    out.append(Check("{U1, U2, V} closes under the bracket", PASS, "; ".join(table.splitlines()), _anchor("der.V.c11")))
    jac = check_super_jacobi(g)
    out.append(Check("{U1, U2, V} satisfies super Jacobi", _ok(jac.ok), jac.witness, _anchor("der.V.c11")))
    printed = [("V", "V", {"U2": 2}), ("U2", "U1", {"U1": -2}), ("U2", "V", {"V": -1}), ("U1", "V", {})]
    swap = {"U1": "U2", "U2": "U1", "V": "V"}
    for a, b, combo in printed:
        got = g.bracket(g.unit_vector(a), g.unit_vector(b))
        shown = "+".join(f"{c}{n}" for n, c in combo.items()) or "0"
        out.append(Check(
            f"[{a},{b}] = {shown} as printed",
            _claim(got == g.vector(combo)),
            f"computed [{a},{b}] = {render_vector(g.names, got)}",
            f"[{a},{b}] = {shown}",
        ))
    matched = []
    for a, b, combo in printed[1:]:
        got = g.bracket(g.unit_vector(swap[a]), g.unit_vector(swap[b]))
        matched.append(got == g.vector({swap[n]: c for n, c in combo.items()}))
    out.append(Check(
        "printed [U,U] and [U,V] entries hold after swapping U1 and U2",
        _ok(all(matched)),
        "; ".join(f"{'ok' if m else 'mismatch'}: [{swap[a]},{swap[b]}]" for m, (a, b, _) in zip(matched, printed[1:])),
        "[U2,U1] = -2U1, [U2,V] = -V, [U1,V] = 0",
    ))

    M, Mp = R.mgrp_matrix(0), R.mgrp_matrix(1)
    P = M @ Mp
    c, d, c1, d1 = R.MGRP.gens("c", "d", "c'", "d'")
    expect = SuperMatrix.square(2, 1, [[c * c1, c * d1 + d * invert_even(c1), 0], [0, invert_even(c * c1), 0], [0, 0, 1]])
    out.append(Check("matrix family closed under multiplication", _ok(P == expect), _mat_text(P), _anchor("mat.mgrp")))

    def affine(cc, dd):
        return Morphism(R.MGRP, R.MGRP, {"z": cc * cc * R.MGRP.gen("z") + cc * dd, "zeta": cc * R.MGRP.gen("zeta")})

    composed = compose(affine(c1, d1), affine(c, d))
    direct = affine(P[0, 0], P[0, 1])
    ok = all(composed.images[n] == direct.images[n] for n in ("z", "zeta"))
    out.append(Check("a = c^2, b = c*d turns matrix products into composition", _ok(ok), f"z -> {direct.images['z'].render()}", _anchor("mat.mgrp")))
    return out


# -- stabilizer ----------------------------------------------------------


def _at_unit_matrix(M: SuperMatrix, X: Derivation) -> SuperMatrix:
    ctx = M.ctx
    unit = Morphism(ctx, ctx, {"c": 1, "d": 0, "gamma": 0})
    return M.map(lambda f: unit(derive(X, f)))


def suite_stabilizer(mode: str) -> list[Check]:
    out = []
    anchor = _anchor("grp.stab.infty")
    ctx = R.STAB
    c, d, g, c1, d1, g1 = ctx.gens("c", "d", "gamma", "c'", "d'", "gamma'")
    M, Mp = R.stab_generic(0), R.stab_generic(1)
    P = M @ Mp
    c2 = c * c1
    d2 = c * d1 + d * invert_even(c1) + g * invert_even(c1) * g1
    g2 = c * g1 + g
    expect = R.stab_matrix(c2, d2, g2)
    out.append(Check(
        "family closed under multiplication",
        _ok(P == expect),
        f"c'' = {c2.render()}; d'' = {d2.render()}; gamma'' = {g2.render()}" if P == expect else _diff_text(P, expect),
        anchor,
    ))
    Mi = inverse(M)
    ei = R.stab_matrix(invert_even(c), -d, -(invert_even(c) * g))
    out.append(Check("family closed under inverse", _ok(Mi == ei), _mat_text(Mi), anchor))
    hom = [is_homogeneous(x) for x in (M, P, Mi)]
    out.append(Check("format (2|1) homogeneity of M, M*M', M^-1", _ok(all(hom)), "", anchor))
    b = berezinian(M)
    out.append(Check("Berezinian of the family is 1", _ok(b == ctx.one), b.render(), anchor))

    tangent = {
        "Xc": _at_unit_matrix(M, partial(ctx, "c")),
        "Xd": _at_unit_matrix(M, partial(ctx, "d")),
        "Xg": _at_unit_matrix(M, partial(ctx, "gamma")),
    }
    names = list(tangent)
    table = {}
    closed = True
    for i, a in enumerate(names):
        for j, bname in enumerate(names):
            br = supercommutator(tangent[a], tangent[bname])
            coeffs = _matrix_coords(br, [tangent[n] for n in names])
            if coeffs is None:
                closed = False
            else:
                table[(i, j)] = coeffs
    if not closed:
        out.append(Check("tangent directions close under the supercommutator", FAIL, "", anchor))
        return out
    lie = LieSuperAlgebra([("Xc", 0), ("Xd", 0), ("Xg", 1)], table)
    out.append(Check("tangent directions close under the supercommutator", PASS, "; ".join(lie.render().splitlines()), anchor))

    U1, U2, V = R.aut_fields()
    fields = {"Xc": -U1, "Xd": -U2, "Xg": V}
    bad = []
    for i, a in enumerate(names):
        for j, bname in enumerate(names):
            lhs = bracket(fields[a], fields[bname])
            rhs = Derivation.zero(R.C11, (lie.parity(i) + lie.parity(j)) % 2)
            for k, coef in enumerate(lie.constants[(i, j)]):
                if coef:
                    rhs = rhs + fields[names[k]].scale(coef)
            if lhs != rhs:
                bad.append(f"[{a},{bname}]")
    out.append(Check(
        "Xc -> -U1, Xd -> -U2, Xg -> V is a Lie superalgebra isomorphism",
        _ok(not bad),
        ", ".join(bad),
        anchor,
    ))
    return out


def _matrix_coords(M: SuperMatrix, basis: list[SuperMatrix]):
    def flat(A):
        return [A[i, j].constant_value() if A[i, j].is_constant else None for i in range(A.shape[0]) for j in range(A.shape[1])]

    cols = [flat(B) for B in basis]
    target = flat(M)
    if any(x is None for x in target) or any(x is None for c in cols for x in c):
        return None
    return solve(cols, target)


SUITES: dict[str, Callable[[str], list[Check]]] = {
    "susy1": suite_susy1,
    "susy2": suite_susy2,
    "sl11-matrix": suite_sl11_matrix,
    "incidence": suite_incidence,
    "realform": suite_realform,
    "aut-c11": suite_aut_c11,
    "stabilizer": suite_stabilizer,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, mode: str = "multiplicative") -> Report:
    mode = ConjugationMode(mode).value
    if name == "all":
        checks = [Check(f"{s}: {c.name}", c.status, c.witness, c.anchor) for s, fn in SUITES.items() for c in fn(mode)]
    elif name in SUITES:
        checks = SUITES[name](mode)
    else:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return Report(name, mode, __version__, checks)


def emit_report(r: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(asdict(r), indent=2, sort_keys=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    counts = r.counts()
    lines = [
        f"superaudit {r.version}  suite: {r.suite}  conjugation: {r.mode}",
        *(f"convention: {c}" for c in CONVENTIONS),
        f"checks: {len(r.checks)}  " + "  ".join(f"{s}: {counts[s]}" for s in STATUSES),
    ]
    for c in r.checks:
        lines.append(f"[{c.status}] {c.name}")
        if c.anchor:
            lines.append(f"    anchor: {c.anchor}")
        if c.witness:
            lines.append(f"    witness: {c.witness}")
    return "\n".join(lines) + "\n"


def report_from_json(text: str) -> Report:
    data = json.loads(text)
    return Report(data["suite"], data["mode"], data["version"], [Check(**c) for c in data["checks"]])
