"""Catalog of the named objects the audit suites work with.

Every entry is rebuilt from the engine on each call to ``build_registry``;
nothing is cached on disk. Ids are stable and are what the CLI resolves.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import ODD, AlgebraError, Context, SuperPoly, even, invert_even, odd, unit
from .fields import Derivation, Morphism, OneForm, partial
from .gaussian import I
from .groups import GroupPresentation, copies, primed
from .lie import LieSuperAlgebra, RealSpan
from .supermatrix import MatrixMap, SuperMatrix, inverse

KINDS = ("group", "derivation", "morphism", "matrix-shape", "lie-algebra", "span", "one-form")


class NotFound(KeyError):
    pass


@dataclass(frozen=True)
class RegistryEntry:
    id: str
    kind: str
    value: object
    anchor: str

    def render(self) -> str:
        body = self.value.render()
        return f"== {self.id} [{self.kind}] ==\nanchor: {self.anchor}\n{body}"


# -- coordinate contexts ------------------------------------------------

C11 = Context([even("z"), odd("zeta")])
C11X = Context([unit("w"), odd("eta")])
C12 = Context([even("z"), odd("zeta"), odd("chi")])
C12S = Context([even("z"), odd("zeta1"), odd("zeta2")])
SL11 = Context([unit("v"), odd("xi"), odd("eta")])
AUT = Context([even("z"), unit("r"), even("b"), odd("zeta")])
XCTX = Context([unit("x"), odd("xi")])
YCTX = Context([unit("y"), odd("eta")])
MGRP = Context([unit("c"), even("d"), unit("c'"), even("d'"), even("z"), odd("zeta")])
STAB = Context([unit("c"), even("d"), odd("gamma"), unit("c'"), even("d'"), odd("gamma'")])


def _realform_context() -> Context:
    gens = []
    for p in ("", "'"):
        gens += [unit("d" + p, "dbar" + p), unit("dbar" + p, "d" + p)]
    for p in ("", "'"):
        for n in ("beta", "gamma"):
            gens += [odd(n + p, n + "bar" + p), odd(n + "bar" + p, n + p)]
    return Context(gens)


RF = _realform_context()

CONTEXTS = {
    "c11": C11,
    "c11x": C11X,
    "c12": C12,
    "c12s": C12S,
    "sl11": SL11,
    "aut": AUT,
    "realform": RF,
    "mgrp": MGRP,
    "stab": STAB,
}


def context(cid: str) -> Context:
    try:
        return CONTEXTS[cid]
    except KeyError:
        raise NotFound(f"unknown context {cid!r}; known: {', '.join(CONTEXTS)}") from None


# -- builders -----------------------------------------------------------


def _presentation(coords: Context, mult: dict, unit_pt: dict, inv: dict, name: str) -> GroupPresentation:
    return GroupPresentation(coords, mult, unit_pt, inv, name)


def mult_c11x() -> GroupPresentation:
    dbl = copies(C11X, 2)
    w, eta, w1, eta1 = dbl.gens("w", "eta", "w'", "eta'")
    wi = invert_even(C11X.gen("w"))
    return _presentation(
        C11X,
        {"w": w * w1 + eta * eta1, "eta": w * eta1 + eta * w1},
        {"w": 1, "eta": 0},
        {"w": wi, "eta": -(wi * wi * C11X.gen("eta"))},
        "multiplicative N=1",
    )


def add_c11() -> GroupPresentation:
    dbl = copies(C11, 2)
    z, zeta, z1, zeta1 = dbl.gens("z", "zeta", "z'", "zeta'")
    return _presentation(
        C11,
        {"z": z + z1 + zeta * zeta1, "zeta": zeta + zeta1},
        {"z": 0, "zeta": 0},
        {"z": -C11.gen("z"), "zeta": -C11.gen("zeta")},
        "additive N=1",
    )


def sl11_u(ctx: Context = SL11, v="v", xi="xi", eta="eta") -> SuperPoly:
    """The solved Berezinian-one relation ``u = v + xi v^-1 eta``."""
    vv, x, e = ctx.gen(v), ctx.gen(xi), ctx.gen(eta)
    return vv + x * invert_even(vv) * e


def sl11_matrix(ctx: Context = SL11, copy: int = 0) -> SuperMatrix:
    v, xi, eta = (primed(n, copy) for n in ("v", "xi", "eta"))
    u = sl11_u(ctx, v, xi, eta)
    return SuperMatrix.square(1, 1, [[u, ctx.gen(xi)], [ctx.gen(eta), ctx.gen(v)]])


def mult_sl11() -> GroupPresentation:
    dbl = copies(SL11, 2)
    v, xi, eta, v1, xi1, eta1 = dbl.gens("v", "xi", "eta", "v'", "xi'", "eta'")
    vi, v1i = invert_even(v), invert_even(v1)
    mult = {
        "v": v * v1 + eta * xi1,
        "xi": v * xi1 + xi * v1 + xi * vi * eta * xi1,
        "eta": eta * v1 + v * eta1 + eta * xi1 * v1i * eta1,
    }
    # inverse read off the matrix realization
    minv = inverse(sl11_matrix())
    inv = {"v": minv[1, 1], "xi": minv[0, 1], "eta": minv[1, 0]}
    return _presentation(SL11, mult, {"v": 1, "xi": 0, "eta": 0}, inv, "multiplicative N=2")


def add_c12() -> GroupPresentation:
    dbl = copies(C12, 2)
    z, zeta, chi, z1, zeta1, chi1 = dbl.gens("z", "zeta", "chi", "z'", "zeta'", "chi'")
    z0, zeta0, chi0 = C12.gens("z", "zeta", "chi")
    return _presentation(
        C12,
        {"z": z + z1 + zeta * chi1, "zeta": zeta + zeta1, "chi": chi + chi1},
        {"z": 0, "zeta": 0, "chi": 0},
        {"z": -z0 + zeta0 * chi0, "zeta": -zeta0, "chi": -chi0},
        "additive N=2",
    )


def _field(ctx: Context, parity: int, images: dict) -> Derivation:
    return Derivation(ctx, parity, images)


def susy_D(ctx: Context = C11) -> Derivation:
    return _field(ctx, ODD, {"zeta": ctx.one, "z": ctx.gen("zeta")})


def susy2_fields() -> tuple[Derivation, Derivation]:
    z1, z2 = C12S.gens("zeta1", "zeta2")
    return (
        _field(C12S, ODD, {"zeta1": C12S.one, "z": z2}),
        _field(C12S, ODD, {"zeta2": C12S.one, "z": z1}),
    )


def sl11_fields() -> tuple[Derivation, Derivation, Derivation]:
    v, xi, eta = SL11.gens("v", "xi", "eta")
    D1 = _field(SL11, ODD, {"eta": v})
    D2 = _field(SL11, ODD, {"v": -eta, "xi": v + xi * invert_even(v) * eta})
    E = _field(SL11, 0, {"v": v, "xi": xi, "eta": eta})
    return D1, D2, E


def aut_fields() -> tuple[Derivation, Derivation, Derivation]:
    z, zeta = C11.gens("z", "zeta")
    U1 = _field(C11, 0, {"z": z.scale(2), "zeta": zeta})
    U2 = partial(C11, "z")
    V = _field(C11, ODD, {"z": zeta, "zeta": -C11.one})
    return U1, U2, V


def scaling_pair() -> tuple[Morphism, Morphism]:
    z, r, b, zeta = AUT.gens("z", "r", "b", "zeta")
    ri = invert_even(r)
    F = Morphism(AUT, AUT, {"z": r * r * z + b, "zeta": r * zeta})
    F_inv = Morphism(AUT, AUT, {"z": ri * ri * (z - b), "zeta": ri * zeta})
    return F, F_inv


def phi_pullbacks() -> tuple[Morphism, Morphism]:
    """``phi*`` and its inverse on the coordinates ``(v, xi, eta)``."""
    xi, eta = SL11.gens("xi", "eta")
    ui = invert_even(sl11_u())
    ui2 = ui * ui
    phi = Morphism(SL11, SL11, {"v": ui, "xi": (ui2 * eta).scale(-I), "eta": (ui2 * xi).scale(-I)})
    phi_inv = Morphism(SL11, SL11, {"v": ui, "xi": (ui2 * eta).scale(I), "eta": (ui2 * xi).scale(I)})
    return phi, phi_inv


def realform_matrix(copy: int = 0) -> SuperMatrix:
    p = "'" * copy
    d, beta, gamma = RF.gens("d" + p, "beta" + p, "gamma" + p)
    a = d + beta * invert_even(d) * gamma
    return SuperMatrix.square(1, 1, [[a, beta], [gamma, d]])


PHI = MatrixMap("phi", "(a, beta; gamma, d) -> (d^-1, -i*a^-2*gamma; -i*a^-2*beta, a^-1)")


def sigma(mode: str) -> MatrixMap:
    return MatrixMap("sigma", "entrywise conjugate of phi(M)", mode)


def unitri_matrix(ctx: Context = C12, copy: int = 0) -> SuperMatrix:
    z, zeta, chi = (ctx.gen(primed(n, copy)) for n in ("z", "zeta", "chi"))
    return SuperMatrix.square(2, 1, [[1, z, zeta], [0, 1, 0], [0, chi, 1]])


def x_matrix(ctx: Context = XCTX, copy: int = 0) -> SuperMatrix:
    x, xi = ctx.gen(primed("x", copy)), ctx.gen(primed("xi", copy))
    return SuperMatrix.square(1, 1, [[x, xi], [xi, x]])


def xhat_matrix(ctx: Context = YCTX, copy: int = 0) -> SuperMatrix:
    y, eta = ctx.gen(primed("y", copy)), ctx.gen(primed("eta", copy))
    return SuperMatrix.square(1, 1, [[y, eta], [-eta, y]])


def mgrp_matrix(copy: int = 0) -> SuperMatrix:
    c, d = MGRP.gen(primed("c", copy)), MGRP.gen(primed("d", copy))
    return SuperMatrix.square(2, 1, [[c, d, 0], [0, invert_even(c), 0], [0, 0, 1]])


def stab_matrix(c, d, gamma) -> SuperMatrix:
    ci = invert_even(c)
    return SuperMatrix.square(2, 1, [[c, d, gamma], [0, ci, 0], [0, ci * gamma, 1]])


def stab_generic(copy: int = 0) -> SuperMatrix:
    return stab_matrix(*(STAB.gen(primed(n, copy)) for n in ("c", "d", "gamma")))


def sl11_algebra() -> LieSuperAlgebra:
    return LieSuperAlgebra.from_brackets([("C", 0), ("E", 1), ("F", 1)], {("E", "F"): {"C": 1}})


def n1_algebra_printed() -> LieSuperAlgebra:
    return LieSuperAlgebra([("Z", 1), ("C", 0)], {})


def n2_algebra() -> LieSuperAlgebra:
    return LieSuperAlgebra.from_brackets([("Z1", 1), ("Z2", 1), ("C", 0)], {("Z1", "Z2"): {"C": 1}})


def _span(vectors, names) -> RealSpan:
    g = sl11_algebra()
    return RealSpan(g, tuple(g.vector(v) for v in vectors), tuple(names))


def su11_printed() -> RealSpan:
    return _span([{"C": I}, {"E": 1, "F": I}, {"E": I, "F": -1}], ("iC", "U", "V"))


def su11_variant() -> RealSpan:
    return _span([{"C": I}, {"E": 1, "F": I}, {"E": 1, "F": -I}], ("iC", "U", "V"))


def sl11_standard() -> RealSpan:
    return _span([{"C": 1}, {"E": 1}, {"F": 1}], ("C", "E", "F"))


def x_tangent() -> RealSpan:
    return _span([{"C": 1}, {"E": 1, "F": 1}], ("C", "U"))


def xhat_tangent() -> RealSpan:
    return _span([{"C": 1}, {"E": 1, "F": -1}], ("C", "V"))


def form_s() -> OneForm:
    return OneForm(AUT, ("z", "zeta"), {"z": AUT.one, "zeta": -AUT.gen("zeta")})


def _entries():
    D1, D2, E = sl11_fields()
    S1, S2 = susy2_fields()
    U1, U2, V = aut_fields()
    F, F_inv = scaling_pair()
    phi, phi_inv = phi_pullbacks()
    return [
        ("grp.mult.c11x", "group", mult_c11x(), "multiplicative N=1 law (ww'+eta*eta', w*eta'+eta*w')"),
        ("grp.add.c11", "group", add_c11(), "additive N=1 law (z+z'+zeta*zeta', zeta+zeta')"),
        ("grp.mult.sl11", "group", mult_sl11(), "multiplicative N=2 law (vv'+eta*xi', ...)"),
        ("grp.add.c12", "group", add_c12(), "additive N=2 law (z+z'+zeta*chi', zeta+zeta', chi+chi')"),
        ("der.D.c11", "derivation", susy_D(), "D = d/dzeta + zeta*d/dz"),
        ("der.D1.c12s", "derivation", S1, "D1 = d/dzeta1 + zeta2*d/dz"),
        ("der.D2.c12s", "derivation", S2, "D2 = d/dzeta2 + zeta1*d/dz"),
        ("der.D1.sl11", "derivation", D1, "left-invariant D1 = v*d/deta"),
        ("der.D2.sl11", "derivation", D2, "left-invariant D2 = -eta*d/dv + (v+xi*v^-1*eta)*d/dxi"),
        ("der.E.sl11", "derivation", E, "left-invariant E = v*d/dv + xi*d/dxi + eta*d/deta"),
        ("der.U1.c11", "derivation", U1, "U1 = 2z*d/dz + zeta*d/dzeta"),
        ("der.U2.c11", "derivation", U2, "U2 = d/dz"),
        ("der.V.c11", "derivation", V, "V = zeta*d/dz - d/dzeta"),
        ("mor.F.aut", "morphism", F, "F(z, zeta) = (a*z+b, sqrt(a)*zeta) with a = r^2"),
        ("mor.Finv.aut", "morphism", F_inv, "inverse of F(z, zeta) = (a*z+b, sqrt(a)*zeta)"),
        ("mor.phi.sl11", "morphism", phi, "phi(a, beta; gamma, d) = (d^-1, -i*a^-2*gamma; -i*a^-2*beta, a^-1), pulled back"),
        ("mor.phiinv.sl11", "morphism", phi_inv, "inverse of phi, pulled back"),
        ("mor.phi.matrix", "morphism", PHI, "phi(a, beta; gamma, d) = (d^-1, -i*a^-2*gamma; -i*a^-2*beta, a^-1)"),
        ("inv.sigma.multiplicative", "morphism", sigma("multiplicative"), "sigma = c o phi"),
        ("inv.sigma.graded", "morphism", sigma("graded"), "sigma = c o phi"),
        ("mat.sl11", "matrix-shape", sl11_matrix(), "SL(1|1): (u, xi; eta, v) with v^-1*(u - xi*v^-1*eta) = 1"),
        ("mat.sl11.rf", "matrix-shape", realform_matrix(), "SL(1|1) element (a, beta; gamma, d)"),
        ("mat.c12.unitri", "matrix-shape", unitri_matrix(), "(1, z, zeta; 0, 1, 0; 0, chi, 1) inside SL(2|1)"),
        ("mat.X", "matrix-shape", x_matrix(), "X(T) = (x, xi; xi, x)"),
        ("mat.Xhat", "matrix-shape", xhat_matrix(), "Xhat(T) = (y, eta; -eta, y)"),
        ("mat.mgrp", "matrix-shape", mgrp_matrix(), "(c, d, 0; 0, c^-1, 0; 0, 0, 1) with a = c^2, b = d*c"),
        ("grp.stab.infty", "matrix-shape", stab_generic(), "stabilizer of infinity in SpO(2|1): (c, d, gamma; 0, c^-1, 0; 0, c^-1*gamma, 1)"),
        ("lie.sl11", "lie-algebra", sl11_algebra(), "sl(1|1): [E,F] = C, other brackets zero"),
        ("lie.n1.printed", "lie-algebra", n1_algebra_printed(), "N=1: <Z, C> with [Z,Z] = 0"),
        ("lie.n2", "lie-algebra", n2_algebra(), "N=2: <Z1, Z2, C> with [Z1,Z2] = C"),
        ("span.su11.printed", "span", su11_printed(), "su(1|1) = span_R{iC, U=E+iF, V=iE-F}"),
        ("span.su11.variant", "span", su11_variant(), "variant span_R{iC, E+iF, E-iF}"),
        ("span.sl11.standard", "span", sl11_standard(), "span_R{C, E, F}"),
        ("span.X.tangent", "span", x_tangent(), "<C, U=E+F> in sl(1|1)"),
        ("span.Xhat.tangent", "span", xhat_tangent(), "<C, V=E-F> in sl(1|1)"),
        ("form.s.aut", "one-form", form_s(), "s = dz - zeta*dzeta"),
    ]


@lru_cache(maxsize=1)
def _cached() -> tuple[RegistryEntry, ...]:
    return tuple(RegistryEntry(*e) for e in _entries())


def build_registry() -> list[RegistryEntry]:
    entries = _cached()
    ids = [e.id for e in entries]
    if len(set(ids)) != len(ids):
        raise AlgebraError("duplicate registry ids")
    return list(entries)


def lookup(entry_id: str) -> RegistryEntry:
    for e in build_registry():
        if e.id == entry_id:
            return e
    raise NotFound(f"no registry entry {entry_id!r}")


def list_lines() -> list[str]:
    return [f"{e.id}  {e.kind}  {e.anchor}" for e in build_registry()]


def constituents(entry: RegistryEntry) -> list:
    """Every SuperPoly or Derivation an entry is built from (for round-trip tests)."""
    v = entry.value
    if isinstance(v, GroupPresentation):
        return list(v.mult.values()) + list(v.inv.values())
    if isinstance(v, Derivation):
        return [v]
    if isinstance(v, Morphism):
        return list(v.images.values())
    if isinstance(v, MatrixMap):
        return [x for row in v(realform_matrix()).entries for x in row]
    if isinstance(v, SuperMatrix):
        return [x for row in v.entries for x in row]
    if isinstance(v, OneForm):
        return list(v.coefficients.values())
    return []
