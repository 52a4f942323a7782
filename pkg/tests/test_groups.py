from fractions import Fraction

import pytest

from superaudit import registry as R
from superaudit.algebra import AlgebraError, invert_even
from superaudit.fields import Derivation, Morphism, bracket, partial
from superaudit.groups import (
    GroupPresentation,
    SpanError,
    TangentVector,
    check_group_axioms,
    copies,
    invariance_check,
    invariant_field,
    structure_constants_from_fields,
    susy_scaling_check,
)

GROUPS = [R.mult_c11x, R.add_c11, R.mult_sl11, R.add_c12]


@pytest.mark.parametrize("build", GROUPS, ids=lambda f: f.__name__)
def test_group_axioms_hold(build):
    results = check_group_axioms(build())
    assert [r.name for r in results] == ["associativity", "left unit", "right unit", "left inverse", "right inverse"]
    for r in results:
        assert r.ok and r.witness == ""


def test_broken_law_fails_associativity():
    dbl = copies(R.C11, 2)
    z, zeta, z1, zeta1 = dbl.gens("z", "zeta", "z'", "zeta'")
    G = GroupPresentation(
        R.C11,
        {"z": z + z1 + zeta * zeta1 + z * z1, "zeta": zeta + zeta1},
        {"z": 0, "zeta": 0},
        {"z": -R.C11.gen("z"), "zeta": -R.C11.gen("zeta")},
        "broken",
    )
    assoc = check_group_axioms(G)[0]
    assert not assoc.ok and assoc.witness


def test_sl11_left_fields_match_displayed():
    G = R.mult_sl11()
    D1, D2, E = R.sl11_fields()
    v, xi, eta = R.SL11.gens("v", "xi", "eta")
    assert invariant_field(G, TangentVector(1, {"eta": 1}), "left") == D1
    assert invariant_field(G, TangentVector(1, {"xi": 1}), "left") == D2
    assert invariant_field(G, TangentVector(0, {"v": 1}), "left") == E
    assert D1 == Derivation(R.SL11, 1, {"eta": v})
    assert D2 == Derivation(R.SL11, 1, {"v": -eta, "xi": v + xi * invert_even(v) * eta})


def test_additive_n1_sides():
    G = R.add_c11()
    zeta = R.C11.gen("zeta")
    left = invariant_field(G, TangentVector(1, {"zeta": 1}), "left")
    right = invariant_field(G, TangentVector(1, {"zeta": 1}), "right")
    assert left == partial(R.C11, "zeta") - partial(R.C11, "z").times(zeta)
    assert right == R.susy_D()


def test_tangent_parity_checked():
    with pytest.raises(AlgebraError):
        invariant_field(R.add_c11(), TangentVector(0, {"zeta": 1}))
    with pytest.raises(AlgebraError):
        invariant_field(R.add_c11(), TangentVector(1, {"zeta": 1}), "up")


@pytest.mark.parametrize("build", GROUPS, ids=lambda f: f.__name__)
def test_constructed_fields_are_invariant(build):
    G = build()
    for name in G.coords.names:
        v = TangentVector(G.coords.parity_of(name), {name: 1})
        for side in ("left", "right"):
            assert invariance_check(G, invariant_field(G, v, side), side).ok


def test_invariance_counterexamples():
    G = R.mult_sl11()
    r = invariance_check(G, partial(R.SL11, "eta"), "left")
    assert not r.ok and r.witness
    A = R.add_c11()
    for side in ("left", "right"):
        assert invariance_check(A, partial(R.C11, "z"), side).ok


def test_structure_constants():
    D1, D2, E = R.sl11_fields()
    g = structure_constants_from_fields([D1, D2, E], ["D1", "D2", "E"])
    assert g.bracket(g.unit_vector("D1"), g.unit_vector("D2")) == g.vector({"E": -1})
    assert not any(g.bracket(g.unit_vector("D1"), g.unit_vector("D1")))
    assert not any(g.bracket(g.unit_vector("D2"), g.unit_vector("D2")))
    dz = structure_constants_from_fields([partial(R.C11, "z")])
    assert not any(dz.constants[(0, 0)])


def test_structure_constants_reject_dependent_or_open_sets():
    D = R.susy_D()
    with pytest.raises(SpanError):
        structure_constants_from_fields([D, D.scale(2)])
    with pytest.raises(SpanError):
        structure_constants_from_fields([D])


def test_aut_table_as_computed():
    U1, U2, V = R.aut_fields()
    g = structure_constants_from_fields([U1, U2, V], ["U1", "U2", "V"])
    e = g.unit_vector
    assert g.bracket(e("V"), e("V")) == g.vector({"U2": -2})
    assert g.bracket(e("U2"), e("U1")) == g.vector({"U2": 2})
    assert g.bracket(e("U1"), e("V")) == g.vector({"V": -1})
    assert not any(g.bracket(e("U2"), e("V")))


def test_scaling_check():
    F, F_inv = R.scaling_pair()
    res = susy_scaling_check(F, F_inv, R.susy_D(R.AUT))
    assert res.ok and res.k == R.AUT.gen("r", -1)
    ident = Morphism.identity(R.AUT)
    res = susy_scaling_check(ident, ident, R.susy_D(R.AUT))
    assert res.ok and res.k == R.AUT.one


def test_scaling_check_rejects_non_susy_map():
    z, zeta = R.C11.gens("z", "zeta")
    F = Morphism(R.C11, R.C11, {"z": z.scale(2), "zeta": zeta})
    F_inv = Morphism(R.C11, R.C11, {"z": z.scale(Fraction(1, 2)), "zeta": zeta})
    res = susy_scaling_check(F, F_inv, R.susy_D())
    assert not res.ok and res.witness
    with pytest.raises(AlgebraError):
        Morphism(R.C11, R.C11, {"z": z, "zeta": zeta + R.C11.one})


def test_left_and_right_fields_commute():
    G = R.mult_sl11()
    lefts = [invariant_field(G, TangentVector(R.SL11.parity_of(n), {n: 1}), "left") for n in R.SL11.names]
    rights = [invariant_field(G, TangentVector(R.SL11.parity_of(n), {n: 1}), "right") for n in R.SL11.names]
    for X in lefts:
        for Y in rights:
            assert bracket(X, Y).is_zero
