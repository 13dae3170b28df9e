"""Bicrossed products, cocycle solving, twists, and the smash coproduct."""

from fractions import Fraction

import pytest

from hopf16 import catalog
from hopf16.catalog import _c4xc2, _d8, _theta_abelian
from hopf16.cyclo import CycNum, ONE, MINUS_ONE, I, OMEGA, cyc
from hopf16.groups import direct_product, dihedral_group, cyclic_group
from hopf16.hopf import verify_axioms, tensor_product, vec_eq
from hopf16.constructors import (BicrossedData, CocycleError,
                                 bicrossed_product, admissible_cocycles,
                                 group_algebra, klein_twist_element,
                                 verify_two_cocycle, twist,
                                 smash_coproduct_q8)


def test_all_catalog_data_validates():
    for name in catalog.NAMES:
        catalog.get(name).data().validate()    # raises on failure


def _xy_action_data():
    """The C4xC2 product with action x -> xy (rows 8-9)."""
    g = _c4xc2()
    act = lambda i: g.index[((g.elements[i][0] + 2 * g.elements[i][1]) % 4,
                             g.elements[i][1])]
    th = lambda i, j: _theta_abelian(g.elements[i], g.elements[j])
    return g, act, th


def test_invalid_cocycle_rejected_by_condition():
    g, act, th = _xy_action_data()
    # tbar^2 = x: not invariant under the action
    bad_v = {i: I ** g.elements[i][0] for i in range(g.n)}
    with pytest.raises(CocycleError) as exc:
        BicrossedData(g, act, bad_v, th).validate()
    assert exc.value.condition == "action-invariance"

    # tbar^2 = y fails nothing; tbar^2 with a non-unit value at the
    # identity fails the normalization check
    bad_norm = {i: (ONE if i else MINUS_ONE) for i in range(g.n)}
    with pytest.raises(CocycleError) as exc:
        BicrossedData(g, act, bad_norm, th).validate()
    assert exc.value.condition == "normalization"

    # an action that is not an automorphism
    swap01 = lambda i: {0: 1, 1: 0}.get(i, i)
    with pytest.raises(CocycleError) as exc:
        BicrossedData(g, swap01, {i: ONE for i in range(g.n)}, th).validate()
    assert exc.value.condition in ("action-order", "action-automorphism")

    # a theta that is not counit-normalized
    bad_th = lambda i, j: I
    with pytest.raises(CocycleError) as exc:
        BicrossedData(g, act, {i: ONE for i in range(g.n)},
                      bad_th).validate()
    assert exc.value.condition == "theta-normalization"


def _build_unvalidated(monkeypatch, g, act, v, th):
    monkeypatch.setattr(BicrossedData, "validate", lambda self: None)
    return bicrossed_product(BicrossedData(g, act, v, th), "broken")


def test_invalid_cocycle_breaks_axioms(monkeypatch):
    # direct tensor oracles on objects built with validation disabled
    g, act, th = _xy_action_data()
    tbar_keys = [g.n + i for i in range(g.n)]

    # tbar^2 = x is multiplicative, so Delta stays an algebra map, but the
    # value is not action-invariant: tbar(tbar tbar) != (tbar tbar)tbar
    bad_v = {i: I ** g.elements[i][0] for i in range(g.n)}
    h = _build_unvalidated(monkeypatch, g, act, bad_v, th)
    tbar = {k: ONE for k in tbar_keys}
    assert not vec_eq(h.mul(tbar, h.mul(tbar, tbar)),
                      h.mul(h.mul(tbar, tbar), tbar))
    assert not verify_axioms(h).ok

    # a non-multiplicative value breaks Delta(tbar^2) = Delta(tbar)^2
    bad_v2 = {i: OMEGA ** g.elements[i][0] for i in range(g.n)}
    h2 = _build_unvalidated(monkeypatch, g, act, bad_v2, th)
    hh = tensor_product(h2, h2)

    def emb(pair_vec):
        return {i * h2.dim + j: c for (i, j), c in pair_vec.items()}

    lhs = emb(h2.delta(h2.mul(tbar, tbar)))
    rhs = hh.mul(emb(h2.delta(tbar)), emb(h2.delta(tbar)))
    assert not vec_eq(lhs, rhs)
    assert not verify_axioms(h2).ok


def test_cocycle_solver_xy_action():
    # the admissible tbar^2 values are exactly the four functions
    # (p,q) -> (-1)^(kp+lq), i.e. the group elements x^2k y^l
    g, act, th = _xy_action_data()
    sols = admissible_cocycles(g, act, th)
    assert len(sols) == 4
    got = {tuple(v[i] for i in range(g.n)) for _, v in sols}
    expected = {
        tuple(MINUS_ONE ** (k * e[0] + l * e[1]) for e in g.elements)
        for k in (0, 1) for l in (0, 1)}
    assert got == expected


def test_cocycle_solver_d8_reflection_action():
    # D8 with action e_{p,q} -> e_{-p+q,q} and theta depending on a 4th
    # root xi: exactly eight solutions, tbar^2 = sum omega^(kq) e_{p,q}
    # with xi = omega^(-2k)
    d = _d8()
    act = lambda i: d.index[((-d.elements[i][0] + d.elements[i][1]) % 4,
                             d.elements[i][1])]

    def theta_for(xi):
        return lambda i, j: xi ** (d.elements[i][1] * d.elements[j][0])

    sols = admissible_cocycles(d, act, theta_for,
                               xi_candidates=[I ** m for m in range(4)])
    assert len(sols) == 8
    expected = {
        (OMEGA ** (-2 * k % 8),
         tuple(OMEGA ** (k * e[1]) for e in d.elements))
        for k in range(8)}
    got = {(xi, tuple(v[i] for i in range(d.n))) for xi, v in sols}
    assert got == expected
    # the two catalog entries on this action are among the solutions
    assert (ONE, tuple(ONE for _ in range(8))) in {
        (xi, vs) for xi, vs in got}


def test_klein_twist_expanded_coefficients():
    g = direct_product(dihedral_group(4), cyclic_group(2), name="D8xC2")
    h = group_algebra(g)
    one = g.index[((0, 0), (0,))]
    c = g.index[((0, 0), (1,))]
    b = g.index[((0, 1), (0,))]
    cb = g.index[((0, 1), (1,))]
    J, Jinv = klein_twist_element(h, [one, c, b, cb])
    eighth = CycNum.from_rational(Fraction(1, 8))
    assert J[(b, c)] == (MINUS_ONE - I - I) * eighth
    assert J[(c, b)] == (MINUS_ONE + I + I) * eighth
    assert J[(one, one)] == cyc(Fraction(5, 8))
    assert verify_two_cocycle(h, J, Jinv).ok


def test_twist_keeps_algebra_changes_coalgebra():
    g = dihedral_group(8)
    h = group_algebra(g)
    f = [g.index[(0, 0)], g.index[(4, 0)], g.index[(0, 1)], g.index[(4, 1)]]
    J, Jinv = klein_twist_element(h, f)
    ht = twist(h, J, Jinv, name="kD16_J")
    assert ht.mult == h.mult
    assert ht.comult != h.comult
    assert verify_axioms(ht).ok
    assert h.is_cocommutative() and not ht.is_cocommutative()


def test_smash_coproduct():
    h = smash_coproduct_q8()
    assert h.dim == 16
    assert verify_axioms(h).ok
    assert not h.is_commutative()
    assert not h.is_cocommutative()
