"""Structure-constant Hopf algebra core."""

import pytest

from hopf16.cyclo import ONE
from hopf16.groups import (cyclic_group, dihedral_group, quaternion_group,
                           abelian_group)
from hopf16.constructors import group_algebra, dual_group_algebra
from hopf16.hopf import (HopfAlgebra, verify_axioms, dual_hopf,
                         tensor_product, verify_morphism, apply_map,
                         trace_form_certificate, is_grouplike,
                         verify_grouplike_set, identify_group,
                         find_grouplikes_count_bound,
                         quotient_by_central_grouplike)


def test_group_algebra_axioms():
    for g in (cyclic_group(4), dihedral_group(4), quaternion_group(8)):
        h = group_algebra(g)
        assert verify_axioms(h).ok
        assert h.is_cocommutative()
        assert h.is_commutative() == g.is_abelian()
        assert trace_form_certificate(h)[0]


def test_dual_swaps_commutativity():
    h = dual_hopf(group_algebra(dihedral_group(4)))
    assert verify_axioms(h).ok
    assert h.is_commutative() and not h.is_cocommutative()
    assert verify_axioms(dual_group_algebra(dihedral_group(4))).ok


def test_tensor_product():
    c2 = group_algebra(cyclic_group(2))
    h = tensor_product(c2, c2)
    assert verify_axioms(h).ok
    assert h.dim == 4
    table, rep = verify_grouplike_set(h, [h.basis_vec(i) for i in range(4)])
    assert rep.ok and identify_group(table) == "C2xC2"


def test_grouplikes_of_group_algebra():
    g = dihedral_group(4)
    h = group_algebra(g)
    vecs = [h.basis_vec(i) for i in range(8)]
    assert all(is_grouplike(h, v) for v in vecs)
    assert find_grouplikes_count_bound(h) == 8
    table, rep = verify_grouplike_set(h, vecs)
    assert rep.ok
    assert identify_group(table) == "D8"
    table, rep = verify_grouplike_set(
        group_algebra(quaternion_group(8)),
        [group_algebra(quaternion_group(8)).basis_vec(i) for i in range(8)])
    assert identify_group(table) == "Q8"


def test_morphism_verification():
    g = cyclic_group(4)
    h = group_algebra(g)
    cube = [h.basis_vec(g.table[i][g.table[i][i]]) for i in range(4)]
    assert verify_morphism(h, h, cube, require_bijective=True).ok
    square = [h.basis_vec(g.table[i][i]) for i in range(4)]
    rep = verify_morphism(h, h, square, require_bijective=True)
    assert not rep.ok


def test_apply_map():
    h = group_algebra(cyclic_group(2))
    images = [h.basis_vec(0), h.basis_vec(1)]
    assert apply_map(images, {0: ONE, 1: ONE}) == {0: ONE, 1: ONE}


def test_quotient_by_central_grouplike():
    g = cyclic_group(4)
    h = group_algebra(g)
    z = h.basis_vec(2)                       # the square of the generator
    q, proj, rep = quotient_by_central_grouplike(h, z, name="kC4/(g^2-1)")
    assert rep.ok
    assert q.dim == 2
    assert verify_axioms(q).ok
    assert verify_morphism(h, q, proj).ok


def test_json_round_trip():
    h = group_algebra(dihedral_group(4))
    h2 = HopfAlgebra.from_json(h.to_json())
    assert h2.to_dict() == h.to_dict()
    assert verify_axioms(h2).ok


def test_report_failure_detection():
    h = group_algebra(cyclic_group(2))
    broken = HopfAlgebra(h.name, h.basis, h.mult, h.comult, h.unit,
                         h.counit, [h.antipode[0], {1: -ONE}])
    rep = verify_axioms(broken)
    assert not rep.ok
    assert any("antipode" in f[0] for f in rep.failures)


def test_abelian_group_algebra_self_duality():
    g = abelian_group("C4xC2", [4, 2], ["x", "y"])
    h = dual_hopf(group_algebra(g))
    vecs, _ = _character_vectors(g)
    table, rep = verify_grouplike_set(h, vecs)
    assert rep.ok and identify_group(table) == "C4xC2"


def _character_vectors(g):
    from hopf16.constructors import abelian_characters
    vecs = [{i: vals[i] for i in range(g.n)} for vals in abelian_characters(g)]
    return vecs, None
