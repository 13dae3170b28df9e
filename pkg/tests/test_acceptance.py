"""The ten acceptance criteria, one test each, in order."""

import itertools
import time

import pytest

from hopf16 import catalog, classify
from hopf16.groups import (abelian_group, dihedral_group, quaternion_group,
                           cyclic_group, direct_product, NONABELIAN_16)
from hopf16.constructors import (group_algebra, dual_group_algebra,
                                 admissible_cocycles, BicrossedData,
                                 CocycleError)
from hopf16.hopf import verify_axioms
from hopf16.catalog import _c4xc2, _d8, _theta_abelian
from hopf16.cyclo import ONE, MINUS_ONE, I, OMEGA


def test_01_axiom_suite_under_60s():
    subjects = [catalog.get(n).build() for n in catalog.NAMES]
    subjects += [catalog.twisted_d8xc2(), catalog.twisted_d16(),
                 catalog.twisted_g2(), catalog.smash()]
    groups = [cyclic_group(2), _c4xc2(),
              abelian_group("C2^3", [2, 2, 2], ["x", "y", "z"]),
              dihedral_group(4), quaternion_group(8),
              dihedral_group(8), quaternion_group(16),
              direct_product(dihedral_group(4), cyclic_group(2),
                             name="D8xC2")]
    groups += list(NONABELIAN_16.values())
    for g in groups:
        subjects.append(group_algebra(g))
        subjects.append(dual_group_algebra(g))
    start = time.monotonic()
    for h in subjects:
        rep = verify_axioms(h)
        assert rep.ok, (h.name, rep.failures[:3])
    assert time.monotonic() - start < 60.0


def test_02_table1_reproduction(table1):
    rows, rep = table1
    assert rep.ok, rep.failures[:5]
    assert len(rows) == 16
    by_row = {r["row"]: r for r in rows}
    for a, b in classify.DUAL_ROWS:
        pa, pb = by_row[a], by_row[b]
        assert pa["group_h"] == pb["group_h_dual"]
        assert pa["group_h_dual"] == pb["group_h"]
    for row in classify.SELF_DUAL_ROWS:
        assert by_row[row]["group_h"] == by_row[row]["group_h_dual"]


def test_03_seven_reference_rings_and_six_group_rings(group_ring_report):
    assert group_ring_report.ok, group_ring_report.failures[:5]
    labels = classify.K0_LABELS
    assert len(labels) == 7
    for a, b in itertools.combinations(labels, 2):
        assert not classify.REFERENCE_K0[a].fusion_isomorphic(
            classify.REFERENCE_K0[b]), (a, b)
    expected = {"g1": "K5.4", "g2": "K6.4", "g3": "K6.3", "g4": "K6.3",
                "g5": "K5.3", "g6": "K5.3", "g7": "K5.2", "g8": "K5.1",
                "g9": "K5.1"}
    assert classify.GROUP_K0_EXPECTED == expected
    for gname, label in expected.items():
        assert classify.match_reference(
            classify.group_fusion_ring(gname)) == label, gname
    covered = set(expected.values())
    assert len(covered) == 6 and "K5.5" not in covered


def test_04_fusion_identities_and_method_agreement():
    rings = [classify.REFERENCE_K0[l] for l in classify.K0_LABELS]
    rings += [classify.group_fusion_ring(g) for g in sorted(NONABELIAN_16)]
    # catalog rings are built through fusion_ring_from_irreps, which raises
    # if the idempotent-trace and intertwiner multiplicities ever disagree
    rings += [classify.catalog_fusion_ring(n) for n in catalog.NAMES]
    for ring in rings:
        rep = ring.verify_identities()
        assert rep.ok, (ring.name, rep.failures[:3])
    # explicit method cross-check on one algebra of each Wedderburn shape
    for name in ("Ha1", "HC1"):
        iset = catalog.get(name).irrep_set()
        _, rep = iset.fusion_table(cross_check=True)
        assert rep.ok, (name, rep.failures[:3])


def test_05_cocycle_solver():
    g = _c4xc2()
    act = lambda i: g.index[((g.elements[i][0] + 2 * g.elements[i][1]) % 4,
                             g.elements[i][1])]
    th = lambda i, j: _theta_abelian(g.elements[i], g.elements[j])
    sols = admissible_cocycles(g, act, th)
    assert len(sols) == 4
    got = {tuple(v[i] for i in range(8)) for _, v in sols}
    assert got == {
        tuple(MINUS_ONE ** (k * e[0] + l * e[1]) for e in g.elements)
        for k in (0, 1) for l in (0, 1)}

    d = _d8()
    act_c = lambda i: d.index[((-d.elements[i][0] + d.elements[i][1]) % 4,
                               d.elements[i][1])]
    theta_for = lambda xi: (
        lambda i, j: xi ** (d.elements[i][1] * d.elements[j][0]))
    sols_c = admissible_cocycles(d, act_c, theta_for,
                                 xi_candidates=[I ** m for m in range(4)])
    assert len(sols_c) == 8
    assert {(xi, tuple(v[i] for i in range(8))) for xi, v in sols_c} == {
        (OMEGA ** (-2 * k % 8), tuple(OMEGA ** (k * e[1])
                                      for e in d.elements))
        for k in range(8)}

    # invalid data is rejected with the violated condition named
    bad_v = {i: I ** g.elements[i][0] for i in range(8)}
    with pytest.raises(CocycleError) as exc:
        BicrossedData(g, act, bad_v, th).validate()
    assert exc.value.condition == "action-invariance"


def test_06_explicit_isomorphisms(iso_reports):
    assert len(iso_reports) >= 6
    for desc, rep in iso_reports:
        assert rep.ok, (desc, rep.failures[:3])


def test_07_quotients(quotient_report):
    assert quotient_report.ok, quotient_report.failures[:5]


def test_08_structural_theorems(theorem_report):
    assert theorem_report.ok, theorem_report.failures[:5]
    ring = classify.REFERENCE_K0["K5.5"]
    assert ring.rank == 10 and ring.center_rank() == 7


def test_09_character_actions(character_report):
    assert character_report.ok, character_report.failures[:5]
    for name in catalog.NAMES:
        ring = classify.catalog_fusion_ring(name)
        sizes = {sum(ring.degrees[i] ** 2 for i in s)
                 for s in ring.hereditary_subrings()}
        assert 6 not in sizes, name


def test_10_twists_and_smash(twist_report, alternate_report):
    assert twist_report.ok, twist_report.failures[:5]
    assert alternate_report.ok, alternate_report.failures[:5]
