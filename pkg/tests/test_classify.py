"""Classification pipeline: profiles, group rings, and structural checks."""

import random

import pytest

from hopf16 import catalog, classify
from hopf16.hopf import verify_axioms, is_grouplike, apply_map
from hopf16.reps import Representation


def test_profiles_certified():
    for name in catalog.NAMES:
        prof, rep = classify.profile(name)
        assert rep.ok, (name, rep.failures[:3])
        exp = catalog.get(name).expected
        assert prof.group_h == exp["grouplikes"]
        assert prof.group_h_dual == exp["dual_grouplikes"]
        assert prof.k0_label == "K" + exp["k0"]


def test_wedderburn_profiles():
    for name in catalog.NAMES:
        prof, _ = classify.profile(name)
        assert sorted(prof.wedderburn) in ([1] * 8 + [2] * 2,
                                           [1] * 4 + [2] * 3)
        assert sum(d * d for d in prof.wedderburn) == 16


def test_table1(table1):
    rows, rep = table1
    assert rep.ok, rep.failures[:5]
    assert len(rows) == 16


def test_group_rings(group_ring_report):
    assert group_ring_report.ok, group_ring_report.failures[:5]
    assert set(classify.GROUP_K0_EXPECTED.values()) == \
        {"K5.1", "K5.2", "K5.3", "K5.4", "K6.3", "K6.4"}


def test_group_ring_values():
    for gname, label in sorted(classify.GROUP_K0_EXPECTED.items()):
        ring = classify.group_fusion_ring(gname)
        assert classify.match_reference(ring) == label, gname


def test_match_reference_rejects_foreign_ring():
    # a group ring of order 8 has rank 8 or 5 and matches nothing
    from hopf16.fusion import FusionRing
    triv = FusionRing("triv", ["1"], [1], [[[1]]], [0], unit=0)
    assert classify.match_reference(triv) is None


def test_theorem_instances(theorem_report):
    assert theorem_report.ok, theorem_report.failures[:5]


def test_character_actions(character_report):
    assert character_report.ok, character_report.failures[:5]


def test_quotients(quotient_report):
    assert quotient_report.ok, quotient_report.failures[:5]


def test_commutative_subhopf_rejects_noncommutative_span():
    h = catalog.get("HB1").build()
    rep = classify.commutative_subhopf_check(h, list(range(16)))
    assert not rep.ok


def test_profile_invariant_under_basis_permutation():
    # renaming the basis must not change any certified invariant
    name = "HBX"
    entry = catalog.get(name)
    h = entry.build()
    rng = random.Random(7)
    perm = list(range(16))
    rng.shuffle(perm)
    hp = classify.permute_basis(h, perm)
    assert verify_axioms(hp).ok
    vectors, names = entry.grouplike_candidates()
    for vec in vectors:
        moved = {perm[i]: c for i, c in vec.items()}
        assert is_grouplike(hp, moved)
    from hopf16.hopf import find_grouplikes_count_bound
    assert find_grouplikes_count_bound(hp) == find_grouplikes_count_bound(h)
    # irreps transport along the permutation and give the same fusion ring
    iset = entry.irrep_set()
    inv = [0] * 16
    for i, p in enumerate(perm):
        inv[p] = i
    moved_reps = [Representation(hp, [r.images[inv[m]] for m in range(16)],
                                 r.label) for r in iset.reps]
    gens = [{perm[i]: c for i, c in g.items()} for g in iset.generators]
    from hopf16.reps import IrrepSet
    iset_p = IrrepSet(hp, moved_reps, generators=gens)
    assert iset_p.verify().ok
    ring = classify.fusion_ring_from_irreps(iset_p, "permuted")
    assert classify.match_reference(ring) == "K5.5"
