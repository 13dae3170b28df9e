"""Fusion rings: identities, invariants, and the seven reference rings."""

import itertools

import pytest

from hopf16.fusion import FusionRing
from hopf16 import classify
from hopf16.classify import REFERENCE_K0, K0_LABELS, match_reference


def test_reference_ring_identities():
    for label in K0_LABELS:
        ring = REFERENCE_K0[label]
        rep = ring.verify_identities()
        assert rep.ok, (label, rep.failures[:3])
        assert ring.marked_element_squares()


def test_reference_rings_pairwise_distinct():
    for a, b in itertools.combinations(K0_LABELS, 2):
        assert not REFERENCE_K0[a].fusion_isomorphic(REFERENCE_K0[b]), (a, b)
    for a in K0_LABELS:
        assert REFERENCE_K0[a].fusion_isomorphic(REFERENCE_K0[a])
        assert match_reference(REFERENCE_K0[a]) == a


def test_reference_ring_shapes():
    for label in K0_LABELS:
        ring = REFERENCE_K0[label]
        expected_rank = 7 if label.startswith("K6") else 10
        assert ring.rank == expected_rank
        n_two = 3 if label.startswith("K6") else 2
        assert ring.degree_profile() == ((1, ring.rank - n_two), (2, n_two))


def test_center_ranks():
    # commutative classes have full center; the noncommutative class K5.5
    # has center of rank 7 (split type k^6 + M2)
    for label in K0_LABELS:
        ring = REFERENCE_K0[label]
        want = 7 if label in ("K5.5", "K6.3", "K6.4") else 10
        assert ring.center_rank() == want
    assert classify.split_type(REFERENCE_K0["K5.5"]) == "k^(6) + M2(k)"
    assert classify.split_type(REFERENCE_K0["K5.1"]) == "k^(10)"
    assert classify.split_type(REFERENCE_K0["K6.3"]) == "k^(7)"


def test_hereditary_subrings():
    # the unit-only seed and the whole ring always close up
    ring = REFERENCE_K0["K5.5"]
    subs = ring.hereditary_subrings()
    sizes = [sum(ring.degrees[i] ** 2 for i in s) for s in subs]
    assert 1 in sizes and 16 in sizes
    assert 6 not in sizes
    # exactly three proper dimension-8 Hopf quotients
    assert sum(1 for s in sizes if s == 8) == 3
    # the characters always span a hereditary subring
    chars = frozenset(i for i, d in enumerate(ring.degrees) if d == 1)
    assert chars in {frozenset(s) for s in subs}


def test_serialization_round_trip():
    ring = REFERENCE_K0["K6.4"]
    clone = FusionRing.from_dict(ring.to_dict())
    assert clone.fusion_isomorphic(ring)
    assert clone.to_dict() == ring.to_dict()


def test_fusion_isomorphic_detects_relabeling():
    ring = REFERENCE_K0["K5.3"]
    d = ring.to_dict()
    # swap the labels of the two 2-dim basics; the rings stay isomorphic
    perm = list(range(ring.rank))
    two = [i for i, deg in enumerate(ring.degrees) if deg == 2]
    perm[two[0]], perm[two[1]] = perm[two[1]], perm[two[0]]
    table = [[[d["table"][perm[x]][perm[y]][perm[z]]
               for z in range(ring.rank)] for y in range(ring.rank)]
             for x in range(ring.rank)]
    relabeled = FusionRing(
        "relabeled", [d["labels"][p] for p in perm],
        [d["degrees"][p] for p in perm],
        [[table[x][y] for y in range(ring.rank)] for x in range(ring.rank)],
        [perm.index(d["involution"][p]) for p in perm],
        unit=perm.index(d["unit"]) if "unit" in d else None)
    assert relabeled.verify_identities().ok
    assert relabeled.fusion_isomorphic(ring)
