"""Representations, irreducible sets, and fusion-table extraction."""

import pytest

from hopf16 import catalog
from hopf16.reps import (Representation, rep_product, dual_rep,
                         intertwiner_dimension, generates_algebra,
                         find_generators, IrrepSet, mat_id)


@pytest.mark.parametrize("name", ["Hb1", "HB1", "HC1s"])
def test_irrep_sets_verify(name):
    entry = catalog.get(name)
    iset = entry.irrep_set()
    rep = iset.verify()
    assert rep.ok, rep.failures[:3]
    degs = [r.degree for r in iset.reps]
    assert sum(d * d for d in degs) == 16


def test_individual_rep_checks():
    entry = catalog.get("HB1")
    chars = entry.characters()
    assert len(chars) == 8
    for ch in chars:
        assert ch.verify().ok
        assert ch.degree == 1
    pi = entry.two_dim_reps()[0]
    assert pi.degree == 2 and pi.verify().ok
    gens = entry.generators()
    assert intertwiner_dimension(pi, pi, gens) == 1      # irreducible
    assert intertwiner_dimension(chars[0], pi, gens) == 0


def test_rep_product_and_dual():
    entry = catalog.get("HB1")
    chars = entry.characters()
    pi = entry.two_dim_reps()[0]
    prod = rep_product(chars[1], pi)
    assert prod.verify().ok and prod.degree == 2
    dpi = dual_rep(pi)
    assert dpi.verify().ok
    gens = entry.generators()
    # self-dual 2-dim irreducible in the reference K5.5 class
    assert intertwiner_dimension(pi, dpi, gens) == 1


def test_generators():
    entry = catalog.get("Ha1")
    h = entry.build()
    assert generates_algebra(h, entry.generators())
    assert not generates_algebra(h, [h.basis_vec(0)])
    assert generates_algebra(h, find_generators(h))


def test_fusion_cross_check_runs():
    iset = catalog.get("HC1s").irrep_set()
    table, rep = iset.fusion_table(cross_check=True)
    assert rep.ok, rep.failures[:3]
    n = len(iset.reps)
    unit_degrees = [r.degree for r in iset.reps]
    for i in range(n):
        for j in range(n):
            coeffs = table[i][j]
            assert sum(c * unit_degrees[k] for k, c in enumerate(coeffs)) \
                == unit_degrees[i] * unit_degrees[j]


def test_central_idempotents_resolve_identity():
    from hopf16.reps import mat_add, mat_zero, mat_eq
    entry = catalog.get("Hb1")
    iset = entry.irrep_set()
    idems = iset.central_idempotents()
    h = entry.build()
    total = {}
    from hopf16.hopf import vec_add, vec_eq
    for z in idems:
        total = vec_add(total, z)
    assert vec_eq(total, h.unit)
