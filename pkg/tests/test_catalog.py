"""The sixteen catalog entries and the alternate constructions."""

import pytest

from hopf16 import catalog
from hopf16.hopf import (HopfAlgebra, verify_axioms, verify_grouplike_set,
                         identify_group, trace_form_certificate)


def test_names_and_rows():
    assert len(catalog.NAMES) == 16
    assert [catalog.get(n).row for n in catalog.NAMES] == list(range(1, 17))
    with pytest.raises(KeyError):
        catalog.get("nope")


@pytest.mark.parametrize("name", catalog.NAMES)
def test_entry_builds_and_verifies(name):
    entry = catalog.get(name)
    h = entry.build()
    assert h.dim == 16
    rep = verify_axioms(h)
    assert rep.ok, rep.failures[:3]
    assert trace_form_certificate(h)[0]


@pytest.mark.parametrize("name", catalog.NAMES)
def test_claimed_grouplikes(name):
    entry = catalog.get(name)
    h = entry.build()
    vectors, names = entry.grouplike_candidates()
    table, rep = verify_grouplike_set(h, vectors, names=names)
    assert rep.ok, rep.failures[:3]
    assert identify_group(table) == entry.expected["grouplikes"]


def test_serialization_round_trip():
    h = catalog.get("HC1").build()
    clone = HopfAlgebra.from_json(h.to_json())
    assert clone.to_dict() == h.to_dict()


def test_alternate_builders_dimensions():
    for build in (catalog.twisted_d8xc2, catalog.twisted_d16,
                  catalog.twisted_g2, catalog.smash, catalog.h8_tensor_kc2):
        assert build().dim == 16


def test_eight_dim_quotient():
    q, proj, rep = catalog.eight_dim_quotient("HB1", "Y")
    assert rep.ok
    assert q.dim == 8
    assert verify_axioms(q).ok
