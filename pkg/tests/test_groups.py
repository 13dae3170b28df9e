"""Finite group tables."""

import pytest
from hypothesis import given, strategies as st

from hopf16.groups import (abelian_group, cyclic_group, dihedral_group,
                           quaternion_group, direct_product, NONABELIAN_16)


ALL_GROUPS = [cyclic_group(8),
              abelian_group("C4xC2", [4, 2], ["x", "y"]),
              abelian_group("C2^3", [2, 2, 2], ["x", "y", "z"]),
              dihedral_group(4), dihedral_group(8),
              quaternion_group(8), quaternion_group(16),
              direct_product(dihedral_group(4), cyclic_group(2))]
ALL_GROUPS += list(NONABELIAN_16.values())


@pytest.mark.parametrize("g", ALL_GROUPS, ids=lambda g: g.name)
def test_group_axioms(g):
    n = g.n
    e = g.identity
    for i in range(n):
        assert g.table[e][i] == i == g.table[i][e]
        assert g.table[i][g.inverse[i]] == e == g.table[g.inverse[i]][i]
    for i in range(n):
        assert sorted(g.table[i]) == list(range(n))      # Latin square rows
        assert sorted(r[i] for r in g.table) == list(range(n))


@given(st.data())
def test_associativity(data):
    g = data.draw(st.sampled_from(ALL_GROUPS))
    i, j, k = (data.draw(st.integers(0, g.n - 1)) for _ in range(3))
    assert g.table[g.table[i][j]][k] == g.table[i][g.table[j][k]]


def test_orders_and_labels():
    d8 = dihedral_group(4)
    assert d8.n == 8 and not d8.is_abelian()
    x, y = d8.generators["x"], d8.generators["y"]
    assert d8.element_order(x) == 4 and d8.element_order(y) == 2
    # y x y^-1 = x^-1
    assert d8.table[d8.table[y][x]][d8.inv(y)] == d8.inv(x)

    q8 = quaternion_group(8)
    x, y = q8.generators["x"], q8.generators["y"]
    assert q8.element_order(x) == 4
    assert q8.element_order(y) == 4                      # y^2 = x^2 != 1
    assert q8.table[y][y] == q8.table[x][x]


def test_nonabelian_16_presentations():
    for name, g in NONABELIAN_16.items():
        assert g.n == 16, name
        assert not g.is_abelian(), name
    g2 = NONABELIAN_16["g2"]
    a, b = g2.generators["a"], g2.generators["b"]
    assert g2.element_order(a) == 8 and g2.element_order(b) == 2
    # b a b^-1 = a^3
    a3 = g2.table[g2.table[a][a]][a]
    assert g2.table[g2.table[b][a]][g2.inv(b)] == a3


def test_direct_product():
    g = direct_product(dihedral_group(4), cyclic_group(2), name="D8xC2")
    assert g.n == 16
    assert g.identity == g.index[(g.elements[g.identity])]
    assert g.element_order(g.index[((1, 0), (1,))]) == 4
