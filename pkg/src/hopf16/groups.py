"""Finite groups as validated multiplication tables.

Groups are built from a normal-form element set (tuples of generator
exponents) and a composition rule; the constructor checks closure,
associativity, identity and inverses, so a typo in a presentation fails
loudly at build time.  Everything needed here has order at most 16.
"""

from __future__ import annotations


class GroupError(ValueError):
    pass


class UnsupportedOrder(GroupError):
    pass


class FiniteGroup:
    def __init__(self, name, elements, mul_fn, generators=None, labeler=None):
        self.name = name
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise GroupError("duplicate elements in %s" % name)
        n = len(self.elements)
        self.n = n
        idx = self.index
        try:
            self.table = [
                [idx[mul_fn(a, b)] for b in self.elements] for a in self.elements
            ]
        except KeyError as bad:
            raise GroupError("%s is not closed (product %s)" % (name, bad))
        self.identity = _find_identity(self.table)
        self.inverse = _find_inverses(self.table, self.identity)
        _check_associative(self.table)
        self.generators = {
            g: idx[e] for g, e in (generators or {}).items()
        }
        self._labeler = labeler

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.inverse[i]

    def label(self, i: int) -> str:
        if self._labeler:
            return self._labeler(self.elements[i])
        return str(self.elements[i])

    def element_order(self, i: int) -> int:
        k, g = 1, i
        while g != self.identity:
            g = self.table[g][i]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.n) for j in range(i))

    def order_profile(self):
        prof = {}
        for i in range(self.n):
            o = self.element_order(i)
            prof[o] = prof.get(o, 0) + 1
        return prof

    def __len__(self):
        return self.n

    def __repr__(self):
        return "FiniteGroup(%s, order %d)" % (self.name, self.n)


def _find_identity(table):
    n = len(table)
    for e in range(n):
        if all(table[e][j] == j and table[j][e] == j for j in range(n)):
            return e
    raise GroupError("no identity element")


def _find_inverses(table, e):
    n = len(table)
    inv = [None] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == e and table[j][i] == e:
                inv[i] = j
                break
        if inv[i] is None:
            raise GroupError("element %d has no inverse" % i)
    return inv


def _check_associative(table):
    n = len(table)
    for a in range(n):
        ta = table[a]
        for b in range(n):
            tab = table[ta[b]]
            tb = table[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    raise GroupError("multiplication is not associative")


# ---------------------------------------------------------------------------
# named constructions
# ---------------------------------------------------------------------------


def _power_label(names, exps):
    parts = []
    for g, e in zip(names, exps):
        if e == 1:
            parts.append(g)
        elif e:
            parts.append("%s^%d" % (g, e))
    return "*".join(parts) or "1"


def abelian_group(name, orders, gen_names):
    """Direct product of cyclic groups of the given orders."""
    elements = [()]
    for o in orders:
        elements = [e + (k,) for e in elements for k in range(o)]
    elements.sort()

    def mul(a, b):
        return tuple((x + y) % o for x, y, o in zip(a, b, orders))

    gens = {
        g: tuple(1 if k == i else 0 for k in range(len(orders)))
        for i, g in enumerate(gen_names)
    }
    return FiniteGroup(name, elements, mul, gens,
                       lambda e: _power_label(gen_names, e))


def cyclic_group(n, name=None):
    return abelian_group(name or "C%d" % n, [n], ["g"])


def dihedral_group(n, name=None):
    """Dihedral group of order 2n: x^n = y^2 = 1, y x = x^-1 y."""

    def mul(a, b):
        p1, q1 = a
        p2, q2 = b
        return ((p1 + (p2 if q1 == 0 else -p2)) % n, (q1 + q2) % 2)

    elements = [(p, q) for q in range(2) for p in range(n)]
    elements.sort()
    return FiniteGroup(name or "D%d" % (2 * n), elements, mul,
                       {"x": (1, 0), "y": (0, 1)},
                       lambda e: _power_label(["x", "y"], e))


def quaternion_group(order, name=None):
    """Generalized quaternion group: x^(order/2) = 1, y^2 = x^(order/4),
    y x = x^-1 y."""
    m = order // 2

    def mul(a, b):
        p1, q1 = a
        p2, q2 = b
        return ((p1 + (p2 if q1 == 0 else -p2) + (m // 2) * q1 * q2) % m,
                (q1 + q2) % 2)

    elements = [(p, q) for q in range(2) for p in range(m)]
    elements.sort()
    return FiniteGroup(name or "Q%d" % order, elements, mul,
                       {"x": (1, 0), "y": (0, 1)},
                       lambda e: _power_label(["x", "y"], e))


def direct_product(g1, g2, name=None):
    elements = [(a, b) for a in g1.elements for b in g2.elements]

    def mul(x, y):
        return (g1.elements[g1.table[g1.index[x[0]]][g1.index[y[0]]]],
                g2.elements[g2.table[g2.index[x[1]]][g2.index[y[1]]]])

    gens = {}
    for gname, gi in g1.generators.items():
        gens[gname] = (g1.elements[gi], g2.elements[g2.identity])
    for gname, gi in g2.generators.items():
        key = gname if gname not in gens else gname + "'"
        gens[key] = (g1.elements[g1.identity], g2.elements[gi])
    return FiniteGroup(name or "%sx%s" % (g1.name, g2.name), elements, mul, gens)


def _two_gen_order16(name, twist):
    """Order-16 group <a, b : a^8 = b^2 = 1, b a = a^twist b>."""

    def mul(x, y):
        p1, q1 = x
        p2, q2 = y
        return ((p1 + (twist ** q1) * p2) % 8, (q1 + q2) % 2)

    elements = [(p, q) for q in range(2) for p in range(8)]
    elements.sort()
    return FiniteGroup(name, elements, mul, {"a": (1, 0), "b": (0, 1)},
                       lambda e: _power_label(["a", "b"], e))


def _nonabelian_order16_catalog():
    """The nine nonabelian groups of order 16, numbered g1..g9."""
    cat = {}
    cat["g1"] = _two_gen_order16("g1", 5)      # b a = a^5 b
    cat["g2"] = _two_gen_order16("g2", 3)      # b a = a^3 b

    g3 = dihedral_group(8, "g3")               # D16
    g3.generators = {"a": g3.index[(1, 0)], "b": g3.index[(0, 1)]}
    cat["g3"] = g3

    g4 = quaternion_group(16, "g4")            # Q16
    g4.generators = {"a": g4.index[(1, 0)], "b": g4.index[(0, 1)]}
    cat["g4"] = g4

    # g5: a^4 = b^4 = 1, b a = a^-1 b
    def mul5(x, y):
        p1, q1 = x
        p2, q2 = y
        return ((p1 + (p2 if q1 % 2 == 0 else -p2)) % 4, (q1 + q2) % 4)

    cat["g5"] = FiniteGroup(
        "g5", sorted((p, q) for p in range(4) for q in range(4)), mul5,
        {"a": (1, 0), "b": (0, 1)}, lambda e: _power_label(["a", "b"], e))

    # g6: a^4 = b^2 = c^2 = 1, c central, b a = a c b  (so b a b = a c)
    def mul6(x, y):
        p1, q1, r1 = x
        p2, q2, r2 = y
        return ((p1 + p2) % 4, (q1 + q2) % 2, (r1 + r2 + q1 * p2) % 2)

    cat["g6"] = FiniteGroup(
        "g6",
        sorted((p, q, r) for p in range(4) for q in range(2) for r in range(2)),
        mul6, {"a": (1, 0, 0), "b": (0, 1, 0), "c": (0, 0, 1)},
        lambda e: _power_label(["a", "b", "c"], e))

    # g7: a^4 = b^2 = c^2 = 1, a central, c b = a^2 b c  (so c b c = a^2 b)
    def mul7(x, y):
        p1, q1, r1 = x
        p2, q2, r2 = y
        return ((p1 + p2 + 2 * r1 * q2) % 4, (q1 + q2) % 2, (r1 + r2) % 2)

    cat["g7"] = FiniteGroup(
        "g7",
        sorted((p, q, r) for p in range(4) for q in range(2) for r in range(2)),
        mul7, {"a": (1, 0, 0), "b": (0, 1, 0), "c": (0, 0, 1)},
        lambda e: _power_label(["a", "b", "c"], e))

    d8 = dihedral_group(4, "D8")
    q8 = quaternion_group(8, "Q8")
    c2 = cyclic_group(2, "C2")

    def relabel(g, name):
        g.name = name
        return g

    g8 = direct_product(d8, c2, "g8")   # D8 x C2
    g8.generators = {"a": g8.index[((1, 0), (0,))],
                     "b": g8.index[((0, 1), (0,))],
                     "c": g8.index[((0, 0), (1,))]}
    cat["g8"] = g8
    g9 = direct_product(q8, c2, "g9")   # Q8 x C2
    g9.generators = {"a": g9.index[((1, 0), (0,))],
                     "b": g9.index[((0, 1), (0,))],
                     "c": g9.index[((0, 0), (1,))]}
    cat["g9"] = g9
    return cat


NONABELIAN_16 = _nonabelian_order16_catalog()


# ---------------------------------------------------------------------------
# identification of small groups by invariants
# ---------------------------------------------------------------------------

_SUPPORTED = {
    (1,): "C1",
    (2, "abelian"): "C2",
    (4, "abelian", "max2"): "C2xC2",
    (4, "abelian", "max4"): "C4",
    (8, "abelian", "max8"): "C8",
    (8, "abelian", "max4"): "C4xC2",
    (8, "abelian", "max2"): "C2^3",
}


def identify_group_table(table) -> str:
    """Name the isomorphism class of a multiplication table of order <= 8.

    Supported classes: C1, C2, C4, C2xC2, C8, C4xC2, C2^3, D8, Q8.
    """
    n = len(table)
    if n > 8 or n not in (1, 2, 4, 8):
        raise UnsupportedOrder("cannot identify groups of order %d" % n)
    g = FiniteGroup("anon", list(range(n)), lambda a, b: table[a][b])
    if n == 1:
        return "C1"
    maxo = max(g.element_order(i) for i in range(n))
    if g.is_abelian():
        return _SUPPORTED[(n, "abelian", "max%d" % maxo)]
    # nonabelian of order 8: D8 has five involutions, Q8 has one
    involutions = sum(1 for i in range(n) if g.element_order(i) == 2)
    if involutions == 5:
        return "D8"
    if involutions == 1:
        return "Q8"
    raise GroupError("not a group table of a known order-8 group")
