"""Fusion rings (Grothendieck rings of the semisimple module categories).

A FusionRing is a based ring: basic elements with integer degrees, a unit,
an involution (duality), and an integer multiplication table
``table[x][y][z]`` = multiplicity of basic z in x * y.  The three structural
identities verified here:

* associativity-duality:   m(z, x y) = m(x*, y z*)
* unit separation:         m(1, x y*) = delta_{x,y}
* degree additivity:       sum_z m(z, x y) deg z = deg x deg y

All entries are plain integers, so every check is exact.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction

from .hopf import Report


class FusionRing:
    def __init__(self, name, labels, degrees, table, involution, unit=None):
        self.name = name
        self.labels = list(labels)
        self.degrees = list(degrees)
        self.table = table
        self.involution = list(involution)
        m = len(self.labels)
        if unit is None:
            unit = degrees.index(1)
            # the unit is the basic u with u*x = x for all x
            for cand in range(m):
                if all(table[cand][x][z] == (1 if z == x else 0)
                       for x in range(m) for z in range(m)):
                    unit = cand
                    break
        self.unit = unit

    @property
    def rank(self):
        return len(self.labels)

    def mult(self, x, y, z) -> int:
        return self.table[x][y][z]

    def verify_identities(self) -> Report:
        rep = Report("fusion ring %s" % self.name)
        m = self.rank
        t, inv, deg = self.table, self.involution, self.degrees
        u = self.unit
        if inv[u] != u or deg[u] != 1:
            rep.fail("unit", None)
        for x in range(m):
            if inv[inv[x]] != x or deg[inv[x]] != deg[x]:
                rep.fail("involution", x)
        for x in range(m):
            for y in range(m):
                if sum(t[x][y][z] * deg[z] for z in range(m)) != deg[x] * deg[y]:
                    rep.fail("degree_additivity", (x, y))
                if t[x][inv[y]][u] != (1 if x == y else 0):
                    rep.fail("unit_separation", (x, y))
                for z in range(m):
                    if t[x][y][z] != t[y][inv[z]][inv[x]]:
                        rep.fail("associativity_duality", (x, y, z))
        # associativity of the table itself
        for x in range(m):
            for y in range(m):
                for w in range(m):
                    for z in range(m):
                        lhs = sum(t[x][y][a] * t[a][w][z] for a in range(m))
                        rhs = sum(t[y][w][a] * t[x][a][z] for a in range(m))
                        if lhs != rhs:
                            rep.fail("associativity", (x, y, w, z))
        return rep

    def marked_element_squares(self) -> bool:
        """The regular element r = sum deg(x) x satisfies r x = deg(x) r."""
        m = self.rank
        for x in range(m):
            prod = [0] * m
            for a in range(m):
                for z in range(m):
                    prod[z] += self.degrees[a] * self.table[a][x][z]
            if prod != [self.degrees[x] * self.degrees[z] for z in range(m)]:
                return False
        return True

    # -- invariants ------------------------------------------------------

    def degree_profile(self):
        prof = {}
        for d in self.degrees:
            prof[d] = prof.get(d, 0) + 1
        return tuple(sorted(prof.items()))

    def center_rank(self) -> int:
        """Rank of the center of the ring over Q."""
        m = self.rank
        rows = []
        for v in range(m):          # unknown coefficient on basic v
            row = []
            for x in range(m):
                for z in range(m):
                    row.append(Fraction(self.table[v][x][z]
                                        - self.table[x][v][z]))
            rows.append(row)
        # center = nullspace of the transpose action; rank over Q
        cols = list(zip(*rows))
        mat = [list(c) for c in cols]
        r = _q_rank(mat)
        return m - r

    def subring_closure(self, seed):
        """Smallest subset of basics containing seed, the unit, and closed
        under involution and the support of multiplication."""
        cur = set(seed) | {self.unit}
        changed = True
        while changed:
            changed = False
            for x in list(cur):
                if self.involution[x] not in cur:
                    cur.add(self.involution[x])
                    changed = True
            for x in list(cur):
                for y in list(cur):
                    for z in range(self.rank):
                        if self.table[x][y][z] and z not in cur:
                            cur.add(z)
                            changed = True
        return frozenset(cur)

    def hereditary_subrings(self):
        """All subsets of basics that form based subrings."""
        found = set()
        for r in range(1, self.rank + 1):
            for seed in itertools.combinations(range(self.rank), r):
                found.add(self.subring_closure(seed))
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    # -- isomorphism -------------------------------------------------------

    def fusion_isomorphic(self, other) -> bool:
        """Existence of a degree- and table-preserving bijection of basics."""
        if self.rank != other.rank:
            return False
        if sorted(self.degrees) != sorted(other.degrees):
            return False
        m = self.rank
        slots = sorted(range(m), key=lambda x: (-self.degrees[x], x))

        def backtrack(assign, depth=0):
            if depth == m:
                return len(assign) == m
            x = slots[depth]
            if x in assign:
                return backtrack(assign, depth + 1)
            used = set(assign.values())
            for y in range(m):
                if y in used or other.degrees[y] != self.degrees[x]:
                    continue
                assign[x] = y
                if _consistent(self, other, assign) and \
                        backtrack(assign, depth + 1):
                    return True
                del assign[x]
            return False

        return backtrack({self.unit: other.unit})

    def to_dict(self):
        return {
            "name": self.name,
            "labels": self.labels,
            "degrees": self.degrees,
            "table": self.table,
            "involution": self.involution,
            "unit": self.unit,
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    @staticmethod
    def from_dict(d):
        return FusionRing(d["name"], d["labels"], d["degrees"], d["table"],
                          d["involution"], d.get("unit"))

    def __repr__(self):
        return "FusionRing(%s, rank %d)" % (self.name, self.rank)


def _consistent(a, b, assign):
    keys = list(assign)
    for x in keys:
        if b.involution[assign[x]] in assign.values() and \
                a.involution[x] in assign:
            if assign[a.involution[x]] != b.involution[assign[x]]:
                return False
        for y in keys:
            # products must match on the assigned range
            for z in keys:
                if a.table[x][y][z] != b.table[assign[x]][assign[y]][assign[z]]:
                    return False
    return True


def _q_rank(mat):
    if not mat:
        return 0
    m = [list(map(Fraction, row)) for row in mat]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        m[rank] = [x / pv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank
