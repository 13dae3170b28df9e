"""Finite-dimensional Hopf algebras as exact structure-constant tensors.

A HopfAlgebra stores, over the field Q(zeta_16):

* ``mult[i][j]``   sparse vector {k: c},   b_i * b_j = sum c b_k
* ``comult[i]``    sparse tensor {(j,k): c},  Delta(b_i) = sum c b_j (x) b_k
* ``unit``         sparse vector for 1
* ``counit[i]``    scalar eps(b_i)
* ``antipode[i]``  sparse vector for S(b_i)

Elements of H are sparse dicts {index: CycNum}; elements of H (x) H and
H (x) H (x) H use tuple keys.  All verifications are exact equality checks,
reported with a witness when they fail.
"""

from __future__ import annotations

import json

from .cyclo import CycNum, ONE, ZERO, cyc, parse_cyc
from . import linalg
from .groups import identify_group_table


class HopfError(ValueError):
    pass


# ---------------------------------------------------------------------------
# sparse element arithmetic
# ---------------------------------------------------------------------------


def vec_add(x, y):
    out = dict(x)
    for k, c in y.items():
        s = out.get(k, ZERO) + c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vec_scale(x, c):
    if c.is_zero():
        return {}
    return {k: v * c for k, v in x.items()}


def vec_sub(x, y):
    return vec_add(x, {k: -c for k, c in y.items()})


def vec_eq(x, y):
    return _clean(x) == _clean(y)


def _clean(x):
    return {k: c for k, c in x.items() if not c.is_zero()}


def _accum(out, k, c):
    s = out.get(k, ZERO) + c
    if s.is_zero():
        out.pop(k, None)
    else:
        out[k] = s


class HopfAlgebra:
    def __init__(self, name, basis, mult, comult, unit, counit, antipode):
        self.name = name
        self.basis = list(basis)
        self.dim = len(self.basis)
        self.mult = mult
        self.comult = comult
        self.unit = _clean(unit)
        self.counit = list(counit)
        self.antipode = antipode

    def __repr__(self):
        return "HopfAlgebra(%s, dim %d)" % (self.name, self.dim)

    # -- operations on elements ----------------------------------------

    def basis_vec(self, i):
        return {i: ONE}

    def mul(self, x, y):
        out = {}
        mult = self.mult
        for i, ci in x.items():
            mi = mult[i]
            for j, cj in y.items():
                c = ci * cj
                for k, ck in mi[j].items():
                    _accum(out, k, c * ck)
        return out

    def mul_many(self, *elems):
        out = dict(self.unit)
        for e in elems:
            out = self.mul(out, e)
        return out

    def delta(self, x):
        out = {}
        for i, ci in x.items():
            for jk, c in self.comult[i].items():
                _accum(out, jk, ci * c)
        return out

    def eps(self, x):
        out = ZERO
        for i, ci in x.items():
            out = out + ci * self.counit[i]
        return out

    def s(self, x):
        out = {}
        for i, ci in x.items():
            for j, c in self.antipode[i].items():
                _accum(out, j, ci * c)
        return out

    # -- tensor-square / tensor-cube arithmetic ------------------------

    def mul2(self, x, y):
        """Product in H (x) H of sparse dicts keyed by index pairs."""
        out = {}
        mult = self.mult
        for (a, b), c1 in x.items():
            ma, mb = mult[a], mult[b]
            for (p, q), c2 in y.items():
                c = c1 * c2
                for u, cu in ma[p].items():
                    cc = c * cu
                    for v, cv in mb[q].items():
                        _accum(out, (u, v), cc * cv)
        return out

    def mul3(self, x, y):
        out = {}
        mult = self.mult
        for (a, b, c), c1 in x.items():
            ma, mb, mc = mult[a], mult[b], mult[c]
            for (p, q, r), c2 in y.items():
                w = c1 * c2
                for u, cu in ma[p].items():
                    wu = w * cu
                    for v, cv in mb[q].items():
                        wv = wu * cv
                        for t, ct in mc[r].items():
                            _accum(out, (u, v, t), wv * ct)
        return out

    def unit2(self):
        return {(i, j): ci * cj
                for i, ci in self.unit.items() for j, cj in self.unit.items()}

    def unit3(self):
        u = self.unit
        return {(i, j, k): ci * cj * ck
                for i, ci in u.items() for j, cj in u.items()
                for k, ck in u.items()}

    # -- predicates -----------------------------------------------------

    def is_commutative(self):
        for i in range(self.dim):
            for j in range(i):
                if not vec_eq(self.mult[i][j], self.mult[j][i]):
                    return False
        return True

    def is_cocommutative(self):
        for i in range(self.dim):
            d = self.comult[i]
            flipped = {(k, j): c for (j, k), c in d.items()}
            if not vec_eq(d, flipped):
                return False
        return True

    # -- serialization ----------------------------------------------------

    def to_dict(self):
        mult = [[i, j, k, str(c)]
                for i in range(self.dim) for j in range(self.dim)
                for k, c in sorted(self.mult[i][j].items())]
        comult = [[i, j, k, str(c)]
                  for i in range(self.dim)
                  for (j, k), c in sorted(self.comult[i].items())]
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": self.basis,
            "mult": mult,
            "comult": comult,
            "unit": [[i, str(c)] for i, c in sorted(self.unit.items())],
            "counit": [str(c) for c in self.counit],
            "antipode": [[i, j, str(c)]
                         for i in range(self.dim)
                         for j, c in sorted(self.antipode[i].items())],
        }

    @staticmethod
    def from_dict(data):
        n = data["dim"]
        mult = [[{} for _ in range(n)] for _ in range(n)]
        for i, j, k, c in data["mult"]:
            mult[i][j][k] = parse_cyc(c)
        comult = [{} for _ in range(n)]
        for i, j, k, c in data["comult"]:
            comult[i][(j, k)] = parse_cyc(c)
        antipode = [{} for _ in range(n)]
        for i, j, c in data["antipode"]:
            antipode[i][j] = parse_cyc(c)
        return HopfAlgebra(
            data["name"], data["basis"], mult, comult,
            {i: parse_cyc(c) for i, c in data["unit"]},
            [parse_cyc(c) for c in data["counit"]],
            antipode,
        )

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    @staticmethod
    def from_json(text):
        return HopfAlgebra.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# axiom verification
# ---------------------------------------------------------------------------


class Report:
    """Outcome of a verification: ok flag plus (check, witness) failures."""

    def __init__(self, subject):
        self.subject = subject
        self.failures = []

    def fail(self, check, witness):
        self.failures.append((check, witness))

    @property
    def ok(self):
        return not self.failures

    def __repr__(self):
        if self.ok:
            return "Report(%s: all checks passed)" % self.subject
        return "Report(%s: FAILED %s)" % (self.subject, self.failures[:3])


def verify_axioms(h: HopfAlgebra, checks=None) -> Report:
    """Run the seven Hopf-algebra axiom checks; exact, no tolerances."""
    rep = Report(h.name)
    n = h.dim
    mult, comult = h.mult, h.comult
    run = lambda name: checks is None or name in checks

    if run("unit"):
        for i in range(n):
            b = h.basis_vec(i)
            if not vec_eq(h.mul(h.unit, b), b) or not vec_eq(h.mul(b, h.unit), b):
                rep.fail("unit", i)

    if run("associativity"):
        for i in range(n):
            for j in range(n):
                w = mult[i][j]
                for k in range(n):
                    left = {}
                    for m, cm in w.items():
                        for l, cl in mult[m][k].items():
                            _accum(left, l, cm * cl)
                    right = {}
                    for m, cm in mult[j][k].items():
                        for l, cl in mult[i][m].items():
                            _accum(right, l, cm * cl)
                    if left != right:
                        rep.fail("associativity", (i, j, k))

    if run("counit"):
        for i in range(n):
            lft, rgt = {}, {}
            for (j, k), c in comult[i].items():
                _accum(lft, k, c * h.counit[j])
                _accum(rgt, j, c * h.counit[k])
            b = h.basis_vec(i)
            if not vec_eq(lft, b) or not vec_eq(rgt, b):
                rep.fail("counit", i)

    if run("coassociativity"):
        for i in range(n):
            lft, rgt = {}, {}
            for (j, k), c in comult[i].items():
                for (a, b), c2 in comult[j].items():
                    _accum(lft, (a, b, k), c * c2)
                for (a, b), c2 in comult[k].items():
                    _accum(rgt, (j, a, b), c * c2)
            if lft != rgt:
                rep.fail("coassociativity", i)

    if run("comult_algebra_map"):
        if not vec_eq(h.delta(h.unit), h.unit2()):
            rep.fail("comult_algebra_map", "unit")
        for i in range(n):
            di = comult[i]
            for j in range(n):
                lhs = h.delta(mult[i][j])
                rhs = h.mul2(di, comult[j])
                if not vec_eq(lhs, rhs):
                    rep.fail("comult_algebra_map", (i, j))

    if run("counit_algebra_map"):
        if h.eps(h.unit) != ONE:
            rep.fail("counit_algebra_map", "unit")
        for i in range(n):
            for j in range(n):
                if h.eps(mult[i][j]) != h.counit[i] * h.counit[j]:
                    rep.fail("counit_algebra_map", (i, j))

    if run("antipode"):
        for i in range(n):
            lft, rgt = {}, {}
            for (j, k), c in comult[i].items():
                for m, cm in h.mul(h.antipode[j], h.basis_vec(k)).items():
                    _accum(lft, m, c * cm)
                for m, cm in h.mul(h.basis_vec(j), h.antipode[k]).items():
                    _accum(rgt, m, c * cm)
            target = vec_scale(h.unit, h.counit[i])
            if not vec_eq(lft, target) or not vec_eq(rgt, target):
                rep.fail("antipode", i)

    return rep


# ---------------------------------------------------------------------------
# constructions on tensors
# ---------------------------------------------------------------------------


def dual_hopf(h: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra on the dual basis (transpose all tensors)."""
    n = h.dim
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for (i, j), c in h.comult[k].items():
            mult[i][j][k] = c
    comult = [{} for _ in range(n)]
    for j in range(n):
        for i in range(n):
            for k, c in h.mult[j][i].items():
                comult[k][(j, i)] = c
    unit = {i: c for i, c in enumerate(h.counit) if not c.is_zero()}
    counit = [h.unit.get(i, ZERO) for i in range(n)]
    antipode = [{} for _ in range(n)]
    for i in range(n):
        for j, c in h.antipode[i].items():
            antipode[j][i] = c
    return HopfAlgebra(h.name + "*", ["(%s)*" % b for b in h.basis],
                       mult, comult, unit, counit, antipode)


def tensor_product(a: HopfAlgebra, b: HopfAlgebra) -> HopfAlgebra:
    nb = b.dim
    n = a.dim * nb
    pair = lambda i, j: i * nb + j
    basis = ["%s(x)%s" % (x, y) for x in a.basis for y in b.basis]
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for i1 in range(a.dim):
        for j1 in range(nb):
            for i2 in range(a.dim):
                for j2 in range(nb):
                    cell = mult[pair(i1, j1)][pair(i2, j2)]
                    for k1, c1 in a.mult[i1][i2].items():
                        for k2, c2 in b.mult[j1][j2].items():
                            cell[pair(k1, k2)] = c1 * c2
    comult = [{} for _ in range(n)]
    for i in range(a.dim):
        for j in range(nb):
            out = comult[pair(i, j)]
            for (p1, q1), c1 in a.comult[i].items():
                for (p2, q2), c2 in b.comult[j].items():
                    out[(pair(p1, p2), pair(q1, q2))] = c1 * c2
    unit = {}
    for i, c1 in a.unit.items():
        for j, c2 in b.unit.items():
            unit[pair(i, j)] = c1 * c2
    counit = [a.counit[i] * b.counit[j]
              for i in range(a.dim) for j in range(nb)]
    antipode = [{} for _ in range(n)]
    for i in range(a.dim):
        for j in range(nb):
            out = antipode[pair(i, j)]
            for p, c1 in a.antipode[i].items():
                for q, c2 in b.antipode[j].items():
                    out[pair(p, q)] = c1 * c2
    return HopfAlgebra("%s(x)%s" % (a.name, b.name), basis,
                       mult, comult, unit, counit, antipode)


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------


def apply_map(images, x):
    """Apply a linear map given by basis images (list of sparse dicts)."""
    out = {}
    for i, c in x.items():
        for j, cj in images[i].items():
            _accum(out, j, c * cj)
    return out


def verify_morphism(src: HopfAlgebra, dst: HopfAlgebra, images,
                    require_bijective=False) -> Report:
    """Check that the linear map b_i |-> images[i] is a Hopf algebra map."""
    rep = Report("%s -> %s" % (src.name, dst.name))
    f = lambda x: apply_map(images, x)
    if not vec_eq(f(src.unit), dst.unit):
        rep.fail("unit", None)
    for i in range(src.dim):
        for j in range(src.dim):
            if not vec_eq(f(src.mult[i][j]), dst.mul(images[i], images[j])):
                rep.fail("multiplicative", (i, j))
    for i in range(src.dim):
        lhs = {}
        for (j, k), c in src.comult[i].items():
            for p, cp in images[j].items():
                for q, cq in images[k].items():
                    _accum(lhs, (p, q), c * cp * cq)
        if not vec_eq(lhs, dst.delta(images[i])):
            rep.fail("comultiplicative", i)
        if dst.eps(images[i]) != src.counit[i]:
            rep.fail("counit", i)
        if not vec_eq(f(src.antipode[i]), dst.s(images[i])):
            rep.fail("antipode", i)
    if require_bijective:
        mat = [[images[i].get(j, ZERO) for j in range(dst.dim)]
               for i in range(src.dim)]
        if src.dim != dst.dim or linalg.rank(mat) != src.dim:
            rep.fail("bijective", None)
    return rep


# ---------------------------------------------------------------------------
# semisimplicity and grouplikes
# ---------------------------------------------------------------------------


def trace_form_certificate(h: HopfAlgebra):
    """(nondegenerate?, Gram matrix) for the trace form tr(L_{b_i b_j}).

    Nondegeneracy of this form is an exact certificate of semisimplicity
    for the underlying algebra.
    """
    n = h.dim
    tvec = [ZERO] * n
    for m in range(n):
        for k in range(n):
            tvec[m] = tvec[m] + h.mult[m][k].get(k, ZERO)
    gram = [[sum((c * tvec[m] for m, c in h.mult[i][j].items()), ZERO)
             for j in range(n)] for i in range(n)]
    return linalg.rank(gram) == n, gram


def dual_algebra_mult(h: HopfAlgebra):
    """Multiplication table of H* (transpose of the comultiplication)."""
    n = h.dim
    mult = [[{} for _ in range(n)] for _ in range(n)]
    for k in range(n):
        for (i, j), c in h.comult[k].items():
            mult[i][j][k] = c
    return mult


def _span_rank(vectors, dim):
    mat = [[v.get(j, ZERO) for j in range(dim)] for v in vectors]
    return linalg.rank(mat)


def find_grouplikes_count_bound(h: HopfAlgebra) -> int:
    """dim of (H* modulo its commutator ideal) = number of grouplikes of H.

    Requires H (hence H*) semisimple; certified by the trace form on both
    sides before counting.
    """
    ok_h, _ = trace_form_certificate(h)
    ok_d, _ = trace_form_certificate(dual_hopf(h))
    if not (ok_h and ok_d):
        raise HopfError("trace form degenerate; grouplike count bound "
                        "needs semisimplicity on both sides")
    n = h.dim
    mult = dual_algebra_mult(h)

    def dmul(x, y):
        out = {}
        for i, ci in x.items():
            for j, cj in y.items():
                for k, ck in mult[i][j].items():
                    _accum(out, k, ci * cj * ck)
        return out

    span = []  # rref rows of the ideal, as dense lists
    pivots = {}

    def reduce_add(vec):
        """Gaussian-reduce vec against span; add if independent."""
        v = [vec.get(j, ZERO) for j in range(n)]
        for p, row in pivots.items():
            if not v[p].is_zero():
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        for p in range(n):
            if not v[p].is_zero():
                inv = v[p].inv()
                v = [x * inv for x in v]
                pivots[p] = v
                span.append(v)
                return True
        return False

    frontier = []
    for i in range(n):
        for j in range(i):
            comm = vec_sub(mult[i][j], mult[j][i])
            if comm and reduce_add(comm):
                frontier.append(comm)
    while frontier:
        new_frontier = []
        for v in frontier:
            for i in range(n):
                for prod in (dmul({i: ONE}, v), dmul(v, {i: ONE})):
                    if prod and reduce_add(prod):
                        new_frontier.append(prod)
        frontier = new_frontier
    return n - len(span)


def is_grouplike(h: HopfAlgebra, g) -> bool:
    gg = {(i, j): ci * cj for i, ci in g.items() for j, cj in g.items()}
    return vec_eq(h.delta(g), gg) and h.eps(g) == ONE


def verify_grouplike_set(h: HopfAlgebra, candidates, names=None,
                         check_count_bound=True):
    """Certify a claimed set of grouplikes and return its group table.

    Checks: each candidate is grouplike with S(g) g = 1, the set is linearly
    independent, closed under multiplication, and (optionally) exhausts the
    grouplike count bound.  Returns (table, report).
    """
    rep = Report("grouplikes of %s" % h.name)
    m = len(candidates)
    for a, g in enumerate(candidates):
        if not is_grouplike(h, g):
            rep.fail("not_grouplike", names[a] if names else a)
        if not vec_eq(h.mul(h.s(g), g), h.unit):
            rep.fail("antipode_inverse", names[a] if names else a)
    if _span_rank(candidates, h.dim) != m:
        rep.fail("not_independent", None)
    table = [[None] * m for _ in range(m)]
    lookup = {}
    for a, g in enumerate(candidates):
        lookup[tuple(sorted(_clean(g).items()))] = a
    for a in range(m):
        for b in range(m):
            prod = tuple(sorted(_clean(h.mul(candidates[a], candidates[b])).items()))
            if prod in lookup:
                table[a][b] = lookup[prod]
            else:
                rep.fail("not_closed", (a, b))
    if check_count_bound and rep.ok:
        bound = find_grouplikes_count_bound(h)
        if bound != m:
            rep.fail("incomplete_set", {"claimed": m, "bound": bound})
    return table, rep


def identify_group(table) -> str:
    return identify_group_table(table)


# ---------------------------------------------------------------------------
# quotient by a central grouplike
# ---------------------------------------------------------------------------


def quotient_by_central_grouplike(h: HopfAlgebra, g, name=None):
    """H / (g - 1)H for a central grouplike g of order 2; returns
    (quotient, projection_images, report).

    Well-definedness is certified a posteriori: the projection must verify
    as a surjective Hopf morphism and the quotient must pass all axioms.
    """
    rep = Report("quotient of %s" % h.name)
    if not is_grouplike(h, g):
        rep.fail("not_grouplike", None)
    for i in range(h.dim):
        b = h.basis_vec(i)
        if not vec_eq(h.mul(g, b), h.mul(b, g)):
            rep.fail("not_central", i)
    if not rep.ok:
        return None, None, rep
    n = h.dim
    gen = vec_sub(g, h.unit)
    ideal_rows = [h.mul(gen, h.basis_vec(i)) for i in range(n)]
    mat = [[v.get(j, ZERO) for j in range(n)] for v in ideal_rows]
    red, pivots = linalg.rref(mat)
    red = red[: len(pivots)]
    free = [j for j in range(n) if j not in pivots]
    nq = len(free)
    pos = {j: a for a, j in enumerate(free)}

    def proj(x):
        v = [x.get(j, ZERO) for j in range(n)]
        for r, p in enumerate(pivots):
            if not v[p].is_zero():
                f = v[p]
                v = [a - f * b for a, b in zip(v, red[r])]
        return {pos[j]: v[j] for j in free if not v[j].is_zero()}

    section = [h.basis_vec(j) for j in free]
    mult = [[proj(h.mul(section[a], section[b])) for b in range(nq)]
            for a in range(nq)]
    comult = []
    for a in range(nq):
        out = {}
        for (j, k), c in h.comult[free[a]].items():
            pj, pk = proj(h.basis_vec(j)), proj(h.basis_vec(k))
            for u, cu in pj.items():
                for v, cv in pk.items():
                    _accum(out, (u, v), c * cu * cv)
        comult.append(out)
    quotient = HopfAlgebra(
        name or h.name + "/(g-1)",
        [h.basis[j] for j in free],
        mult, comult,
        proj(h.unit),
        [h.counit[free[a]] for a in range(nq)],
        [proj(h.s(section[a])) for a in range(nq)],
    )
    proj_images = [proj(h.basis_vec(i)) for i in range(n)]
    morph = verify_morphism(h, quotient, proj_images)
    for failure in morph.failures:
        rep.fail(*failure)
    axioms = verify_axioms(quotient)
    for failure in axioms.failures:
        rep.fail(*failure)
    if _span_rank(proj_images, nq) != nq:
        rep.fail("not_surjective", None)
    return quotient, proj_images, rep
