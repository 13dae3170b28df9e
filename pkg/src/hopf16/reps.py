"""Matrix representations of the 16-dimensional Hopf algebras.

A Representation stores one exact matrix per basis element.  Completeness
of a claimed list of irreducibles is certified with intertwiner spaces
(commutant of each irrep is 1-dimensional, distinct irreps do not
intertwine, squared degrees sum to the dimension).  Fusion multiplicities
are computed two independent ways:

* trace of the central idempotent of the target irrep in the product rep,
* dimension of the intertwiner space (exact nullspace), used as an oracle.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycNum, ONE, ZERO
from . import linalg
from .hopf import HopfAlgebra, Report, trace_form_certificate, vec_eq


# -- small dense matrix helpers ---------------------------------------------


def mat_id(d):
    return [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]


def mat_zero(d):
    return [[ZERO] * d for _ in range(d)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def mat_mul(a, b):
    return linalg.mat_mul(a, b)


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def kron(a, b):
    da, db = len(a), len(b)
    out = []
    for i in range(da):
        for p in range(db):
            out.append([a[i][j] * b[p][q] for j in range(da) for q in range(db)])
    return out


def mat_trace(a):
    t = ZERO
    for i in range(len(a)):
        t = t + a[i][i]
    return t


class Representation:
    def __init__(self, h: HopfAlgebra, images, label):
        self.h = h
        self.images = images
        self.label = label
        self.degree = len(images[0])

    def apply(self, vec):
        out = mat_zero(self.degree)
        for i, c in vec.items():
            out = mat_add(out, mat_scale(self.images[i], c))
        return out

    def verify(self) -> Report:
        rep = Report("representation %s of %s" % (self.label, self.h.name))
        if not mat_eq(self.apply(self.h.unit), mat_id(self.degree)):
            rep.fail("unit", None)
        for i in range(self.h.dim):
            for j in range(self.h.dim):
                lhs = self.apply(self.h.mult[i][j])
                if not mat_eq(lhs, mat_mul(self.images[i], self.images[j])):
                    rep.fail("multiplicative", (i, j))
        return rep

    def __repr__(self):
        return "Representation(%s, degree %d)" % (self.label, self.degree)


def rep_product(a: Representation, b: Representation, label=None):
    """(a (x) b) o Delta — the module product underlying fusion."""
    h = a.h
    d = a.degree * b.degree
    images = []
    for i in range(h.dim):
        out = mat_zero(d)
        for (j, k), c in h.comult[i].items():
            out = mat_add(out, mat_scale(kron(a.images[j], b.images[k]), c))
        images.append(out)
    return Representation(h, images, label or "%s*%s" % (a.label, b.label))


def dual_rep(a: Representation, label=None):
    """a^*(x) = a(S(x))^T."""
    h = a.h
    images = []
    for i in range(h.dim):
        m = a.apply(h.antipode[i])
        images.append([list(col) for col in zip(*m)])
    return Representation(h, images, label or a.label + "*")


class _Span:
    """Incrementally maintained rref span of elements of H."""

    def __init__(self, n):
        self.n = n
        self.pivots = {}
        self.vectors = []

    def add(self, vec) -> bool:
        v = [vec.get(j, ZERO) for j in range(self.n)]
        for p, row in self.pivots.items():
            if not v[p].is_zero():
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        for p in range(self.n):
            if not v[p].is_zero():
                inv = v[p].inv()
                v = [x * inv for x in v]
                self.pivots[p] = v
                self.vectors.append(
                    {j: c for j, c in enumerate(v) if not c.is_zero()})
                return True
        return False

    def __len__(self):
        return len(self.vectors)


def generates_algebra(h: HopfAlgebra, gen_vectors) -> bool:
    """Do the given elements generate H as a unital algebra?"""
    span = _Span(h.dim)
    span.add(h.unit)
    for g in gen_vectors:
        span.add(g)
    changed = True
    while changed and len(span) < h.dim:
        changed = False
        for v in list(span.vectors):
            for g in gen_vectors:
                for prod in (h.mul(v, g), h.mul(g, v)):
                    if span.add(prod):
                        changed = True
    return len(span) == h.dim


def find_generators(h: HopfAlgebra):
    """A generating list of elements of H, found greedily over the basis."""
    gens = []
    for cand in range(h.dim):
        trial = gens + [h.basis_vec(cand)]
        if generates_algebra(h, trial):
            return trial
        # keep cand only if it enlarges the generated subalgebra
        span = _Span(h.dim)
        span.add(h.unit)
        for g in gens:
            span.add(g)
        if span.add(h.basis_vec(cand)):
            gens = trial
    if generates_algebra(h, gens):
        return gens
    raise ValueError("could not generate %s" % h.name)


def intertwiner_dimension(a: Representation, b: Representation,
                          generators=None) -> int:
    """dim Hom(a, b) = dim {M : b(x) M = M a(x) for all x}.

    Imposing the constraint on an algebra generating set is equivalent to
    imposing it on all basis elements.
    """
    if generators is None:
        generators = [a.h.basis_vec(i) for i in range(a.h.dim)]
    da, db = a.degree, b.degree
    nunk = da * db  # unknowns M[u][s], u < db, s < da
    rows = []
    for g in generators:
        ma, mb = a.apply(g), b.apply(g)
        for r in range(db):
            for s in range(da):
                row = [ZERO] * nunk
                for u in range(db):
                    if not mb[r][u].is_zero():
                        row[u * da + s] = row[u * da + s] + mb[r][u]
                for v in range(da):
                    if not ma[v][s].is_zero():
                        row[r * da + v] = row[r * da + v] - ma[v][s]
                if any(not c.is_zero() for c in row):
                    rows.append(row)
    if not rows:
        return nunk
    return nunk - linalg.rank(rows)


class IrrepSet:
    """A claimed complete list of irreducible representations."""

    def __init__(self, h: HopfAlgebra, reps, generators=None):
        self.h = h
        self.reps = list(reps)
        if generators is None:
            generators = find_generators(h)
        elif not generates_algebra(h, generators):
            raise ValueError("supplied elements do not generate %s" % h.name)
        self.generators = generators

    def verify(self) -> Report:
        rep = Report("irrep set of %s" % self.h.name)
        semisimple, _ = trace_form_certificate(self.h)
        if not semisimple:
            rep.fail("trace_form_degenerate", None)
        for r in self.reps:
            sub = r.verify()
            for f in sub.failures:
                rep.fail("rep %s: %s" % (r.label, f[0]), f[1])
        for i, a in enumerate(self.reps):
            for j, b in enumerate(self.reps):
                if j < i:
                    continue
                d = intertwiner_dimension(a, b, self.generators)
                want = 1 if i == j else 0
                if d != want:
                    rep.fail("intertwiner_dimension",
                             (a.label, b.label, d, want))
        if sum(r.degree ** 2 for r in self.reps) != self.h.dim:
            rep.fail("degree_sum", sum(r.degree ** 2 for r in self.reps))
        return rep

    def central_idempotents(self):
        """e_z with pi_j(e_z) = delta_{jz} Id, found by an exact linear solve."""
        h = self.h
        n = h.dim
        rows = []
        for r in self.reps:
            for a in range(r.degree):
                for b in range(r.degree):
                    rows.append([r.images[m][a][b] for m in range(n)])
        if len(rows) != n:
            raise ValueError("irrep set does not have full matrix size")
        idems = []
        for z, rz in enumerate(self.reps):
            rhs = []
            for j, r in enumerate(self.reps):
                for a in range(r.degree):
                    for b in range(r.degree):
                        rhs.append(ONE if (j == z and a == b) else ZERO)
            sol = linalg.solve(rows, rhs)
            if sol is None:
                raise ValueError("no central idempotent for %s" % rz.label)
            idems.append({i: c for i, c in enumerate(sol) if not c.is_zero()})
        return idems

    def multiplicity_by_trace(self, idem_z, degree_z, prod: Representation):
        t = mat_trace(prod.apply(idem_z))
        q = t.as_rational() / degree_z
        if q.denominator != 1 or q < 0:
            raise ValueError("trace multiplicity %s is not a natural number" % q)
        return int(q)

    def multiplicity_by_intertwiner(self, z: Representation,
                                    prod: Representation):
        return intertwiner_dimension(z, prod, self.generators)

    def fusion_table(self, cross_check=True):
        """table[x][y][z] plus a report of the trace/intertwiner agreement."""
        rep = Report("fusion of %s" % self.h.name)
        idems = self.central_idempotents()
        m = len(self.reps)
        table = [[[0] * m for _ in range(m)] for _ in range(m)]
        for x in range(m):
            for y in range(m):
                prod = rep_product(self.reps[x], self.reps[y])
                total = 0
                for z in range(m):
                    n1 = self.multiplicity_by_trace(
                        idems[z], self.reps[z].degree, prod)
                    if cross_check:
                        n2 = self.multiplicity_by_intertwiner(
                            self.reps[z], prod)
                        if n1 != n2:
                            rep.fail("method_disagreement",
                                     (self.reps[x].label, self.reps[y].label,
                                      self.reps[z].label, n1, n2))
                    table[x][y][z] = n1
                    total += n1 * self.reps[z].degree
                if total != prod.degree:
                    rep.fail("degree_mismatch",
                             (self.reps[x].label, self.reps[y].label))
        return table, rep

    def involution(self):
        """index of the dual of each irrep within the set."""
        out = []
        for r in self.reps:
            d = dual_rep(r)
            match = None
            for j, cand in enumerate(self.reps):
                if cand.degree == r.degree and \
                        intertwiner_dimension(d, cand, self.generators) == 1:
                    match = j
                    break
            if match is None:
                raise ValueError("dual of %s not in the set" % r.label)
            out.append(match)
        return out
