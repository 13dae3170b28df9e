"""Constructors for the Hopf algebras under study.

* group algebras kG and their duals (kG)*
* bicrossed products (kG)* #_{sigma,theta} kC2 on the basis {e_g, e_g tbar}
* Drinfeld twists (kG)_J, with the explicit J supported on a Klein
  four-subgroup, and the 2-cocycle verification
* the smash coproduct built on kQ8 (x) kC2

The bicrossed constructor validates its input data eagerly and reports the
violated condition by name; the antipode is obtained by solving the antipode
axiom linearly in the t-part coefficients, never from transcribed formulas.
"""

from __future__ import annotations

from .cyclo import CycNum, ONE, ZERO, MINUS_ONE, I, cyc
from fractions import Fraction
from . import linalg
from .groups import FiniteGroup, quaternion_group, cyclic_group
from .hopf import HopfAlgebra, HopfError, vec_eq, _accum, _clean


class CocycleError(HopfError):
    """Invalid bicrossed-product data; .condition names the violated check."""

    def __init__(self, condition, detail=None):
        self.condition = condition
        self.detail = detail
        super().__init__("cocycle data rejected: %s (%s)" % (condition, detail))


# ---------------------------------------------------------------------------
# group algebras and duals
# ---------------------------------------------------------------------------


def group_algebra(g: FiniteGroup, name=None) -> HopfAlgebra:
    n = g.n
    mult = [[{g.table[i][j]: ONE} for j in range(n)] for i in range(n)]
    comult = [{(i, i): ONE} for i in range(n)]
    unit = {g.identity: ONE}
    counit = [ONE] * n
    antipode = [{g.inverse[i]: ONE} for i in range(n)]
    return HopfAlgebra(name or "k[%s]" % g.name,
                       [g.label(i) for i in range(n)],
                       mult, comult, unit, counit, antipode)


def dual_group_algebra(g: FiniteGroup, name=None) -> HopfAlgebra:
    n = g.n
    mult = [[({i: ONE} if i == j else {}) for j in range(n)] for i in range(n)]
    comult = [{} for _ in range(n)]
    for i in range(n):
        for j in range(n):
            comult[g.table[i][j]][(i, j)] = ONE
    unit = {i: ONE for i in range(n)}
    counit = [ONE if i == g.identity else ZERO for i in range(n)]
    antipode = [{g.inverse[i]: ONE} for i in range(n)]
    return HopfAlgebra(name or "k[%s]*" % g.name,
                       ["e(%s)" % g.label(i) for i in range(n)],
                       mult, comult, unit, counit, antipode)


def abelian_characters(g: FiniteGroup):
    """All characters of an abelian group, as value lists over g.elements.

    Element tuples are exponent vectors for cyclic factors, so characters
    are indexed by the same tuples.
    """
    if not g.is_abelian():
        raise ValueError("%s is not abelian" % g.name)
    # infer cyclic factor orders from the exponent-tuple element set
    width = len(g.elements[0])
    orders = [max(e[k] for e in g.elements) + 1 for k in range(width)]
    chars = []
    for chi in g.elements:
        vals = [
            _root_prod(chi, e, orders)
            for e in g.elements
        ]
        chars.append(vals)
    return chars


def _root_prod(chi, e, orders):
    out = ONE
    for c, x, o in zip(chi, e, orders):
        out = out * CycNum.zeta((16 // o) * c * x)
    return out


# ---------------------------------------------------------------------------
# bicrossed products (kG)* # kC2
# ---------------------------------------------------------------------------


class BicrossedData:
    """Input data: a group G of order 8, an order-<=2 action automorphism
    (as an index map g -> f(g)), the coefficients c_g of tbar^2 = sum c_g e_g,
    and theta(g, h) giving Delta(tbar) = sum theta(g,h) e_g tbar (x) e_h tbar.
    """

    def __init__(self, group: FiniteGroup, action, v_coeffs, theta):
        self.group = group
        self.action = action      # function: index -> index
        self.v = v_coeffs         # dict index -> CycNum
        self.theta = theta        # function: (index, index) -> CycNum

    def validate(self):
        g = self.group
        f, v, th = self.action, self.v, self.theta
        n = g.n
        e = g.identity
        for i in range(n):
            if f(f(i)) != i:
                raise CocycleError("action-order", g.label(i))
        for i in range(n):
            for j in range(n):
                if f(g.table[i][j]) != g.table[f(i)][f(j)]:
                    raise CocycleError("action-automorphism",
                                       (g.label(i), g.label(j)))
        for i in range(n):
            if th(e, i) != ONE or th(i, e) != ONE:
                raise CocycleError("theta-normalization", g.label(i))
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if th(g.table[a][b], c) * th(a, b) != \
                            th(a, g.table[b][c]) * th(b, c):
                        raise CocycleError("theta-cocycle",
                                           (g.label(a), g.label(b), g.label(c)))
        if v.get(e, ZERO) != ONE:
            raise CocycleError("normalization", str(v.get(e, ZERO)))
        for i in range(n):
            if v.get(f(i), ZERO) != v.get(i, ZERO):
                raise CocycleError("action-invariance", g.label(i))
        for a in range(n):
            for b in range(n):
                lhs = v.get(g.table[a][b], ZERO)
                rhs = th(a, b) * th(f(a), f(b)) * v.get(a, ZERO) * v.get(b, ZERO)
                if lhs != rhs:
                    raise CocycleError("bialgebra-compatibility",
                                       (g.label(a), g.label(b)))


def bicrossed_product(data: BicrossedData, name: str) -> HopfAlgebra:
    """Build the 16-dim bicrossed product from validated data.

    Basis order: e_g for g in G (indices 0..7), then e_g tbar (indices 8..15).
    """
    data.validate()
    g, f, v, th = data.group, data.action, data.v, data.theta
    n = g.n
    dim = 2 * n
    K = lambda i: i          # e_i
    T = lambda i: n + i      # e_i tbar

    mult = [[{} for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            if i == j:
                mult[K(i)][K(j)] = {K(i): ONE}
                mult[K(i)][T(j)] = {T(i): ONE}
            if i == f(j):
                mult[T(i)][K(j)] = {T(i): ONE}
                mult[T(i)][T(j)] = {K(i): v[i]}

    comult = [{} for _ in range(dim)]
    for a in range(n):
        for b in range(n):
            p = g.table[a][b]
            comult[K(p)][(K(a), K(b))] = ONE
            comult[T(p)][(T(a), T(b))] = th(a, b)

    unit = {K(i): ONE for i in range(n)}
    counit = [ZERO] * dim
    counit[K(g.identity)] = ONE
    counit[T(g.identity)] = ONE

    # Antipode: S(e_g) = e_{g^-1}; on the t-part make the ansatz
    # S(e_g tbar) = w_{f(g^-1)} e_{f(g^-1)} tbar and solve the linear system
    # produced by the antipode axiom  m(S (x) id)Delta(e_g tbar) = eps * 1.
    rows = linalg.zeros(n, n)
    rhs = [ONE] * n
    for gamma in range(n):
        target = ONE if gamma == g.identity else ZERO
        # Delta(e_gamma tbar) = sum_{ab=gamma} theta(a,b) e_a tbar (x) e_b tbar;
        # S(e_a tbar) e_b tbar = [f(a^-1) = f(b)] w_{f(a^-1)} c_{f(b)} e_{f(b)}
        for a in range(n):
            b = g.inverse[a]
            if g.table[a][b] != gamma:
                continue
            h = f(b)
            rows[h][h] = rows[h][h] + th(a, b) * v[h]
            rhs[h] = target  # output coordinate e_h must equal eps * unit
    w = linalg.solve(rows, rhs)
    if w is None:
        raise CocycleError("antipode", "antipode system is inconsistent")

    antipode = [{} for _ in range(dim)]
    for i in range(n):
        antipode[K(i)] = {K(g.inverse[i]): ONE}
        h = f(g.inverse[i])
        antipode[T(i)] = {T(h): w[h]}

    labels = ["e(%s)" % g.label(i) for i in range(n)] + \
             ["e(%s)t" % g.label(i) for i in range(n)]
    return HopfAlgebra(name, labels, mult, comult, unit, counit, antipode)


_MU16 = [CycNum.zeta(k) for k in range(16)]


def admissible_cocycles(group: FiniteGroup, action, theta_for_xi,
                        xi_candidates=None):
    """Solve the bicrossed-product compatibility conditions.

    Enumerates root-of-unity values of sigma(t,t) on the group generators
    (propagated over the whole group via the bialgebra-compatibility
    recurrence) and, optionally, a root-of-unity theta parameter xi.
    Returns a list of (xi, v_coeffs) pairs that pass every condition.
    """
    if xi_candidates is None:
        xi_candidates = [None]
    gens = sorted(set(group.generators.values()))
    if not gens:
        raise ValueError("group has no declared generators")
    n = group.n
    e = group.identity
    solutions = []
    seen = set()
    for xi in xi_candidates:
        th = theta_for_xi(xi) if xi is not None else theta_for_xi
        f = action

        def sfac(a, b):
            return th(a, b) * th(f(a), f(b))

        for assignment in _tuples(_MU16, len(gens)):
            v = {e: ONE}
            ok = True
            frontier = [e]
            # BFS closure: v[g * gen] = sfac(g, gen) v[g] v[gen]
            gen_vals = dict(zip(gens, assignment))
            while frontier and ok:
                nxt = []
                for a in frontier:
                    for gi, val in gen_vals.items():
                        b = group.table[a][gi]
                        cand = sfac(a, gi) * v[a] * val
                        if b in v:
                            if v[b] != cand:
                                ok = False
                                break
                        else:
                            v[b] = cand
                            nxt.append(b)
                    if not ok:
                        break
                frontier = nxt
            if not ok or len(v) != n:
                continue
            try:
                BicrossedData(group, action, v, th).validate()
            except CocycleError:
                continue
            key = (xi, tuple(sorted((k, c) for k, c in v.items())))
            if key not in seen:
                seen.add(key)
                solutions.append((xi, v))
    return solutions


def _tuples(pool, k):
    if k == 0:
        yield ()
        return
    for rest in _tuples(pool, k - 1):
        for x in pool:
            yield rest + (x,)


# ---------------------------------------------------------------------------
# Drinfeld twists
# ---------------------------------------------------------------------------


def klein_twist_element(h: HopfAlgebra, f_indices):
    """The explicit twist J (and its inverse) supported on the Klein
    four-subgroup with basis indices f_indices = [1, c, b, cb] in a group
    algebra H = kG.

    J = sum lam[g][h] delta_g (x) delta_h over the primitive idempotents
    delta of the subgroup algebra.
    """
    one, c, b, cb = f_indices
    quarter = CycNum.from_rational(Fraction(1, 4))
    # delta_g = 1/4 sum_u eps(g,u) u with the pairing fixed by the expanded
    # group-basis form of J (checked in the tests)
    labels = {one: (0, 0), c: (1, 0), b: (0, 1), cb: (1, 1)}
    deltas = []
    for g in (one, c, b, cb):
        ag, bg = labels[g]
        vec = {}
        for u in (one, c, b, cb):
            au, bu = labels[u]
            sign = -1 if (bg * au + ag * bu) % 2 else 1
            vec[u] = quarter * sign
        deltas.append(vec)
    lam = [[ONE, ONE, ONE, ONE],
           [ONE, ONE, I, -I],
           [ONE, -I, ONE, I],
           [ONE, I, -I, ONE]]
    J, Jinv = {}, {}
    for gi in range(4):
        for hi in range(4):
            for u, cu in deltas[gi].items():
                for w, cw in deltas[hi].items():
                    _accum(J, (u, w), lam[gi][hi] * cu * cw)
                    _accum(Jinv, (u, w), lam[gi][hi].inv() * cu * cw)
    return _clean(J), _clean(Jinv)


def verify_two_cocycle(h: HopfAlgebra, J, Jinv):
    """Check J Jinv = 1(x)1, the counit normalization, and
    d2(J) = (id(x)Delta)(J^-1) (1(x)J^-1) (J(x)1) (Delta(x)id)(J) = 1(x)1(x)1.
    """
    from .hopf import Report
    rep = Report("two-cocycle on %s" % h.name)
    if not vec_eq(h.mul2(J, Jinv), h.unit2()):
        rep.fail("not_invertible", None)
    eps1 = {}
    eps2 = {}
    for (a, b), c in J.items():
        _accum(eps1, b, c * h.counit[a])
        _accum(eps2, a, c * h.counit[b])
    if not vec_eq(eps1, h.unit) or not vec_eq(eps2, h.unit):
        rep.fail("counit_normalization", None)
    id_delta_Jinv = {}
    delta_id_J = {}
    for (a, b), c in Jinv.items():
        for (p, q), c2 in h.comult[b].items():
            _accum(id_delta_Jinv, (a, p, q), c * c2)
    for (a, b), c in J.items():
        for (p, q), c2 in h.comult[a].items():
            _accum(delta_id_J, (p, q, b), c * c2)
    one_Jinv = {}
    J_one = {}
    for (a, b), c in Jinv.items():
        for i, ci in h.unit.items():
            _accum(one_Jinv, (i, a, b), c * ci)
    for (a, b), c in J.items():
        for i, ci in h.unit.items():
            _accum(J_one, (a, b, i), c * ci)
    prod = h.mul3(h.mul3(h.mul3(id_delta_Jinv, one_Jinv), J_one), delta_id_J)
    if not vec_eq(prod, h.unit3()):
        rep.fail("cocycle_identity", None)
    return rep


def twist(h: HopfAlgebra, J, Jinv, name=None) -> HopfAlgebra:
    """The twisted Hopf algebra H_J: same algebra, Delta_J = J Delta J^-1,
    S_J = u S(.) u^-1 with u = m(id (x) S)(J)."""
    rep = verify_two_cocycle(h, J, Jinv)
    if not rep.ok:
        raise HopfError("invalid twist data: %s" % rep.failures)
    n = h.dim
    comult = []
    for i in range(n):
        comult.append(_clean(h.mul2(h.mul2(J, h.comult[i]), Jinv)))
    u = {}
    for (a, b), c in J.items():
        for k, ck in h.s({b: ONE}).items():
            for m, cm in h.mult[a][k].items():
                _accum(u, m, c * ck * cm)
    # invert u by solving (left multiplication by u) x = 1
    mat = linalg.zeros(n, n)
    for i, ci in u.items():
        for j in range(n):
            for k, ck in h.mult[i][j].items():
                mat[k][j] = mat[k][j] + ci * ck
    uinv_list = linalg.solve(mat, [h.unit.get(i, ZERO) for i in range(n)])
    if uinv_list is None:
        raise HopfError("twist element u is not invertible")
    uinv = {i: c for i, c in enumerate(uinv_list) if not c.is_zero()}
    antipode = [_clean(h.mul(h.mul(u, h.s(h.basis_vec(i))), uinv))
                for i in range(n)]
    return HopfAlgebra(name or h.name + "_J", list(h.basis),
                       [[dict(cell) for cell in row] for row in h.mult],
                       comult, dict(h.unit), list(h.counit), antipode)


# ---------------------------------------------------------------------------
# smash coproduct on kQ8 (x) kC2
# ---------------------------------------------------------------------------


def smash_coproduct_q8(name="kQ8#kC2") -> HopfAlgebra:
    """The smash coproduct: algebra kQ8 (x) kC2, coproduct twisted by the
    C2-action swapping the two generators of Q8.

    Basis: x # delta_k for x in Q8, k in {0, 1} (delta over the dual basis
    of kC2); index = 2 * (index of x) + k.
    """
    q8 = quaternion_group(8)
    n = q8.n
    dim = 2 * n
    # the order-2 automorphism alpha: a <-> b extended to all of Q8
    gen_a, gen_b = q8.index[(1, 0)], q8.index[(0, 1)]
    alpha = _automorphism_from_gens(q8, {gen_a: gen_b, gen_b: gen_a})

    idx = lambda x, k: 2 * x + k
    mult = [[{} for _ in range(dim)] for _ in range(dim)]
    for x in range(n):
        for y in range(n):
            for k in range(2):
                mult[idx(x, k)][idx(y, k)] = {idx(q8.table[x][y], k): ONE}
    comult = [{} for _ in range(dim)]
    for x in range(n):
        for k in range(2):
            out = comult[idx(x, k)]
            for r in range(2):
                t = (k - r) % 2
                img = x if r == 0 else alpha[x]
                out[(idx(x, r), idx(img, t))] = ONE
    unit = {idx(q8.identity, k): ONE for k in range(2)}
    counit = [ZERO] * dim
    for x in range(n):
        counit[idx(x, 0)] = ONE
    antipode = [{} for _ in range(dim)]
    for x in range(n):
        xin = q8.inverse[x]
        antipode[idx(x, 0)] = {idx(xin, 0): ONE}
        antipode[idx(x, 1)] = {idx(alpha[xin], 1): ONE}
    labels = ["%s#d%d" % (q8.label(x), k) for x in range(n) for k in range(2)]
    return HopfAlgebra(name, labels, mult, comult, unit, counit, antipode)


def _automorphism_from_gens(g: FiniteGroup, gen_images):
    """Extend generator images to a full automorphism index map (validated)."""
    img = {g.identity: g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for s, si in gen_images.items():
                b = g.table[a][s]
                cand = g.table[img[a]][si]
                if b in img:
                    if img[b] != cand:
                        raise ValueError("generator images are inconsistent")
                else:
                    img[b] = cand
                    nxt.append(b)
        frontier = nxt
    if len(img) != g.n:
        raise ValueError("generators do not generate the group")
    out = [img[i] for i in range(g.n)]
    for i in range(g.n):
        for j in range(g.n):
            if out[g.table[i][j]] != g.table[out[i]][out[j]]:
                raise ValueError("images do not define an automorphism")
    return out
