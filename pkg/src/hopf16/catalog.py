"""The catalog of the sixteen nontrivial semisimple Hopf algebras of
dimension 16.

Every entry is a bicrossed product (k^G)#kC2 determined by a group G of
order 8, an order-2 action automorphism f, the coefficients of tbar^2 and
the coefficients of Delta(tbar).  Each entry also carries certified claims:
the grouplikes of H and of H*, a complete set of irreducible
representations, and the expected Grothendieck-ring class.

Alternate constructions (two-cocycle twists of group algebras, the smash
coproduct, and the dimension-8 quotient) are provided as standalone
builders so the isomorphism-level claims of the catalog can be
cross-checked.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycNum, ONE, ZERO, MINUS_ONE, I, OMEGA
from .groups import (FiniteGroup, abelian_group, cyclic_group,
                     dihedral_group, quaternion_group, direct_product,
                     NONABELIAN_16)
from .hopf import HopfAlgebra, tensor_product, quotient_by_central_grouplike
from .constructors import (BicrossedData, bicrossed_product, group_algebra,
                           klein_twist_element, twist, smash_coproduct_q8)
from .reps import (Representation, IrrepSet, rep_product,
                   intertwiner_dimension)


def _sign(e):
    return MINUS_ONE if e % 2 else ONE


def _ipow(e):
    return CycNum.zeta((4 * e) % 16)


# ---------------------------------------------------------------------------
# groups of order 8 used as G
# ---------------------------------------------------------------------------


def _c4xc2():
    return abelian_group("C4xC2", [4, 2], ["x", "y"])


def _c2cubed():
    return abelian_group("C2^3", [2, 2, 2], ["x", "y", "z"])


def _d8():
    return dihedral_group(4)


def _q8():
    return quaternion_group(8)


# ---------------------------------------------------------------------------
# generic helpers on a bicrossed product
# ---------------------------------------------------------------------------


def k_character_vector(data: BicrossedData, fn, with_t=False, t_scale=ONE):
    """The element sum fn(g) e_g (or sum fn(g) e_g tbar) of the product."""
    g = data.group
    off = g.n if with_t else 0
    return {off + i: t_scale * fn(g.elements[i]) for i in range(g.n)}


def algebra_characters(data: BicrossedData):
    """All algebra characters of the bicrossed product, as (point, t-value)
    pairs.  A character evaluates K at a point u fixed by the action and
    sends tbar to a root s of s^2 = c_u."""
    g = data.group
    out = []
    for u in range(g.n):
        if data.action(u) != u:
            continue
        cu = data.v[u]
        roots = [CycNum.zeta(k) for k in range(16)
                 if CycNum.zeta(k) * CycNum.zeta(k) == cu]
        for s in sorted(set(roots), key=str):
            out.append((u, s))
    return out


def character_rep(h: HopfAlgebra, data: BicrossedData, point, t_value,
                  label=None):
    """A character (degree-1 representation): evaluation of K at the given
    group point, tbar mapsto t_value."""
    n = data.group.n
    images = [[[ZERO]] for _ in range(h.dim)]
    images[point] = [[ONE]]
    images[n + point] = [[t_value]]
    if label is None:
        label = "ch(%s;%s)" % (data.group.label(point), t_value)
    return Representation(h, images, label)


def rep_from_k_points(h: HopfAlgebra, data: BicrossedData, g1, g2, mt,
                      label):
    """Degree-2 representation with K acting through evaluations at the two
    group points g1, g2 (tuples) and tbar acting by the matrix mt."""
    g = data.group
    i1, i2 = g.index[g1], g.index[g2]
    n = g.n
    images = [[[ZERO, ZERO], [ZERO, ZERO]] for _ in range(h.dim)]
    images[i1] = [[ONE, ZERO], [ZERO, ZERO]]
    images[i2] = [[ZERO, ZERO], [ZERO, ONE]]
    for i in (i1, i2):
        d = images[i]
        images[n + i] = [[d[0][0] * mt[0][0], d[0][0] * mt[0][1]],
                         [d[1][1] * mt[1][0], d[1][1] * mt[1][1]]]
    return Representation(h, images, label)


def rep_from_dual_generators(h: HopfAlgebra, data: BicrossedData, gen_mats,
                             mt, label):
    """Degree-2 representation of an abelian-G product given by matrices for
    the character-basis units of K (one per cyclic factor) and for tbar.

    The image of e_g is recovered by the inverse discrete Fourier transform
    over the character group of G.
    """
    from .reps import mat_mul, mat_add, mat_scale, mat_zero, mat_id
    g = data.group
    orders = [max(e[k] for e in g.elements) + 1
              for k in range(len(g.elements[0]))]
    n = g.n
    scale = CycNum.from_rational(Fraction(1, n))
    images = [None] * h.dim
    for gi, el in enumerate(g.elements):
        acc = mat_zero(2)
        for chi in g.elements:      # characters indexed like elements
            coef = scale
            prod = mat_id(2)
            for c, x, o, m in zip(chi, el, orders, gen_mats):
                coef = coef * CycNum.zeta((-(16 // o) * c * x) % 16)
                for _ in range(c):
                    prod = mat_mul(prod, m)
            acc = mat_add(acc, mat_scale(prod, coef))
        images[gi] = acc
        images[n + gi] = mat_mul(acc, mt)
    return Representation(h, images, label)


def standard_generators(h: HopfAlgebra, data: BicrossedData):
    """Two elements that generate the product: a K element separating the
    points of G, and tbar."""
    n = data.group.n
    sep = {i: CycNum.from_rational(Fraction(i + 1)) for i in range(n)}
    tbar = {n + i: ONE for i in range(n)}
    return [sep, tbar]


# ---------------------------------------------------------------------------
# catalog entries
# ---------------------------------------------------------------------------


class CatalogEntry:
    def __init__(self, name, row, group_fn, action, theta, v_fn, expected,
                 rep_specs, grouplike_spec, description=""):
        self.name = name
        self.row = row
        self._group_fn = group_fn
        self._action = action
        self._theta = theta
        self._v_fn = v_fn
        self.expected = expected
        self._rep_specs = rep_specs
        self._grouplike_spec = grouplike_spec
        self.description = description
        self._built = None

    def data(self) -> BicrossedData:
        g = self._group_fn()
        act = self._action
        f = lambda i: g.index[act(g.elements[i])]
        th = lambda i, j: self._theta(g.elements[i], g.elements[j])
        v = {i: self._v_fn(g.elements[i]) for i in range(g.n)}
        return BicrossedData(g, f, v, th)

    def build(self) -> HopfAlgebra:
        if self._built is None:
            data = self.data()
            self._built = (bicrossed_product(data, self.name), data)
        return self._built[0]

    def built_data(self) -> BicrossedData:
        self.build()
        return self._built[1]

    def generators(self):
        return standard_generators(self.build(), self.built_data())

    # -- grouplikes of H ---------------------------------------------------

    def grouplike_candidates(self):
        """(vectors, names) of the claimed grouplikes of H."""
        data = self.built_data()
        g = data.group
        kind, chars = self._grouplike_spec
        vectors, names = [], []
        for label, fn in chars:
            vectors.append(k_character_vector(data, fn))
            names.append(label)
        if kind == "with_t":
            for label, fn in chars:
                vectors.append(k_character_vector(data, fn, with_t=True))
                names.append(label + "*t")
        return vectors, names

    # -- irreducible representations ----------------------------------------

    def characters(self):
        h = self.build()
        data = self.built_data()
        return [character_rep(h, data, u, s)
                for u, s in algebra_characters(data)]

    def two_dim_reps(self):
        h = self.build()
        data = self.built_data()
        reps = []
        for spec in self._rep_specs:
            if spec[0] == "points":
                _, label, g1, g2, mt = spec
                reps.append(rep_from_k_points(h, data, g1, g2, mt, label))
            else:
                _, label, gen_mats, mt = spec
                reps.append(rep_from_dual_generators(h, data, gen_mats, mt,
                                                     label))
        if len(reps) == 1:
            # the second irreducible is a character twist of the first
            gens = self.generators()
            base = reps[0]
            for ch in self.characters():
                cand = rep_product(ch, base, label="pi2")
                if intertwiner_dimension(base, cand, gens) == 0:
                    reps.append(cand)
                    break
            else:
                raise ValueError("no character twist yields a second "
                                 "irreducible for %s" % self.name)
        return reps

    def irrep_set(self) -> IrrepSet:
        return IrrepSet(self.build(), self.characters() + self.two_dim_reps(),
                        generators=self.generators())

    def __repr__(self):
        return "CatalogEntry(%s, row %d)" % (self.name, self.row)


# character functions on G used for grouplike candidates
def _xy_chars_c4xc2():
    out = []
    for a in range(4):
        for b in range(2):
            label = "X^%dY^%d" % (a, b)
            out.append((label,
                        lambda g, a=a, b=b: _ipow(a * g[0]) * _sign(b * g[1])))
    return out


def _sign_chars(width, names):
    out = []
    masks = [()]
    for _ in range(width):
        masks = [m + (k,) for m in masks for k in range(2)]
    for m in masks:
        label = "".join(n for n, e in zip(names, m) if e) or "1"
        out.append((label,
                    lambda g, m=m: _sign(sum(a * b for a, b in zip(m, g)))))
    return out


_MT_SWAP = [[ZERO, ONE], [ONE, ZERO]]
_MT_NEG = [[ZERO, MINUS_ONE], [ONE, ZERO]]
_MT_SYMPL = [[ZERO, ONE], [MINUS_ONE, ZERO]]
_Z16 = CycNum.zeta(1)
_MT_ROOT = [[ZERO, _Z16], [_Z16, ZERO]]

_DIAG_I = [[I, ZERO], [ZERO, -I]]
_DIAG_II = [[I, ZERO], [ZERO, I]]
_MINUS_ID = [[MINUS_ONE, ZERO], [ZERO, MINUS_ONE]]
_ID2 = [[ONE, ZERO], [ZERO, ONE]]
_SWAP = [[ZERO, ONE], [ONE, ZERO]]
_DIAG_PM = [[ONE, ZERO], [ZERO, MINUS_ONE]]
_DIAG_MP = [[MINUS_ONE, ZERO], [ZERO, ONE]]
_DIAG_OM = [[OMEGA, ZERO], [ZERO, -OMEGA]]


def _theta_abelian(a, b):
    return _sign(a[1] * b[0])


def _theta_d(xi1):
    def th(a, b):
        out = _sign(a[2] * (b[0] + b[1]))
        if xi1 < 0 and (a[1] * b[0]) % 2:
            out = -out
        return out
    return th


def _theta_i(a, b):
    return _ipow(a[1] * b[0])


def _theta_minus_i(a, b):
    return CycNum.zeta((12 * (a[1] * b[0])) % 16)


def _v_one(g):
    return ONE


def _make_entries():
    e = []

    act_a = lambda g: ((g[0] + 2 * g[1]) % 4, g[1])
    act_b = lambda g: ((-g[0]) % 4, g[1])
    act_c = lambda g: (g[0], (g[0] + g[1]) % 2)
    act_d = lambda g: (g[1], g[0], g[2])
    act_neg = lambda g: ((-g[0]) % 4, g[1])
    act_negy = lambda g: ((-g[0] + g[1]) % 4, g[1])

    xy8 = ("plain", _xy_chars_c4xc2())
    xyz8 = ("plain", _sign_chars(3, ["X", "Y", "Z"]))
    klein = ("plain", _sign_chars(2, ["X", "Y"]))
    d8_grouplikes = ("with_t", _sign_chars(2, ["X", "Y"]))

    def pts(label, g1, g2, mt):
        return ("points", label, g1, g2, mt)

    # -- G = C2^3 (rows 1-4) -------------------------------------------------
    # tbar^2 coefficients c_{pqr} = xi1^{pq} tau^r
    def _v_d(xi1, tau):
        return lambda g: (_sign(g[0] * g[1]) if xi1 < 0 else ONE) * \
                         (_sign(g[2]) if tau < 0 else ONE)

    hd_c = {(xi1, tau): _v_d(xi1, tau)
            for xi1 in (1, -1) for tau in (1, -1)}
    d_pi = [pts("pi1", (0, 1, 0), (1, 0, 0), _MT_SWAP)]
    e.append(CatalogEntry(
        "Hd-+", 1, _c2cubed, act_d, _theta_d(-1), hd_c[(-1, 1)],
        {"grouplikes": "C2^3", "dual_grouplikes": "C2^3", "k0": "5.1",
         "selfdual": True, "triangular": False,
         "notes": "isomorphic to the 8-dim nontrivial Hopf algebra "
                  "tensored with kC2"},
        d_pi, xyz8))
    e.append(CatalogEntry(
        "Hd++", 2, _c2cubed, act_d, _theta_d(1), hd_c[(1, 1)],
        {"grouplikes": "C2^3", "dual_grouplikes": "C2^3", "k0": "5.1",
         "selfdual": True, "triangular": True,
         "notes": "isomorphic to the Klein twist of k(D8xC2)"},
        d_pi, xyz8))
    e.append(CatalogEntry(
        "Hd+-", 3, _c2cubed, act_d, _theta_d(1), hd_c[(1, -1)],
        {"grouplikes": "C2^3", "dual_grouplikes": "C4xC2", "k0": "5.3",
         "dual": "Hc1", "separated": False,
         "notes": "dual description of row 5; rows 3/4 share all computed "
                  "invariants"},
        d_pi, xyz8))
    e.append(CatalogEntry(
        "Hd--", 4, _c2cubed, act_d, _theta_d(-1), hd_c[(-1, -1)],
        {"grouplikes": "C2^3", "dual_grouplikes": "C4xC2", "k0": "5.3",
         "dual": "Hb1", "separated": False,
         "notes": "dual description of row 6; rows 3/4 share all computed "
                  "invariants"},
        d_pi, xyz8))

    # -- G = C4xC2 (rows 5-11) -----------------------------------------------
    hc1_v = lambda g: [ONE, I, ONE, I][g[0]]
    hc0_v = lambda g: [ONE, MINUS_ONE, MINUS_ONE, ONE][g[0]]
    e.append(CatalogEntry(
        "Hc1", 5, _c4xc2, act_c, _theta_abelian, hc1_v,
        {"grouplikes": "C4xC2", "dual_grouplikes": "C2^3", "k0": "5.2",
         "dual": "Hd+-"},
        [("dual_gens", "pi1", [_DIAG_II, _SWAP], _DIAG_OM)], xy8))
    e.append(CatalogEntry(
        "Hb1", 6, _c4xc2, act_b, _theta_abelian, _v_one,
        {"grouplikes": "C4xC2", "dual_grouplikes": "C2^3", "k0": "5.1",
         "dual": "Hd--"},
        [pts("pi1", (1, 0), (3, 0), _MT_SWAP)], xy8))
    e.append(CatalogEntry(
        "Hc0", 7, _c4xc2, act_c, _theta_abelian, hc0_v,
        {"grouplikes": "C4xC2", "dual_grouplikes": "C4xC2", "k0": "5.4",
         "selfdual": True},
        [("dual_gens", "pi1", [_DIAG_II, _SWAP], _DIAG_I)], xy8))
    e.append(CatalogEntry(
        "Ha1", 8, _c4xc2, act_a, _theta_abelian, _v_one,
        {"grouplikes": "C4xC2", "dual_grouplikes": "C4xC2", "k0": "5.3",
         "separated": False,
         "notes": "rows 8-11 share all computed invariants"},
        [pts("pi1", (1, 1), (3, 1), _MT_SWAP)], xy8))
    e.append(CatalogEntry(
        "Hay", 9, _c4xc2, act_a, _theta_abelian, lambda g: _sign(g[1]),
        {"grouplikes": "C4xC2", "dual_grouplikes": "C4xC2", "k0": "5.3",
         "separated": False,
         "notes": "rows 8-11 share all computed invariants"},
        [pts("pi1", (1, 1), (3, 1), _MT_NEG)], xy8))
    e.append(CatalogEntry(
        "Hby", 10, _c4xc2, act_b, _theta_abelian, lambda g: _sign(g[1]),
        {"grouplikes": "C4xC2", "dual_grouplikes": "C4xC2", "k0": "5.3",
         "separated": False,
         "notes": "rows 8-11 share all computed invariants"},
        [pts("pi1", (1, 0), (3, 0), _MT_SWAP)], xy8))
    e.append(CatalogEntry(
        "Hbx2y", 11, _c4xc2, act_b, _theta_abelian,
        lambda g: _sign(g[0] + g[1]),
        {"grouplikes": "C4xC2", "dual_grouplikes": "C4xC2", "k0": "5.3",
         "separated": False,
         "notes": "rows 8-11 share all computed invariants"},
        [pts("pi1", (1, 0), (3, 0), _MT_NEG)], xy8))

    # -- G = D8 / Q8 (rows 12-16) --------------------------------------------
    e.append(CatalogEntry(
        "HC1", 12, _d8, act_negy, lambda a, b: ONE, _v_one,
        {"grouplikes": "D8", "dual_grouplikes": "C2xC2", "k0": "6.3",
         "dual": "HB1", "triangular": True,
         "notes": "isomorphic to the Klein twist of kD16"},
        [pts("pi1", (0, 1), (1, 1), _MT_SWAP),
         pts("pi2", (1, 0), (3, 0), _MT_SWAP),
         pts("pi3", (2, 1), (3, 1), _MT_SWAP)],
        d8_grouplikes))
    e.append(CatalogEntry(
        "HE", 13, _q8, act_negy, lambda a, b: ONE, _v_one,
        {"grouplikes": "D8", "dual_grouplikes": "C2xC2", "k0": "6.4",
         "dual": "HBX", "triangular": True,
         "notes": "isomorphic to the Klein twist of the order-16 group "
                  "with a b a^-1 = a^3"},
        [pts("pi1", (0, 1), (1, 1), _MT_SWAP),
         pts("pi2", (1, 0), (3, 0), _MT_SWAP),
         pts("pi3", (2, 1), (3, 1), _MT_SWAP)],
        d8_grouplikes))
    e.append(CatalogEntry(
        "HB1", 14, _d8, act_neg, _theta_i, _v_one,
        {"grouplikes": "C2xC2", "dual_grouplikes": "D8", "k0": "5.5",
         "dual": "HC1"},
        [pts("pi1", (1, 0), (3, 0), _MT_SWAP),
         pts("pi2", (1, 1), (3, 1), _MT_SWAP)],
        klein))
    e.append(CatalogEntry(
        "HBX", 15, _d8, act_neg, _theta_i, lambda g: _sign(g[0]),
        {"grouplikes": "C2xC2", "dual_grouplikes": "D8", "k0": "5.5",
         "dual": "HE", "notes": "isomorphic to the smash coproduct of kQ8 "
                                "by kC2"},
        [pts("pi1", (1, 0), (3, 0), _MT_SYMPL),
         pts("pi2", (1, 1), (3, 1), _MT_SYMPL)],
        klein))
    e.append(CatalogEntry(
        "HC1s", 16, _d8, act_negy, _theta_minus_i,
        lambda g: CycNum.zeta(2 * g[1]),
        {"grouplikes": "C2xC2", "dual_grouplikes": "C2xC2", "k0": "6.3",
         "selfdual": True, "triangular": False},
        [pts("pi1", (0, 1), (1, 1), _MT_ROOT),
         pts("pi2", (1, 0), (3, 0), _MT_SWAP),
         pts("pi3", (2, 1), (3, 1), _MT_ROOT)],
        klein))
    return {entry.name: entry for entry in e}


CATALOG = _make_entries()
NAMES = sorted(CATALOG, key=lambda n: CATALOG[n].row)


def get(name) -> CatalogEntry:
    if name not in CATALOG:
        raise KeyError("unknown catalog entry %r (have: %s)"
                       % (name, ", ".join(NAMES)))
    return CATALOG[name]


# ---------------------------------------------------------------------------
# alternate constructions used for cross-checks
# ---------------------------------------------------------------------------


def twisted_d8xc2() -> HopfAlgebra:
    """The Klein twist of k(D8 x C2) (matches row 2)."""
    g = direct_product(dihedral_group(4), cyclic_group(2), name="D8xC2")
    h = group_algebra(g)
    one = g.index[(g.elements[g.identity])]
    d8_one, c2_one = (0, 0), (0,)
    f = [g.index[(d8_one, c2_one)],
         g.index[(d8_one, (1,))],        # c: the C2 generator
         g.index[((0, 1), c2_one)],      # b: the reflection
         g.index[((0, 1), (1,))]]
    assert f[0] == one
    J, Jinv = klein_twist_element(h, f)
    return twist(h, J, Jinv, name="k(D8xC2)_J")


def twisted_d16() -> HopfAlgebra:
    """The Klein twist of kD16 (matches row 12)."""
    g = dihedral_group(8)
    h = group_algebra(g)
    f = [g.index[(0, 0)], g.index[(4, 0)], g.index[(0, 1)], g.index[(4, 1)]]
    J, Jinv = klein_twist_element(h, f)
    return twist(h, J, Jinv, name="kD16_J")


def twisted_g2() -> HopfAlgebra:
    """The Klein twist of the order-16 group <a,b: a^8=b^2=1, ba=a^3b>
    (matches row 13)."""
    g = NONABELIAN_16["g2"]
    h = group_algebra(g)
    f = [g.index[(0, 0)], g.index[(4, 0)], g.index[(0, 1)], g.index[(4, 1)]]
    J, Jinv = klein_twist_element(h, f)
    return twist(h, J, Jinv, name="kG2_J")


def smash() -> HopfAlgebra:
    """The smash coproduct of kQ8 by kC2 (matches row 15)."""
    return smash_coproduct_q8()


def eight_dim_quotient(name="HB1", grouplike="XY"):
    """Quotient of a row 14/15 algebra by a central grouplike minus one.

    Returns (quotient, report).  The quotient by Y-1 is a group algebra
    (D8 for HB1, Q8 for HBX); the quotient by XY-1 is the nontrivial
    8-dimensional Hopf algebra.
    """
    entry = get(name)
    h = entry.build()
    vectors, names = entry.grouplike_candidates()
    vec = vectors[names.index(grouplike)]
    return quotient_by_central_grouplike(h, vec,
                                         name="%s/(%s-1)" % (name, grouplike))


def h8_tensor_kc2() -> HopfAlgebra:
    """The 8-dim nontrivial Hopf algebra tensored with kC2 (matches row 1)."""
    h8, _, rep = eight_dim_quotient("HB1", "XY")
    if not rep.ok:
        raise ValueError("quotient construction failed: %r" % rep)
    c2 = group_algebra(cyclic_group(2), name="kC2")
    return tensor_product(h8, c2)
