"""Exact arithmetic in the 16th cyclotomic field Q(z) with z = zeta_16.

Elements are represented on the power basis 1, z, ..., z^7 of
Q[z]/(z^8 + 1).  Coefficients are rational; internally each number keeps
eight integer numerators and one positive common denominator, which is much
faster than eight Fraction objects.  The reduction rule is z^8 = -1.

The text form used in JSON dumps writes the generator as ``z16``, e.g.
``"1/2 - 1/2*z16^4"``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

Rational = Fraction

_ZERO8 = (0, 0, 0, 0, 0, 0, 0, 0)


class CycNum:
    """A number in Q(zeta_16), immutable and hashable."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, _normalized=False):
        if not _normalized:
            num = tuple(int(c) for c in num)
            if len(num) != 8:
                raise ValueError("need exactly 8 coefficients")
            den = int(den)
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            if den < 0:
                num = tuple(-c for c in num)
                den = -den
            g = den
            for c in num:
                g = gcd(g, c)
                if g == 1:
                    break
            if g > 1:
                num = tuple(c // g for c in num)
                den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("CycNum is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(q) -> "CycNum":
        q = Fraction(q)
        return CycNum((q.numerator, 0, 0, 0, 0, 0, 0, 0), q.denominator)

    @staticmethod
    def zeta(k: int) -> "CycNum":
        """z16^k for any integer k (z16^16 = 1)."""
        k %= 16
        sign = 1
        if k >= 8:
            sign, k = -1, k - 8
        num = [0] * 8
        num[k] = sign
        return CycNum(tuple(num), 1, _normalized=True)

    # -- predicates / accessors ---------------------------------------

    @property
    def coeffs(self):
        """The 8 rational coefficients on the power basis."""
        d = self.den
        return tuple(Fraction(c, d) for c in self.num)

    def is_zero(self) -> bool:
        return self.num == _ZERO8

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return Fraction(self.num[0], self.den)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        if a.den == b.den:
            return CycNum(tuple(x + y for x, y in zip(a.num, b.num)), a.den)
        return CycNum(
            tuple(x * b.den + y * a.den for x, y in zip(a.num, b.num)),
            a.den * b.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNum(tuple(-c for c in self.num), self.den, _normalized=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.num, other.num
        if a == _ZERO8 or b == _ZERO8:
            return ZERO
        out = [0] * 8
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        k = i + j
                        if k >= 8:
                            out[k - 8] -= ai * bj
                        else:
                            out[k] += ai * bj
        return CycNum(tuple(out), self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "CycNum":
        """Multiplicative inverse via the 8x8 rational multiplication matrix."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # column j of M is the coefficient vector of self * z^j
        cols = []
        col = list(self.num)
        for _ in range(8):
            cols.append(list(col))
            col = [-col[7]] + col[:7]  # multiply by z
        # solve M x = e0 over the rationals (augmented Gaussian elimination)
        n = 8
        aug = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(int(i == 0))]
               for i in range(n)]
        for c in range(n):
            piv = next(r for r in range(c, n) if aug[r][c] != 0)
            aug[c], aug[piv] = aug[piv], aug[c]
            pv = aug[c][c]
            aug[c] = [v / pv for v in aug[c]]
            for r in range(n):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[c])]
        x = [aug[i][n] * self.den for i in range(n)]
        den = 1
        for q in x:
            den = den * q.denominator // gcd(den, q.denominator)
        return CycNum(tuple(int(q * den) for q in x), den)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "CycNum":
        """Complex conjugation, z |-> z^-1 = -z^7."""
        a = self.num
        out = [a[0], 0, 0, 0, 0, 0, 0, 0]
        for i in range(1, 8):
            out[8 - i] = -a[i]
        return CycNum(tuple(out), self.den, _normalized=True)

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return self.num != _ZERO8

    # -- text form -------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "z16" if mag == 1 else "%s*z16" % mag
            else:
                body = "z16^%d" % k if mag == 1 else "%s*z16^%d" % (mag, k)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    __repr__ = __str__


def _coerce(x):
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNum.from_rational(x)
    return NotImplemented


_TERM = re.compile(
    r"^(?:(?P<coef>-?\d+(?:/\d+)?)(?:\*(?P<gen1>z16(?:\^(?P<exp1>\d+))?))?"
    r"|(?P<sign>-?)(?P<gen2>z16(?:\^(?P<exp2>\d+))?))$"
)


def parse_cyc(text: str) -> CycNum:
    """Parse the text form produced by str(CycNum)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty cyclotomic literal")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError("cannot parse %r" % text)
    total = ZERO
    for t in terms:
        m = _TERM.match(t[1:] if t.startswith("+") else t)
        if not m:
            raise ValueError("cannot parse term %r in %r" % (t, text))
        if m.group("gen2") is not None:
            coef = Fraction(-1 if m.group("sign") == "-" else 1)
            exp = int(m.group("exp2") or 1)
        else:
            coef = Fraction(m.group("coef"))
            exp = int(m.group("exp1") or 1) if m.group("gen1") else 0
        total = total + CycNum.zeta(exp) * coef
    return total


ZERO = CycNum(_ZERO8, 1, _normalized=True)
ONE = CycNum((1, 0, 0, 0, 0, 0, 0, 0), 1, _normalized=True)
MINUS_ONE = CycNum((-1, 0, 0, 0, 0, 0, 0, 0), 1, _normalized=True)
Z16 = CycNum.zeta(1)     # primitive 16th root of unity
OMEGA = CycNum.zeta(2)   # primitive 8th root of unity
I = CycNum.zeta(4)       # sqrt(-1)
HALF = CycNum.from_rational(Fraction(1, 2))


def cyc(x) -> CycNum:
    """Coerce an int, Fraction, CycNum, or text literal to CycNum."""
    if isinstance(x, CycNum):
        return x
    if isinstance(x, str):
        return parse_cyc(x)
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError("cannot coerce %r to CycNum" % (x,))
    return c
