"""Dense univariate polynomials with exact rational coefficients.

The representation is a coefficient tuple in ascending order with trailing
zeros trimmed.  Heavy computations (gcd, resultant) clear denominators and
run subresultant / primitive remainder sequences over the integers so that
coefficient growth stays controlled.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


class RatPoly:
    """Univariate polynomial over Q, dense, ascending coefficients."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var, coeffs):
        self.var = var
        self.coeffs = tuple(Fraction(c) for c in _trim(coeffs))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, var):
        return cls(var, [])

    @classmethod
    def const(cls, var, c):
        return cls(var, [Fraction(c)])

    @classmethod
    def x(cls, var):
        return cls(var, [0, 1])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def valuation(self):
        """Index of the lowest nonzero coefficient (order at 0)."""
        if not self.coeffs:
            raise ValueError("valuation of the zero polynomial")
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        raise AssertionError

    def __eq__(self, other):
        return (isinstance(other, RatPoly) and self.var == other.var
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------

    def _check(self, other):
        if self.var != other.var:
            raise ValueError(f"variable mismatch {self.var!r} vs {other.var!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly.const(self.var, other)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self.var, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly.const(self.var, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(self.var, [c * other for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return RatPoly.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return RatPoly(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = RatPoly.const(self.var, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other):
        """Exact division with remainder over Q."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        dlc = other.lc()
        dd = other.degree
        while len(r) - 1 >= dd and _trim(r):
            k = len(r) - 1 - dd
            f = r[-1] / dlc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[k + i] -= f * c
            r = _trim(r)
            if not r:
                break
        return RatPoly(self.var, q), RatPoly(self.var, r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def derivative(self):
        return RatPoly(self.var, [i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int input."""
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, lo, hi):
        """Enclosure of the image of [lo, hi] under Horner with exact
        rational interval arithmetic."""
        alo, ahi = Fraction(0), Fraction(0)
        for c in reversed(self.coeffs):
            cands = (alo * lo, alo * hi, ahi * lo, ahi * hi)
            alo, ahi = min(cands) + c, max(cands) + c
        return alo, ahi

    # -- integer normalizations ----------------------------------------

    def denominators_lcm(self):
        l = 1
        for c in self.coeffs:
            l = l * c.denominator // int_gcd(l, c.denominator)
        return l

    def content(self):
        """Positive rational content; content(0) = 0."""
        if self.is_zero():
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = int_gcd(num, c.numerator)
            den = den * c.denominator // int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self):
        """Integer-primitive associate with positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        p = self * (1 / c)
        if p.lc() < 0:
            p = -p
        return p

    def int_coeffs(self):
        """Coefficients scaled to integers (primitive, positive lc)."""
        return [int(c) for c in self.primitive().coeffs]

    def monic(self):
        if self.is_zero():
            return self
        return self * (1 / self.lc())

    # -- gcd / resultant ------------------------------------------------

    def gcd(self, other):
        """Monic gcd over Q via an integer primitive remainder sequence."""
        self._check(other)
        a, b = self, other
        if a.is_zero():
            return b.monic()
        if b.is_zero():
            return a.monic()
        fa = [int(c) for c in a.primitive().coeffs]
        fb = [int(c) for c in b.primitive().coeffs]
        if len(fa) < len(fb):
            fa, fb = fb, fa
        while fb:
            fr = _int_prem(fa, fb)
            fr = _int_primitive(fr)
            fa, fb = fb, fr
        return RatPoly(self.var, [Fraction(c) for c in fa]).monic()

    def squarefree_part(self):
        """p / gcd(p, p'), primitive with positive leading coefficient."""
        if self.is_zero():
            raise ValueError("squarefree part of the zero polynomial")
        g = self.gcd(self.derivative())
        return self.exact_div(g).primitive()

    def resultant(self, other):
        """Res(self, other) over Q."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            raise ValueError("resultant of a zero polynomial")
        fa = self.primitive()
        fb = other.primitive()
        ca = self.content() ** other.degree if other.degree >= 0 else Fraction(1)
        cb = other.content() ** self.degree if self.degree >= 0 else Fraction(1)
        sign_fix = Fraction(1)
        if self.lc() < 0 and other.degree % 2 == 1:
            sign_fix *= -1
        if other.lc() < 0 and self.degree % 2 == 1:
            sign_fix *= -1
        r = _int_resultant([int(c) for c in fa.coeffs], [int(c) for c in fb.coeffs])
        return ca * cb * sign_fix * r

    def sturm_sequence(self):
        """Sturm sequence of the squarefree part, primitive-scaled.

        Scaling each remainder by a positive rational preserves the sign
        structure, so root counting is unaffected while coefficients stay
        integral.
        """
        p = self.squarefree_part()
        seq = [p]
        d = p.derivative()
        if d.is_zero():
            return seq
        seq.append(_pos_scale(d))
        while seq[-1].degree > 0:
            r = -(seq[-2] % seq[-1])
            if r.is_zero():
                break
            seq.append(_pos_scale(r))
        return seq

    # -- misc -----------------------------------------------------------

    def shift(self, k):
        """Multiply by var**k."""
        if self.is_zero():
            return self
        return RatPoly(self.var, [Fraction(0)] * k + list(self.coeffs))

    def compose_linear(self, a, b):
        """p(a*x + b)."""
        x = RatPoly(self.var, [Fraction(b), Fraction(a)])
        acc = RatPoly.zero(self.var)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def rename(self, var):
        return RatPoly(var, self.coeffs)

    def __repr__(self):
        return f"RatPoly({self.to_text()!r})"

    def to_text(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c} * {self.var}^{i}")
        return " + ".join(terms)


def _pos_scale(p):
    """Scale by a positive rational to integer primitive coefficients,
    keeping the sign of the leading coefficient."""
    if p.is_zero():
        return p
    q = p.primitive()
    return q if p.lc() > 0 else -q


def _int_primitive(f):
    if not f:
        return f
    g = 0
    for c in f:
        g = int_gcd(g, c)
    if g == 0:
        return []
    return [c // g for c in f]


def _int_prem(f, g):
    """Standard pseudo-remainder of integer coefficient lists (ascending):
    lc(g)^(deg f - deg g + 1) * f = q*g + r with deg r < deg g."""
    df, dg = len(f) - 1, len(g) - 1
    if dg < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    if df < dg:
        return list(f)
    r = list(f)
    lg = g[-1]
    scalings = 0
    while r and len(r) - 1 >= dg:
        k = len(r) - 1 - dg
        lr = r[-1]
        r = [c * lg for c in r]
        scalings += 1
        for i, c in enumerate(g):
            r[k + i] -= lr * c
        while r and r[-1] == 0:
            r.pop()
    missing = (df - dg + 1) - scalings
    if missing > 0 and r:
        m = lg ** missing
        r = [c * m for c in r]
    return r


def _int_resultant(f, g):
    """Resultant of primitive integer polynomials via pseudo-division
    recursion with exact coefficient-growth correction."""
    df, dg = len(f) - 1, len(g) - 1
    if df < 0 or dg < 0:
        raise ValueError("resultant of zero polynomial")
    if df < dg:
        s = -1 if (df * dg) % 2 else 1
        return s * _int_resultant(g, f)
    if dg == 0:
        return g[0] ** df
    r = _int_prem(f, g)
    if not r:
        return 0
    dr = len(r) - 1
    delta = df - dg + 1
    s = -1 if (df * dg) % 2 else 1
    w = s * _int_resultant(g, r)
    k = delta * dg - df + dr
    num = w
    den = g[-1] ** k
    q, rem = divmod(num, den)
    if rem:
        # den always divides exactly; guard against sign conventions
        raise AssertionError("inexact resultant correction")
    return q
