"""Bivariate polynomials in (mu, T) and rational functions in mu.

``BiPoly`` is dense in T with ``RatPoly``-in-mu coefficients, which makes
the operations the rest of the pipeline leans on cheap and explicit:
content normalization over Z[mu], specialization at rational mu, the
coefficientwise order/limit at mu -> 0, and T-resultants.
"""

from __future__ import annotations

from fractions import Fraction

from .mpoly import DEFAULT_DEGREE_CAP, MPoly, mpoly_resultant
from .unipoly import RatPoly

MU = "mu"
TVAR = "T"


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1].is_zero():
        c.pop()
    return c


class BiPoly:
    """Element of Q[mu][T]; ``coeffs[k]`` is the mu-polynomial on T^k."""

    __slots__ = ("coeffs", "tvar")

    def __init__(self, coeffs, tvar=TVAR):
        cs = []
        for c in coeffs:
            if isinstance(c, RatPoly):
                cs.append(c.rename(MU))
            else:
                cs.append(RatPoly.const(MU, c))
        self.coeffs = tuple(_trim(cs))
        self.tvar = tvar

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls):
        return cls([])

    @classmethod
    def const(cls, c):
        return cls([RatPoly.const(MU, c)])

    @classmethod
    def t(cls):
        return cls([RatPoly.zero(MU), RatPoly.const(MU, 1)])

    @classmethod
    def mu(cls):
        return cls([RatPoly(MU, [0, 1])])

    @classmethod
    def from_mpoly(cls, p, tname=TVAR, muname=MU):
        it = p.vars.index(tname)
        im = p.vars.index(muname)
        for e in p.terms:
            for i, x in enumerate(e):
                if x and i not in (it, im):
                    raise ValueError("polynomial uses variables beyond (mu, T)")
        dt = p.degree(tname)
        cs = [dict() for _ in range(dt + 1)] if dt >= 0 else []
        for e, c in p.terms.items():
            cs[e[it]][e[im]] = c
        out = []
        for d in cs:
            m = max(d) if d else -1
            out.append(RatPoly(MU, [d.get(i, 0) for i in range(m + 1)]))
        return cls(out)

    def to_mpoly(self, vars=(MU, TVAR)):
        vars = tuple(vars)
        im = vars.index(MU)
        it = vars.index(self.tvar) if self.tvar in vars else vars.index(TVAR)
        terms = {}
        for k, c in enumerate(self.coeffs):
            for j, a in enumerate(c.coeffs):
                if a:
                    e = [0] * len(vars)
                    e[im] = j
                    e[it] = k
                    terms[tuple(e)] = a
        return MPoly(vars, terms)

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @property
    def deg_t(self):
        return len(self.coeffs) - 1

    @property
    def deg_mu(self):
        return max((c.degree for c in self.coeffs), default=-1)

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else RatPoly.zero(MU)

    def lc_t(self):
        return self.coeffs[-1] if self.coeffs else RatPoly.zero(MU)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return BiPoly([self.coeff(i) + other.coeff(i) for i in range(n)],
                      self.tvar)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly([-c for c in self.coeffs], self.tvar)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly([c * other for c in self.coeffs], self.tvar)
        if isinstance(other, RatPoly):
            other = BiPoly([other], self.tvar)
        if self.is_zero() or other.is_zero():
            return BiPoly.zero()
        out = [RatPoly.zero(MU)
               for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
        return BiPoly(out, self.tvar)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = BiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative_t(self):
        return BiPoly([c * i for i, c in enumerate(self.coeffs)][1:], self.tvar)

    def derivative_mu(self):
        return BiPoly([c.derivative() for c in self.coeffs], self.tvar)

    # -- specialization ----------------------------------------------------------

    def eval_mu(self, mu_value, tvar=TVAR):
        """Specialize mu to a rational; returns a RatPoly in T."""
        return RatPoly(tvar, [c(Fraction(mu_value)) for c in self.coeffs])

    def eval(self, mu_value, t_value):
        return self.eval_mu(mu_value)(t_value)

    # -- normalization --------------------------------------------------------------

    def content_mu(self):
        """Gcd over Q[mu] of the T-coefficients (monic), times the rational
        content, with sign chosen so division yields positive lc-of-lc."""
        if self.is_zero():
            return RatPoly.zero(MU)
        g = RatPoly.zero(MU)
        for c in self.coeffs:
            g = g.gcd(c)
        # g is monic; integer content of the quotient tuple is handled by
        # primitive_normalized below.
        return g

    def primitive_normalized(self):
        """Primitive associate over Z[mu] with positive leading coefficient
        of the leading mu-polynomial."""
        if self.is_zero():
            return self
        g = self.content_mu()
        cs = [c.exact_div(g) for c in self.coeffs]
        # clear rational content across all coefficients
        num = 0
        den = 1
        from math import gcd as int_gcd
        for c in cs:
            for a in c.coeffs:
                num = int_gcd(num, a.numerator)
                den = den * a.denominator // int_gcd(den, a.denominator)
        scale = Fraction(den, num) if num else Fraction(1)
        cs = [c * scale for c in cs]
        if cs[-1].lc() < 0:
            cs = [-c for c in cs]
        return BiPoly(cs, self.tvar)

    # -- mu-order and limit ------------------------------------------------------------

    def mu_order(self):
        """Minimum mu-valuation over all T-coefficients."""
        if self.is_zero():
            raise ValueError("mu-order of the zero polynomial")
        return min(c.valuation() for c in self.coeffs if not c.is_zero())

    def mu_rescaled_limit(self, order=None):
        """Coefficientwise limit of mu^(-order) * self at mu -> 0.

        With the default order = mu_order(self), the result is nonzero.
        Returns a RatPoly in T.
        """
        if self.is_zero():
            return RatPoly.zero(self.tvar)
        o = self.mu_order() if order is None else order
        if o > self.mu_order():
            raise ValueError("rescaling order exceeds the mu-order")
        return RatPoly(self.tvar, [c.coeff(o) for c in self.coeffs])

    # -- gcd / resultant in T ---------------------------------------------------------------

    def gcd_t(self, other):
        """Gcd as polynomials in T over Q(mu), primitive-normalized."""
        a, b = self, other
        if a.is_zero():
            return b.primitive_normalized()
        if b.is_zero():
            return a.primitive_normalized()
        a = a.primitive_normalized()
        b = b.primitive_normalized()
        while not b.is_zero():
            r = _bipoly_prem(a, b)
            a, b = b, (r.primitive_normalized() if not r.is_zero() else r)
        return a.primitive_normalized()

    def squarefree_part_t(self):
        g = self.gcd_t(self.derivative_t())
        return bipoly_exact_div(self, g).primitive_normalized()

    def resultant_t(self, other, cap=DEFAULT_DEGREE_CAP):
        """Res_T(self, other) as a RatPoly in mu."""
        vars = (MU, TVAR)
        r = mpoly_resultant(self.to_mpoly(vars), other.to_mpoly(vars),
                            TVAR, cap=cap)
        return _mpoly_to_ratpoly_mu(r)

    def discriminant(self):
        """Res_T(p, dp/dT) / lc_T(p); documented normalization."""
        if self.deg_t < 1:
            raise ValueError("discriminant of a polynomial constant in T")
        res = self.resultant_t(self.derivative_t())
        lc = self.lc_t()
        return res.exact_div(lc)

    # -- text ---------------------------------------------------------------

    def to_text(self):
        return self.to_mpoly((MU, TVAR)).to_text()

    @classmethod
    def from_text(cls, text):
        return cls.from_mpoly(MPoly.from_text((MU, TVAR), text))

    def __repr__(self):
        return f"BiPoly({self.to_text()!r})"


def _bipoly_prem(f, g):
    """Pseudo-remainder in T over Q[mu]."""
    df, dg = f.deg_t, g.deg_t
    if dg < 0:
        raise ZeroDivisionError
    if df < dg:
        return f
    r = list(f.coeffs)
    lg = g.coeffs[-1]
    while r and len(r) - 1 >= dg:
        k = len(r) - 1 - dg
        lr = r[-1]
        r = [c * lg for c in r]
        for i, c in enumerate(g.coeffs):
            r[k + i] = r[k + i] - lr * c
        while r and r[-1].is_zero():
            r.pop()
    return BiPoly(r, f.tvar)


def bipoly_exact_div(f, g):
    """Exact division in T over Q(mu) coefficients, result cleared back to
    polynomial coefficients (raises if not exact)."""
    if g.is_zero():
        raise ZeroDivisionError
    mf = f.to_mpoly((MU, TVAR))
    mg = g.to_mpoly((MU, TVAR))
    return BiPoly.from_mpoly(mf.exact_div(mg))


def _mpoly_to_ratpoly_mu(p):
    if p.is_zero():
        return RatPoly.zero(MU)
    im = p.vars.index(MU)
    d = p.degree(MU)
    out = [Fraction(0)] * (d + 1)
    for e, c in p.terms.items():
        if any(x for i, x in enumerate(e) if i != im):
            raise ValueError("not a mu-only polynomial")
        out[e[im]] += c
    return RatPoly(MU, out)


class RatFunc:
    """Rational function in mu: num/den with den integer-primitive and
    positive leading coefficient."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = RatPoly.const(MU, num)
        num = num.rename(MU)
        if den is None:
            den = RatPoly.const(MU, 1)
        elif isinstance(den, (int, Fraction)):
            den = RatPoly.const(MU, den)
        den = den.rename(MU)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = num
            self.den = RatPoly.const(MU, 1)
            return
        g = num.gcd(den)
        if g.degree >= 1:
            num = num.exact_div(g)
            den = den.exact_div(g)
        # scale so den is integer-primitive with positive lc
        dprim = den.primitive()
        scale = den.lc() / dprim.lc()
        self.num = num * (1 / scale)
        self.den = dprim

    @classmethod
    def zero(cls):
        return cls(RatPoly.zero(MU))

    @classmethod
    def one(cls):
        return cls(RatPoly.const(MU, 1))

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return (self.num * other.den) == (other.num * self.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self * other.inv()

    def __call__(self, mu_value):
        d = self.den(Fraction(mu_value))
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at this mu")
        return self.num(Fraction(mu_value)) / d

    def __repr__(self):
        if self.den == RatPoly.const(MU, 1):
            return f"RatFunc({self.num.to_text()!r})"
        return f"RatFunc({self.num.to_text()!r} / {self.den.to_text()!r})"
