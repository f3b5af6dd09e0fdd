"""Sparse multivariate polynomials over Q with exact resultants.

Terms are stored as a dict mapping exponent tuples to nonzero Fractions.
Each polynomial carries its own ordered variable tuple; binary operations
require identical variable tuples (use ``embed`` to move between rings).

Resultants use pseudo-division recursion with exact growth correction,
guarded by a configurable intermediate-degree cap so that blowup surfaces
as a distinct error instead of an endless computation.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import EliminationBlowupError

DEFAULT_DEGREE_CAP = 64


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        t = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    t[tuple(e)] = c
        self.terms = t

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def const(cls, vars, c):
        if Fraction(c) == 0:
            return cls(vars)
        return cls(vars, {tuple([0] * len(vars)): Fraction(c)})

    @classmethod
    def var(cls, vars, name):
        vars = tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    def embed(self, new_vars):
        """Reinterpret in a ring whose variables contain the current ones."""
        new_vars = tuple(new_vars)
        idx = [new_vars.index(v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(new_vars)
            for i, p in enumerate(e):
                ne[idx[i]] = p
            out[tuple(ne)] = c
        return MPoly(new_vars, out)

    # -- queries ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, MPoly) and self.vars == other.vars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def degree(self, name):
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def tdeg_containing(self, name):
        """Maximal total degree of the monomials that contain ``name``."""
        i = self.vars.index(name)
        degs = [sum(e) for e in self.terms if e[i] > 0]
        return max(degs) if degs else 0

    def uses(self, name):
        i = self.vars.index(name)
        return any(e[i] > 0 for e in self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("ring mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                return MPoly.zero(self.vars)
            return MPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def diff(self, name):
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] > 0:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return MPoly(self.vars, out)

    # -- evaluation / substitution -----------------------------------------

    def subs(self, assign):
        """Substitute variables by MPoly/Fraction values (same ring).

        ``assign`` maps variable names to replacements; unmentioned
        variables stay.
        """
        result = MPoly.zero(self.vars)
        powers = {}

        def power_of(name, k):
            key = (name, k)
            if key not in powers:
                val = assign[name]
                if isinstance(val, (int, Fraction)):
                    val = MPoly.const(self.vars, val)
                powers[key] = val ** k
            return powers[key]

        for e, c in self.terms.items():
            term = MPoly.const(self.vars, c)
            for i, p in enumerate(e):
                if p == 0:
                    continue
                name = self.vars[i]
                if name in assign:
                    term = term * power_of(name, p)
                else:
                    term = term * MPoly.var(self.vars, name) ** p
            result = result + term
        return result

    def eval(self, assign):
        """Full evaluation with Fraction values for every used variable."""
        total = Fraction(0)
        vals = [Fraction(assign.get(v, 0)) for v in self.vars]
        for e, c in self.terms.items():
            t = c
            for i, p in enumerate(e):
                if p:
                    t *= vals[i] ** p
            total += t
        return total

    def eval_mp(self, assign, ctx):
        """Evaluation with mpmath values in context ``ctx`` (mpf/mpc)."""
        total = ctx.mpf(0)
        vals = {}
        for v in self.vars:
            x = assign.get(v, 0)
            if isinstance(x, Fraction):
                x = ctx.mpf(x.numerator) / ctx.mpf(x.denominator)
            vals[v] = x
        for e, c in self.terms.items():
            t = ctx.mpf(c.numerator) / ctx.mpf(c.denominator)
            for i, p in enumerate(e):
                if p:
                    t *= vals[self.vars[i]] ** p
            total += t
        return total

    # -- per-variable views --------------------------------------------------

    def coeffs_in(self, name):
        """Dense coefficient list in ``name`` (ascending), coefficients in
        the same ring with that exponent zeroed."""
        i = self.vars.index(name)
        d = self.degree(name)
        if d < 0:
            return []
        out = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            out[k][tuple(ne)] = c
        return [MPoly(self.vars, t) for t in out]

    @classmethod
    def from_coeffs_in(cls, vars, name, coeffs):
        vars = tuple(vars)
        i = vars.index(name)
        out = {}
        for k, p in enumerate(coeffs):
            if isinstance(p, (int, Fraction)):
                p = cls.const(vars, p)
            for e, c in p.terms.items():
                ne = list(e)
                ne[i] += k
                key = tuple(ne)
                s = out.get(key, Fraction(0)) + c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return cls(vars, out)

    # -- division -------------------------------------------------------------

    def exact_div(self, other):
        """Exact multivariate division (raises if not divisible)."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError
        rem = MPoly(self.vars, dict(self.terms))
        quot = MPoly.zero(self.vars)
        olead = max(other.terms)  # lex-max exponent
        oc = other.terms[olead]
        while rem.terms:
            rlead = max(rem.terms)
            e = tuple(a - b for a, b in zip(rlead, olead))
            if any(x < 0 for x in e):
                raise ValueError("division is not exact")
            c = rem.terms[rlead] / oc
            mono = MPoly(self.vars, {e: c})
            quot = quot + mono
            rem = rem - mono * other
        return quot

    def __repr__(self):
        return f"MPoly({self.to_text()!r})"

    # -- text format ------------------------------------------------------------

    def to_text(self):
        """Sparse monomial text: '+'-joined terms 'c * v1^a * v2^b'."""
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
        parts = []
        for e in keys:
            c = self.terms[e]
            factors = [str(c)]
            for v, p in zip(self.vars, e):
                if p:
                    factors.append(f"{v}^{p}")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    @classmethod
    def from_text(cls, vars, text):
        vars = tuple(vars)
        p = cls.zero(vars)
        text = text.strip()
        if text == "0":
            return p
        for term in text.split("+"):
            factors = [f.strip() for f in term.strip().split("*")]
            c = Fraction(factors[0])
            e = [0] * len(vars)
            for f in factors[1:]:
                if "^" in f:
                    name, k = f.split("^")
                    e[vars.index(name.strip())] += int(k)
                else:
                    e[vars.index(f)] += 1
            p = p + cls(vars, {tuple(e): c})
        return p


# -- pseudo-division and resultants over the polynomial ring -----------------


def mpoly_prem(f, g, name):
    """Standard pseudo-remainder with respect to ``name``:
    lc(g)^(deg f - deg g + 1) * f = q*g + r, deg_name r < deg_name g."""
    fc = f.coeffs_in(name)
    gc = g.coeffs_in(name)
    if not gc:
        raise ZeroDivisionError("pseudo-division by zero")
    df, dg = len(fc) - 1, len(gc) - 1
    if df < dg:
        return f
    lg = gc[-1]
    r = list(fc)
    scalings = 0
    while r and len(r) - 1 >= dg:
        k = len(r) - 1 - dg
        lr = r[-1]
        r = [c * lg for c in r]
        scalings += 1
        for i, c in enumerate(gc):
            r[k + i] = r[k + i] - lr * c
        while r and r[-1].is_zero():
            r.pop()
    missing = (df - dg + 1) - scalings
    if missing > 0 and r:
        m = lg ** missing
        r = [c * m for c in r]
    return MPoly.from_coeffs_in(f.vars, name, r)


def _res_rec(f, g, name, cap):
    fc = f.coeffs_in(name)
    gc = g.coeffs_in(name)
    df, dg = len(fc) - 1, len(gc) - 1
    if df < dg:
        s = -1 if (df * dg) % 2 else 1
        return _res_rec(g, f, name, cap) * s
    if dg < 0:
        raise ValueError("resultant with the zero polynomial")
    if dg == 0:
        return gc[0] ** max(df, 0)
    r = mpoly_prem(f, g, name)
    if r.is_zero():
        return MPoly.zero(f.vars)
    if r.total_degree() > cap:
        raise EliminationBlowupError(
            f"intermediate degree {r.total_degree()} exceeds cap {cap}")
    dr = r.degree(name)
    delta = df - dg + 1
    s = -1 if (df * dg) % 2 else 1
    w = _res_rec(g, r, name, cap) * s
    k = delta * dg - df + dr
    if k == 0:
        return w
    den = gc[-1] ** k
    return w.exact_div(den)


def mpoly_resultant(f, g, name, cap=DEFAULT_DEGREE_CAP):
    """Res_name(f, g); raises EliminationBlowupError past the degree cap."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    f._check(g)
    res = _res_rec(f, g, name, cap)
    if not res.is_zero() and res.total_degree() > cap:
        raise EliminationBlowupError(
            f"resultant degree {res.total_degree()} exceeds cap {cap}")
    return res
