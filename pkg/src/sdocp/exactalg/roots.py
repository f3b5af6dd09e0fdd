"""Real-root isolation and sign determination at real algebraic numbers.

Roots are isolated by Sturm-sequence bisection with exact rational
endpoints.  Every isolated root carries its multiplicity and a Thom
encoding (the sign sequence of the derivatives at the root), which
identifies the root uniquely among the real roots of its polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .unipoly import RatPoly


def _sign(x):
    return (x > 0) - (x < 0)


def sturm_variations(seq, x):
    signs = []
    for p in seq:
        s = _sign(p(x))
        if s != 0:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_halfopen(sturm, a, b):
    """Number of distinct real roots in (a, b] of the squarefree polynomial
    behind ``sturm``."""
    return sturm_variations(sturm, a) - sturm_variations(sturm, b)


def cauchy_root_bound(p):
    """Rational B with all real roots of p in (-B, B)."""
    lc = p.lc()
    if p.degree <= 0:
        return Fraction(1)
    b = 1 + max(abs(c / lc) for c in p.coeffs[:-1])
    return b + 1


@dataclass(frozen=True)
class ThomEncoding:
    """Sign condition on the derivatives of ``poly`` at one real root.

    ``signs[k]`` is the sign of the k-th derivative at the root;
    ``signs[0] == 0`` because the root annihilates the polynomial itself.
    All deg(poly) derivative signs are stored.
    """

    poly: RatPoly
    signs: tuple

    def __post_init__(self):
        if self.signs and self.signs[0] != 0:
            raise ValueError("a Thom encoding starts with sign 0")

    def key(self):
        return self.signs

    def to_json(self):
        return list(self.signs)


class IsolatedRoot:
    """One real root of ``poly`` inside a rational interval.

    The interval is either a point (exact rational root) or an open
    interval (lo, hi) whose endpoints are not roots of the squarefree part
    and which contains exactly one distinct root of ``poly``.
    """

    __slots__ = ("poly", "lo", "hi", "multiplicity", "thom", "_sf", "_sturm")

    def __init__(self, poly, lo, hi, multiplicity, thom, _sf=None, _sturm=None):
        self.poly = poly
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self.multiplicity = multiplicity
        self.thom = thom
        self._sf = _sf if _sf is not None else poly.squarefree_part()
        self._sturm = _sturm if _sturm is not None else self._sf.sturm_sequence()

    # -- queries ---------------------------------------------------------

    def is_exact(self):
        return self.lo == self.hi

    def value(self):
        """The exact root when rational, else None."""
        return self.lo if self.is_exact() else None

    def midpoint(self):
        return (self.lo + self.hi) / 2

    def width(self):
        return self.hi - self.lo

    def __repr__(self):
        if self.is_exact():
            return f"IsolatedRoot({self.lo!s}, mult={self.multiplicity})"
        return (f"IsolatedRoot(({self.lo!s}, {self.hi!s}),"
                f" mult={self.multiplicity})")

    # -- refinement --------------------------------------------------------

    def _bisect_once(self):
        if self.is_exact():
            return
        mid = self.midpoint()
        if self._sf(mid) == 0:
            self.lo = self.hi = mid
            return
        if count_roots_halfopen(self._sturm, self.lo, mid) == 1:
            self.hi = mid
        else:
            self.lo = mid

    def refine(self, width):
        """Shrink the isolating interval to at most ``width``."""
        width = Fraction(width)
        while not self.is_exact() and self.width() > width:
            self._bisect_once()
        return self

    def refine_steps(self, n):
        for _ in range(n):
            if self.is_exact():
                break
            self._bisect_once()
        return self

    def approx(self, digits=30):
        from mpmath import mpf, workdps
        self.refine(Fraction(1, 10 ** (digits + 2)))
        with workdps(digits + 10):
            return mpf(self.midpoint().numerator) / mpf(self.midpoint().denominator)

    def clone(self):
        return IsolatedRoot(self.poly, self.lo, self.hi, self.multiplicity,
                            self.thom, self._sf, self._sturm)


def sign_at_root(q, root):
    """Exact sign of q at the algebraic number described by ``root``.

    The zero case is decided by a gcd test against the squarefree part of
    the root's polynomial; otherwise the isolating interval is refined
    until q is sign-constant on it.
    """
    if q.is_zero():
        return 0
    if root.is_exact():
        return _sign(q(root.value()))
    q = q.rename(root.poly.var)
    sf = root._sf
    d = sf.gcd(q)
    if d.degree >= 1:
        # d divides sf, so a sign change of d across the interval can only
        # come from the isolated root itself.
        if d(root.lo) * d(root.hi) < 0:
            return 0
        dst = d.sturm_sequence()
        if count_roots_halfopen(dst, root.lo, root.hi) >= 1:
            return 0
    # q does not vanish at the root: refine until q has no root in [lo, hi]
    qsf = q.squarefree_part()
    qsturm = qsf.sturm_sequence()
    r = root
    while True:
        if (qsf(r.lo) != 0 and qsf(r.hi) != 0
                and count_roots_halfopen(qsturm, r.lo, r.hi) == 0):
            return _sign(q(r.hi))
        if r is root:
            r = root.clone()
        r._bisect_once()
        if r.is_exact():
            return _sign(q(r.value()))


def root_multiplicity(p, root):
    """Largest k such that (x - root)^k divides p, via the derivative
    chain: the multiplicity is the order of the first non-vanishing
    derivative."""
    if p.is_zero():
        raise ValueError("multiplicity in the zero polynomial")
    d = p
    k = 0
    while k <= p.degree:
        if sign_at_root(d, root) != 0:
            return k
        d = d.derivative()
        k += 1
    raise ValueError("not a root of p")


def thom_encoding(p, root):
    """Thom encoding of ``root`` as a root of p: signs of p', p'', ...,
    p^(deg p) at the root, preceded by the mandatory 0."""
    signs = [0]
    d = p
    for _ in range(p.degree):
        d = d.derivative()
        signs.append(sign_at_root(d, root))
    return ThomEncoding(p, tuple(signs))


def isolate_real_roots(p):
    """All real roots of p as a list of IsolatedRoot, ascending, each with
    multiplicity and Thom encoding."""
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree <= 0:
        return []
    sf = p.squarefree_part()
    sturm = sf.sturm_sequence()
    bound = cauchy_root_bound(sf)
    intervals = []

    def recurse(a, b, count):
        if count == 0:
            return
        if count == 1:
            intervals.append((a, b))
            return
        mid = (a + b) / 2
        if sf(mid) == 0:
            intervals.append((mid, mid))
            left = count_roots_halfopen(sturm, a, mid) - 1
            # (a, mid] counts mid itself
            recurse_shrunk(a, mid, left)
            right = count - 1 - left
            recurse(mid, b, right)
            return
        left = count_roots_halfopen(sturm, a, mid)
        recurse(a, mid, left)
        recurse(mid, b, count - left)

    def recurse_shrunk(a, b, count):
        # roots strictly inside (a, b); shrink b slightly off the root
        if count == 0:
            return
        newb = b - (b - a) / (2 ** 10)
        while count_roots_halfopen(sturm, a, newb) != count:
            newb = b - (b - newb) / 2
        recurse(a, newb, count)

    total = count_roots_halfopen(sturm, -bound, bound)
    recurse(-bound, bound, total)
    intervals.sort(key=lambda iv: (iv[0], iv[1]))

    roots = []
    for lo, hi in intervals:
        r = IsolatedRoot(p, lo, hi, 1, None, _sf=sf, _sturm=sturm)
        mult = root_multiplicity(p, r)
        thom = thom_encoding(p, r)
        roots.append(IsolatedRoot(p, r.lo, r.hi, mult, thom,
                                  _sf=sf, _sturm=sturm))
    return roots


def thom_less(t1, t2):
    """Order two distinct Thom encodings of roots of one polynomial.

    Compares by the standard rule: at the highest derivative index where
    the encodings differ, the sign of the next-higher common derivative
    orients the comparison.
    """
    if t1.signs == t2.signs:
        raise ValueError("identical encodings are the same root")
    n = max(len(t1.signs), len(t2.signs))
    s1 = tuple(t1.signs) + (0,) * (n - len(t1.signs))
    s2 = tuple(t2.signs) + (0,) * (n - len(t2.signs))
    k = max(i for i in range(n) if s1[i] != s2[i])
    if k + 1 >= n:
        raise ValueError("encodings differ at the top derivative")
    orient = s1[k + 1]
    if orient == 0:
        raise ValueError("invalid encoding pair")
    return (s1[k] < s2[k]) if orient > 0 else (s1[k] > s2[k])


def find_root_by_thom(roots, signs):
    """The root among ``roots`` whose Thom encoding matches ``signs``."""
    signs = tuple(signs)
    for r in roots:
        if r.thom is not None and tuple(r.thom.signs) == signs:
            return r
    return None
