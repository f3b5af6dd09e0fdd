"""Characteristic polynomials of symmetric matrices with algebraic entries.

Matrix entries are rational functions num_ij(T)/den(T) of one real
algebraic number.  The characteristic polynomial is computed division-free
over Q[T][L]; eigenvalue sign counts then follow from the coefficient
signs at the root, using that the eigenvalues of a real symmetric matrix
are all real (so Descartes' count is exact).
"""

from __future__ import annotations

from .roots import sign_at_root
from .unipoly import RatPoly


def _det(rows):
    """Division-free determinant by cofactor expansion; entries support
    +, -, *."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = rows[0][j] * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def symmetric_charpoly(nums, den):
    """Coefficients (ascending in the eigenvalue variable) of
    det(L*den(T)*I - N(T)), where the matrix is N/den.

    The roots of the returned polynomial in L, at any T-value where den
    does not vanish, are exactly the eigenvalues of the matrix.
    Each coefficient is a RatPoly in T.
    """
    n = len(nums)
    var = den.var

    class LP:
        # minimal poly-in-L with RatPoly coefficients
        __slots__ = ("c",)

        def __init__(self, c):
            cc = list(c)
            while cc and cc[-1].is_zero():
                cc.pop()
            self.c = cc

        def __add__(self, o):
            m = max(len(self.c), len(o.c))
            z = RatPoly.zero(var)
            return LP([(self.c[i] if i < len(self.c) else z)
                       + (o.c[i] if i < len(o.c) else z) for i in range(m)])

        def __neg__(self):
            return LP([-x for x in self.c])

        def __sub__(self, o):
            return self + (-o)

        def __mul__(self, o):
            if not self.c or not o.c:
                return LP([])
            out = [RatPoly.zero(var)] * (len(self.c) + len(o.c) - 1)
            for i, a in enumerate(self.c):
                for j, b in enumerate(o.c):
                    out[i + j] = out[i + j] + a * b
            return LP(out)

    zero = RatPoly.zero(var)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            diag = den if i == j else zero
            row.append(LP([-nums[i][j], diag]))
        rows.append(row)
    d = _det(rows)
    coeffs = list(d.c)
    while len(coeffs) < n + 1:
        coeffs.append(RatPoly.zero(var))
    return coeffs


def eigen_sign_counts(coeffs, root):
    """(positive, zero, negative) eigenvalue counts from charpoly
    coefficients evaluated at a real algebraic number.

    ``coeffs`` ascending in the eigenvalue variable; only valid for
    polynomials with all-real roots (true for symmetric matrices).
    """
    signs = [sign_at_root(c, root) if not c.is_zero() else 0 for c in coeffs]
    n = len(signs) - 1
    z = 0
    while z <= n and signs[z] == 0:
        z += 1
    if z > n:
        raise ValueError("charpoly vanished identically at the root")
    nonzero = [s for s in signs[z:] if s != 0]
    pos = sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)
    return pos, z, (n - z) - pos
