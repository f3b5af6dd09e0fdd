"""Exact linear algebra over the rationals.

Everything here works on lists of lists of :class:`fractions.Fraction` (or
ints) and is only meant for the small dense matrices that arise from
desk-scale instances.
"""

from __future__ import annotations

from fractions import Fraction


def frac_matrix(rows):
    """Deep-copy ``rows`` into Fraction entries."""
    return [[Fraction(e) for e in row] for row in rows]


def mat_shape(a):
    return len(a), len(a[0]) if a else 0


def mat_mul(a, b):
    n, k = mat_shape(a)
    k2, m = mat_shape(b)
    if k != k2:
        raise ValueError("shape mismatch")
    return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0))
             for j in range(m)] for i in range(n)]


def mat_vec(a, v):
    return [sum((a[i][j] * v[j] for j in range(len(v))), Fraction(0))
            for i in range(len(a))]


def rref(a):
    """Reduced row echelon form.

    Returns ``(r, pivots)`` where ``r`` is the RREF and ``pivots`` the list
    of pivot column indices; ``len(pivots)`` is the rank.
    """
    m = frac_matrix(a)
    rows, cols = mat_shape(m)
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [mi - f * mr for mi, mr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a):
    return len(rref(a)[1])


def solve_affine(a, b):
    """Particular solution and nullspace basis of ``a x = b``.

    Returns ``(x0, basis, pivots)`` with ``basis`` a list of nullspace
    vectors (columns of the affine parametrization), or raises
    ``ValueError`` if the system is inconsistent.
    """
    rows, cols = mat_shape(a)
    aug = [list(map(Fraction, a[i])) + [Fraction(b[i])] for i in range(rows)]
    r, pivots = rref(aug)
    if cols in pivots:
        raise ValueError("inconsistent linear system")
    free = [c for c in range(cols) if c not in pivots]
    x0 = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x0[c] = r[i][cols]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * cols
        v[fcol] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -r[i][fcol]
        basis.append(v)
    return x0, basis, pivots


def ldl_pivots(a):
    """Pivot sequence of the LDL^T factorization, or None on breakdown.

    For a symmetric rational matrix, all pivots positive certifies positive
    definiteness.  A zero pivot with a nonzero remaining row breaks down
    (returns None), which is enough for the definiteness tests used here.
    """
    n = len(a)
    m = frac_matrix(a)
    pivots = []
    for k in range(n):
        d = m[k][k]
        pivots.append(d)
        if d == 0:
            for j in range(k + 1, n):
                if m[k][j] != 0 or m[j][k] != 0:
                    return None
            continue
        for i in range(k + 1, n):
            f = m[i][k] / d
            for j in range(k + 1, n):
                m[i][j] -= f * m[k][j]
            m[i][k] = Fraction(0)
    return pivots


def is_positive_definite(a):
    p = ldl_pivots(a)
    return p is not None and all(x > 0 for x in p)


def charpoly(a):
    """Characteristic polynomial coefficients of a rational matrix.

    Faddeev-LeVerrier; returns ``[c0, ..., cn]`` ascending with
    ``det(lambda*I - A) = sum c_k lambda^k`` and ``cn = 1``.
    """
    n = len(a)
    a = frac_matrix(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        m = mat_mul(a, m)
        for i in range(n):
            m[i][i] += coeffs[n - k + 1]
        am = mat_mul(a, m)
        tr = sum(am[i][i] for i in range(n))
        coeffs[n - k] = -tr / k
    return coeffs


def is_positive_semidefinite(a):
    """Exact PSD test for a symmetric rational matrix via charpoly signs.

    With all-real eigenvalues, the matrix is PSD iff the characteristic
    polynomial written as sum c_k lambda^k satisfies sign(c_{n-j}) in
    {0, (-1)^j}.
    """
    c = charpoly(a)
    n = len(a)
    for j in range(n + 1):
        ck = c[n - j]
        if ck != 0 and (ck > 0) != (j % 2 == 0):
            return False
    return True


def psd_rank(a):
    """Rank of a symmetric rational matrix from its charpoly.

    Valid because symmetric matrices are diagonalizable: the rank equals
    n minus the multiplicity of the zero eigenvalue.
    """
    c = charpoly(a)
    k = 0
    while k < len(c) and c[k] == 0:
        k += 1
    return len(a) - k
