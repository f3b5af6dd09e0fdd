"""Semidefinite optimization instances with exact integer data.

The primal problem is  min <C, X>  s.t.  <A^i, X> = b_i,  X >= 0 (PSD),
with the dual  max b^T y  s.t.  sum_i y_i A^i + S = C,  S >= 0.  All
constraint data is integral; an optional strictly feasible start
(X0, y0, S0) carries exact rational entries and is checked exactly on the
linear constraints and by rational LDL pivots for definiteness.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import ParseError, ValidationError


def t_of(n):
    """t(n) = n(n+1)/2, the length of the symmetric vectorization."""
    return n * (n + 1) // 2


def svec_index(n, j, l):
    """Position of entry (j, l), j <= l (0-based), in the row-major
    upper-triangular order (X11, X12, ..., X1n, X22, ...)."""
    if j > l:
        j, l = l, j
    return j * n - j * (j - 1) // 2 + (l - j)


def svec_pairs(n):
    return [(j, l) for j in range(n) for l in range(j, n)]


class SymIntMat:
    """Symmetric n-by-n matrix with (big) integer entries."""

    __slots__ = ("n", "entries")

    def __init__(self, entries):
        rows = [list(r) for r in entries]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValidationError("matrix is not square")
        for i in range(n):
            for j in range(n):
                if int(rows[i][j]) != rows[i][j]:
                    raise ValidationError("matrix entry is not an integer")
                rows[i][j] = int(rows[i][j])
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValidationError(
                        f"matrix is not symmetric at ({i + 1},{j + 1})")
        self.n = n
        self.entries = tuple(tuple(r) for r in rows)

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other):
        return isinstance(other, SymIntMat) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def rows(self):
        return [list(r) for r in self.entries]

    def __repr__(self):
        return f"SymIntMat({self.entries!r})"

    @classmethod
    def zeros(cls, n):
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def eye(cls, n, scale=1):
        return cls([[scale if i == j else 0 for j in range(n)]
                    for i in range(n)])

    @classmethod
    def basis(cls, n, j, l):
        """E_jl + E_lj for j != l, E_jj for j == l (0-based)."""
        m = [[0] * n for _ in range(n)]
        m[j][l] = 1
        m[l][j] = 1
        return cls(m)


@dataclass(frozen=True)
class SVec:
    """Exact vectorization of a symmetric matrix, upper-triangular
    row-major order."""

    n: int
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != t_of(self.n):
            raise ValidationError("svec length differs from t(n)")


def svec(x):
    """Vectorize a symmetric rational matrix (rejects non-symmetric)."""
    rows = [list(map(Fraction, r)) for r in x]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValidationError("matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValidationError(
                    f"matrix is not symmetric at ({i + 1},{j + 1})")
    return SVec(n, tuple(rows[j][l] for j, l in svec_pairs(n)))


def smat(v):
    """Inverse of svec."""
    n = v.n
    m = [[Fraction(0)] * n for _ in range(n)]
    for (j, l), c in zip(svec_pairs(n), v.coords):
        m[j][l] = c
        m[l][j] = c
    return m


def inner(a, x):
    """Trace inner product <A, X> = sum_jl A[j][l] X[j][l] of two symmetric
    matrices (SymIntMat or row lists)."""
    arows = a.rows() if isinstance(a, SymIntMat) else a
    xrows = x.rows() if isinstance(x, SymIntMat) else x
    n = len(arows)
    return sum(Fraction(arows[j][l]) * Fraction(xrows[j][l])
               for j in range(n) for l in range(n))


class SdoInstance:
    """Problem data (A^1..A^m, b, C) with an optional strictly feasible
    start; immutable after construction."""

    __slots__ = ("name", "n", "m", "A", "b", "C", "start")

    def __init__(self, A, b, C, start=None, name="instance"):
        self.A = tuple(a if isinstance(a, SymIntMat) else SymIntMat(a)
                       for a in A)
        self.C = C if isinstance(C, SymIntMat) else SymIntMat(C)
        self.n = self.C.n
        self.m = len(self.A)
        self.b = tuple(int(x) for x in b)
        self.name = name
        if len(self.b) != self.m:
            raise ValidationError("len(b) differs from the number of A-matrices")
        for a in self.A:
            if a.n != self.n:
                raise ValidationError("A-matrix size differs from C")
        if start is not None:
            x0, y0, s0 = start
            x0 = [[Fraction(e) for e in row] for row in x0]
            s0 = [[Fraction(e) for e in row] for row in s0]
            y0 = tuple(Fraction(e) for e in y0)
            start = (tuple(tuple(r) for r in x0), y0,
                     tuple(tuple(r) for r in s0))
        self.start = start

    # -- derived data ------------------------------------------------------

    @property
    def tn(self):
        return t_of(self.n)

    @property
    def nbar(self):
        """m + 2 t(n): the number of unknowns (x; y; s)."""
        return self.m + 2 * t_of(self.n)

    def svec_A(self):
        """m x t(n) rational matrix whose rows are svec(A^i)."""
        return [list(svec(a.rows()).coords) for a in self.A]

    def svec_C(self):
        return list(svec(self.C.rows()).coords)

    def __repr__(self):
        return f"SdoInstance({self.name!r}, n={self.n}, m={self.m})"


@dataclass
class ValidationReport:
    symmetric: bool
    independence_rank: int
    rank_ok: bool
    start_present: bool
    start_primal_residual: tuple
    start_dual_residual: tuple
    start_x_pd: bool
    start_s_pd: bool
    start_min_eig_x: float
    start_min_eig_s: float
    passed: bool
    messages: tuple

    def __bool__(self):
        return self.passed


def validate(inst):
    """Check all structural invariants; failures are reported, not raised."""
    messages = []
    a_rows = inst.svec_A()
    rk = linalg.rank(a_rows)
    rank_ok = rk == inst.m
    if not rank_ok:
        messages.append(
            f"svec(A^i) are linearly dependent: rank {rk} < m = {inst.m}")

    start_present = inst.start is not None
    pres = dres = ()
    x_pd = s_pd = True
    mex = mes = float("nan")
    if start_present:
        x0, y0, s0 = inst.start
        pres = tuple(inner(a, x0) - bi for a, bi in zip(inst.A, inst.b))
        if any(r != 0 for r in pres):
            messages.append(f"start violates a primal constraint exactly: "
                            f"residuals {[str(r) for r in pres]}")
        n = inst.n
        dres_mat = [[sum(y0[i] * inst.A[i][j, l] for i in range(inst.m))
                     + s0[j][l] - inst.C[j, l]
                     for l in range(n)] for j in range(n)]
        dres = tuple(dres_mat[j][l] for j, l in svec_pairs(n))
        if any(r != 0 for r in dres):
            messages.append("start violates the dual linear equation exactly")
        x_pd = linalg.is_positive_definite(x0)
        s_pd = linalg.is_positive_definite(s0)
        if not x_pd:
            messages.append("start X0 is not positive definite")
        if not s_pd:
            messages.append("start S0 is not positive definite")
        mex = _min_eig_float(x0)
        mes = _min_eig_float(s0)

    passed = rank_ok and (not start_present or
                          (x_pd and s_pd and all(r == 0 for r in pres)
                           and all(r == 0 for r in dres)))
    return ValidationReport(
        symmetric=True,  # SymIntMat construction enforces symmetry
        independence_rank=rk,
        rank_ok=rank_ok,
        start_present=start_present,
        start_primal_residual=pres,
        start_dual_residual=dres,
        start_x_pd=x_pd,
        start_s_pd=s_pd,
        start_min_eig_x=mex,
        start_min_eig_s=mes,
        passed=passed,
        messages=tuple(messages),
    )


def _min_eig_float(rows):
    from mpmath import eigsy, mp, mpf
    old = mp.prec
    try:
        mp.prec = 113
        a = _mp_matrix(rows)
        e, _ = eigsy(a)
        return float(min(e[i] for i in range(a.rows)))
    finally:
        mp.prec = old


def _mp_matrix(rows):
    from mpmath import mpf, matrix
    n = len(rows)
    a = matrix(n, n)
    for i in range(n):
        for j in range(n):
            e = Fraction(rows[i][j])
            a[i, j] = mpf(e.numerator) / mpf(e.denominator)
    return a


# -- generators -------------------------------------------------------------


def gen_elliptope3():
    """Linear objective over the 3-elliptope; the unique solution is not
    strictly complementary."""
    a1 = SymIntMat([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    a2 = SymIntMat([[0, 0, 0], [0, 1, 0], [0, 0, 0]])
    a3 = SymIntMat([[0, 0, 0], [0, 0, 0], [0, 0, 1]])
    c = SymIntMat([[0, 2, -2], [2, 0, -1], [-2, -1, 0]])
    x0 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    y0 = (-5, -5, -5)
    s0 = [[c[j, l] + (5 if j == l else 0) for l in range(3)] for j in range(3)]
    inst = SdoInstance([a1, a2, a3], (1, 1, 1), c, start=(x0, y0, s0),
                       name="elliptope3")
    if not linalg.is_positive_definite(s0):
        raise ValidationError("elliptope3 start S0 unexpectedly not PD")
    return inst


def gen_diag_lp():
    """Two-dimensional diagonal fixture with a strictly complementary
    unique solution X*=diag(0,1), y*=0, S*=diag(1,0)."""
    a1 = SymIntMat.eye(2)
    c = SymIntMat([[1, 0], [0, 0]])
    x0 = [[Fraction(1, 2), 0], [0, Fraction(1, 2)]]
    y0 = (-1,)
    s0 = [[2, 0], [0, 1]]
    return SdoInstance([a1], (1,), c, start=(x0, y0, s0), name="diag-lp")


def gen_khachiyan(n):
    """Cascading instance whose dual slack has the arrowhead pattern
    S(y)[1,1]=1, first row/column y_1..y_{n-1}, diagonal y_2..y_n; the
    unique solution is y=0 and the central path converges slowly."""
    if n < 2:
        raise ValidationError("khachiyan instance needs n >= 2")
    mats = []
    for i in range(1, n + 1):
        m = [[0] * n for _ in range(n)]
        if i <= n - 1:
            m[0][i] = -1
            m[i][0] = -1
        if i >= 2:
            m[i - 1][i - 1] = -1
        mats.append(SymIntMat(m))
    c = SymIntMat([[1 if (j, l) == (0, 0) else 0 for l in range(n)]
                   for j in range(n)])
    b = [0] * n
    b[n - 1] = -1

    # dual start: y1 = 0, y_k = 4^-k keeps the arrowhead Schur complement
    # strictly below 1
    y0 = [Fraction(0)] + [Fraction(1, 4 ** k) for k in range(2, n + 1)]
    s0 = [[Fraction(0)] * n for _ in range(n)]
    s0[0][0] = Fraction(1)
    for k in range(2, n + 1):
        s0[k - 1][k - 1] = y0[k - 1]
    for i in range(1, n):
        s0[0][i] = y0[i - 1]
        s0[i][0] = y0[i - 1]

    # primal start: X11 = Xnn = 1, interior diagonal 1/n, first-row entries
    # pinned by the constraints
    x0 = [[Fraction(0)] * n for _ in range(n)]
    x0[0][0] = Fraction(1)
    x0[n - 1][n - 1] = Fraction(1)
    for i in range(2, n):
        x0[i - 1][i - 1] = Fraction(1, n)
        x0[0][i] = -x0[i - 1][i - 1] / 2
        x0[i][0] = x0[0][i]

    inst = SdoInstance(mats, b, c, start=(x0, tuple(y0), s0),
                       name=f"khachiyan-{n}")
    rep = validate(inst)
    if not rep.passed:
        raise ValidationError("khachiyan generator produced an invalid "
                              f"instance: {rep.messages}")
    return inst


GENERATORS = {
    "elliptope3": gen_elliptope3,
    "diag-lp": gen_diag_lp,
}


# -- JSON format ------------------------------------------------------------


def _frac_to_str(f):
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _frac_from_json(v, where):
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {v!r} at {where}: {exc}") from None
    raise ParseError(f"expected int or 'p/q' string at {where}, got {type(v).__name__}")


def to_json_dict(inst):
    d = {
        "n": inst.n,
        "m": inst.m,
        "A": [a.rows() for a in inst.A],
        "b": list(inst.b),
        "C": inst.C.rows(),
    }
    if inst.start is not None:
        x0, y0, s0 = inst.start
        d["start"] = {
            "X": [[_frac_to_str(e) for e in row] for row in x0],
            "y": [_frac_to_str(e) for e in y0],
            "S": [[_frac_to_str(e) for e in row] for row in s0],
        }
    if inst.name != "instance":
        d["name"] = inst.name
    return d


def dumps(inst):
    return json.dumps(to_json_dict(inst), indent=2, sort_keys=False) + "\n"


def from_json_dict(d):
    for key in ("n", "m", "A", "b", "C"):
        if key not in d:
            raise ParseError(f"missing key {key!r} in instance JSON")
    try:
        a = [SymIntMat(mat) for mat in d["A"]]
        c = SymIntMat(d["C"])
    except ValidationError as exc:
        raise ParseError(str(exc)) from None
    start = None
    if "start" in d and d["start"] is not None:
        s = d["start"]
        for key in ("X", "y", "S"):
            if key not in s:
                raise ParseError(f"missing key start.{key!r}")
        x0 = [[_frac_from_json(e, f"start.X[{i}][{j}]")
               for j, e in enumerate(row)] for i, row in enumerate(s["X"])]
        y0 = [_frac_from_json(e, f"start.y[{i}]") for i, e in enumerate(s["y"])]
        s0 = [[_frac_from_json(e, f"start.S[{i}][{j}]")
               for j, e in enumerate(row)] for i, row in enumerate(s["S"])]
        start = (x0, y0, s0)
    inst = SdoInstance(a, d["b"], c, start=start, name=d.get("name", "instance"))
    if inst.n != d["n"] or inst.m != d["m"]:
        raise ParseError("declared n/m do not match the matrix data")
    return inst


def loads(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"JSON parse error at line {exc.lineno}, "
                         f"column {exc.colno}: {exc.msg}") from None
    return from_json_dict(d)


# -- SDPA sparse format -------------------------------------------------------


def dumps_sdpa(inst):
    """Single-block SDPA sparse format (upper triangles of C=F0, A^i=Fi)."""
    lines = [f"{inst.m} =mdim", "1 =nblocks", f"{inst.n}",
             " ".join(str(x) for x in inst.b)]
    for j, l in svec_pairs(inst.n):
        if inst.C[j, l]:
            lines.append(f"0 1 {j + 1} {l + 1} {inst.C[j, l]}")
    for k, a in enumerate(inst.A, start=1):
        for j, l in svec_pairs(inst.n):
            if a[j, l]:
                lines.append(f"{k} 1 {j + 1} {l + 1} {a[j, l]}")
    return "\n".join(lines) + "\n"


_SDPA_SPLIT = re.compile(r"[,\s()]+")


def loads_sdpa(text):
    """Parse single-block SDPA sparse data with integer entries.

    The conventional reading maps the file's (c, F0, Fi) onto this
    package's primal data (b, C, A^i).  Non-integer entries are rejected.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "*\"":
            continue
        rows.append((lineno, line))
    if len(rows) < 4:
        raise ParseError("SDPA file truncated: header incomplete")

    def ints(line, lineno, count=None):
        parts = [p for p in _SDPA_SPLIT.split(line) if p]
        vals = []
        for p in parts:
            try:
                f = Fraction(p)
            except ValueError:
                break
            if f.denominator != 1:
                raise ParseError(f"non-integer coefficient {p!r} "
                                 f"on line {lineno}")
            vals.append(int(f))
        if count is not None and len(vals) < count:
            raise ParseError(f"expected {count} integers on line {lineno}")
        return vals

    m = ints(rows[0][1], rows[0][0], 1)[0]
    nblocks = ints(rows[1][1], rows[1][0], 1)[0]
    if nblocks != 1:
        raise ParseError("only single-block SDPA files are supported")
    block = ints(rows[2][1], rows[2][0], 1)[0]
    if block < 0:
        raise ParseError("diagonal blocks are not supported")
    n = block
    b = ints(rows[3][1], rows[3][0], m)[:m]

    mats = [[[0] * n for _ in range(n)] for _ in range(m + 1)]
    for lineno, line in rows[4:]:
        vals = ints(line, lineno, 5)
        k, blk, i, j, v = vals[:5]
        if blk != 1:
            raise ParseError(f"block {blk} out of range on line {lineno}")
        if not (0 <= k <= m and 1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"entry indices out of range on line {lineno}")
        mats[k][i - 1][j - 1] = v
        mats[k][j - 1][i - 1] = v
    c = SymIntMat(mats[0])
    a = [SymIntMat(mm) for mm in mats[1:]]
    return SdoInstance(a, b, c, name="sdpa-instance")


def load(path, format=None):
    """Load and validate an instance from a JSON or SDPA file."""
    with open(path) as fh:
        text = fh.read()
    if format is None:
        format = "sdpa" if str(path).endswith((".dat-s", ".sdpa")) else "json"
    if format == "json":
        inst = loads(text)
    elif format == "sdpa":
        inst = loads_sdpa(text)
    else:
        raise ParseError(f"unknown format {format!r}")
    rep = validate(inst)
    if not rep.passed:
        raise ValidationError("; ".join(rep.messages) or "validation failed")
    return inst
