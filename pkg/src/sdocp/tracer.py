"""Arbitrary-precision central-path following.

Solves the square symmetrized system XS + SX = 2*mu*I by full Newton
steps in an exact affine parametrization of the linear constraints: the
primal matrix moves in x = x0 + N u with a rational nullspace basis N, and
the dual slack is S = C - sum y_i A^i.  Linear residuals are therefore
zero by construction (up to output rounding), and the corrector only
drives the centrality residual below tolerance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath import mp

from . import linalg
from .errors import NumericFailureError
from .instance import inner, svec_pairs, t_of

DEFAULT_PRECISION = 256


def default_tol(precision):
    """Corrector tolerance: 1e-30 at the default 256 bits, otherwise
    2^(-precision/2)."""
    if precision == 256:
        return mp.mpf(10) ** -30
    return mp.mpf(2) ** (-(precision // 2))


def _to_mpf(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / mp.mpf(x.denominator)
    if isinstance(x, int):
        return mp.mpf(x)
    return mp.mpf(x)


def _mat_to_mp(rows):
    n = len(rows)
    a = mp.matrix(n, len(rows[0]))
    for i in range(n):
        for j in range(len(rows[0])):
            a[i, j] = _to_mpf(Fraction(rows[i][j]))
    return a


def fnorm(a):
    s = mp.mpf(0)
    for i in range(a.rows):
        for j in range(a.cols):
            s += a[i, j] ** 2
    return mp.sqrt(s)


def _is_pd(a):
    try:
        mp.cholesky(a)
        return True
    except ValueError:
        return False


class _AffineParam:
    """Exact affine parametrization of the linear constraints."""

    def __init__(self, inst):
        self.inst = inst
        a_rows = inst.svec_A()
        n = inst.n
        # weighted svec rows so that row . x == <A^i, X>
        weights = [2 if j < l else 1 for j, l in svec_pairs(n)]
        self.a_weighted = [[Fraction(w * a) for w, a in zip(weights, row)]
                           for row in a_rows]
        self.x_part, self.null_basis, _ = linalg.solve_affine(
            self.a_weighted, [Fraction(b) for b in inst.b])
        self.svec_c = [Fraction(c) for c in inst.svec_C()]
        self.a_plain = [[Fraction(a) for a in row] for row in a_rows]
        # exact left inverse for recovering u from x
        if self.null_basis:
            ncols = len(self.null_basis)
            gram = [[sum(self.null_basis[i][k] * self.null_basis[j][k]
                         for k in range(len(self.null_basis[0])))
                     for j in range(ncols)] for i in range(ncols)]
            gram_aug = [row[:] + [Fraction(1 if i == j else 0)
                                  for j in range(ncols)]
                        for i, row in enumerate(gram)]
            r, piv = linalg.rref(gram_aug)
            ginv = [row[ncols:] for row in r]
            self.proj = linalg.mat_mul(
                ginv, [list(col) for col in self.null_basis])
        else:
            self.proj = []

    def u_from_x(self, xv):
        dx = [xi - pi for xi, pi in zip(xv, self.x_part)]
        return linalg.mat_vec(self.proj, dx) if self.proj else []


@dataclass
class CentralPoint:
    mu: object
    X: object
    y: object
    S: object
    residuals: tuple                  # (primal, dual, centrality) norms
    precision_bits: int
    tol: object
    iterations: int = 0

    def eig(self):
        """(eigenvalues of X descending, eigenvalues of S descending)."""
        with mp.workprec(self.precision_bits):
            ex = mp.eigsy(self.X, eigvals_only=True)
            es = mp.eigsy(self.S, eigvals_only=True)
            ex = sorted((ex[i] for i in range(ex.rows)), reverse=True)
            es = sorted((es[i] for i in range(es.rows)), reverse=True)
        return ex, es

    def gap(self):
        """Duality gap <X, S>."""
        n = self.X.rows
        return sum(self.X[i, j] * self.S[j, i]
                   for i in range(n) for j in range(n))

    def tol_bound(self):
        return Fraction(1, 2) ** max(8, int(-mp.log(self.tol, 2)) - 16)


@dataclass
class TraceLog:
    inst: object
    points: list
    mu_from: object
    mu_to: object
    ratio: object
    tol: object
    precision_bits: int
    eigen: list = field(default_factory=list)   # (eigX desc, eigS desc)

    def mus(self):
        return [p.mu for p in self.points]

    def schedule_dict(self):
        return {
            "mu_from": mp.nstr(mp.mpf(self.mu_from), 17),
            "mu_to": mp.nstr(mp.mpf(self.mu_to), 17),
            "ratio": mp.nstr(mp.mpf(self.ratio), 17),
            "tol": mp.nstr(mp.mpf(self.tol), 8),
            "precision_bits": self.precision_bits,
        }


def _point_from_start(inst):
    x0, y0, s0 = inst.start
    return (_mat_to_mp(x0), [_to_mpf(v) for v in y0], _mat_to_mp(s0))


def _unpack_guess(inst, guess):
    if guess is None:
        if inst.start is None:
            raise NumericFailureError("no start point available")
        return _point_from_start(inst)
    if isinstance(guess, CentralPoint):
        return guess.X.copy(), list(guess.y), guess.S.copy()
    x, y, s = guess
    if isinstance(x, (list, tuple)):
        x = _mat_to_mp(x)
        s = _mat_to_mp(s)
        y = [_to_mpf(Fraction(v)) for v in y]
    return x, y, s


def _sym_residual(x, s, mu, n):
    m = x * s + s * x
    for i in range(n):
        m[i, i] -= 2 * mu
    return m


def newton_correct(inst, guess, mu_target, tol=None, precision=DEFAULT_PRECISION,
                   max_iter=50, param=None):
    """Correct ``guess`` onto the central point at ``mu_target``.

    Full Newton iteration with positive-definiteness backtracking; raises
    NumericFailureError on divergence or loss of definiteness.
    """
    with mp.workprec(precision):
        if tol is None:
            tol = default_tol(precision)
        tol = mp.mpf(tol)
        mu = _to_mpf(Fraction(mu_target) if isinstance(mu_target, (int, Fraction))
                     else mu_target)
        n = inst.n
        tn = t_of(n)
        par = param or _AffineParam(inst)
        x_mat, y, s_mat = _unpack_guess(inst, guess)

        # project the guess onto the affine subspace exactly
        from .polysys import _mpf_to_fraction
        xv = [_mpf_to_fraction(x_mat[j, l]) for j, l in svec_pairs(n)]
        u = [_to_mpf(v) for v in par.u_from_x(xv)]
        x_part = [_to_mpf(v) for v in par.x_part]
        nbasis = [[_to_mpf(v) for v in col] for col in par.null_basis]
        svec_c = [_to_mpf(v) for v in par.svec_c]
        a_plain = [[_to_mpf(v) for v in row] for row in par.a_plain]
        pairs = svec_pairs(n)

        def assemble(u, y):
            xv = list(x_part)
            for k, col in enumerate(nbasis):
                for i in range(tn):
                    xv[i] += u[k] * col[i]
            sv = list(svec_c)
            for i in range(inst.m):
                for k in range(tn):
                    sv[k] -= y[i] * a_plain[i][k]
            xm = mp.matrix(n, n)
            sm = mp.matrix(n, n)
            for idx, (j, l) in enumerate(pairs):
                xm[j, l] = xm[l, j] = xv[idx]
                sm[j, l] = sm[l, j] = sv[idx]
            return xm, sm

        x_mat, s_mat = assemble(u, y)
        if not (_is_pd(x_mat) and _is_pd(s_mat)):
            raise NumericFailureError(
                "guess lost positive definiteness after projection")

        def res_vec(xm, sm):
            r = _sym_residual(xm, sm, mu, n)
            return mp.matrix([r[j, l] for j, l in pairs])

        def res_norm(rv):
            return max(abs(rv[i]) for i in range(rv.rows)) if rv.rows else mp.mpf(0)

        rv = res_vec(x_mat, s_mat)
        rn = res_norm(rv)
        it = 0
        prev = rn
        bad_steps = 0
        while rn > tol:
            if it >= max_iter:
                raise NumericFailureError(
                    f"corrector did not reach tol={mp.nstr(tol, 5)} in "
                    f"{max_iter} iterations (residual {mp.nstr(rn, 5)})")
            jx = mp.matrix(tn, tn)
            js = mp.matrix(tn, tn)
            for beta, (a, b) in enumerate(pairs):
                e = mp.matrix(n, n)
                e[a, b] = e[b, a] = 1
                mx = e * s_mat + s_mat * e
                ms = x_mat * e + e * x_mat
                for alpha, (j, l) in enumerate(pairs):
                    jx[alpha, beta] = mx[j, l]
                    js[alpha, beta] = ms[j, l]
            ncols = len(nbasis)
            jac = mp.matrix(tn, tn)
            for alpha in range(tn):
                for k in range(ncols):
                    jac[alpha, k] = sum(jx[alpha, i] * nbasis[k][i]
                                        for i in range(tn))
                for i2 in range(inst.m):
                    jac[alpha, ncols + i2] = -sum(
                        js[alpha, i] * a_plain[i2][i] for i in range(tn))
            try:
                dz = mp.lu_solve(jac, -rv)
            except ZeroDivisionError:
                raise NumericFailureError("singular Newton system") from None
            alpha_step = mp.mpf(1)
            while alpha_step > mp.mpf(2) ** -40:
                u_new = [u[k] + alpha_step * dz[k] for k in range(ncols)]
                y_new = [y[i] + alpha_step * dz[ncols + i]
                         for i in range(inst.m)]
                xm, sm = assemble(u_new, y_new)
                if _is_pd(xm) and _is_pd(sm):
                    break
                alpha_step /= 2
            else:
                raise NumericFailureError(
                    "loss of positive definiteness during line search")
            u, y = u_new, y_new
            x_mat, s_mat = xm, sm
            rv = res_vec(x_mat, s_mat)
            rn = res_norm(rv)
            it += 1
            if rn > prev * 10:
                bad_steps += 1
                if bad_steps >= 3:
                    raise NumericFailureError(
                        "Newton divergence: residual grew three times")
            else:
                bad_steps = 0
            prev = rn

        pres = max(abs(sum(mp.mpf(2 if j < l else 1) * _to_mpf(Fraction(inst.A[i][j, l])) * x_mat[j, l]
                           for j, l in pairs) - inst.b[i])
                   for i in range(inst.m)) if inst.m else mp.mpf(0)
        dmat = mp.matrix(n, n)
        for j in range(n):
            for l in range(n):
                dmat[j, l] = (sum(y[i] * inst.A[i][j, l] for i in range(inst.m))
                              + s_mat[j, l] - inst.C[j, l])
        dres = fnorm(dmat)
        cres = fnorm(_sym_residual(x_mat, s_mat, mu, n))
        return CentralPoint(mu=mu, X=x_mat, y=y, S=s_mat,
                            residuals=(pres, dres, cres),
                            precision_bits=precision, tol=tol, iterations=it)


def trace(inst, mu_from=1, mu_to=None, ratio=None, tol=None,
          precision=DEFAULT_PRECISION):
    """Follow the central path on a geometric schedule with warm starts.

    On corrector failure the step is softened (ratio -> sqrt(ratio)) and
    the point retried, up to 10 times.
    """
    if mu_to is None:
        mu_to = Fraction(1, 10 ** 14)
    if ratio is None:
        ratio = Fraction(1, 10)
    with mp.workprec(precision):
        mu_from_f = _to_mpf(Fraction(mu_from) if isinstance(mu_from, (int, Fraction)) else mu_from)
        mu_to_f = _to_mpf(Fraction(mu_to) if isinstance(mu_to, (int, Fraction)) else mu_to)
        rho = _to_mpf(Fraction(ratio) if isinstance(ratio, (int, Fraction)) else ratio)
        if not (0 < mu_to_f < mu_from_f):
            raise NumericFailureError("need 0 < mu_to < mu_from")
        if not (0 < rho < 1):
            raise NumericFailureError("need 0 < ratio < 1")
        if tol is None:
            tol = default_tol(precision)
        par = _AffineParam(inst)
        log = TraceLog(inst=inst, points=[], mu_from=mu_from_f, mu_to=mu_to_f,
                       ratio=rho, tol=mp.mpf(tol), precision_bits=precision)
        current = None
        mu = mu_from_f
        end_cut = mu_to_f * (1 + mp.mpf(2) ** -24)
        while True:
            halvings = 0
            step_rho = rho
            while True:
                try:
                    pt = newton_correct(inst, current, mu, tol=tol,
                                        precision=precision, param=par)
                    break
                except NumericFailureError:
                    halvings += 1
                    if halvings > 10 or current is None:
                        raise NumericFailureError(
                            f"corrector failed persistently near mu="
                            f"{mp.nstr(mu, 8)}")
                    step_rho = mp.sqrt(step_rho)
                    mu = current.mu * step_rho
            log.points.append(pt)
            log.eigen.append(pt.eig())
            current = pt
            if mu <= end_cut:
                break
            mu = mu * step_rho
            if mu < mu_to_f:
                mu = mu_to_f
        return log


# -- fits and profiles --------------------------------------------------------


def _lsq_slope(xs, ys):
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    den = sum((x - mx) ** 2 for x in xs)
    if den == 0:
        raise NumericFailureError("degenerate fit window")
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / den


def _dist_to(mat_mp, target_rows):
    t = _mat_to_mp(target_rows)
    return fnorm(mat_mp - t)


def fit_rate(log, limit, window_decades=6):
    """Fitted decay exponents of ||X(mu)-X**|| and ||S(mu)-S**|| over the
    final decades of the trace (log-log least squares)."""
    x_star, _, s_star = limit
    with mp.workprec(log.precision_bits):
        floor = mp.mpf(2) ** (-(log.precision_bits // 2))
        mus, dx, ds = [], [], []
        mu_min = min(p.mu for p in log.points)
        hi = mu_min * mp.mpf(10) ** window_decades
        for p in log.points:
            if p.mu <= hi:
                a = _dist_to(p.X, x_star)
                b = _dist_to(p.S, s_star)
                if a < floor or b < floor:
                    raise NumericFailureError(
                        "distance under the precision floor; escalate "
                        "precision_bits")
                mus.append(mp.log(p.mu))
                dx.append(mp.log(a))
                ds.append(mp.log(b))
        if len(mus) < 3:
            raise NumericFailureError("trace too short for the fit window")
        return _lsq_slope(mus, dx), _lsq_slope(mus, ds)


@dataclass
class EigenClassFit:
    matrix: str
    index: int                # 1-based, eigenvalues sorted descending
    exponent: float
    window: tuple
    ok: bool


@dataclass
class EigenProfileReport:
    ranks: tuple
    fits: list
    passed: bool


def eigen_profile(log, ranks, window_decades=6, tol=0.1, flat_tol=0.05):
    """Classify eigenvalue decay against the three-block windows.

    ``ranks`` = (n_B, n_N, n_T) from the certified limit point.  The top
    n_B eigenvalues of X (resp. n_N of S) must stay flat, the bottom n_N
    of X (resp. n_B of S) decay at least linearly, and the middle n_T
    fall in [2^(1-n) - tol, 1 - 2^(1-n) + tol].
    """
    n_b, n_n, n_t = ranks
    n = log.inst.n
    if n_b + n_n + n_t != n:
        raise NumericFailureError("ranks do not sum to the matrix size")
    with mp.workprec(log.precision_bits):
        mu_min = min(p.mu for p in log.points)
        hi = mu_min * mp.mpf(10) ** window_decades
        sel = [(p.mu, e) for p, e in zip(log.points, log.eigen) if p.mu <= hi]
        if len(sel) < 3:
            raise NumericFailureError("trace too short for the fit window")
        lo_exp = 2 ** (1 - n)
        hi_exp = 1 - 2 ** (1 - n)
        last_eig = sel[-1][1]
        if n_b and last_eig[0][n_b - 1] < mp.mpf(10) ** -3:
            raise NumericFailureError("X spectrum contradicts rank(X**)")
        if n_n and last_eig[1][n_n - 1] < mp.mpf(10) ** -3:
            raise NumericFailureError("S spectrum contradicts rank(S**)")
        xs = [mp.log(mu) for mu, _ in sel]

        def fit_index(which, idx):
            ys = [mp.log(e[0][idx] if which == "X" else e[1][idx])
                  for _, e in sel]
            return float(_lsq_slope(xs, ys))

        def window_for(idx, flat_count):
            # eigenvalues sorted descending; flat block first, then the
            # middle transition block, then the linearly vanishing block
            if idx < flat_count:
                return (-flat_tol, flat_tol)
            if idx < flat_count + n_t:
                return (lo_exp - tol, hi_exp + tol)
            return (1 - tol, float("inf"))

        fits = []
        for which, flat_count in (("X", n_b), ("S", n_n)):
            for i in range(n):
                g = fit_index(which, i)
                w = window_for(i, flat_count)
                ok = w[0] <= g <= w[1]
                fits.append(EigenClassFit(which, i + 1, g, w, ok))
        return EigenProfileReport(ranks=tuple(ranks), fits=fits,
                                  passed=all(f.ok for f in fits))


def holder_check(log, solution_set_distance, window_decades=6, tol=0.1):
    """Fitted exponent of the distance to the solution set, compared to
    the Hoelder floor 2^(1-n)."""
    n = log.inst.n
    with mp.workprec(log.precision_bits):
        mu_min = min(p.mu for p in log.points)
        hi = mu_min * mp.mpf(10) ** window_decades
        xs, ys = [], []
        for p in log.points:
            if p.mu <= hi:
                xs.append(mp.log(p.mu))
                ys.append(mp.log(solution_set_distance(p)))
        exponent = float(_lsq_slope(xs, ys))
        floor = 2 ** (1 - n)
        return {"exponent": exponent, "floor": floor,
                "passed": exponent >= floor - tol}


# -- export -------------------------------------------------------------------


def write_csv(log, path, limit=None):
    """Trace CSV with a JSON header line carrying schedule and precision."""
    n = log.inst.n
    with mp.workprec(log.precision_bits):
        lines = ["# " + json.dumps(log.schedule_dict(), sort_keys=True)]
        cols = (["mu"]
                + [f"eigX{i + 1}" for i in range(n)]
                + [f"eigS{i + 1}" for i in range(n)]
                + ["dist_x", "dist_s", "res_primal", "res_dual", "res_central"])
        lines.append(",".join(cols))
        for p, (ex, es) in zip(log.points, log.eigen):
            row = [mp.nstr(p.mu, 17)]
            row += [mp.nstr(v, 17) for v in ex]
            row += [mp.nstr(v, 17) for v in es]
            if limit is not None:
                row.append(mp.nstr(_dist_to(p.X, limit[0]), 17))
                row.append(mp.nstr(_dist_to(p.S, limit[2]), 17))
            else:
                row += ["", ""]
            row += [mp.nstr(r, 8) for r in p.residuals]
            lines.append(",".join(row))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
