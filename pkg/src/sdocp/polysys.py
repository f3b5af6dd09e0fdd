"""Exact polynomial systems attached to an SDO instance.

Builds, over the integers, the parametric system whose zeros contain the
central path (primal linear, dual linear, and symmetrized centrality
polynomials XS + SX - 2*mu*I in the vectorized coordinates), the mu-free
optimality system, the sum-of-squares aggregate Q with its sphere-capped
and deformed variants, Jacobians, and the strict-complementarity sign
system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import ValidationError
from .exactalg import MPoly
from .exactalg.charpoly import _det
from .instance import svec_index, svec_pairs, t_of

MU = "mu"
SLACK = "W"
XI = "xi"


def var_names(inst):
    """Variable names in the (x; y; s) order of the vectorization."""
    n = inst.n
    xs = [f"X{j + 1}{l + 1}" for j, l in svec_pairs(n)]
    ys = [f"y{i + 1}" for i in range(inst.m)]
    ss = [f"S{j + 1}{l + 1}" for j, l in svec_pairs(n)]
    return xs + ys + ss


@dataclass(frozen=True)
class PolySystem:
    """A family of integer polynomials in the ring Z[mu, V1..Vnbar]."""

    variables: tuple          # V1..Vnbar, in (x; y; s) order
    polys: tuple              # MPoly over ("mu",) + variables

    @property
    def ring(self):
        return (MU,) + self.variables

    def __len__(self):
        return len(self.polys)

    def eval(self, assign):
        """Exact evaluation of every member at Fraction-valued points."""
        return [p.eval(assign) for p in self.polys]

    def eval_mp(self, assign, ctx):
        return [p.eval_mp(assign, ctx) for p in self.polys]

    def to_text(self):
        return [p.to_text() for p in self.polys]


def point_assignment(inst, x_mat, y_vec, s_mat, mu_value=None):
    """Map matrix/vector data onto the system's variable names."""
    names = var_names(inst)
    n = inst.n
    assign = {}
    for idx, (j, l) in enumerate(svec_pairs(n)):
        assign[names[idx]] = x_mat[j][l]
        assign[names[inst.tn + inst.m + idx]] = s_mat[j][l]
    for i in range(inst.m):
        assign[names[inst.tn + i]] = y_vec[i]
    if mu_value is not None:
        assign[MU] = mu_value
    return assign


def _build_system(inst, with_mu):
    names = tuple(var_names(inst))
    ring = (MU,) + names
    n, m, tn = inst.n, inst.m, inst.tn

    def v(name):
        return MPoly.var(ring, name)

    def xvar(j, l):
        return v(names[svec_index(n, j, l)])

    def yvar(i):
        return v(names[tn + i])

    def svar(j, l):
        return v(names[tn + m + svec_index(n, j, l)])

    polys = []
    for i in range(m):
        a = inst.A[i]
        p = MPoly.const(ring, -inst.b[i])
        for j in range(n):
            for l in range(j, n):
                if a[j, l]:
                    w = 2 if j < l else 1
                    p = p + xvar(j, l) * (w * a[j, l])
        polys.append(p)
    for j, l in svec_pairs(n):
        p = svar(j, l) - inst.C[j, l]
        for i in range(m):
            if inst.A[i][j, l]:
                p = p + yvar(i) * inst.A[i][j, l]
        polys.append(p)
    two_mu = MPoly.var(ring, MU) * 2 if with_mu else None
    for j, l in svec_pairs(n):
        p = MPoly.zero(ring)
        for k in range(n):
            p = p + xvar(j, k) * svar(k, l) + svar(j, k) * xvar(k, l)
        if j == l and with_mu:
            p = p - two_mu
        polys.append(p)
    return PolySystem(names, tuple(polys))


def central_path_system(inst):
    """m primal + t(n) dual + t(n) symmetrized centrality polynomials."""
    return _build_system(inst, with_mu=True)


def optimality_system(inst):
    """The centrality family at mu = 0."""
    return _build_system(inst, with_mu=False)


def sos_q(inst):
    """Sum of squares of the central-path family; vanishes exactly on its
    real zero set."""
    sys = central_path_system(inst)
    q = MPoly.zero(sys.ring)
    for p in sys.polys:
        q = q + p * p
    return q


def q_tilde_and_deformation(inst, epsilon=None):
    """Sphere-capped square Q~ = Q^2 + (eps^2 |V|^2 - 1)^2, the xi-deformation
    xi*G + (1 - xi)*Q~, and the dominating form G.

    Returns ``(q_tilde, deform, g_k, dbar)``.  The degree-bound sequence is
    fixed at the constant admissible choice dbar = (8, ..., 8); the
    construction asserts that the actual degrees respect it.
    """
    if epsilon is None:
        epsilon = default_epsilon(inst)
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValidationError("epsilon must be positive")
    q = sos_q(inst)
    ring_q = (MU,) + tuple(var_names(inst)) + (SLACK,)
    q = q.embed(ring_q)
    ball = MPoly.const(ring_q, -1)
    for name in ring_q[1:]:
        vv = MPoly.var(ring_q, name)
        ball = ball + vv * vv * (epsilon * epsilon)
    q_tilde = q * q + ball * ball

    nbar1 = len(ring_q) - 1
    dbar = (8,) * nbar1
    assert q_tilde.total_degree() <= 8
    for name in ring_q[1:]:
        assert q_tilde.tdeg_containing(name) <= 8

    eps_bar = epsilon / 2
    g = MPoly.const(ring_q, 0)
    for i, name in enumerate(ring_q[1:]):
        vv = MPoly.var(ring_q, name)
        g = g + vv ** dbar[i]
        if i >= 1:
            g = g + vv * vv
    g_k = g * (eps_bar ** dbar[0]) - (2 * nbar1 + 1)

    ring_d = ring_q + (XI,)
    xi = MPoly.var(ring_d, XI)
    deform = xi * g_k.embed(ring_d) + (MPoly.const(ring_d, 1) - xi) * q_tilde.embed(ring_d)
    return q_tilde, deform, g_k, dbar


def jacobian(sys):
    """(number of polynomials) x nbar matrix of exact partial derivatives
    with respect to the system variables (mu excluded)."""
    return [[p.diff(v) for v in sys.variables] for p in sys.polys]


def jacobian_eval_mp(sys, assign, ctx):
    jac = jacobian(sys)
    mat = ctx.matrix(len(jac), len(sys.variables))
    for i, row in enumerate(jac):
        for j, p in enumerate(row):
            mat[i, j] = p.eval_mp(assign, ctx)
    return mat


def strict_complementarity_system(inst):
    """Primal and dual linear parts, all n^2 entries of XS, and the n
    leading principal minors det(X_[i] + S_[i]).

    A solution with all minors positive is strictly complementary.
    """
    base = _build_system(inst, with_mu=False)
    names = base.variables
    ring = (MU,) + names
    n, m, tn = inst.n, inst.m, inst.tn

    def xvar(j, l):
        return MPoly.var(ring, names[svec_index(n, j, l)])

    def svar(j, l):
        return MPoly.var(ring, names[tn + m + svec_index(n, j, l)])

    polys = list(base.polys[:m + tn])
    for j in range(n):
        for l in range(n):
            p = MPoly.zero(ring)
            for k in range(n):
                p = p + xvar(j, k) * svar(k, l)
            polys.append(p)
    for i in range(1, n + 1):
        rows = [[xvar(j, l) + svar(j, l) for l in range(i)] for j in range(i)]
        polys.append(_det(rows))
    return PolySystem(names, tuple(polys))


def default_epsilon(inst, precision=256):
    """Boundedness radius from a corrected central point at mu = 1."""
    from .tracer import newton_correct
    pt = newton_correct(inst, None, 1, None, precision)
    return epsilon_bound(inst, pt)


def epsilon_bound(inst, central_point_at_1):
    """Rational eps with the whole path inside the 1/eps ball:
    1/eps = max(ceil(2n / lambda_min(S(1))), ceil(2n / lambda_min(X(1)))).

    Eigenvalue lower bounds are certified: the numeric matrices are
    converted exactly to rationals, a safety margin covering the corrector
    tolerance is subtracted, and positive definiteness of A - l*I is
    verified by exact LDL pivots.
    """
    pt = central_point_at_1
    n = inst.n
    lx = _certified_min_eig_lb(pt.X, pt.tol_bound())
    ls = _certified_min_eig_lb(pt.S, pt.tol_bound())
    if lx <= 0 or ls <= 0:
        raise ValidationError("central point at mu=1 is not positive definite")
    inv_eps = max(math.ceil(Fraction(2 * n) / lx),
                  math.ceil(Fraction(2 * n) / ls))
    return Fraction(1, inv_eps)


def _certified_min_eig_lb(mat_mp, slack):
    """A rational l with lambda_min(matrix) >= l, from exact LDL tests."""
    from mpmath import eigsy, mp
    n = mat_mp.rows
    rows = [[_mpf_to_fraction(mat_mp[i, j]) for j in range(n)]
            for i in range(n)]
    # symmetrize exactly (entries may differ by rounding)
    rows = [[(rows[i][j] + rows[j][i]) / 2 for j in range(n)] for i in range(n)]
    e, _ = eigsy(mat_mp)
    approx = min(_mpf_to_fraction(e[i]) for i in range(n))
    cand = approx * Fraction(99, 100) - Fraction(slack)
    for _ in range(64):
        if cand <= 0:
            return cand
        shifted = [[rows[i][j] - (cand if i == j else 0) for j in range(n)]
                   for i in range(n)]
        if linalg.is_positive_definite(shifted):
            return cand - Fraction(slack)
        cand = cand / 2
    return Fraction(0)


def _mpf_to_fraction(x):
    """Exact conversion of a finite mpmath float to a Fraction."""
    sign, man, exp, _ = x._mpf_
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise ValueError("cannot convert a non-finite value")
    v = Fraction(man) * (Fraction(2) ** exp if exp >= 0
                         else Fraction(1, 2 ** (-exp)))
    return -v if sign else v
