"""Parametrized univariate representations of the central-path system.

Desk-scale elimination pipeline: the dual linear equations are solved for
s, the primal linear equations parametrize x affinely, unknowns that occur
linearly with rational constant coefficients are substituted away, and the
remaining nonlinear core (at most four unknowns) is collapsed to a single
variable T by iterated resultants.  The eliminated polynomial is split
into irreducible factors; on each factor the other coordinates are
recovered as polynomials in T modulo f by gcd computations over the field
Q(mu)[T]/(f), giving representations x_i = g_i(mu,T)/g_0(mu,T) with
g_0 = c * df/dT.

Branches (real roots of f at a given rational mu) are classified as
central, exterior, or spurious through exact sign determination on the
characteristic polynomials of the associated X and S.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (EliminationBlowupError, SeparationFailureError,
                     TooLargeError, ValidationError)
from .exactalg import (MU, TVAR, BiPoly, MPoly, RatFunc, RatPoly,
                       eigen_sign_counts, isolate_real_roots,
                       mpoly_resultant, symmetric_charpoly, thom_encoding)
from .exactalg.mpoly import DEFAULT_DEGREE_CAP
from .instance import svec_pairs, t_of
from .polysys import central_path_system, var_names

SEP_COORDINATE = "coordinate"
SEP_LINEAR = "linear"


@dataclass(frozen=True)
class ParamUnivariateRep:
    """(f, (g_0, ..., g_nbar)) in Z[mu, T] plus the separating form.

    Coordinates of the represented points are g_i(mu, t)/g_0(mu, t) at
    roots t of f(mu, .); f is primitive over Z[mu] with positive leading
    coefficient and coprime to g_0 over Q(mu).
    """

    f: BiPoly
    g: tuple
    sep: tuple               # (SEP_COORDINATE, index) or (SEP_LINEAR, coeffs)
    variables: tuple         # coordinate names, (x; y; s) order

    @property
    def nbar(self):
        return len(self.g) - 1

    def g0(self):
        return self.g[0]

    def to_json_dict(self):
        return {
            "f": self.f.to_text(),
            "g": [gi.to_text() for gi in self.g],
            "sep": {"kind": self.sep[0],
                    ("index" if self.sep[0] == SEP_COORDINATE else "coeffs"):
                        (self.sep[1] if self.sep[0] == SEP_COORDINATE
                         else list(self.sep[1]))},
            "variables": list(self.variables),
        }

    @classmethod
    def from_json_dict(cls, d):
        sep = (d["sep"]["kind"],
               d["sep"].get("index", None) if d["sep"]["kind"] == SEP_COORDINATE
               else tuple(d["sep"]["coeffs"]))
        return cls(f=BiPoly.from_text(d["f"]),
                   g=tuple(BiPoly.from_text(t) for t in d["g"]),
                   sep=sep, variables=tuple(d["variables"]))


@dataclass(frozen=True)
class BranchTag:
    kind: str                 # central | exterior | infeasible-spurious
    eig_x: tuple              # (positive, zero, negative)
    eig_s: tuple


# -- arithmetic in K = Q(mu)[T]/(f) -------------------------------------------


class _ModRing:
    """Field arithmetic modulo an irreducible f in Q(mu)[T].

    Elements are dense RatFunc coefficient lists of length < deg f.
    """

    def __init__(self, f):
        self.f = f
        self.deg = f.deg_t
        lc = RatFunc(f.lc_t())
        self.monic = [RatFunc(c) / lc for c in f.coeffs]

    def zero(self):
        return []

    def one(self):
        return [RatFunc.one()]

    def from_const(self, rf):
        rf = rf if isinstance(rf, RatFunc) else RatFunc(rf)
        return [] if rf.is_zero() else [rf]

    def gen(self):
        if self.deg == 1:
            return self.from_const(-self.monic[0])
        return [RatFunc.zero(), RatFunc.one()]

    def from_coeffs(self, coeffs):
        """Reduce a T-coefficient list (RatFunc) modulo f."""
        c = [x if isinstance(x, RatFunc) else RatFunc(x) for x in coeffs]
        c = _rf_trim(c)
        while len(c) > self.deg:
            lead = c.pop()
            if lead.is_zero():
                continue
            k = len(c) - self.deg
            for i in range(self.deg):
                c[k + i] = c[k + i] - lead * self.monic[i]
            c = _rf_trim(c)
        return _rf_trim(c)

    def from_bipoly(self, p):
        return self.from_coeffs([RatFunc(c) for c in p.coeffs])

    def add(self, a, b):
        n = max(len(a), len(b))
        out = []
        for i in range(n):
            x = a[i] if i < len(a) else RatFunc.zero()
            y = b[i] if i < len(b) else RatFunc.zero()
            out.append(x + y)
        return _rf_trim(out)

    def neg(self, a):
        return [-x for x in a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return []
        out = [RatFunc.zero()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x.is_zero():
                for j, y in enumerate(b):
                    out[i + j] = out[i + j] + x * y
        return self.from_coeffs(out)

    def scale(self, a, rf):
        return _rf_trim([x * rf for x in a])

    def is_zero(self, a):
        return not a

    def inv(self, a):
        """Inverse by the extended Euclidean algorithm; f irreducible."""
        if not a:
            raise ZeroDivisionError("inverse of zero in the residue field")
        r0, r1 = list(self.monic), list(a)
        s0, s1 = [], [RatFunc.one()]
        while _rf_deg(r1) > 0:
            q, r = _rf_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _rf_sub(s0, _rf_mul(q, s1))
            if not r1:
                raise ZeroDivisionError("element shares a factor with f")
        c = r1[0]
        return self.from_coeffs([x / c for x in s1])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_poly_with_denominator(self, a):
        """(numerator BiPoly in (mu, T), denominator RatPoly in mu)."""
        den = RatPoly.const(MU, 1)
        for x in a:
            den = _ratpoly_lcm(den, x.den)
        coeffs = []
        for x in a:
            coeffs.append(x.num * den.exact_div(x.den))
        return BiPoly(coeffs), den


def _rf_trim(c):
    c = list(c)
    while c and c[-1].is_zero():
        c.pop()
    return c


def _rf_deg(c):
    return len(c) - 1


def _rf_sub(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else RatFunc.zero()
        y = b[i] if i < len(b) else RatFunc.zero()
        out.append(x - y)
    return _rf_trim(out)


def _rf_mul(a, b):
    if not a or not b:
        return []
    out = [RatFunc.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x.is_zero():
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return _rf_trim(out)


def _rf_divmod(a, b):
    if not b:
        raise ZeroDivisionError
    q = [RatFunc.zero()] * max(0, len(a) - len(b) + 1)
    r = list(a)
    lb = b[-1]
    while r and len(r) >= len(b):
        k = len(r) - len(b)
        c = r[-1] / lb
        q[k] = c
        for i in range(len(b)):
            r[k + i] = r[k + i] - c * b[i]
        r = _rf_trim(r)
    return q, r


def _ratpoly_lcm(a, b):
    g = a.gcd(b)
    return (a * b).exact_div(g).primitive()


# -- polynomials over K (for coordinate recovery) ------------------------------


def _kpoly_trim(ring, c):
    c = list(c)
    while c and ring.is_zero(c[-1]):
        c.pop()
    return c


def _kpoly_divmod(ring, a, b):
    if not b:
        raise ZeroDivisionError
    binv = ring.inv(b[-1])
    q = [ring.zero()] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while r and len(r) >= len(b):
        k = len(r) - len(b)
        c = ring.mul(r[-1], binv)
        q[k] = c
        for i in range(len(b)):
            r[k + i] = ring.sub(r[k + i], ring.mul(c, b[i]))
        r = _kpoly_trim(ring, r)
    return q, r


def _kpoly_gcd(ring, a, b):
    a = _kpoly_trim(ring, a)
    b = _kpoly_trim(ring, b)
    while b:
        _, r = _kpoly_divmod(ring, a, b)
        a, b = b, _kpoly_trim(ring, r)
    if a:
        lead_inv = ring.inv(a[-1])
        a = [ring.mul(c, lead_inv) for c in a]
    return a


def _mpoly_to_kpoly(p, w, known, ring):
    """View an MPoly (vars: mu + core) as a polynomial in ``w`` over K,
    with every other variable already bound in ``known``."""
    coeffs = p.coeffs_in(w)
    out = []
    for c in coeffs:
        out.append(_eval_mpoly_in_k(c, known, ring))
    return _kpoly_trim(ring, out)


def _eval_mpoly_in_k(p, known, ring):
    total = ring.zero()
    for e, c in p.terms.items():
        term = ring.from_const(RatFunc(RatPoly.const(MU, c)))
        for i, k in enumerate(e):
            if not k:
                continue
            name = p.vars[i]
            if name == MU:
                mu_elem = ring.from_const(RatFunc(RatPoly(MU, [0, 1])))
                for _ in range(k):
                    term = ring.mul(term, mu_elem)
            else:
                val = known[name]
                for _ in range(k):
                    term = ring.mul(term, val)
        total = ring.add(total, term)
    return total


# -- elimination -------------------------------------------------------------


class _LinearReduction:
    """Result of the linear stage: core unknowns, core equations, and the
    expression of every original coordinate in terms of the core."""

    def __init__(self, inst, cap=DEFAULT_DEGREE_CAP):
        sys = central_path_system(inst)
        names = sys.variables
        n, m, tn = inst.n, inst.m, inst.tn
        x_names = names[:tn]
        y_names = names[tn:tn + m]
        s_names = names[tn + m:]

        # dual solve: s_jl = C_jl - sum_i y_i A^i_jl
        core0 = (MU,) + tuple(x_names) + tuple(y_names)
        expr = {}
        for idx, (j, l) in enumerate(svec_pairs(n)):
            p = MPoly.const(core0, inst.C[j, l])
            for i in range(m):
                if inst.A[i][j, l]:
                    p = p - MPoly.var(core0, y_names[i]) * inst.A[i][j, l]
            expr[s_names[idx]] = p

        # primal affine parametrization: pivot x coordinates in terms of
        # the free ones
        weights = [2 if j < l else 1 for j, l in svec_pairs(n)]
        a_rows = [[Fraction(w * a) for w, a in zip(weights, row)]
                  for row in inst.svec_A()]
        aug = [row[:] + [Fraction(b)] for row, b in zip(a_rows, inst.b)]
        r, pivots = linalg.rref(aug)
        if len(pivots) < m:
            raise ValidationError("primal constraints are rank deficient")
        free_idx = [c for c in range(tn) if c not in pivots]
        for i, c in enumerate(pivots):
            p = MPoly.const(core0, r[i][tn])
            for fcol in free_idx:
                if r[i][fcol]:
                    p = p - MPoly.var(core0, x_names[fcol]) * r[i][fcol]
            expr[x_names[c]] = p
        for fcol in free_idx:
            expr[x_names[fcol]] = MPoly.var(core0, x_names[fcol])
        for yn in y_names:
            expr[yn] = MPoly.var(core0, yn)

        # substitute into centrality equations
        unknowns = [x_names[c] for c in free_idx] + list(y_names)

        def to_core(p):
            # p lives in the full system ring; rewrite over core0 via expr,
            # then restrict to the actually used variables
            q = MPoly.zero(core0)
            for e, c in p.terms.items():
                term = MPoly.const(core0, c)
                for i, k in enumerate(e):
                    if not k:
                        continue
                    nm = p.vars[i]
                    base = (MPoly.var(core0, MU) if nm == MU else expr[nm])
                    for _ in range(k):
                        term = term * base
                q = q + term
            return q

        centrality = [to_core(p) for p in sys.polys[m + tn:]]

        # iterative substitution of unknowns occurring linearly with a
        # rational constant coefficient
        equations = [p for p in centrality]
        solved = []               # (name, expression over current unknowns)
        changed = True
        while changed:
            changed = False
            for ei, p in enumerate(equations):
                if p.is_zero():
                    continue
                for u in list(unknowns):
                    if p.degree(u) != 1:
                        continue
                    cofs = p.coeffs_in(u)
                    lead = cofs[1]
                    if lead.total_degree() != 0:
                        continue
                    cval = next(iter(lead.terms.values()))
                    rhs = cofs[0] * Fraction(-1, 1) * (Fraction(1) / cval)
                    solved.append((u, rhs))
                    unknowns.remove(u)
                    equations = [q.subs({u: rhs}) for qi, q in
                                 enumerate(equations) if qi != ei]
                    changed = True
                    break
                if changed:
                    break
        equations = [p for p in equations if not p.is_zero()]

        # resolve solved chain back to core unknowns only
        assign_full = {}
        for u, rhs in reversed(solved):
            assign_full[u] = rhs.subs(assign_full) if assign_full else rhs

        # every coordinate as an expression over (mu,) + core unknowns
        self.core_ring = core0
        self.coord_expr = {}
        for nm in names:
            p = expr[nm]
            if assign_full:
                p = p.subs(assign_full)
            self.coord_expr[nm] = p
        self.equations = equations
        self.unknowns = tuple(unknowns)
        self.variables = names
        self.inst = inst
        self.cap = cap


def _factor_bipoly_irreducible(f):
    """Irreducible factors over Z[mu, T] with positive T-degree, via sympy."""
    import sympy as sp

    smu, st = sp.symbols("mu T")
    expr = sp.Integer(0)
    for k, c in enumerate(f.coeffs):
        for j, a in enumerate(c.coeffs):
            if a:
                expr += sp.Rational(a.numerator, a.denominator) * smu ** j * st ** k
    _, factors = sp.factor_list(expr, st, smu)
    out = []
    for fac, mult in factors:
        p = sp.Poly(fac, st, smu)
        terms = {}
        for (et, em), c in p.terms():
            c = sp.Rational(c)
            terms[(em, et)] = Fraction(int(c.p), int(c.q))
        bi = BiPoly.from_mpoly(MPoly((MU, TVAR), terms))
        if bi.deg_t >= 1:
            out.append(bi.primitive_normalized())
    return out


class _FactorStatus:
    SPURIOUS = "spurious"
    UNSEPARATED = "unseparated"
    OK = "ok"


def _recover_on_factor(red, fj, kind, spec_c):
    """Recover every core unknown as an element of K = Q(mu)[T]/(fj).

    Returns (status, known) where ``known`` maps core unknown names to
    K-elements when status == OK.
    """
    ring = _ModRing(fj)
    if kind == SEP_COORDINATE:
        pool_vars = (MU,) + red.unknowns
        pool = [p.embed(pool_vars) for p in red.equations]
        known = {spec_c: ring.gen()}
    else:
        pool_vars = (MU,) + red.unknowns + (TVAR,)
        form = MPoly.var(pool_vars, TVAR)
        for c, u in zip(spec_c, red.unknowns):
            if c:
                form = form - MPoly.var(pool_vars, u) * c
        pool = [p.embed(pool_vars) for p in red.equations] + [form]
        known = {TVAR: ring.gen()}
    n_core_eqs = len(red.equations)
    todo = [u for u in red.unknowns if u not in known]

    rounds = 0
    max_rounds = 4 * (len(todo) + 1) ** 2
    while todo:
        rounds += 1
        if rounds > max_rounds:
            return _FactorStatus.UNSEPARATED, None
        progress = False
        for w in list(todo):
            usable = []
            for p in pool:
                if not p.uses(w):
                    continue
                others = [u for u in todo if u != w and p.uses(u)]
                if not others:
                    usable.append(p)
            if not usable:
                continue
            kps = [_mpoly_to_kpoly(p, w, known, ring) for p in usable]
            kps = [k for k in kps if k]
            if not kps:
                continue
            g = kps[0]
            for other in kps[1:]:
                g = _kpoly_gcd(ring, g, other)
                if not g:
                    break
            if not g:
                continue
            if len(g) == 1:
                return _FactorStatus.SPURIOUS, None
            if len(g) > 2:
                return _FactorStatus.UNSEPARATED, None
            val = ring.neg(ring.div(g[0], g[1]))
            known[w] = val
            todo.remove(w)
            progress = True
        if todo and not progress:
            # stall: eliminate one unresolved unknown from pairs to expose
            # relations in fewer unknowns
            target = max(todo, key=lambda u: sum(1 for p in pool if p.uses(u)))
            users = [p for p in pool if p.uses(target)]
            new = []
            for i in range(len(users)):
                for j in range(i + 1, len(users)):
                    r = mpoly_resultant(users[i], users[j], target,
                                        cap=red.cap)
                    if not r.is_zero():
                        new.append(r)
            fresh = [p for p in new if all(p != q for q in pool)]
            if not fresh:
                return _FactorStatus.UNSEPARATED, None
            pool += fresh

    # verify every core equation vanishes on the factor
    for p in pool[:n_core_eqs]:
        if not ring.is_zero(_eval_mpoly_in_k(p, known, ring)):
            return _FactorStatus.SPURIOUS, None
    return _FactorStatus.OK, known


def _eliminate_chain(red, keep, eqs):
    """Iterated resultants eliminating every unknown but ``keep``."""
    vars_here = eqs[0].vars
    work = list(eqs)
    to_kill = [u for u in vars_here if u not in (MU, keep)]
    # eliminate lowest-degree variables first to slow coefficient growth
    while to_kill:
        to_kill.sort(key=lambda u: max((p.degree(u) for p in work), default=0))
        u = to_kill.pop(0)
        users = [p for p in work if p.uses(u)]
        keepers = [p for p in work if not p.uses(u)]
        if not users:
            continue
        users.sort(key=lambda p: (p.degree(u), len(p.terms)))
        pivot = users[0]
        new = []
        for q in users[1:]:
            r = mpoly_resultant(pivot, q, u, cap=red.cap)
            if r.is_zero():
                raise EliminationBlowupError(
                    "resultant vanished identically: shared factor in the "
                    "elimination chain")
            new.append(r)
        work = keepers + new
        if not work:
            raise SeparationFailureError(
                "elimination exhausted the equation pool")
    return work


def eliminate_to_urs(inst, seed=0, cap=DEFAULT_DEGREE_CAP, max_core=4,
                     max_random_forms=32):
    """Compute parametrized univariate representations of the system.

    Tries the core coordinates in order as separating elements, then
    seeded random small-integer linear forms.  Returns one representation
    per irreducible non-spurious factor of the eliminated polynomial.
    """
    red = _LinearReduction(inst, cap=cap)
    if len(red.unknowns) > max_core:
        raise TooLargeError(
            f"nonlinear core has {len(red.unknowns)} unknowns "
            f"(cap {max_core})")
    if not red.unknowns:
        raise SeparationFailureError(
            "system is fully linear; no univariate representation needed")
    rng = random.Random(seed)

    candidates = [(SEP_COORDINATE, u) for u in red.unknowns]
    for _ in range(max_random_forms):
        coeffs = tuple(rng.randint(-9, 9) for _ in red.unknowns)
        if any(coeffs):
            candidates.append((SEP_LINEAR, coeffs))

    last_error = None
    for kind, spec_c in candidates:
        try:
            reps = _attempt(red, kind, spec_c)
        except (EliminationBlowupError, SeparationFailureError) as exc:
            last_error = exc
            continue
        if reps is not None:
            return reps
    if isinstance(last_error, EliminationBlowupError):
        raise last_error
    raise SeparationFailureError(
        "no separating coordinate or random linear form found "
        f"(tried {len(candidates)})")


def _attempt(red, kind, spec_c):
    if kind == SEP_COORDINATE:
        keep = spec_c
        eqs = [p.embed((MU,) + red.unknowns) for p in red.equations]
    else:
        ring = (MU,) + red.unknowns + (TVAR,)
        form = MPoly.var(ring, TVAR)
        for c, u in zip(spec_c, red.unknowns):
            if c:
                form = form - MPoly.var(ring, u) * c
        eqs = [p.embed(ring) for p in red.equations] + [form]
        keep = TVAR
    final = _eliminate_chain(red, keep, eqs)
    f_raw = None
    for p in final:
        bi = BiPoly.from_mpoly(p.embed((MU, keep)), tname=keep)
        f_raw = bi if f_raw is None else f_raw.gcd_t(bi)
    if f_raw is None or f_raw.deg_t < 1:
        return None
    f_raw = f_raw.squarefree_part_t()
    factors = _factor_bipoly_irreducible(f_raw)
    if not factors:
        return None

    reps = []
    for fj in factors:
        status, known = _recover_on_factor(red, fj, kind, spec_c)
        if status == _FactorStatus.UNSEPARATED:
            return None
        if status == _FactorStatus.SPURIOUS:
            continue
        sep = ((SEP_COORDINATE, red.variables.index(spec_c))
               if kind == SEP_COORDINATE else (SEP_LINEAR, spec_c))
        reps.append(_assemble_rep(red, fj, known, sep))
    if not reps:
        raise SeparationFailureError("all factors were rejected as spurious")
    return reps


def _assemble_rep(red, fj, known, sep):
    """Build (f, g0..gnbar) with g0 = c*f' and gi = c*(h_i*f' mod f)."""
    f = fj.primitive_normalized()
    ring = _ModRing(f)
    known = {u: ring.from_coeffs([x for x in v]) for u, v in known.items()}
    fprime = f.derivative_t()
    fp_elem = ring.from_bipoly(fprime)

    coord_elems = []
    for nm in red.variables:
        h = _eval_mpoly_in_k(red.coord_expr[nm], known, ring)
        coord_elems.append(ring.mul(h, fp_elem))

    # common denominator over all coordinates
    den = RatPoly.const(MU, 1)
    for elem in coord_elems:
        for x in elem:
            den = _ratpoly_lcm(den, x.den)

    def clear(elem):
        return BiPoly([x.num * den.exact_div(x.den) for x in elem])

    gs = [fprime * den] + [clear(e) for e in coord_elems]

    # strip the common mu-polynomial factor of the tuple, then scale to
    # integer coefficients with trivial common integer content
    dpoly = None
    for gi in gs:
        if gi.is_zero():
            continue
        c = gi.content_mu()
        dpoly = c if dpoly is None else dpoly.gcd(c)
    if dpoly is not None and dpoly.degree >= 1:
        gs = [BiPoly([cc.exact_div(dpoly) for cc in gi.coeffs])
              if not gi.is_zero() else gi for gi in gs]
    lcm_den = 1
    from math import gcd as ig
    for gi in gs:
        for cc in gi.coeffs:
            for a in cc.coeffs:
                lcm_den = lcm_den * a.denominator // ig(lcm_den, a.denominator)
    gnum = 0
    for gi in gs:
        for cc in gi.coeffs:
            for a in cc.coeffs:
                gnum = ig(gnum, (a * lcm_den).numerator)
    scale = Fraction(lcm_den, gnum if gnum else 1)
    gs = [gi * scale for gi in gs]

    return ParamUnivariateRep(f=f, g=tuple(gs), sep=sep,
                              variables=red.variables)


# -- branches ------------------------------------------------------------------


@dataclass
class Branch:
    rep: ParamUnivariateRep
    root: object              # IsolatedRoot of f(mu*, .)
    thom: object              # ThomEncoding at mu*
    mu: Fraction


def branches_at(rep, mu_star):
    """Real branches of the representation at a rational mu in (0, 1]."""
    mu_star = Fraction(mu_star)
    fT = rep.f.eval_mu(mu_star)
    if fT.degree < 1:
        return []
    return [Branch(rep=rep, root=r, thom=r.thom, mu=mu_star)
            for r in isolate_real_roots(fT)]


def associated_point(rep, branch, precision_bits=128):
    """Coordinates g_i(mu*, t)/g_0(mu*, t) as certified rational
    enclosures: returns (midpoints, halfwidth)."""
    mu_star = branch.mu
    root = branch.root
    g_polys = [gi.eval_mu(mu_star) for gi in rep.g]
    g0 = g_polys[0]
    target = Fraction(1, 2 ** precision_bits)
    if root.is_exact():
        t = root.value()
        d = g0(t)
        if d == 0:
            raise ZeroDivisionError("g0 vanishes at the represented root")
        return [gi(t) / d for gi in g_polys[1:]], Fraction(0)
    root = root.clone()
    while True:
        lo0, hi0 = g0.eval_interval(root.lo, root.hi)
        if lo0 > 0 or hi0 < 0:
            mids = []
            width = Fraction(0)
            ok = True
            for gi in g_polys[1:]:
                lo1, hi1 = gi.eval_interval(root.lo, root.hi)
                cands = (lo1 / lo0, lo1 / hi0, hi1 / lo0, hi1 / hi0)
                lo2, hi2 = min(cands), max(cands)
                if hi2 - lo2 > 2 * target:
                    ok = False
                    break
                mids.append((lo2 + hi2) / 2)
                width = max(width, (hi2 - lo2) / 2)
            if ok:
                return mids, width
        root.refine_steps(8)
        if root.is_exact():
            return associated_point(
                rep, Branch(rep, root, branch.thom, mu_star),
                precision_bits)


def point_matrices(inst, coords):
    """Split a coordinate vector into (X rows, y list, S rows)."""
    n, m, tn = inst.n, inst.m, inst.tn
    xm = [[Fraction(0)] * n for _ in range(n)]
    sm = [[Fraction(0)] * n for _ in range(n)]
    for idx, (j, l) in enumerate(svec_pairs(n)):
        xm[j][l] = xm[l][j] = coords[idx]
        sm[j][l] = sm[l][j] = coords[tn + m + idx]
    y = list(coords[tn:tn + m])
    return xm, y, sm


def _spectrum_counts(inst, rep, branch, block):
    """Exact (positive, zero, negative) eigenvalue counts of X or S on a
    branch at rational mu."""
    n, m, tn = inst.n, inst.m, inst.tn
    g_polys = [gi.eval_mu(branch.mu) for gi in rep.g]
    den = g_polys[0]
    offset = 0 if block == "x" else tn + m
    nums = [[g_polys[1 + offset + svec_index(n, j, l)] for l in range(n)]
            for j in range(n)]
    coeffs = symmetric_charpoly(nums, den)
    return eigen_sign_counts(coeffs, branch.root)


def classify_branch(inst, rep, branch):
    """central / exterior / infeasible-spurious via exact spectra and the
    branch limit."""
    ex = _spectrum_counts(inst, rep, branch, "x")
    es = _spectrum_counts(inst, rep, branch, "s")
    if ex[2] == 0 and ex[1] == 0 and es[2] == 0 and es[1] == 0:
        return BranchTag("central", ex, es)
    from .limits import branch_limit_is_solution
    try:
        solved = branch_limit_is_solution(inst, rep, branch)
    except Exception:
        solved = False
    kind = "exterior" if solved else "infeasible-spurious"
    return BranchTag(kind, ex, es)


def central_branch(inst, reps, mu_star=1):
    """The unique central branch among all representations at mu*."""
    found = []
    for rep in reps:
        for br in branches_at(rep, mu_star):
            tag = classify_branch(inst, rep, br)
            if tag.kind == "central":
                found.append((rep, br))
    if len(found) != 1:
        raise ValidationError(
            f"expected exactly one central branch at mu={mu_star}, "
            f"found {len(found)}")
    return found[0]


def zariski_degree(rep, seed=0, draws=5, max_draws=16, cap=DEFAULT_DEGREE_CAP):
    """mu-degree of the squarefree part of Res_T(a0 g0 + sum ai gi, f),
    maximized over random integer draws."""
    rng = random.Random(seed)
    degs = []
    attempts = 0
    while attempts < draws or (len(set(degs)) > 1 and attempts < max_draws):
        attempts += 1
        comb = BiPoly.zero()
        for gi in rep.g:
            comb = comb + gi * rng.randint(-99, 99)
        if comb.is_zero():
            continue
        r = comb.resultant_t(rep.f, cap=cap)
        if r.is_zero():
            continue
        sf = r.squarefree_part()
        degs.append(sf.degree)
    if not degs:
        raise EliminationBlowupError("all degree draws degenerated")
    return max(degs)


def theorem_degree_bound(rep):
    """max(deg_mu f, deg_mu g) * (deg_T f + deg_T g)."""
    dmu = max([rep.f.deg_mu] + [gi.deg_mu for gi in rep.g])
    dt = rep.f.deg_t + max(gi.deg_t for gi in rep.g)
    return dmu * dt
