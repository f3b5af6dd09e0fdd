"""Exact polynomial arithmetic over the rationals.

Univariate, bivariate (mu, T) and sparse multivariate polynomials with
resultants by pseudo-division remainder sequences, Sturm-sequence real-root
isolation, Thom encodings, and exact sign determination at real algebraic
numbers.
"""

from .bipoly import MU, TVAR, BiPoly, RatFunc, bipoly_exact_div
from .charpoly import eigen_sign_counts, symmetric_charpoly
from .mpoly import (DEFAULT_DEGREE_CAP, MPoly, mpoly_prem, mpoly_resultant)
from .roots import (IsolatedRoot, ThomEncoding, cauchy_root_bound,
                    find_root_by_thom, isolate_real_roots, root_multiplicity,
                    sign_at_root, thom_encoding, thom_less)
from .unipoly import RatPoly


def resultant(p, q, var, cap=DEFAULT_DEGREE_CAP):
    """Res_var(p, q) for multivariate polynomials (MPoly)."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero polynomial")
    return mpoly_resultant(p, q, var, cap=cap)


def discriminant(p):
    """Discriminant of a BiPoly in T, normalized as Res_T(p, p')/lc_T(p)."""
    return p.discriminant()


def squarefree_part(p):
    """p / gcd(p, p'): same distinct roots, primitive form.

    Accepts RatPoly (univariate) or BiPoly (squarefree in T over Q(mu)).
    """
    if isinstance(p, BiPoly):
        return p.squarefree_part_t()
    return p.squarefree_part()


__all__ = [
    "BiPoly", "RatFunc", "RatPoly", "MPoly",
    "IsolatedRoot", "ThomEncoding",
    "MU", "TVAR", "DEFAULT_DEGREE_CAP",
    "resultant", "discriminant", "squarefree_part",
    "isolate_real_roots", "thom_encoding", "sign_at_root",
    "root_multiplicity", "thom_less", "find_root_by_thom",
    "cauchy_root_bound", "bipoly_exact_div",
    "mpoly_resultant", "mpoly_prem",
    "symmetric_charpoly", "eigen_sign_counts",
]
