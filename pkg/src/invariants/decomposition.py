"""Splitting rho-invariant monomials into rho-invariant factors."""
import logging
from typing import Tuple

from src.field_arith import require_odd_prime
from src.invariants.action import is_rho_invariant, variable_weight
from src.invariants.zero_sum import schmid_zero_sum, zerosum_completion
from src.models import DihedralRep
from src.polynomials.monomials import Monomial, degree, from_occurrences, occurrences, quotient, variable

logger = logging.getLogger(__name__)

def _trivial_variable(rep: DihedralRep, m: Monomial) -> int:
    for i in range(2 * rep.r, rep.nvars):
        if m[i]:
            return i
    return -1

def monomial_decompose(rep: DihedralRep, m: Monomial) -> Tuple[Monomial, Monomial]:
    """Write m = m1 * m2 with both factors rho-invariant, nonconstant and of smaller degree.

    Works for every odd p, prime or not.
    """
    if not is_rho_invariant(rep, m):
        raise ValueError("monomial is not rho-invariant")
    if degree(m) < rep.p + 1:
        raise ValueError(f"monomial degree {degree(m)} is below p+1 = {rep.p + 1}")
    n = rep.nvars
    u = _trivial_variable(rep, m)
    if u >= 0:
        m1 = variable(n, u)
        return m1, quotient(m, m1)
    occ = occurrences(m)[: rep.p + 1]
    witness = schmid_zero_sum([variable_weight(rep, i) for i in occ], rep.p)
    m1 = from_occurrences(n, [occ[witness.k1]] + [occ[i] for i in witness.subset])
    return m1, quotient(m, m1)

def reduce_multiple_to_small(rep: DihedralRep, u: int, m: Monomial) -> Tuple[int, Monomial]:
    """Find a rho-invariant m' with u | m' | m and deg(m') <= p, so that u*m lies in <u*m'>."""
    require_odd_prime(rep.p)
    if not is_rho_invariant(rep, m):
        raise ValueError("monomial is not rho-invariant")
    if not 0 <= u < rep.nvars or not m[u]:
        raise ValueError("u must be a variable dividing m")
    if degree(m) <= rep.p:
        raise ValueError(f"monomial degree {degree(m)} must exceed p = {rep.p}")
    n = rep.nvars
    u_monomial = variable(n, u)
    weight = variable_weight(rep, u)
    if weight == 0:
        return u, u_monomial
    # z/w factors have weight zero, so dropping them keeps rho-invariance
    core = tuple(e if i < 2 * rep.r else 0 for i, e in enumerate(m))
    if degree(core) <= rep.p:
        return u, core
    rest = occurrences(quotient(core, u_monomial))[: rep.p - 1]
    seq = [weight, weight] + [variable_weight(rep, i) for i in rest]
    subset = zerosum_completion(seq, 0, 1, rep.p)
    if subset is None:
        raise RuntimeError(f"no zero-sum completion for weights {seq} mod {rep.p}")
    small = from_occurrences(n, [u] + [rest[i - 2] for i in subset])
    logger.debug(f"Reduced multiple of variable {u}: {m} -> {small}")
    return u, small
