"""Coinvariant algebra statistics and the degree bounds coming from a homogeneous system of parameters."""
import logging
import math
from dataclasses import dataclass
from functools import reduce
from typing import Dict, List, NamedTuple, Sequence, Tuple

import numpy as np

from src.field_arith import require_odd_prime
from src.groebner.buchberger import lead_term_ideal
from src.invariants.construction import universal_basis
from src.models import BoundComparison, DihedralRep
from src.polynomials.monomials import Monomial, degree, divides, from_occurrences, one
from src.polynomials.orders import MonomialOrder

logger = logging.getLogger(__name__)

class QuotientNotFiniteError(ValueError):
    pass

class HsopBounds(NamedTuple):
    top_bound: int
    dim_bound: int

@dataclass(frozen=True)
class CoinvariantStats:
    dimension: int
    top_degree: int
    standard_monomials: Tuple[Monomial, ...]
    lt_generators: Tuple[Monomial, ...]

    def by_degree(self) -> Dict[int, List[Monomial]]:
        groups: Dict[int, List[Monomial]] = {}
        for m in self.standard_monomials:
            groups.setdefault(degree(m), []).append(m)
        return groups

def standard_monomials(lt_gens: Sequence[Monomial], nvars: int) -> List[Monomial]:
    """Monomials divisible by no generator, listed degree by degree in grevlex order."""
    if any(degree(g) == 0 for g in lt_gens):
        return []
    for i in range(nvars):
        if not any(g[i] and degree(g) == g[i] for g in lt_gens):
            raise QuotientNotFiniteError(f"variable {i} has no pure power among the lead terms")
    grevlex = MonomialOrder.grevlex(nvars)
    layer = [one(nvars)]
    result = list(layer)
    while layer:
        candidates = set()
        for m in layer:
            for i in range(nvars):
                c = m[:i] + (m[i] + 1,) + m[i + 1:]
                if c not in candidates and not any(divides(g, c) for g in lt_gens):
                    candidates.add(c)
        layer = grevlex.sorted(candidates)
        result.extend(layer)
    return result

def stats_from_lead_terms(lt_gens: Sequence[Monomial], nvars: int) -> CoinvariantStats:
    sm = standard_monomials(lt_gens, nvars)
    return CoinvariantStats(dimension=len(sm), top_degree=max((degree(m) for m in sm), default=0),
                            standard_monomials=tuple(sm), lt_generators=tuple(lt_gens))

def coinvariant_stats(rep: DihedralRep, order: MonomialOrder) -> CoinvariantStats:
    lt = lead_term_ideal(universal_basis(rep).polys(), order)
    stats = stats_from_lead_terms(lt, rep.nvars)
    logger.debug(f"Coinvariants of {rep.label()} under {order.label()}: "
                 f"dimension {stats.dimension}, top degree {stats.top_degree}")
    return stats

def top_degree_formula(rep: DihedralRep) -> int:
    require_odd_prime(rep.p)
    return rep.s + max(rep.r, rep.p) if rep.r >= 1 else rep.s

def steinberg_bound(rep: DihedralRep) -> int:
    """Lower bound for the coinvariant dimension; the action is faithful only when r >= 1."""
    return rep.group_order if rep.r >= 1 else 2

def hsop_bounds(degrees: Sequence[int]) -> HsopBounds:
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError("hsop degrees must be a nonempty list of positive integers")
    return HsopBounds(top_bound=sum(d - 1 for d in degrees), dim_bound=math.prod(degrees))

def hsop_bound_comparisons(stats: CoinvariantStats, degrees: Sequence[int]) -> List[BoundComparison]:
    """Top degree <= sum(d_i - 1) and dimension <= prod(d_i) for hsop degrees d_i."""
    bounds = hsop_bounds(degrees)
    return [BoundComparison(name="hsop_top_degree", bound=bounds.top_bound, computed=stats.top_degree),
            BoundComparison(name="hsop_dimension", bound=bounds.dim_bound, computed=stats.dimension)]

def group_order_bounds(nvars: int, group_order: int) -> HsopBounds:
    return hsop_bounds([group_order] * nvars)

def hilbert_series_product(degrees: Sequence[int]) -> List[int]:
    """Coefficients of the product of (1 + t + ... + t^(d-1)) over the degrees."""
    bounds = hsop_bounds(degrees)
    factors = [np.ones(d, dtype=np.int64) for d in degrees]
    coefficients = [int(c) for c in reduce(np.convolve, factors)]
    assert len(coefficients) - 1 == bounds.top_bound
    assert sum(coefficients) == bounds.dim_bound
    return coefficients

def witness_monomials(rep: DihedralRep) -> List[Monomial]:
    """Monomials of top degree that survive in the coinvariants under the y-before-x lex order."""
    n, r, s = rep.nvars, rep.r, rep.s
    ys = list(range(r, 2 * r))
    ws = list(range(2 * r + s, 2 * r + 2 * s))
    witnesses = [from_occurrences(n, ys + ws)]
    if r >= 1:
        witnesses.append(from_occurrences(n, [r] * rep.p + ws))
    return witnesses
