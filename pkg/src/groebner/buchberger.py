"""Buchberger completion, reduced bases and lead-term ideals over GF(2)."""
import heapq
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from src.config import MAX_BASIS_SIZE
from src.polynomials.division import Reducer, leading_monomial, s_polynomial
from src.polynomials.monomials import Monomial, degree, divides, is_coprime, lcm
from src.polynomials.orders import MonomialOrder
from src.polynomials.poly2 import Poly2

logger = logging.getLogger(__name__)

class ResourceCapExceeded(RuntimeError):
    pass

@dataclass(frozen=True)
class GroebnerBasis:
    elements: Tuple[Poly2, ...]
    order: MonomialOrder
    reduced: bool = False

    def __len__(self) -> int:
        return len(self.elements)

    def lead_monomials(self) -> List[Monomial]:
        return [leading_monomial(g, self.order) for g in self.elements]

    def max_degree(self) -> int:
        return max((g.degree() for g in self.elements), default=0)

    def reducer(self) -> Reducer:
        return Reducer(self.elements, self.order)

@dataclass
class GroebnerCertificate:
    ok: bool
    failing_pairs: List[Tuple[int, int, Poly2]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

def minimal_monomial_generators(monomials: Iterable[Monomial], order: Optional[MonomialOrder] = None) -> List[Monomial]:
    unique = sorted(set(monomials), key=lambda m: (degree(m), m))
    minimal: List[Monomial] = []
    for m in unique:
        if not any(divides(d, m) for d in minimal):
            minimal.append(m)
    return order.sorted(minimal) if order else minimal

def _distinct_nonzero(polys: Iterable[Poly2]) -> List[Poly2]:
    seen, result = set(), []
    for f in polys:
        if f and f not in seen:
            seen.add(f)
            result.append(f)
    return result

def reduce_basis(polys: Sequence[Poly2], order: MonomialOrder) -> GroebnerBasis:
    ordered = sorted(_distinct_nonzero(polys), key=lambda f: order.key(leading_monomial(f, order)))
    minimal: List[Poly2] = []
    for f in ordered:
        lm = leading_monomial(f, order)
        if not any(divides(leading_monomial(g, order), lm) for g in minimal):
            minimal.append(f)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(Reducer(others, order).normal_form(g) if others else g)
    reduced.sort(key=lambda f: order.key(leading_monomial(f, order)))
    return GroebnerBasis(tuple(reduced), order, reduced=True)

def is_groebner_basis(polys: Sequence[Poly2], order: MonomialOrder) -> GroebnerCertificate:
    if any(not g for g in polys):
        raise ValueError("Groebner basis elements must be nonzero")
    reducer = Reducer(polys, order)
    failing = []
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if polys[i].is_monomial and polys[j].is_monomial:
                continue
            s = s_polynomial(polys[i], polys[j], order)
            if not s:
                continue
            remainder = reducer.normal_form(s)
            if remainder:
                failing.append((i, j, remainder))
    return GroebnerCertificate(ok=not failing, failing_pairs=failing)

def lead_term_ideal(polys: Sequence[Poly2], order: MonomialOrder) -> List[Monomial]:
    return minimal_monomial_generators((leading_monomial(g, order) for g in polys if g), order)

def buchberger(gens: Sequence[Poly2], order: MonomialOrder, max_basis_size: int = MAX_BASIS_SIZE,
               use_product_criterion: bool = True) -> GroebnerBasis:
    basis = _distinct_nonzero(gens)
    if not basis:
        return GroebnerBasis((), order, reduced=True)
    leads = [leading_monomial(g, order) for g in basis]
    reducer = Reducer(basis, order)
    pairs: List[tuple] = []
    skipped = 0

    def add_pairs(j: int) -> None:
        nonlocal skipped
        for i in range(j):
            if use_product_criterion and is_coprime(leads[i], leads[j]):
                skipped += 1
                continue
            t = lcm(leads[i], leads[j])
            heapq.heappush(pairs, (degree(t), order.key(t), i, j))

    for j in range(1, len(basis)):
        add_pairs(j)
    processed = 0
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        processed += 1
        remainder = reducer.normal_form(s_polynomial(basis[i], basis[j], order))
        if not remainder:
            continue
        basis.append(remainder)
        if len(basis) > max_basis_size:
            raise ResourceCapExceeded(f"Groebner basis grew past {max_basis_size} elements")
        leads.append(leading_monomial(remainder, order))
        reducer.append(remainder)
        add_pairs(len(basis) - 1)
    logger.debug(f"Buchberger under {order.label()}: {processed} pairs reduced, {skipped} skipped, "
                 f"{len(basis)} elements before reduction")
    return reduce_basis(basis, order)
