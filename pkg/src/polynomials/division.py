"""Leading monomials, S-polynomials and the multivariate division algorithm over GF(2)."""
import heapq
from typing import List, NamedTuple, Sequence

from src.polynomials.monomials import Monomial, divides, lcm, mul, quotient, support_mask
from src.polynomials.orders import MonomialOrder
from src.polynomials.poly2 import Poly2

class DivisionResult(NamedTuple):
    quotients: List[Poly2]
    remainder: Poly2

def leading_monomial(f: Poly2, order: MonomialOrder) -> Monomial:
    if not f:
        raise ValueError("the zero polynomial has no leading monomial")
    return order.max(f.terms)

def s_polynomial(f1: Poly2, f2: Poly2, order: MonomialOrder) -> Poly2:
    if not f1 or not f2:
        raise ValueError("S-polynomial of a zero polynomial")
    lm1, lm2 = leading_monomial(f1, order), leading_monomial(f2, order)
    t = lcm(lm1, lm2)
    return f1.mul_monomial(quotient(t, lm1)) + f2.mul_monomial(quotient(t, lm2))

class Reducer:
    """Division by a fixed list of divisors.

    The largest reducible term is reduced first, always by the first divisor in list
    order whose leading monomial divides it.
    """

    def __init__(self, divisors: Sequence[Poly2], order: MonomialOrder):
        if any(not g for g in divisors):
            raise ValueError("divisors must be nonzero")
        self.order = order
        self.divisors = list(divisors)
        self._leads = []
        for g in self.divisors:
            lm = leading_monomial(g, order)
            self._leads.append((lm, support_mask(lm)))

    def append(self, g: Poly2) -> None:
        if not g:
            raise ValueError("divisors must be nonzero")
        lm = leading_monomial(g, self.order)
        self.divisors.append(g)
        self._leads.append((lm, support_mask(lm)))

    def _neg_key(self, m: Monomial) -> tuple:
        return tuple(-c for c in self.order.key(m))

    def _find_divisor(self, t: Monomial) -> int:
        mask = support_mask(t)
        for i, (lm, lm_mask) in enumerate(self._leads):
            if not lm_mask & ~mask and divides(lm, t):
                return i
        return -1

    def reduce(self, f: Poly2, track_quotients: bool = False) -> DivisionResult:
        current = set(f.terms)
        heap = [(self._neg_key(t), t) for t in current]
        heapq.heapify(heap)
        remainder = set()
        quotients = [set() for _ in self.divisors] if track_quotients else []
        while heap:
            _, t = heapq.heappop(heap)
            if t not in current:
                continue
            i = self._find_divisor(t)
            if i < 0:
                current.remove(t)
                remainder.add(t)
                continue
            q = quotient(t, self._leads[i][0])
            if track_quotients:
                quotients[i] ^= {q}
            for term in self.divisors[i].terms:
                product = mul(term, q)
                if product in current:
                    current.remove(product)
                else:
                    current.add(product)
                    heapq.heappush(heap, (self._neg_key(product), product))
        return DivisionResult([Poly2(frozenset(q)) for q in quotients], Poly2(frozenset(remainder)))

    def normal_form(self, f: Poly2) -> Poly2:
        return self.reduce(f).remainder

    def is_reducible(self, m: Monomial) -> bool:
        return self._find_divisor(m) >= 0

def divide(f: Poly2, divisors: Sequence[Poly2], order: MonomialOrder) -> DivisionResult:
    return Reducer(divisors, order).reduce(f, track_quotients=True)

def normal_form(f: Poly2, divisors: Sequence[Poly2], order: MonomialOrder) -> Poly2:
    return Reducer(divisors, order).normal_form(f)
