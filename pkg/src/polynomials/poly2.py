"""Polynomials over GF(2) stored as sets of monomials."""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Sequence

from src.polynomials.monomials import Monomial, degree, divides, mul, parse_monomial, render_monomial
from src.polynomials.orders import MonomialOrder

@dataclass(frozen=True)
class Poly2:
    terms: FrozenSet[Monomial] = frozenset()

    @classmethod
    def zero(cls) -> "Poly2":
        return cls(frozenset())

    @classmethod
    def from_monomials(cls, monomials: Iterable[Monomial]) -> "Poly2":
        terms = set()
        for m in monomials:
            terms ^= {m}
        return cls(frozenset(terms))

    @classmethod
    def monomial(cls, m: Monomial) -> "Poly2":
        return cls(frozenset((m,)))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: "Poly2") -> "Poly2":
        return Poly2(self.terms ^ other.terms)

    __sub__ = __add__

    def mul_monomial(self, m: Monomial) -> "Poly2":
        return Poly2(frozenset(mul(t, m) for t in self.terms))

    def __mul__(self, other: "Poly2") -> "Poly2":
        terms = set()
        for a in self.terms:
            for b in other.terms:
                terms ^= {mul(a, b)}
        return Poly2(frozenset(terms))

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def single_term(self) -> Monomial:
        if len(self.terms) != 1:
            raise ValueError("polynomial is not a single monomial")
        return next(iter(self.terms))

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(degree(t) for t in self.terms)

    def divisible_by(self, m: Monomial) -> bool:
        return all(divides(m, t) for t in self.terms)

    def render(self, names: Sequence[str], order: Optional[MonomialOrder] = None) -> str:
        if not self.terms:
            return "0"
        order = order or MonomialOrder.grevlex(len(names))
        return " + ".join(render_monomial(t, names) for t in order.sorted(self.terms, descending=True))

    @classmethod
    def parse(cls, text: str, names: Sequence[str]) -> "Poly2":
        text = text.strip()
        if text == "0":
            return cls.zero()
        return cls.from_monomials(parse_monomial(term, names) for term in text.split("+"))
