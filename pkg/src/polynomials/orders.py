"""Monomial orders: lex, grlex, grevlex and weighted, each after a variable permutation.

Every order is realized as a sort key, so that ``key(m1) < key(m2)`` iff m1 < m2.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Optional, Tuple

import numpy as np

from src.config import WEIGHT_RANGE
from src.models import DihedralRep, OrderSpec
from src.polynomials.monomials import Monomial

class OrderKind(str, Enum):
    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"
    WEIGHTED = "weighted"

class Comparison(int, Enum):
    LT = -1
    EQ = 0
    GT = 1

@dataclass(frozen=True)
class MonomialOrder:
    kind: OrderKind
    perm: Tuple[int, ...]
    weights: Optional[Tuple[int, ...]] = None
    name: str = ""

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"perm must be a permutation of 0..{len(self.perm) - 1}")
        if self.kind == OrderKind.WEIGHTED:
            if self.weights is None or len(self.weights) != len(self.perm):
                raise ValueError("weighted orders need one weight per variable")
            if any(w <= 0 for w in self.weights):
                raise ValueError("order weights must be positive")
        object.__setattr__(self, "_key", self._build_key())

    def __reduce__(self):
        return (MonomialOrder, (self.kind, self.perm, self.weights, self.name))

    @property
    def nvars(self) -> int:
        return len(self.perm)

    def _build_key(self) -> Callable[[Monomial], tuple]:
        perm = self.perm
        if self.kind == OrderKind.LEX:
            return lambda m: tuple(m[i] for i in perm)
        if self.kind == OrderKind.GRLEX:
            return lambda m: (sum(m),) + tuple(m[i] for i in perm)
        if self.kind == OrderKind.GREVLEX:
            reversed_perm = perm[::-1]
            return lambda m: (sum(m),) + tuple(-m[i] for i in reversed_perm)
        weights = self.weights
        return lambda m: (sum(w * e for w, e in zip(weights, m)),) + tuple(m[i] for i in perm)

    def key(self, m: Monomial) -> tuple:
        return self._key(m)

    def compare(self, m1: Monomial, m2: Monomial) -> Comparison:
        if len(m1) != len(m2) or len(m1) != self.nvars:
            raise ValueError(f"mismatched variable counts: {len(m1)}, {len(m2)} for an order on {self.nvars}")
        k1, k2 = self._key(m1), self._key(m2)
        if k1 == k2:
            return Comparison.EQ
        return Comparison.GT if k1 > k2 else Comparison.LT

    def max(self, monomials) -> Monomial:
        return max(monomials, key=self._key)

    def sorted(self, monomials, descending: bool = False) -> List[Monomial]:
        return sorted(monomials, key=self._key, reverse=descending)

    def label(self) -> str:
        return self.name or self.kind.value

    def to_spec(self) -> OrderSpec:
        return OrderSpec(kind=self.kind.value, perm=self.perm, weights=self.weights, name=self.label())

    @classmethod
    def lex(cls, nvars: int, perm: Optional[Tuple[int, ...]] = None, name: str = "") -> "MonomialOrder":
        return cls(OrderKind.LEX, tuple(perm) if perm is not None else tuple(range(nvars)), name=name)

    @classmethod
    def grlex(cls, nvars: int, perm: Optional[Tuple[int, ...]] = None, name: str = "") -> "MonomialOrder":
        return cls(OrderKind.GRLEX, tuple(perm) if perm is not None else tuple(range(nvars)), name=name)

    @classmethod
    def grevlex(cls, nvars: int, perm: Optional[Tuple[int, ...]] = None, name: str = "") -> "MonomialOrder":
        return cls(OrderKind.GREVLEX, tuple(perm) if perm is not None else tuple(range(nvars)), name=name)

    @classmethod
    def weighted(cls, weights: Tuple[int, ...], perm: Optional[Tuple[int, ...]] = None,
                 name: str = "") -> "MonomialOrder":
        weights = tuple(int(w) for w in weights)
        return cls(OrderKind.WEIGHTED, tuple(perm) if perm is not None else tuple(range(len(weights))),
                   weights=weights, name=name)

def compare(order: MonomialOrder, m1: Monomial, m2: Monomial) -> Comparison:
    return order.compare(m1, m2)

def order_from_spec(spec: OrderSpec, nvars: int) -> MonomialOrder:
    perm = spec.perm if spec.perm is not None else tuple(range(nvars))
    if len(perm) != nvars:
        raise ValueError(f"order perm has {len(perm)} entries, expected {nvars}")
    if spec.weights is not None and len(spec.weights) != nvars:
        raise ValueError(f"order weights have {len(spec.weights)} entries, expected {nvars}")
    return MonomialOrder(OrderKind(spec.kind), tuple(perm), weights=spec.weights, name=spec.name or spec.kind)

def swapped_permutation(rep: DihedralRep) -> Tuple[int, ...]:
    """Variable priority y_1..y_r, x_1..x_r, w_1..w_s, z_1..z_s."""
    r, s = rep.r, rep.s
    xs, ys = list(range(r)), list(range(r, 2 * r))
    zs, ws = list(range(2 * r, 2 * r + s)), list(range(2 * r + s, 2 * r + 2 * s))
    return tuple(ys + xs + ws + zs)

def sample_orders(rep: DihedralRep, count: int, seed: int) -> List[MonomialOrder]:
    if count < 1:
        raise ValueError("count must be at least 1")
    n = rep.nvars
    named = [
        MonomialOrder.lex(n, name="lex"),
        MonomialOrder.grlex(n, name="grlex"),
        MonomialOrder.grevlex(n, name="grevlex"),
        MonomialOrder.lex(n, perm=swapped_permutation(rep), name="lex_swapped"),
    ]
    # the swapped lex order is always kept
    orders = named[:count] if count >= len(named) else named[:count - 1] + [named[-1]]
    rng = np.random.default_rng(seed)
    low, high = WEIGHT_RANGE
    for i in range(count - len(orders)):
        weights = tuple(int(w) for w in rng.integers(low, high + 1, size=n))
        orders.append(MonomialOrder.weighted(weights, name=f"weighted_{i + 1}"))
    return orders
