"""The D_{2p} action on monomials and polynomials.

sigma swaps x_i <-> y_i and z_j <-> w_j. rho multiplies a monomial m by
zeta^{rho_weight(m)}, where x_i carries weight a_i and y_i carries -a_i.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Tuple

from src.field_arith import BinaryFieldDescriptor, ZmodP, gf_mul, gf_pow
from src.models import DihedralRep
from src.polynomials.monomials import Monomial
from src.polynomials.poly2 import Poly2

@lru_cache(maxsize=None)
def variable_weights(rep: DihedralRep) -> Tuple[int, ...]:
    xs = tuple(a % rep.p for a in rep.weights)
    ys = tuple((-a) % rep.p for a in rep.weights)
    return xs + ys + (0,) * (2 * rep.s)

def variable_weight(rep: DihedralRep, index: int) -> int:
    return variable_weights(rep)[index]

@lru_cache(maxsize=None)
def sigma_permutation(rep: DihedralRep) -> Tuple[int, ...]:
    r, s = rep.r, rep.s
    perm = list(range(r, 2 * r)) + list(range(r)) + list(range(2 * r + s, 2 * r + 2 * s)) + list(range(2 * r, 2 * r + s))
    return tuple(perm)

def weight_of(rep: DihedralRep, m: Monomial) -> int:
    return sum(w * e for w, e in zip(variable_weights(rep), m)) % rep.p

def rho_weight(rep: DihedralRep, m: Monomial) -> ZmodP:
    return ZmodP(weight_of(rep, m), rep.p)

def sigma(rep: DihedralRep, m: Monomial) -> Monomial:
    perm = sigma_permutation(rep)
    return tuple(m[j] for j in perm)

def sigma_poly(rep: DihedralRep, f: Poly2) -> Poly2:
    return Poly2(frozenset(sigma(rep, t) for t in f.terms))

def is_rho_invariant(rep: DihedralRep, m: Monomial) -> bool:
    return weight_of(rep, m) == 0

def is_g_invariant(rep: DihedralRep, m: Monomial) -> bool:
    return sigma(rep, m) == m

def orbit_sum(rep: DihedralRep, m: Monomial) -> Poly2:
    if not is_rho_invariant(rep, m):
        raise ValueError("orbit sums are only defined for rho-invariant monomials")
    image = sigma(rep, m)
    if image == m:
        return Poly2.monomial(m)
    return Poly2(frozenset((m, image)))

@dataclass(frozen=True)
class PolyK:
    """Polynomial with GF(2^k) coefficients; absent monomials have coefficient zero."""
    terms: Dict[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {m: c for m, c in self.terms.items() if c})

    @classmethod
    def from_poly2(cls, f: Poly2) -> "PolyK":
        return cls({m: 1 for m in f.terms})

    def __add__(self, other: "PolyK") -> "PolyK":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) ^ c
        return PolyK(terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

def _check_field(rep: DihedralRep, field_: BinaryFieldDescriptor) -> None:
    if field_.p != rep.p:
        raise ValueError(f"field was built for p={field_.p}, representation has p={rep.p}")

def apply_sigma(rep: DihedralRep, f: PolyK) -> PolyK:
    return PolyK({sigma(rep, m): c for m, c in f.terms.items()})

def apply_rho(rep: DihedralRep, field_: BinaryFieldDescriptor, f: PolyK) -> PolyK:
    _check_field(rep, field_)
    return PolyK({m: gf_mul(field_, c, gf_pow(field_, field_.zeta, weight_of(rep, m)))
                  for m, c in f.terms.items()})

def apply_rho_inverse(rep: DihedralRep, field_: BinaryFieldDescriptor, f: PolyK) -> PolyK:
    for _ in range(rep.p - 1):
        f = apply_rho(rep, field_, f)
    return f

def is_invariant_poly(rep: DihedralRep, field_: BinaryFieldDescriptor, f: PolyK) -> bool:
    return apply_sigma(rep, f) == f and apply_rho(rep, field_, f) == f
