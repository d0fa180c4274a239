"""Arithmetic in Z/p and in the binary field GF(2^k) that carries a primitive p-th root of unity.

Field elements are k-bit integers; bit i is the coefficient of t^i.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Union

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from src.config import MAX_FIELD_DEGREE

logger = logging.getLogger(__name__)

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True

def prime_factors(n: int) -> List[int]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors

class CompositeModulusError(ValueError):
    """Raised when a construction that needs p prime is asked for a composite p."""

def require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    if not is_prime(p):
        raise CompositeModulusError(f"p={p} is composite; this construction requires an odd prime")

@dataclass(frozen=True)
class ZmodP:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 3 or self.modulus % 2 == 0:
            raise ValueError(f"modulus must be an odd integer >= 3, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other: Union["ZmodP", int]) -> int:
        if isinstance(other, ZmodP):
            if other.modulus != self.modulus:
                raise ValueError(f"mismatched moduli {self.modulus} and {other.modulus}")
            return other.value
        return int(other)

    def __add__(self, other: Union["ZmodP", int]) -> "ZmodP":
        return ZmodP(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Union["ZmodP", int]) -> "ZmodP":
        return ZmodP(self.value - self._coerce(other), self.modulus)

    def __neg__(self) -> "ZmodP":
        return ZmodP(-self.value, self.modulus)

    def __mul__(self, other: Union["ZmodP", int]) -> "ZmodP":
        return ZmodP(self.value * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

class BinaryFieldDescriptor(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: int
    k: int
    modulus_poly: int
    zeta: int

    @field_validator("k")
    @classmethod
    def check_degree(cls, v):
        if not 1 <= v <= MAX_FIELD_DEGREE:
            raise ValueError(f"extension degree must be between 1 and {MAX_FIELD_DEGREE}, got {v}")
        return v

    @model_validator(mode="after")
    def check_elements(self):
        if self.modulus_poly.bit_length() - 1 != self.k:
            raise ValueError(f"modulus_poly must have degree {self.k}")
        if not 1 < self.zeta < (1 << self.k):
            raise ValueError("zeta must be a field element different from 0 and 1")
        return self

    @property
    def size(self) -> int:
        return 1 << self.k

def multiplicative_order_of_two(p: int) -> int:
    require_odd_prime(p)
    k, power = 1, 2 % p
    while power != 1:
        power = (power * 2) % p
        k += 1
    return k

def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[t] bitmasks."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result

def poly_mod(a: int, modulus: int) -> int:
    degree = modulus.bit_length() - 1
    while a.bit_length() - 1 >= degree:
        a ^= modulus << (a.bit_length() - 1 - degree)
    return a

def is_irreducible(poly: int) -> bool:
    degree = poly.bit_length() - 1
    if degree < 1:
        return False
    for divisor in range(2, 1 << (degree // 2 + 1)):
        if poly_mod(poly, divisor) == 0:
            return False
    return True

def smallest_irreducible(k: int) -> int:
    for candidate in range(1 << k, 1 << (k + 1)):
        if is_irreducible(candidate):
            return candidate
    raise ValueError(f"no irreducible polynomial of degree {k}")

def gf_add(a: int, b: int) -> int:
    return a ^ b

def gf_mul(field: BinaryFieldDescriptor, a: int, b: int) -> int:
    return poly_mod(clmul(a, b), field.modulus_poly)

def gf_pow(field: BinaryFieldDescriptor, a: int, n: int) -> int:
    if n < 0:
        return gf_pow(field, gf_inv(field, a), -n)
    result = 1
    while n:
        if n & 1:
            result = gf_mul(field, result, a)
        a = gf_mul(field, a, a)
        n >>= 1
    return result

def gf_inv(field: BinaryFieldDescriptor, a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("zero has no inverse in GF(2^k)")
    return gf_pow(field, a, field.size - 2)

def _is_generator(modulus_poly: int, k: int, g: int) -> bool:
    group_order = (1 << k) - 1
    probe = BinaryFieldDescriptor.model_construct(p=0, k=k, modulus_poly=modulus_poly, zeta=0)
    return all(gf_pow(probe, g, group_order // q) != 1 for q in prime_factors(group_order))

@lru_cache(maxsize=None)
def build_field(p: int) -> BinaryFieldDescriptor:
    k = multiplicative_order_of_two(p)
    if k > MAX_FIELD_DEGREE:
        raise ValueError(f"GF(2^{k}) is too large for p={p}; at most k={MAX_FIELD_DEGREE} is supported")
    modulus_poly = smallest_irreducible(k)
    generator = next(g for g in range(2, 1 << k) if _is_generator(modulus_poly, k, g))
    probe = BinaryFieldDescriptor.model_construct(p=p, k=k, modulus_poly=modulus_poly, zeta=0)
    zeta = gf_pow(probe, generator, ((1 << k) - 1) // p)
    field = BinaryFieldDescriptor(p=p, k=k, modulus_poly=modulus_poly, zeta=zeta)
    logger.debug(f"Built GF(2^{k}) for p={p}: modulus={modulus_poly:#b}, zeta={zeta}")
    return field
