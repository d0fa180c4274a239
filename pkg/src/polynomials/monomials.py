"""Monomials as exponent tuples.

A monomial over 2r+2s variables is a tuple of non-negative integers laid out as
x_1..x_r, y_1..y_r, z_1..z_s, w_1..w_s. The constant monomial is the zero tuple.
"""
import re
from typing import Dict, Sequence, Tuple

from src.config import MAX_EXPONENT

Monomial = Tuple[int, ...]

_FACTOR = re.compile(r"^([a-z]\d+)(?:\^(\d+))?$")

def one(nvars: int) -> Monomial:
    return (0,) * nvars

def variable(nvars: int, index: int, power: int = 1) -> Monomial:
    exponents = [0] * nvars
    exponents[index] = power
    return tuple(exponents)

def degree(m: Monomial) -> int:
    return sum(m)

def mul(m1: Monomial, m2: Monomial) -> Monomial:
    product = tuple(a + b for a, b in zip(m1, m2))
    if product and max(product) > MAX_EXPONENT:
        raise OverflowError(f"exponent exceeds {MAX_EXPONENT}")
    return product

def divides(m1: Monomial, m2: Monomial) -> bool:
    return all(a <= b for a, b in zip(m1, m2))

def quotient(m2: Monomial, m1: Monomial) -> Monomial:
    """Return m2 / m1; m1 must divide m2."""
    q = tuple(b - a for a, b in zip(m1, m2))
    if any(e < 0 for e in q):
        raise ValueError("monomial does not divide")
    return q

def lcm(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m1, m2))

def is_coprime(m1: Monomial, m2: Monomial) -> bool:
    return all(a == 0 or b == 0 for a, b in zip(m1, m2))

def support_mask(m: Monomial) -> int:
    """Bitmask of the variables occurring in m; used as a cheap divisibility prefilter."""
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask

def occurrences(m: Monomial) -> Tuple[int, ...]:
    """Variable indices of m with multiplicity, in variable order."""
    return tuple(i for i, e in enumerate(m) for _ in range(e))

def from_occurrences(nvars: int, indices: Sequence[int]) -> Monomial:
    exponents = [0] * nvars
    for i in indices:
        exponents[i] += 1
    return tuple(exponents)

def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    index: Dict[str, int] = {name: i for i, name in enumerate(names)}
    text = text.strip()
    exponents = [0] * len(names)
    if text == "1":
        return tuple(exponents)
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise ValueError(f"malformed monomial factor: {factor!r}")
        name, power = match.group(1), match.group(2)
        if name not in index:
            raise ValueError(f"unknown variable: {name}")
        exponent = int(power) if power is not None else 1
        if exponent < 1 or exponent > MAX_EXPONENT:
            raise ValueError(f"malformed exponent in {factor!r}")
        exponents[index[name]] += exponent
    return tuple(exponents)

def render_monomial(m: Monomial, names: Sequence[str]) -> str:
    if len(m) != len(names):
        raise ValueError(f"monomial has {len(m)} variables, expected {len(names)}")
    factors = [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e]
    return "*".join(factors) if factors else "1"
