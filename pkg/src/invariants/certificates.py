"""Explicit Hilbert-ideal membership certificates.

A certificate is a list of (multiplier, generator) pairs whose generators are
invariants of degree at most p; the certified polynomial is the sum of products.
"""
from typing import List, Tuple

from src.invariants.action import is_g_invariant, is_rho_invariant, orbit_sum, sigma, sigma_permutation, variable_weight
from src.invariants.decomposition import monomial_decompose
from src.models import DihedralRep
from src.polynomials.monomials import Monomial, degree, mul, quotient, variable
from src.polynomials.poly2 import Poly2

Certificate = List[Tuple[Poly2, Poly2]]

def certificate_sum(certificate: Certificate) -> Poly2:
    total = Poly2.zero()
    for multiplier, generator in certificate:
        total = total + multiplier * generator
    return total

def _scaled(certificate: Certificate, m: Monomial) -> Certificate:
    return [(a.mul_monomial(m), h) for a, h in certificate]

def _norm(rep: DihedralRep, u: int) -> Monomial:
    n = rep.nvars
    return mul(variable(n, u), variable(n, sigma_permutation(rep)[u]))

def orbit_sum_certificate(rep: DihedralRep, m: Monomial) -> Certificate:
    """Express o(m) through orbit sums of degree <= p."""
    if not is_rho_invariant(rep, m):
        raise ValueError("monomial is not rho-invariant")
    if degree(m) < 1:
        raise ValueError("the constant monomial is not in the Hilbert ideal")
    if degree(m) <= rep.p:
        return [(Poly2.monomial(tuple(0 for _ in m)), orbit_sum(rep, m))]
    if is_g_invariant(rep, m):
        u = next(i for i, e in enumerate(m) if e)
        uv = _norm(rep, u)
        return [(Poly2.monomial(quotient(m, uv)), Poly2.monomial(uv))]
    m1, m2 = monomial_decompose(rep, m)
    certificate: Certificate = []
    if not is_g_invariant(rep, m2):
        certificate += _scaled(orbit_sum_certificate(rep, m2), m1)
    if not is_g_invariant(rep, m1):
        certificate += _scaled(orbit_sum_certificate(rep, m1), sigma(rep, m2))
    return certificate

def multiple_certificate(rep: DihedralRep, u: int, m: Monomial) -> Certificate:
    """u*m = u*o(m) + uv*sigma(m/u) for rho-invariant m divisible by u."""
    if not is_rho_invariant(rep, m) or not m[u]:
        raise ValueError("m must be rho-invariant and divisible by u")
    u_monomial = variable(rep.nvars, u)
    certificate: Certificate = []
    if not is_g_invariant(rep, m):
        certificate += _scaled(orbit_sum_certificate(rep, m), u_monomial)
    certificate.append((Poly2.monomial(sigma(rep, quotient(m, u_monomial))), Poly2.monomial(_norm(rep, u))))
    return certificate

def equal_weight_certificate(rep: DihedralRep, u1: int, u2: int, m: Monomial) -> Certificate:
    """u2*m for rho-invariant m divisible by u1^2, where u1 and u2 carry the same weight."""
    if not is_rho_invariant(rep, m) or m[u1] < 2:
        raise ValueError("m must be rho-invariant and divisible by u1^2")
    if variable_weight(rep, u1) != variable_weight(rep, u2):
        raise ValueError("u1 and u2 must carry the same rho-weight")
    n = rep.nvars
    rest = quotient(m, variable(n, u1, 2))
    shifted = mul(mul(variable(n, u2), variable(n, u1)), rest)
    certificate: Certificate = []
    if not is_g_invariant(rep, shifted):
        certificate += _scaled(orbit_sum_certificate(rep, shifted), variable(n, u1))
    cofactor = sigma(rep, mul(variable(n, u2), rest))
    certificate.append((Poly2.monomial(cofactor), Poly2.monomial(_norm(rep, u1))))
    return certificate
