"""Hilbert-ideal generators and the universal Groebner basis of D_{2p} in characteristic two."""
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Sequence, Set

from src.field_arith import require_odd_prime
from src.invariants.action import is_g_invariant, is_rho_invariant, orbit_sum, sigma_permutation
from src.models import DihedralRep
from src.polynomials.division import leading_monomial
from src.polynomials.monomials import Monomial, degree, divides, from_occurrences, is_coprime, mul, variable
from src.polynomials.orders import MonomialOrder
from src.polynomials.poly2 import Poly2

logger = logging.getLogger(__name__)

class BasisFamily(str, Enum):
    ORBIT_SUM = "orbit_sum"
    MONOMIAL_MULTIPLE = "monomial_multiple"
    NORM_PAIR = "norm_pair"

class SPairCase(str, Enum):
    MONOMIAL_PAIR = "monomial_pair"
    COPRIME_LEADS = "coprime_leads"
    ORBIT_ORBIT = "orbit_orbit"
    ORBIT_MULTIPLE = "orbit_multiple"
    ORBIT_NORM = "orbit_norm"

@dataclass(frozen=True)
class TaggedPolynomial:
    family: BasisFamily
    poly: Poly2

@dataclass(frozen=True)
class GeneratorSet:
    elements: tuple = ()

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[TaggedPolynomial]:
        return iter(self.elements)

    def polys(self) -> List[Poly2]:
        return [e.poly for e in self.elements]

    def by_family(self, family: BasisFamily) -> List[Poly2]:
        return [e.poly for e in self.elements if e.family == family]

    def counts(self) -> Dict[str, int]:
        return {family.value: len(self.by_family(family)) for family in BasisFamily}

    def to_records(self, names: Sequence[str]) -> List[Dict[str, str]]:
        return [{"family": e.family.value, "polynomial": e.poly.render(names)} for e in self.elements]

def monomials_of_degree(nvars: int, d: int) -> List[Monomial]:
    return [from_occurrences(nvars, c) for c in itertools.combinations_with_replacement(range(nvars), d)]

def enumerate_rho_invariant_monomials(rep: DihedralRep, dmax: int) -> List[Monomial]:
    if dmax < 0:
        raise ValueError("dmax must be non-negative")
    grevlex = MonomialOrder.grevlex(rep.nvars)
    result = []
    for d in range(dmax + 1):
        result.extend(grevlex.sorted(m for m in monomials_of_degree(rep.nvars, d) if is_rho_invariant(rep, m)))
    return result

def orbit_sums_in_degrees(rep: DihedralRep, low: int, high: int) -> List[Poly2]:
    """Distinct orbit sums of rho-invariant monomials of degree low..high."""
    seen: Set[Poly2] = set()
    result = []
    for m in enumerate_rho_invariant_monomials(rep, high):
        if degree(m) < low:
            continue
        o = orbit_sum(rep, m)
        if o not in seen:
            seen.add(o)
            result.append(o)
    return result

def hilbert_ideal_generators(rep: DihedralRep) -> List[Poly2]:
    if not rep.is_prime:
        logger.warning(f"p={rep.p} is composite; degree-p generation of the Hilbert ideal is not guaranteed")
    return orbit_sums_in_degrees(rep, 1, rep.p)

def norm_pairs(rep: DihedralRep) -> List[Poly2]:
    perm = sigma_permutation(rep)
    n = rep.nvars
    pairs = [(i, perm[i]) for i in range(rep.r)] + [(2 * rep.r + j, perm[2 * rep.r + j]) for j in range(rep.s)]
    return [Poly2.monomial(mul(variable(n, u), variable(n, v))) for u, v in pairs]

def universal_basis(rep: DihedralRep) -> GeneratorSet:
    require_odd_prime(rep.p)
    invariant = [m for m in enumerate_rho_invariant_monomials(rep, rep.p) if degree(m) >= 1]

    orbit_elements, seen_orbits = [], set()
    for m in invariant:
        if is_g_invariant(rep, m):
            continue
        o = orbit_sum(rep, m)
        if o not in seen_orbits:
            seen_orbits.add(o)
            orbit_elements.append(TaggedPolynomial(BasisFamily.ORBIT_SUM, o))

    norms = norm_pairs(rep)
    norm_set = set(norms)
    multiple_elements, seen_multiples = [], set()
    for m in invariant:
        for u, e in enumerate(m):
            if not e:
                continue
            f = Poly2.monomial(mul(variable(rep.nvars, u), m))
            if f not in norm_set and f not in seen_multiples:
                seen_multiples.add(f)
                multiple_elements.append(TaggedPolynomial(BasisFamily.MONOMIAL_MULTIPLE, f))

    norm_elements = [TaggedPolynomial(BasisFamily.NORM_PAIR, f) for f in norms]
    gs = GeneratorSet(tuple(orbit_elements + multiple_elements + norm_elements))
    logger.debug(f"Universal basis for {rep.label()}: {gs.counts()}")
    return gs

def prune_redundant(gs: GeneratorSet) -> GeneratorSet:
    """Drop monomials strictly divisible by another monomial element, then polynomials covered by the survivors."""
    monomials = {e.poly.single_term for e in gs if e.poly.is_monomial}
    minimal = {m for m in monomials if not any(d != m and divides(d, m) for d in monomials)}
    kept = []
    for e in gs:
        if e.poly.is_monomial:
            if e.poly.single_term in minimal:
                kept.append(e)
        elif not all(any(divides(d, t) for d in minimal) for t in e.poly.terms):
            kept.append(e)
    return GeneratorSet(tuple(kept))

def classify_s_pair(a: TaggedPolynomial, b: TaggedPolynomial, order: MonomialOrder) -> SPairCase:
    if a.poly.is_monomial and b.poly.is_monomial:
        return SPairCase.MONOMIAL_PAIR
    if is_coprime(leading_monomial(a.poly, order), leading_monomial(b.poly, order)):
        return SPairCase.COPRIME_LEADS
    families = {a.family, b.family}
    if families == {BasisFamily.ORBIT_SUM}:
        return SPairCase.ORBIT_ORBIT
    if BasisFamily.NORM_PAIR in families:
        return SPairCase.ORBIT_NORM
    return SPairCase.ORBIT_MULTIPLE
