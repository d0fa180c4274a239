import numpy as np
import pytest

from src.config import ACCEPTANCE_GRID
from src.field_arith import CompositeModulusError
from src.invariants.action import is_rho_invariant
from src.invariants.decomposition import monomial_decompose, reduce_multiple_to_small
from src.models import DihedralRep
from src.polynomials.monomials import degree, divides, from_occurrences, mul

GRID_REPS = [DihedralRep(p=e.p, r=e.r, s=e.s, weights=e.weights) for e in ACCEPTANCE_GRID.values()]
GRID_IDS = list(ACCEPTANCE_GRID)

def random_invariant_monomials(rep, rng, count, low, high):
    found = []
    while len(found) < count:
        d = int(rng.integers(low, high + 1))
        m = from_occurrences(rep.nvars, [int(i) for i in rng.integers(0, rep.nvars, size=d)])
        if is_rho_invariant(rep, m):
            found.append(m)
    return found

def test_decompose_examples():
    rep = DihedralRep(p=3, r=1)
    assert monomial_decompose(rep, (6, 0)) == ((3, 0), (3, 0))
    m1, m2 = monomial_decompose(rep, (4, 1))
    assert mul(m1, m2) == (4, 1)
    assert is_rho_invariant(rep, m1) and is_rho_invariant(rep, m2)

def test_decompose_trivial_variable():
    rep = DihedralRep(p=3, r=1, s=1)
    assert monomial_decompose(rep, (3, 0, 1, 0)) == ((0, 0, 1, 0), (3, 0, 0, 0))

def test_decompose_preconditions():
    rep = DihedralRep(p=3, r=1)
    with pytest.raises(ValueError):
        monomial_decompose(rep, (5, 0))
    with pytest.raises(ValueError):
        monomial_decompose(rep, (3, 0))

def test_decompose_composite_modulus():
    rep = DihedralRep(p=9, r=1)
    m = (10, 1)
    m1, m2 = monomial_decompose(rep, m)
    assert mul(m1, m2) == m
    assert 0 < degree(m1) < degree(m) and 0 < degree(m2) < degree(m)

@pytest.mark.parametrize("rep", GRID_REPS, ids=GRID_IDS)
def test_decompose_random(rep):
    rng = np.random.default_rng(0)
    for m in random_invariant_monomials(rep, rng, 500, rep.p + 1, 3 * rep.p):
        m1, m2 = monomial_decompose(rep, m)
        assert mul(m1, m2) == m
        assert is_rho_invariant(rep, m1) and is_rho_invariant(rep, m2)
        assert 0 < degree(m1) < degree(m) and 0 < degree(m2) < degree(m)

def test_reduce_multiple_examples():
    assert reduce_multiple_to_small(DihedralRep(p=3, r=1), 0, (6, 0)) == (0, (3, 0))
    assert reduce_multiple_to_small(DihedralRep(p=3, s=1), 0, (2, 2)) == (0, (1, 0))

def test_reduce_multiple_preconditions():
    rep = DihedralRep(p=3, r=1)
    with pytest.raises(ValueError):
        reduce_multiple_to_small(rep, 1, (6, 0))
    with pytest.raises(ValueError):
        reduce_multiple_to_small(rep, 0, (3, 0))
    with pytest.raises(CompositeModulusError):
        reduce_multiple_to_small(DihedralRep(p=9, r=1), 0, (10, 1))

@pytest.mark.parametrize("rep", GRID_REPS, ids=GRID_IDS)
def test_reduce_multiple_random(rep):
    rng = np.random.default_rng(1)
    for m in random_invariant_monomials(rep, rng, 500, rep.p + 1, 3 * rep.p):
        for u in {i for i, e in enumerate(m) if e}:
            v, small = reduce_multiple_to_small(rep, u, m)
            assert v == u
            assert is_rho_invariant(rep, small)
            assert small[u] >= 1 and divides(small, m)
            assert degree(small) <= rep.p
