import math

import numpy as np
import pytest

from src.field_arith import CompositeModulusError
from src.groebner.coinvariants import (HsopBounds, QuotientNotFiniteError, coinvariant_stats, group_order_bounds,
                                       hilbert_series_product, hsop_bound_comparisons, hsop_bounds, standard_monomials,
                                       stats_from_lead_terms, top_degree_formula, witness_monomials)
from src.models import DihedralRep
from src.polynomials.orders import MonomialOrder

def test_standard_monomials_two_variable_example():
    monomials = standard_monomials([(1, 1), (3, 0), (0, 4)], 2)
    assert set(monomials) == {(0, 0), (1, 0), (2, 0), (0, 1), (0, 2), (0, 3)}
    stats = stats_from_lead_terms([(1, 1), (3, 0), (0, 4)], 2)
    assert (stats.dimension, stats.top_degree) == (6, 3)
    assert [len(ms) for _, ms in sorted(stats.by_degree().items())] == [1, 2, 2, 1]

def test_standard_monomials_small_cases():
    assert standard_monomials([(1, 0), (0, 2)], 2) == [(0, 0), (0, 1)]
    assert standard_monomials([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3) == [(0, 0, 0)]
    assert standard_monomials([(0, 0), (1, 1)], 2) == []
    with pytest.raises(QuotientNotFiniteError):
        standard_monomials([(1, 1), (3, 0)], 2)

@pytest.mark.parametrize("rep, dimension, top_degree", [
    (DihedralRep(p=3, r=1), 6, 3),
    (DihedralRep(p=5, r=1), 10, 5),
    (DihedralRep(p=3, s=1), 2, 1),
])
def test_coinvariant_stats(rep, dimension, top_degree):
    stats = coinvariant_stats(rep, MonomialOrder.lex(rep.nvars))
    assert (stats.dimension, stats.top_degree) == (dimension, top_degree)

def test_lead_terms_p5_lex():
    stats = coinvariant_stats(DihedralRep(p=5, r=1), MonomialOrder.lex(2))
    assert set(stats.lt_generators) == {(1, 1), (5, 0), (0, 6)}

def test_top_degree_mixed_rep():
    rep = DihedralRep(p=3, r=1, s=1)
    assert coinvariant_stats(rep, MonomialOrder.grevlex(rep.nvars)).top_degree == 4 == top_degree_formula(rep)

@pytest.mark.parametrize("rep, expected", [
    (DihedralRep(p=3, r=1), 3),
    (DihedralRep(p=3, s=5), 5),
    (DihedralRep(p=5, r=7, s=2), 9),
])
def test_top_degree_formula(rep, expected):
    assert top_degree_formula(rep) == expected

def test_composite_rejected():
    with pytest.raises(CompositeModulusError):
        top_degree_formula(DihedralRep(p=9, r=1))
    with pytest.raises(CompositeModulusError):
        coinvariant_stats(DihedralRep(p=9, r=1), MonomialOrder.lex(2))

def test_hsop_bounds():
    assert hsop_bounds([2, 3]) == HsopBounds(3, 6)
    assert hsop_bounds([2, 5]) == HsopBounds(5, 10)
    assert hsop_bounds([1]) == HsopBounds(0, 1)
    assert hsop_bounds([2, 2, 3]) == HsopBounds(4, 12)
    assert group_order_bounds(2, 6) == HsopBounds(10, 36)
    with pytest.raises(ValueError):
        hsop_bounds([])

def test_hsop_bound_comparisons():
    stats = coinvariant_stats(DihedralRep(p=3, r=1), MonomialOrder.lex(2))
    assert all(b.holds for b in hsop_bound_comparisons(stats, [2, 3]))
    too_small = hsop_bound_comparisons(stats, [2, 2])
    assert [(b.name, b.bound, b.computed, b.holds) for b in too_small] == [
        ("hsop_top_degree", 2, 3, False), ("hsop_dimension", 4, 6, False)]

def test_hilbert_series_product():
    assert hilbert_series_product([2, 3]) == [1, 2, 2, 1]
    assert hilbert_series_product([4]) == [1, 1, 1, 1]
    rng = np.random.default_rng(0)
    for _ in range(100):
        degrees = [int(d) for d in rng.integers(1, 7, size=int(rng.integers(1, 5)))]
        coefficients = hilbert_series_product(degrees)
        assert len(coefficients) - 1 == sum(d - 1 for d in degrees)
        assert sum(coefficients) == math.prod(degrees)

def test_witness_monomials():
    assert witness_monomials(DihedralRep(p=3, r=1, s=1)) == [(0, 1, 0, 1), (0, 3, 0, 1)]
    assert witness_monomials(DihedralRep(p=3, s=2)) == [(0, 0, 1, 1)]
