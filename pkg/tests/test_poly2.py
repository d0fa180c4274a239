import pytest

from src.polynomials.orders import MonomialOrder
from src.polynomials.poly2 import Poly2

NAMES = ["x1", "y1"]

def test_parse_and_render():
    f = Poly2.parse("x1^3 + y1^3", NAMES)
    assert f.terms == frozenset({(3, 0), (0, 3)})
    assert f.render(NAMES) == "x1^3 + y1^3"
    assert f.render(NAMES, MonomialOrder.lex(2, perm=(1, 0))) == "y1^3 + x1^3"
    assert Poly2.parse("0", NAMES) == Poly2.zero()
    assert Poly2.zero().render(NAMES) == "0"

def test_characteristic_two():
    x, y = Poly2.parse("x1", NAMES), Poly2.parse("y1", NAMES)
    assert not (x + x)
    assert (x + y) * (x + y) == Poly2.parse("x1^2 + y1^2", NAMES)
    assert Poly2.parse("x1 + x1 + y1", NAMES) == y

def test_monomial_helpers():
    f = Poly2.parse("x1^2*y1 + x1*y1^2", NAMES)
    assert f.divisible_by((1, 1))
    assert not f.divisible_by((2, 0))
    assert f.mul_monomial((1, 0)) == Poly2.parse("x1^3*y1 + x1^2*y1^2", NAMES)
    assert f.degree() == 3
    assert Poly2.monomial((1, 1)).is_monomial
    with pytest.raises(ValueError):
        f.single_term
    with pytest.raises(ValueError):
        Poly2.zero().degree()
