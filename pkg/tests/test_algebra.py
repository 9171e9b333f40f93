from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crgenus2.algebra import (CyclotomicElement, FracPoly, QPolynomial, TruncatedEGF, egf_derivative,
                              egf_divided_power, fmt_fraction, interpolate)

exponents = st.builds(Fraction, st.integers(0, 24), st.sampled_from([1, 2, 3, 4, 5, 6, 8, 10]))
polys = st.dictionaries(exponents, st.integers(-5, 5), max_size=5).map(FracPoly.from_dict)
egfs = st.lists(st.integers(-4, 4), min_size=6, max_size=6).map(
    lambda cs: TruncatedEGF.from_values([Fraction(c) for c in cs], 5))


@given(polys, polys)
def test_fracpoly_addition_and_product_commute(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(polys, polys, polys)
@settings(max_examples=50)
def test_fracpoly_product_is_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys)
def test_fracpoly_serialization_roundtrip(a):
    assert FracPoly.deserialize(a.serialize()) == a


@given(polys, exponents)
def test_shift_multiplies_by_monomial(a, e):
    assert a.shift(e) == a * FracPoly.monomial(e)


def test_fracpoly_str_uses_braced_fractional_exponents():
    p = FracPoly.from_dict({Fraction(0): 2, Fraction(1, 2): 4, Fraction(1): 1, Fraction(2): 3})
    assert str(p) == "2 + 4t^{1/2} + t + 3t^2"
    assert fmt_fraction(Fraction(-7, 18)) == "-7/18"


@given(egfs, egfs)
@settings(max_examples=50)
def test_egf_leibniz_rule(f, g):
    # differentiation drops one order
    lhs = egf_derivative(f * g)
    rhs = egf_derivative(f) * g.truncate(4) + f.truncate(4) * egf_derivative(g)
    assert lhs == rhs


def test_egf_divided_power_matches_repeated_product():
    p = TruncatedEGF.from_values([Fraction(0), Fraction(1), Fraction(1), Fraction(2)], 3)
    assert egf_divided_power(p, 2) == (p * p) * Fraction(1, 2)


def test_egf_rejects_mismatched_orders():
    a = TruncatedEGF.constant(1, 3)
    b = TruncatedEGF.constant(1, 4)
    with pytest.raises(ValueError):
        a * b


def test_interpolation_recovers_polynomial():
    q = QPolynomial.q()
    target = q * q * q + q * 2 + 1
    assert interpolate([(p, target(p)) for p in (2, 3, 5, 7)]) == target


@given(st.integers(2, 12), st.integers(0, 30))
def test_root_of_unity_sums(N, k):
    total = CyclotomicElement.zero(N)
    for j in range(N):
        total = total + CyclotomicElement.zeta_power(N, j * k)
    assert total.rational_value() == (N if k % N == 0 else 0)
