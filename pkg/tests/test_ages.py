from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crgenus2.admissible import enumerate_sectors, involution
from crgenus2.ages import base_age, base_character, codim, duality_defect, marked_age, point_weight, theta
from crgenus2.reference import BASE_AGES, POINTED_AGES


def test_base_ages():
    ages = {s.name: base_age(s.datum) for s in enumerate_sectors(2, 0)}
    assert ages == BASE_AGES


def test_pointed_ages():
    by_name = {s.name: s for s in enumerate_sectors(2, 1)}
    for name, expected in POINTED_AGES.items():
        assert marked_age(by_name[name]) == expected


def test_base_characters():
    for s in enumerate_sectors(2, 0):
        ch = base_character(s.datum)
        assert sum(ch.m) == 3
        assert ch.m[0] == s.dim


@pytest.mark.parametrize("n", range(7))
def test_age_duality(n):
    for s in enumerate_sectors(2, n):
        assert marked_age(s) + marked_age(involution(s)) == codim(s)
        assert duality_defect(s) == 0


@given(st.integers(2, 10).flatmap(lambda N: st.tuples(st.just(N), st.integers(1, N - 1))))
def test_theta_is_complementary(pair):
    N, j = pair
    assert theta(j, N) + theta(N - j, N) == 1
    assert Fraction(0) < theta(j, N) < 1


units = st.integers(2, 10).flatmap(lambda N: st.tuples(st.just(N), st.integers(1, N - 1))).filter(
    lambda p: gcd(p[0], p[1]) == 1)


@given(units)
def test_point_weight_inverts_the_type(pair):
    N, i = pair
    w = point_weight(i, N)
    assert 0 < w < 1
    assert (w * N * i) % N == 1
