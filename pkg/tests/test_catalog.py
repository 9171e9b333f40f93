from collections import Counter
from fractions import Fraction

import pytest

from crgenus2.catalog import (NODE_RULES, bielliptic_cohomology, case3, case4, enumerate_boundary, full_catalog,
                              rt_entries, smooth_entries)
from crgenus2.reference import (BIELLIPTIC_COMPACT_INVARIANTS, BIELLIPTIC_OPEN_INVARIANTS, CORRECTIONS,
                                STABLE_ORBIFOLD_POINCARE, STABLE_POINCARE, STABLE_SECTOR_COUNT, STABLE_TOTAL)
from crgenus2.series import orbifold_poincare


@pytest.mark.parametrize("n", range(7))
def test_open_corrections(n):
    assert sum(e.h for e in smooth_entries(n)) == CORRECTIONS[n]


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("rule", NODE_RULES)
def test_weights_count_the_codimension(n, rule):
    for e in full_catalog("stable", n, rule):
        assert e.codim == 3 + n - e.dim, e.name
        assert all(0 < w < 1 for w in e.weights)
        assert e.cohomology.is_nonnegative_integral()


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("rule", NODE_RULES)
def test_ages_are_closed_under_inversion(n, rule):
    entries = full_catalog("stable", n, rule)
    assert Counter((e.age, e.dim) for e in entries) == Counter((e.inverse_age, e.dim) for e in entries)


def _loops(rule):
    c3 = {e.name.split("|")[0][2:]: e.weights for e in case3(0, rule)}
    c4 = {e.name.split("|")[0][2:].replace("rho", ""): e.weights for e in case4(0, rule) if e.name.endswith("loop")}
    return c3, c4


_SHIFT = {"i": "-i", "-i": "i", "e2": "e5", "e4": "e"}


def test_hyperelliptic_symmetry_of_loop_sectors():
    # composing with the central involution shifts c by 1/2 and must not change the weights
    c3, c4 = _loops("product")
    for name, ws in c3.items():
        label = name[name.index("[") + 1:-1]
        assert c4[f"T2[{_SHIFT[label]}]"] == ws


def test_single_node_rule_breaks_the_symmetry():
    c3, c4 = _loops("single")
    assert any(c4[f"T2[{_SHIFT[n[n.index('[') + 1:-1]]}]"] != ws for n, ws in c3.items())


def test_unpointed_stable_counts():
    entries = full_catalog("stable", 0)
    assert len(entries) == STABLE_SECTOR_COUNT
    total = sum(e.h for e in entries) + STABLE_POINCARE.at_one()
    assert total == STABLE_TOTAL
    kinds = Counter(e.kind if e.kind != "boundary" else e.case for e in entries)
    assert sum(kinds.values()) == 63


def test_single_node_rule_reproduces_the_expected_polynomial():
    # diagnostic only: the default rule is the product rule
    assert orbifold_poincare("stable", 0, "single", STABLE_POINCARE) == STABLE_ORBIFOLD_POINCARE


def test_product_rule_polynomial_is_palindromic():
    p = orbifold_poincare("stable", 0, "product", STABLE_POINCARE)
    assert {3 - e: c for e, c in p.terms} == dict(p.terms)
    assert p.at_one() == STABLE_TOTAL


def test_bielliptic_sector_cohomology():
    assert tuple(int(bielliptic_cohomology(False).coeff(k)) for k in range(3)) == BIELLIPTIC_OPEN_INVARIANTS
    assert tuple(int(bielliptic_cohomology(True).coeff(k)) for k in range(3)) == BIELLIPTIC_COMPACT_INVARIANTS


def test_rational_tails_entries_carry_point_weights():
    for e in rt_entries(2, compact=True):
        assert e.age == sum(e.weights, Fraction(0))


def test_unknown_rule_and_space():
    with pytest.raises(ValueError):
        enumerate_boundary(0, "other")
    with pytest.raises(ValueError):
        full_catalog("other", 0)
