from fractions import Fraction

import pytest

from crgenus2.catalog import rt_entries
from crgenus2.reference import (P0_PRIME_AT_ZERO, P1_PRIME_AT_ZERO, PARTIAL_FORMS, RT_FORM, STABLE_CONSTANT,
                                STABLE_CONSTANT_TERMS, STABLE_FORM)
from crgenus2.series import (CASES, ClosedForm, closed_form_eval, compare_forms, compare_series, correction_series,
                             input_series, p0_series, partial_coefficient, rt_correction)


@pytest.mark.parametrize("n", range(7))
def test_rt_shortcut_matches_explicit_entries(n):
    explicit = sum(e.h for e in rt_entries(n))
    assert rt_correction(n).at_one() == explicit


@pytest.mark.parametrize("n", range(5))
def test_graded_rt_shortcut_matches_explicit_entries(n):
    explicit = sum((e.graded for e in rt_entries(n)), start=type(rt_correction(0, True))())
    assert rt_correction(n, graded=True) == explicit


def test_rt_identity_to_order_ten():
    expected = closed_form_eval(RT_FORM, input_series(10, with_p1=False))
    assert compare_series("rt", correction_series("rt", 10), expected).passed


def test_input_series_leading_terms():
    s = input_series(4)
    assert s["P0"][0].at_one() == 0 and s["P0"][1].at_one() == 1
    assert s["P0'"][0].at_one() == P0_PRIME_AT_ZERO
    assert s["P1'"][0].at_one() == P1_PRIME_AT_ZERO


def test_partial_forms_sum_to_stable_form():
    total = ClosedForm()
    for case in CASES:
        total = total + PARTIAL_FORMS[case]
    assert compare_forms("sum", total, STABLE_FORM).passed
    assert tuple(PARTIAL_FORMS[c].constant() for c in CASES) == STABLE_CONSTANT_TERMS
    assert sum(STABLE_CONSTANT_TERMS) == STABLE_CONSTANT


def test_partials_at_zero_points():
    # every partial agrees with its closed form at n = 0
    inputs = input_series(0)
    for case in CASES:
        assert partial_coefficient(case, 0).at_one() == closed_form_eval(PARTIAL_FORMS[case], inputs)[0].at_one()


def test_closed_form_needs_matching_orders():
    with pytest.raises(ValueError):
        closed_form_eval(RT_FORM, {"P0": p0_series(3), "P0'": p0_series(4)})
    with pytest.raises(KeyError):
        closed_form_eval(STABLE_FORM, input_series(2, with_p1=False))


def test_closed_form_printing():
    form = ClosedForm.p0_poly([2, 0, 3], "P0'")
    assert str(form) == "2*P0' + 3/2*P0^2*P0'"
    assert form.numerators(j=1) == [Fraction(2), Fraction(0), Fraction(3)]
