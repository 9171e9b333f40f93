import pytest
from hypothesis import given
from hypothesis import strategies as st

from crgenus2.admissible import (AdmissibleDatum, Sector, base_name, canonical_name, check_datum, enumerate_data,
                                 enumerate_sectors, involution, sector_record)
from crgenus2.reference import BASE_COUNT, FLAGGED_COUNTS, SECTOR_COUNTS


@pytest.mark.parametrize("n", [n for n in range(7) if n not in FLAGGED_COUNTS])
def test_sector_counts(n):
    assert len(enumerate_sectors(2, n)) == SECTOR_COUNTS[n]


def test_three_pointed_count_is_a_recount():
    # tau contributes 1, III contributes 6, the four three-branch-point N=5 data 3 each
    sectors = enumerate_sectors(2, 3)
    names = [base_name(s.datum) for s in sectors]
    assert names.count("τ") == 1
    assert names.count("III") == 6
    assert sum(1 for b in names if b.startswith("X.")) == 12
    assert len(sectors) == 19


def test_unpointed_bases():
    sectors = enumerate_sectors(2, 0)
    assert len(sectors) == BASE_COUNT
    assert all(s.datum.connected() for s in sectors)


@pytest.mark.parametrize("g,n", [(1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (2, 2), (2, 3), (2, 4)])
def test_enumerated_data_are_admissible(g, n):
    for d in enumerate_data(g, n):
        assert check_datum(d, g, n) == []
        assert d.dim >= 0


@pytest.mark.parametrize("g,n", [(1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6)])
def test_involution_is_a_bijection(g, n):
    sectors = enumerate_sectors(g, n)
    images = [involution(s) for s in sectors]
    assert sorted(images) == sorted(sectors)
    assert all(involution(t) == s for s, t in zip(sectors, images))


def test_check_datum_reports_violations():
    bad = AdmissibleDatum(N=4, g_quotient=0, d=(1, 2, 1), a=(0, 1, 0))
    assert "marked-type" in check_datum(bad, 2, 1)
    assert "riemann-hurwitz" in check_datum(AdmissibleDatum(N=2, g_quotient=0, d=(5,), a=(0,)), 2, 0)


def test_names():
    v = Sector(AdmissibleDatum(N=6, g_quotient=0, d=(2, 0, 0, 1, 0), a=(1, 0, 0, 0, 0)), (1,))
    assert canonical_name(v) == "V.1_1"
    tau = Sector(AdmissibleDatum(N=2, g_quotient=0, d=(6,), a=(2,)), (1, 1))
    assert canonical_name(tau) == "τ_{11}"
    ii = [s for s in enumerate_sectors(2, 0) if s.datum.g_quotient == 1]
    assert [s.name for s in ii] == ["II"]


def test_ordering_is_deterministic():
    a = [sector_record(s) for s in enumerate_sectors(2, 2)]
    b = [sector_record(s) for s in enumerate_sectors(2, 2)]
    assert a == b
    assert set(a[0]) == {"name", "gq", "N", "d", "a", "alpha", "dim"}


@given(st.integers(0, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 10 ** 6))))
def test_involution_reverses_branch_data(pick):
    n, k = pick
    sectors = enumerate_sectors(2, n)
    s = sectors[k % len(sectors)]
    t = involution(s)
    assert t.datum.d == tuple(reversed(s.datum.d))
    assert t.datum.a == tuple(reversed(s.datum.a))
    assert t.dim == s.dim
