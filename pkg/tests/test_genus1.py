from fractions import Fraction

import pytest

from crgenus2.genus1 import (DATA_ENV, betti_by_point_count, c_label, fixed_blocks, genus1_betti, open_genus1_count,
                             swap_blocks)

EXPECTED_BETTI = {1: (1, 1), 2: (1, 2, 1), 3: (1, 5, 5, 1), 4: (1, 12, 23, 12, 1), 5: (1, 27, 102, 102, 27, 1)}


def test_shipped_table():
    for n, expected in EXPECTED_BETTI.items():
        assert genus1_betti(n) == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_table_matches_point_count_oracle(n):
    assert betti_by_point_count(n) == genus1_betti(n)


def test_open_one_pointed_count_is_q():
    for p in (5, 7, 11):
        assert open_genus1_count(1, p) == p


def test_missing_row_names_the_regeneration_script():
    with pytest.raises(KeyError, match="make_genus1_table"):
        genus1_betti(9)


def test_data_dir_override(tmp_path, monkeypatch):
    (tmp_path / "genus1_betti.json").write_text('{"betti": {"1": [1, 1]}}')
    monkeypatch.setenv(DATA_ENV, str(tmp_path))
    assert genus1_betti(1) == (1, 1)
    with pytest.raises(KeyError):
        genus1_betti(2)


def test_one_pointed_blocks():
    cs = sorted(b.c for b in fixed_blocks(1))
    assert [c_label(c) for c in cs] == ["e", "i", "e2", "-1", "e4", "-i", "e5"]


def test_swap_blocks_exist_only_with_extra_automorphisms():
    for k in (2, 3, 4):
        for b in swap_blocks(k):
            assert b.c in (Fraction(1, 4), Fraction(3, 4), Fraction(1, 6), Fraction(5, 6))
    assert swap_blocks(5) == ()
