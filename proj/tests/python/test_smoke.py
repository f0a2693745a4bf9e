from fractions import Fraction

import pytest

import dyckolab

TABLE = [1, 1, 2, 3, 2, 4, 6, 6, 4, 8, 8, 8, 12, 9, 12, 13, 8, 14, 16, 14, 16]


def brute_dyck(w):
    depth = 0
    for c in w:
        depth += 1 if c == "0" else -1
        if depth < 0:
            return False
    return depth == 0


def test_words():
    assert dyckolab.is_dyck("0011")
    assert not dyckolab.is_dyck("0110")
    assert dyckolab.nesting("001011") == 2
    assert dyckolab.period("010") == 2
    assert dyckolab.exponent("01010") == "5/2"
    assert dyckolab.is_power_free("0110", "2", strict=True)
    assert not dyckolab.is_power_free("0110", "2")


def test_errors():
    with pytest.raises(ValueError):
        dyckolab.nesting("10")
    with pytest.raises(ValueError):
        dyckolab.is_dyck("012")


def test_census_matches_table():
    rows = dyckolab.census("tm", 20)
    assert [r["f"] for r in rows] == TABLE
    assert all(r["stable"] for r in rows)


def test_dyck_factors_against_brute_force():
    tm = dyckolab.sequence_prefix("tm", 2048)
    expected = {tm[i:i + n] for n in range(2, 17, 2) for i in range(len(tm) - n) if brute_dyck(tm[i:i + n])}
    assert set(dyckolab.dyck_factors("tm", 16)) == expected


def test_linrep():
    rep = dyckolab.linrep()
    assert rep["rank"] == 7
    assert [dyckolab.linrep_eval(n) for n in range(21)] == TABLE
    assert dyckolab.linrep_eval(13) == Fraction(9)
    assert dyckolab.minimize(rep)["rank"] == 7
    assert dyckolab.check_identity("a1")["holds"]


def test_enumerate_and_families():
    words = dyckolab.enumerate_power_free("2", 8, strict=True, dyck=True)
    assert "0101" in words and "001011" in words
    assert words == sorted(words)
    assert dyckolab.family("cubefree", 2)["nesting"] == 3
    assert "census-20" in dyckolab.verification_tasks()
    assert dyckolab.verify("census-20")["status"] == "pass"
