from math import comb

import pytest

from dyckcat.oracle import OracleCapError, WordSet, brute_enumerate, catalan, compare


def test_catalan_small_values():
    assert catalan(0) == 1
    assert catalan(5) == 42
    assert catalan(14) == 2674440


@pytest.mark.parametrize("n", range(0, 30))
def test_catalan_matches_binomial_formula(n):
    # independent closed form
    assert catalan(n) == comb(2 * n, n) // (n + 1)


def test_brute_enumerate_n0_and_n3():
    assert brute_enumerate(0).words == ("",)
    assert brute_enumerate(3).words == ("101010", "101100", "110010", "110100", "111000")


@pytest.mark.parametrize("n", range(0, 13))
def test_brute_enumerate_size_is_catalan(n, oracle_sets):
    assert len(oracle_sets[n]) == catalan(n)


@pytest.mark.parametrize("n", range(1, 10))
def test_brute_enumerate_words_are_valid_distinct_sorted(n, oracle_sets):
    words = oracle_sets[n].words
    assert all(a < b for a, b in zip(words, words[1:]))
    for w in words:
        h = 0
        for c in w:
            h += 1 if c == "1" else -1
            assert h >= 0
        assert h == 0 and len(w) == 2 * n


def test_brute_enumerate_rejects_above_cap():
    with pytest.raises(OracleCapError):
        brute_enumerate(17)
    with pytest.raises(OracleCapError):
        brute_enumerate(5, cap=4)


def test_compare_reports_duplicates_and_missing():
    diff = compare(brute_enumerate(2), ["1100", "1100"])
    assert diff.duplicates == ["1100"]
    assert diff.missing == ["1010"]
    assert diff.unexpected == []
    assert not diff.empty


def test_compare_flags_foreign_words():
    diff = compare(brute_enumerate(1), ["10", "0110"])
    assert diff.unexpected == ["0110"]


def test_compare_empty_on_match():
    assert compare(brute_enumerate(1), ["10"]).empty
    assert compare(brute_enumerate(3), reversed(brute_enumerate(3).words)).empty


def test_wordset_membership_and_dump():
    ws = brute_enumerate(2)
    assert "1010" in ws and "1001" not in ws
    assert ws.dump() == "1010\n1100\n"
    assert isinstance(ws, WordSet) and len(ws) == 2
