import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ropwords.predicates import (
    equal_height_split,
    has_d_pairing,
    is_rop,
    is_rop_lemma1,
    is_rop_pairing,
    is_rop_stepread,
    is_s_rap,
    is_s_rop,
    rop_verdicts,
)
from ropwords.words import parse_word, rotate

from conftest import brute_is_rop, brute_pairings, brute_split

words23 = st.lists(st.sampled_from([2, 3]), min_size=1, max_size=15).map(tuple)


@pytest.mark.parametrize(
    "w, s, expected", [("2233", 2, True), ("32322", 2, False), ("11133", 3, True)]
)
def test_equal_height_split(w, s, expected):
    assert equal_height_split(w, s) is expected


def test_equal_height_split_matches_factorization_oracle():
    for s in (2, 3, 4):
        for n in range(1, 11):
            for w in itertools.product((2, 3), repeat=n):
                assert equal_height_split(w, s) == brute_split(w, s), (w, s)
    for n in range(1, 8):
        for w in itertools.product((1, 2, 3), repeat=n):
            assert equal_height_split(w, 3) == brute_split(w, 3), w


def test_equal_height_split_errors():
    with pytest.raises(ValueError):
        equal_height_split("", 2)
    with pytest.raises(ValueError):
        equal_height_split("23", 1)


@pytest.mark.parametrize(
    "w, expected",
    [
        ("32322", True),
        ("2233", False),
        ("233233233", True),
        ("222", True),
        ("32222322222", True),
        ("2", True),
        ("3", False),
        ("", False),
        # odd height 27; frozen from the factorization oracle
        ("32232233223", False),
    ],
)
def test_is_rop(w, expected):
    assert is_rop(w) is expected


@pytest.mark.parametrize("k", range(6))
def test_family_3_2n_3_2n1_is_rop(k):
    w = parse_word("3" + "2" * k + "3" + "2" * (k + 1))
    assert is_rop(w)


def test_is_rop_rejects_foreign_letters():
    with pytest.raises(ValueError):
        is_rop("2231")


@pytest.mark.parametrize("w, expected", [("32322", True), ("2233", False), ("22233", False)])
def test_is_rop_lemma1(w, expected):
    assert is_rop_lemma1(w) is expected


@pytest.mark.parametrize("test", [is_rop_lemma1, is_rop_pairing, is_rop_stepread])
def test_characterizations_require_even_height(test):
    with pytest.raises(ValueError):
        test("2223")


def test_d_pairing_examples():
    p = has_d_pairing("2233233", 3)
    assert p is not None
    assert set(map(frozenset, p.pairs)) == {frozenset({2, 5}), frozenset({3, 6})}
    empty = has_d_pairing("22", 1)
    assert empty is not None and empty.pairs == ()
    assert has_d_pairing("2233", 2) is None


def test_d_pairing_range():
    with pytest.raises(ValueError):
        has_d_pairing("2233", 0)
    with pytest.raises(ValueError):
        has_d_pairing("2233", 4)


def test_d_pairing_matches_matching_oracle():
    for n in range(2, 11):
        for w in itertools.product((2, 3), repeat=n):
            threes = {i for i, a in enumerate(w) if a == 3}
            for d in range(1, n):
                got = has_d_pairing(w, d)
                options = brute_pairings(w, d)
                assert (got is not None) == bool(options), (w, d)
                if got is None:
                    continue
                assert got.positions() == threes
                assert len(got.positions()) == 2 * len(got.pairs)
                assert all((a + d) % n == b for a, b in got.pairs)
                assert frozenset(map(frozenset, got.pairs)) in options
                if 2 in w:
                    # forced when the word contains a 2 in every orbit it touches
                    orbit_has_two = all(
                        any(w[(r + k * d) % n] == 2 for k in range(n))
                        for r in range(n)
                    )
                    if orbit_has_two:
                        assert len(options) == 1


@pytest.mark.parametrize("w, expected", [("2233233", True), ("2233", False), ("22233", False)])
def test_is_rop_pairing(w, expected):
    assert is_rop_pairing(w) is expected


@pytest.mark.parametrize(
    "w, expected", [("2233233", True), ("23333", True), ("22233", False), ("2", True)]
)
def test_is_rop_stepread(w, expected):
    assert is_rop_stepread(w) is expected


def test_four_way_equivalence_up_to_12():
    # the full length-15 sweep lives in the acceptance suite
    for n in range(1, 13):
        for w in itertools.product((2, 3), repeat=n):
            if sum(w) % 2:
                continue
            verdicts = rop_verdicts(w)
            assert len(set(verdicts.values())) == 1, (w, verdicts)
            assert verdicts["def"] == brute_is_rop(w)


def test_even_length_words_are_never_rop():
    for n in range(2, 17, 2):
        assert not any(is_rop(w) for w in itertools.product((2, 3), repeat=n))


@given(words23, st.integers(0, 20))
def test_rotation_invariance(w, k):
    r = rotate(w, k)
    assert is_rop(r) == is_rop(w)
    for s in (3, 4):
        assert is_s_rop(r, s) == is_s_rop(w, s)


def test_rotation_invariance_exhaustive():
    for n in range(1, 13):
        for w in itertools.product((2, 3), repeat=n):
            r = rotate(w, 1)
            assert is_rop(r) == is_rop(w)
            assert is_s_rop(r, 3) == is_s_rop(w, 3)
    for n in range(1, 9):
        for w in itertools.product((1, 2, 3), repeat=n):
            assert is_s_rap(rotate(w, 1), 3) == is_s_rap(w, 3)


def test_s_rop_with_s_2_is_rop():
    for n in range(1, 16):
        for w in itertools.product((2, 3), repeat=n):
            assert is_s_rop(w, 2) == is_rop(w)


@pytest.mark.parametrize(
    "w, s, expected",
    [
        ("2223", 3, True),
        ("3333", 3, True),
        ("22323", 4, True),
        ("233233", 4, True),
        ("222333", 3, True),
        ("2223223", 4, True),
        ("2233", 3, False),  # height 10
    ],
)
def test_is_s_rop(w, s, expected):
    assert is_s_rop(w, s) is expected


def test_is_s_rop_letters():
    with pytest.raises(ValueError):
        is_s_rop("123", 3)


@pytest.mark.parametrize(
    "w, expected",
    [
        ("11133", False),
        ("11313", True),
        ("123", True),
        ("132", True),
        ("111", False),
        ("333", False),
        ("11322", True),
    ],
)
def test_is_s_rap(w, expected):
    assert is_s_rap(w, 3) is expected


def test_is_s_rap_alphabet():
    with pytest.raises(ValueError):
        is_s_rap("124", 3)
    assert is_s_rap("3", 3)  # a single letter cannot be cut into three non-empty factors


def test_is_s_rap_matches_factorization_oracle():
    for s in (2, 3, 4):
        for n in range(1, 7):
            for w in itertools.product(range(1, s + 1), repeat=n):
                expected = sum(w) % s == 0 and not brute_split(w, s)
                assert is_s_rap(w, s) == expected, (w, s)
