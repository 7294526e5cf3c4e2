from collections import Counter
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from iterseq.digits import (
    DigitMultiset,
    Digits,
    compose,
    decompose,
    enumerate_multisets,
    min_value_of_multiset,
    multiset_count,
)
from iterseq.errors import ParseError, ValueTooLarge


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


@pytest.mark.parametrize(
    "n, base, pad, expected",
    [
        ("6174", 10, 4, (6, 1, 7, 4)),
        ("5", 2, 4, (0, 1, 0, 1)),
        ("0", 10, 3, (0, 0, 0)),
        (5, 2, None, (1, 0, 1)),
        ("0", 10, None, (0,)),
    ],
)
def test_decompose(n, base, pad, expected):
    d = decompose(n, base, pad)
    assert d.digits == expected
    assert d.length == len(expected)


@pytest.mark.parametrize(
    "digits, base, expected",
    [((0, 1, 0, 1), 2, 5), ((4, 3, 2, 1), 10, 4321), ((0, 0, 0), 10, 0)],
)
def test_compose(digits, base, expected):
    assert compose(Digits(base, digits)) == expected


def test_decompose_errors():
    with pytest.raises(ValueTooLarge):
        decompose("10000", 10, 4)
    with pytest.raises(ValueTooLarge):
        decompose(16, 2, 4)
    for bad in ("", "12a", "-3", " 1", "٣"):
        with pytest.raises(ParseError):
            decompose(bad)
    with pytest.raises(ParseError):
        decompose(-1)


def test_digits_invariants():
    with pytest.raises(ValueError):
        Digits(2, (0, 2))
    with pytest.raises(ValueError):
        Digits(10, ())


@given(st.integers(2, 36), st.integers(1, 12), st.data())
def test_round_trip(base, length, data):
    n = data.draw(st.integers(0, base**length - 1))
    d = decompose(n, base, length)
    assert d.length == length
    assert compose(d) == n


def test_decompose_accepts_huge_text():
    s = "9" * 400
    assert compose(decompose(s)) == int(s)


def test_enumerate_small_cases():
    assert len(list(enumerate_multisets(1))) == 9
    pairs = {tuple(sorted(p)) for p in product(range(1, 10), repeat=2)}
    got = [m.digits() for m in enumerate_multisets(2)]
    assert len(got) == len(pairs) == 45
    assert set(got) == pairs


def test_enumerate_count_law():
    for r in range(1, 11):
        got = list(enumerate_multisets(r))
        assert len(got) == pascal_row(r + 8)[r]
        assert len(set(got)) == len(got)
        assert all(m.size == r for m in got)
    assert pascal_row(15)[7] == 6435


def test_enumerate_order_is_deterministic_and_sorted():
    a = [m.digits() for m in enumerate_multisets(4)]
    b = [m.digits() for m in enumerate_multisets(4)]
    assert a == b
    assert a == sorted(a)
    assert a[0] == (1, 1, 1, 1) and a[-1] == (9, 9, 9, 9)


@pytest.mark.parametrize(
    "r_max, expected", [(7, 11439), (10, 92377), (1, 9)]
)
def test_multiset_count(r_max, expected):
    assert multiset_count(r_max) == expected
    assert multiset_count(r_max) == sum(pascal_row(r + 8)[r] for r in range(1, r_max + 1))


def test_multiset_merges_zero():
    m = DigitMultiset.of_number(1005)
    assert m.as_dict() == {1: 3, 5: 1}
    assert DigitMultiset.from_counts({0: 2, 1: 1}) == DigitMultiset.from_counts({1: 3})
    with pytest.raises(ValueError):
        DigitMultiset((0,) * 9)


@pytest.mark.parametrize(
    "counts, expected",
    [({1: 1, 2: 1, 3: 1}, 123), ({9: 2, 1: 1}, 199), ({4: 1, 5: 1, 1: 1}, 145),
     ({1: 3, 5: 1}, 1005), ({7: 2}, 77)],
)
def test_min_value_of_multiset(counts, expected):
    assert min_value_of_multiset(DigitMultiset.from_counts(counts)) == expected


def test_min_value_matches_brute_force():
    smallest = {}
    for n in range(1, 10**5):
        m = DigitMultiset.of_number(n)
        smallest.setdefault(m, n)
    seen = Counter()
    for r in range(1, 6):
        for m in enumerate_multisets(r):
            assert min_value_of_multiset(m) == smallest[m]
            seen[r] += 1
    assert sum(seen.values()) == len(smallest)
