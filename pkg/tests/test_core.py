import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hfbound.core import (
    Alphabet,
    HfWord,
    characteristic_sequence,
    count_hf,
    enumerate_hf,
    format_word,
    hamming_distance,
    is_hf,
    iter_hf_tuples,
    parse_word,
    validate_hf,
)
from hfbound.errors import BadEll, EmptyWord, LengthMismatch, OutOfRange, RepeatAt


def brute_hf(q, n):
    return [t for t in itertools.product(range(q), repeat=n) if all(a != b for a, b in zip(t, t[1:]))]


def test_validate_accepts_ternary_codeword():
    w = validate_hf((0, 1, 0, 2), 3)
    assert isinstance(w, HfWord) and w.n == 4 and w.q == 3


def test_validate_reports_repeat_position():
    with pytest.raises(RepeatAt) as exc:
        validate_hf((0, 0), 4)
    assert exc.value.index == 0


def test_single_symbol_is_hf():
    assert validate_hf((0,), 2).n == 1


def test_validate_errors():
    with pytest.raises(EmptyWord):
        validate_hf((), 3)
    with pytest.raises(OutOfRange):
        validate_hf((0, 3), 3)
    with pytest.raises(RepeatAt):
        validate_hf((1, 2, 2, 0), 3)


@pytest.mark.parametrize("q,n,expected", [(4, 2, 12), (4, 8, 8748), (5, 1, 5), (4, 4, 108)])
def test_count(q, n, expected):
    assert count_hf(q, n) == expected


@pytest.mark.parametrize("q", range(2, 7))
@pytest.mark.parametrize("n", range(1, 10))
def test_enumeration_length(q, n):
    got = list(iter_hf_tuples(q, n))
    assert len(got) == q * (q - 1) ** (n - 1)
    if q ** n <= 200_000:
        assert got == brute_hf(q, n)
    else:
        assert got == sorted(set(got)) and all(is_hf(t) for t in got)


def test_enumeration_examples():
    words = list(enumerate_hf(3, 2))
    assert len(words) == 6 and words[0].symbols == (0, 1)
    assert [w.symbols for w in enumerate_hf(2, 5)] == [(0, 1, 0, 1, 0), (1, 0, 1, 0, 1)]
    assert all(is_hf(w.symbols) for w in enumerate_hf(4, 5))
    assert list(enumerate_hf(4, 4)) == list(enumerate_hf(4, 4))


def test_hamming_examples():
    assert hamming_distance((0, 1, 2), (0, 1, 0)) == 1
    assert hamming_distance((0, 1, 0, 1, 0), (1, 0, 1, 0, 1)) == 5
    with pytest.raises(LengthMismatch):
        hamming_distance((0, 1), (0, 1, 0))


hf_words = st.integers(2, 6).flatmap(
    lambda q: st.integers(1, 8).flatmap(
        lambda n: st.tuples(*[st.lists(st.integers(0, q - 1), min_size=n, max_size=n).filter(is_hf)] * 3)
    )
)


@settings(max_examples=200, deadline=None)
@given(hf_words)
def test_metric_axioms(triple):
    a, b, c = triple
    assert hamming_distance(a, a) == 0
    assert hamming_distance(a, b) == hamming_distance(b, a)
    assert hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c)


def test_characteristic_sequences():
    a = (0, 1, 0, 2, 1, 2, 3)  # 1213234 relabeled from 1..4
    assert str(characteristic_sequence(a, 2)) == "0100100"
    assert str(characteristic_sequence(a, 3)) == "0010000"
    assert characteristic_sequence(a, 2).one_based(2) == 1


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=3, max_size=12).filter(is_hf), st.data())
def test_characteristic_support(a, data):
    n = len(a)
    ell = data.draw(st.integers(2, n - 1))
    seq = characteristic_sequence(a, ell)
    assert seq.one_based(1) == 0
    assert all(seq.one_based(i) == 0 for i in range(n - ell + 2, n + 1))
    if ell == n - 1:
        assert sum(seq.bits) <= 1 and all(seq.one_based(i) == 0 for i in range(3, n + 1))


def test_characteristic_bad_ell():
    with pytest.raises(BadEll):
        characteristic_sequence((0, 1, 0), 3)


def test_word_text_format():
    assert format_word((0, 1, 0, 2, 1, 2, 3)) == "0102123"
    assert format_word((0, 1, 2, 3), 4, dna=True) == "ACGT"
    assert format_word((10, 2), 12) == "10,2"
    assert parse_word("ACGT", 4).symbols == (0, 1, 2, 3)
    assert parse_word("10,2", 12).symbols == (10, 2)
    assert parse_word("0102", 3) == HfWord((0, 1, 0, 2), Alphabet(3))
