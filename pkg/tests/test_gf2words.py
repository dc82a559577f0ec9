import pytest
from hypothesis import given, strategies as st

from oracles import sxor
from superimposed.gf2words import (
    MAX_LEN,
    CapacityError,
    LengthMismatchError,
    Word,
    concat,
    distance,
    pad_zeros,
    repeat,
    weight,
    xor,
)

W = Word.from_str


def bitstrings(min_size=0, max_size=64):
    return st.text(alphabet="01", min_size=min_size, max_size=max_size)


@pytest.mark.parametrize(
    "a, b, expected",
    [("011", "110", "101"), ("1111", "0000", "1111"), ("0001111", "0110110", "0111001")],
)
def test_xor(a, b, expected):
    assert str(xor(W(a), W(b))) == expected
    assert sxor(a, b) == expected


def test_xor_length_mismatch():
    with pytest.raises(LengthMismatchError):
        xor(W("01"), W("011"))
    with pytest.raises(LengthMismatchError):
        distance(W("01"), W("011"))


@pytest.mark.parametrize("a, w", [("000", 0), ("011", 2), ("10101010101010", 7)])
def test_weight(a, w):
    assert weight(W(a)) == w == W(a).weight


def test_distance_examples():
    assert distance(W("011"), W("101")) == 2
    assert distance(W("110011"), W("110011")) == 0
    assert distance(W("000000"), W("110011")) == 4


def test_concat_examples():
    assert str(concat(W("0"), W("11"))) == "011"
    assert concat(W("0110"), Word.zeros(0)) == W("0110")
    assert str(concat(W("11"), W("1100"))) == "111100"


def test_repeat_examples():
    assert str(repeat(W("1"), 4)) == "1111"
    assert str(repeat(W("011"), 1)) == "011"
    assert str(repeat(W("011"), 2)) == "011011"
    assert repeat(W("011"), 0) == Word.zeros(0)


def test_pad_zeros_examples():
    assert str(pad_zeros(W("1"), 1)) == "10"
    assert pad_zeros(W("101"), 0) == W("101")
    assert str(pad_zeros(W("011011"), 2)) == "01101100"


def test_capacity():
    big = Word.ones(MAX_LEN)
    with pytest.raises(CapacityError):
        concat(big, W("1"))
    with pytest.raises(CapacityError):
        repeat(W("10"), MAX_LEN // 2 + 1)
    with pytest.raises(CapacityError):
        pad_zeros(big, 1)
    assert repeat(W("10"), MAX_LEN // 2).weight == MAX_LEN // 2


def test_text_round_trip_and_indexing():
    w = W("0010110")
    assert str(w) == "0010110"
    assert list(w) == [0, 0, 1, 0, 1, 1, 0]
    assert w[2] == 1 and w[0] == 0 and w[-1] == 0
    assert Word.from_bits([1, 0, 1]) == W("101")
    with pytest.raises(ValueError):
        W("012")


def test_words_are_immutable():
    w = W("101")
    with pytest.raises(AttributeError):
        w.value = 0


@given(st.data())
def test_xor_properties(data):
    n = data.draw(st.integers(0, 80))
    a, b, c = (W(data.draw(bitstrings(n, n))) for _ in range(3))
    assert weight(xor(a, b)) == distance(a, b)
    assert xor(a, b) == xor(b, a)
    assert xor(xor(a, b), c) == xor(a, xor(b, c))
    assert xor(xor(a, b), b) == a
    assert weight(xor(a, a)) == 0
    assert str(xor(a, b)) == sxor(str(a), str(b))
    assert distance(a, c) <= distance(a, b) + distance(b, c)


@given(bitstrings(), bitstrings(), st.integers(0, 20), st.integers(0, 20))
def test_length_and_weight_bookkeeping(a, b, r, h):
    wa, wb = W(a), W(b)
    assert str(concat(wa, wb)) == a + b
    assert str(repeat(wa, r)) == a * r
    assert weight(repeat(wa, r)) == r * weight(wa)
    assert str(pad_zeros(wa, h)) == a + "0" * h
    assert len(concat(wa, wb)) == len(a) + len(b)
