"""Fixed-length GF(2) words.

A :class:`Word` is an immutable bit vector backed by a Python int. Bit index 0
is the leftmost printed bit, which is stored as the most significant bit of
``value``; this keeps concatenation a shift-and-or and makes the textual form
(``"0110"``) a literal rendering of the integer in binary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

MAX_LEN = 4096


class LengthMismatchError(ValueError):
    """Binary operation on words of different lengths."""


class CapacityError(ValueError):
    """A word would exceed ``MAX_LEN`` bits."""


def _check_len(length: int) -> None:
    if length < 0:
        raise ValueError(f"negative word length {length}")
    if length > MAX_LEN:
        raise CapacityError(f"word length {length} exceeds cap of {MAX_LEN} bits")


@dataclass(frozen=True, slots=True)
class Word:
    value: int
    length: int

    def __post_init__(self) -> None:
        _check_len(self.length)
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, text: str) -> Word:
        text = text.strip()
        if text and set(text) - {"0", "1"}:
            raise ValueError(f"not a binary word: {text!r}")
        return cls(int(text, 2) if text else 0, len(text))

    @classmethod
    def from_bits(cls, bits) -> Word:
        bits = list(bits)
        value = 0
        for b in bits:
            value = (value << 1) | (int(b) & 1)
        return cls(value, len(bits))

    @classmethod
    def zeros(cls, length: int) -> Word:
        return cls(0, length)

    @classmethod
    def ones(cls, length: int) -> Word:
        _check_len(length)
        return cls((1 << length) - 1, length)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    def __getitem__(self, i: int) -> int:
        if not -self.length <= i < self.length:
            raise IndexError(i)
        i %= self.length
        return (self.value >> (self.length - 1 - i)) & 1

    def __iter__(self) -> Iterator[int]:
        for i in range(self.length):
            yield (self.value >> (self.length - 1 - i)) & 1

    def __xor__(self, other: Word) -> Word:
        return xor(self, other)

    def __add__(self, other: Word) -> Word:
        # '+' over GF(2) is xor; concatenation is spelled concat()
        return xor(self, other)

    @property
    def weight(self) -> int:
        return self.value.bit_count()

    def split(self, at: int) -> tuple[Word, Word]:
        """Left part of ``at`` bits and the remainder."""
        if not 0 <= at <= self.length:
            raise ValueError(f"split point {at} outside 0..{self.length}")
        rest = self.length - at
        return Word(self.value >> rest, at), Word(self.value & ((1 << rest) - 1), rest)


def xor(a: Word, b: Word) -> Word:
    if a.length != b.length:
        raise LengthMismatchError(f"xor of lengths {a.length} and {b.length}")
    return Word(a.value ^ b.value, a.length)


def weight(a: Word) -> int:
    return a.value.bit_count()


def distance(a: Word, b: Word) -> int:
    if a.length != b.length:
        raise LengthMismatchError(f"distance between lengths {a.length} and {b.length}")
    return (a.value ^ b.value).bit_count()


def concat(a: Word, b: Word) -> Word:
    length = a.length + b.length
    _check_len(length)
    return Word((a.value << b.length) | b.value, length)


def repeat(a: Word, r: int) -> Word:
    """``a`` concatenated with itself ``r`` times."""
    if r < 0:
        raise ValueError(f"negative repeat count {r}")
    length = r * a.length
    _check_len(length)
    if a.length == 0 or r == 0:
        return Word(0, length)
    # geometric series 1 + 2^L + 2^{2L} + ... places r copies side by side
    stride = (1 << length) - 1
    return Word(a.value * (stride // ((1 << a.length) - 1)), length)


def pad_zeros(a: Word, h: int) -> Word:
    if h < 0:
        raise ValueError(f"negative pad length {h}")
    _check_len(a.length + h)
    return Word(a.value << h, a.length + h)
