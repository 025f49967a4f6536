"""Finite binary words, 1-indexed and bit-packed.

A word stores its symbols in a single integer, least significant bit first:
position p (1-based) lives at bit p-1 of ``value``. This keeps slicing,
concatenation, and ones-counting at native big-integer speed regardless of
length.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class Word:
    """An immutable binary word of explicit length.

    ``value`` holds the symbols packed LSB-first; ``length`` is the number
    of symbols (leading zeros are significant, so the pair is needed).
    """

    value: int = 0
    length: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"negative length {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise ValueError("value has bits beyond the stated length")

    @classmethod
    def from01(cls, text: str) -> "Word":
        """Parse a string of 0/1 characters, position 1 leftmost."""
        if text and set(text) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        return cls(int(text[::-1], 2) if text else 0, len(text))

    def to01(self) -> str:
        """Render as a 0/1 string, position 1 leftmost."""
        if self.length == 0:
            return ""
        return format(self.value, f"0{self.length}b")[::-1]

    def __str__(self) -> str:
        return self.to01()

    def __repr__(self) -> str:
        shown = self.to01() if self.length <= 64 else self.to01()[:61] + "..."
        return f"Word({shown!r}, length={self.length})"

    def __len__(self) -> int:
        return self.length

    def __iter__(self) -> Iterator[int]:
        v = self.value
        for _ in range(self.length):
            yield v & 1
            v >>= 1

    def bit(self, position: int) -> int:
        """Symbol at 1-based ``position``."""
        if not 1 <= position <= self.length:
            raise IndexError(f"position {position} out of 1..{self.length}")
        return (self.value >> (position - 1)) & 1

    def slice(self, start: int, stop: int) -> "Word":
        """Sub-word covering positions ``start..stop`` inclusive.

        Defined for 1 <= start <= stop+1 and stop <= length; the case
        start == stop+1 yields the empty word.
        """
        if not (1 <= start <= stop + 1 and stop <= self.length):
            raise IndexError(
                f"slice {start}..{stop} invalid for length {self.length}"
            )
        n = stop - start + 1
        return Word((self.value >> (start - 1)) & ((1 << n) - 1), n)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.value | (other.value << self.length),
                    self.length + other.length)

    def startswith(self, other: "Word") -> bool:
        if other.length > self.length:
            return False
        return self.value & ((1 << other.length) - 1) == other.value

    def endswith(self, other: "Word") -> bool:
        if other.length > self.length:
            return False
        return self.value >> (self.length - other.length) == other.value

    def ones(self, upto: int | None = None) -> int:
        """Number of 1 symbols in the whole word, or in positions 1..upto."""
        if upto is None or upto >= self.length:
            return self.value.bit_count()
        if upto < 0:
            raise ValueError(f"negative count bound {upto}")
        return (self.value & ((1 << upto) - 1)).bit_count()
