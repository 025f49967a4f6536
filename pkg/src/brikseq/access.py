"""Random access to the sequence at arbitrary-precision positions.

The length-(ell_n + t) prefix equals stage n followed by a copy of its own
positions n+1 .. n+t, so any position past the seed maps to a strictly
smaller one carrying the same bit. Iterating that map reaches the seed in
at most bit_length(position) + 2 steps; no part of the sequence is ever
materialized. All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

import re

from .errors import CapExceededError
from .words import Word

DEFAULT_WINDOW_CAP = 2 ** 20

# Seed bits, the anchor of every reduction chain.
_BASE_BITS = (1, 0, 1)

# Cached stage lengths; _lengths[i] = 2^(i-1) + i + 1, slot 0 unused.
_lengths: list[int] = [0, 3]


def _ensure_lengths(index: int) -> None:
    while len(_lengths) <= index:
        i = len(_lengths)
        _lengths.append((1 << (i - 1)) + i + 1)


def find_block_index(position: int) -> int:
    """The unique n with ell_n < position <= ell_{n+1}.

    Positions 1..3 sit inside the seed and have no such tier. The answer is
    within two of bit_length(position), so only a constant number of cached
    lengths are compared.
    """
    if position <= 3:
        raise ValueError(f"position {position} is inside the seed block")
    k = position.bit_length()
    _ensure_lengths(k + 1)
    for n in (k, k - 1, k - 2):
        if n >= 1 and _lengths[n] < position:
            return n
    raise AssertionError(f"no tier found for {position}")  # unreachable


def reduce_index(position: int) -> int:
    """The smaller position holding the same bit.

    With n = find_block_index(position), the image is
    position - 2^(n-1) - 1, which lands in n+1 .. ell_n.
    """
    n = find_block_index(position)
    return position - (1 << (n - 1)) - 1


def bit_at(position: int) -> int:
    """The bit at ``position`` (1-based), in O(bit_length) exact steps."""
    bit, _ = bit_at_with_steps(position)
    return bit


def bit_at_with_steps(position: int) -> tuple[int, int]:
    """Like bit_at, but also reports how many reduction steps were taken."""
    if position < 1:
        raise ValueError(f"position must be >= 1, got {position}")
    steps = 0
    lengths = _lengths
    while position > 3:
        k = position.bit_length()
        if len(lengths) <= k:
            _ensure_lengths(k + 1)
        if lengths[k] < position:
            n = k
        elif lengths[k - 1] < position:
            n = k - 1
        else:
            n = k - 2
        position -= (1 << (n - 1)) + 1
        steps += 1
    return _BASE_BITS[position - 1], steps


def _bit_memo(position: int, memo: dict[int, int]) -> int:
    chain: list[int] = []
    bit = None
    while position > 3:
        bit = memo.get(position)
        if bit is not None:
            break
        chain.append(position)
        position = reduce_index(position)
    if bit is None:
        bit = _BASE_BITS[position - 1]
    for p in chain:
        memo[p] = bit
    return bit


def window(position: int, length: int,
           cap: int = DEFAULT_WINDOW_CAP) -> Word:
    """The ``length`` bits starting at ``position``, as a Word.

    Each bit is resolved by its own reduction chain; a per-call memo lets
    chains that merge share work. Suited to windows far beyond anything
    materializable (positions near 2^2059 cost about 2000 steps per bit).
    """
    if position < 1:
        raise ValueError(f"position must be >= 1, got {position}")
    if length < 1:
        raise ValueError(f"window length must be >= 1, got {length}")
    if length > cap:
        raise CapExceededError("window length", cap, length)
    memo: dict[int, int] = {}
    value = 0
    for j in range(length):
        value |= _bit_memo(position + j, memo) << j
    return Word(value, length)


_TERM = re.compile(r"2\^(\d+)|(\d+)")
_EXPR = re.compile(r"[+-]?\s*(2\^\d+|\d+)(\s*[+-]\s*(2\^\d+|\d+))*")


class PositionSyntaxError(ValueError):
    """A position expression did not parse."""


def parse_position(text: str) -> int:
    """Evaluate a position written as a signed sum of powers of two and
    integers, e.g. "13", "2^2059+2061", or "2^136 + 138"."""
    s = text.strip()
    if not s or not _EXPR.fullmatch(s):
        raise PositionSyntaxError(
            f"cannot parse position {text!r}; expected sums like 2^k+m"
        )
    total, sign = 0, 1
    pos = 0
    while pos < len(s):
        ch = s[pos]
        if ch in "+-":
            sign = -1 if ch == "-" else 1
            pos += 1
        elif ch.isspace():
            pos += 1
        else:
            m = _TERM.match(s, pos)
            if m is None:  # fullmatch above makes this unreachable
                raise PositionSyntaxError(f"bad term in {text!r}")
            total += sign * ((1 << int(m.group(1))) if m.group(1) is not None
                             else int(m.group(2)))
            sign = 1
            pos = m.end()
    if total < 1:
        raise PositionSyntaxError(f"position must be >= 1, got {total}")
    return total
