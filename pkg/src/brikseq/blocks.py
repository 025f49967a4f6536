"""Block construction and streaming generation of the sequence.

The sequence is built from the seed word 101 by repeated self-extension:
stage i+1 appends a copy of stage i with its first i symbols dropped.
Every stage is a prefix of the next, so the stages converge to one infinite
binary sequence. Stage i has length 2^(i-1) + i + 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import CapExceededError
from .words import Word

# Seed stage of the recursion. Everything below derives from this constant,
# so tampering with it is observable through every cross-check.
BASE_BLOCK = "101"

DEFAULT_BLOCK_CAP = 30          # highest stage build_block materializes
DEFAULT_MEMORY_CAP = 2 ** 31    # most bits any materialized prefix may hold


def block_length(index: int) -> int:
    """Exact length of stage ``index``: 2^(index-1) + index + 1."""
    if index < 1:
        raise ValueError(f"block index must be >= 1, got {index}")
    return (1 << (index - 1)) + index + 1


@dataclass(frozen=True)
class BlockMeta:
    """A stage index paired with its exact length."""

    index: int
    length: int


def block_meta(index: int) -> BlockMeta:
    return BlockMeta(index, block_length(index))


class PrefixBuffer:
    """Growable bit-packed prefix of the sequence.

    Growth follows the self-extension rule: with the buffer holding at least
    stage i (length ell_i), positions ell_i + u copy from positions i + u.
    The buffer may stop between stage boundaries; ``block_index`` tracks the
    largest fully contained stage. Copying is chunked, so total work to reach
    length n is O(n) word operations.
    """

    def __init__(self, memory_cap: int = DEFAULT_MEMORY_CAP) -> None:
        seed = Word.from01(BASE_BLOCK)
        self.value = seed.value
        self.length = seed.length
        self.block_index = 1
        self.memory_cap = memory_cap

    def extend_to(self, target: int) -> None:
        """Grow the buffer until it holds at least ``target`` bits."""
        if target > self.memory_cap:
            raise CapExceededError("memory (bits)", self.memory_cap, target)
        while self.length < target:
            i = self.block_index
            ell_i = block_length(i)
            ell_next = 2 * ell_i - i
            copied = self.length - ell_i
            src_start = i + copied + 1
            src_stop = min(ell_i, src_start + (target - self.length) - 1)
            n = src_stop - src_start + 1
            chunk = (self.value >> (src_start - 1)) & ((1 << n) - 1)
            self.value |= chunk << self.length
            self.length += n
            if self.length == ell_next:
                self.block_index += 1

    def bit(self, position: int) -> int:
        if not 1 <= position <= self.length:
            raise IndexError(position)
        return (self.value >> (position - 1)) & 1

    def word(self, start: int, stop: int) -> Word:
        """Positions start..stop as a Word (grows the buffer if needed)."""
        self.extend_to(stop)
        n = stop - start + 1
        return Word((self.value >> (start - 1)) & ((1 << n) - 1), n)

    def bits01(self, length: int) -> str:
        """The first ``length`` positions as a 0/1 string."""
        self.extend_to(length)
        return format(self.value & ((1 << length) - 1), f"0{length}b")[::-1]

    def ones(self, length: int) -> int:
        self.extend_to(length)
        return (self.value & ((1 << length) - 1)).bit_count()


_shared = PrefixBuffer()


def shared_buffer() -> PrefixBuffer:
    return _shared


def reset_buffer() -> None:
    """Drop the cached prefix; next use regrows from BASE_BLOCK."""
    global _shared
    _shared = PrefixBuffer()


def build_block(index: int, cap: int = DEFAULT_BLOCK_CAP) -> Word:
    """Materialize stage ``index`` as a Word.

    Refuses indices past ``cap`` (stage 31 would already exceed a gigabit).
    """
    if index < 1:
        raise ValueError(f"block index must be >= 1, got {index}")
    if index > cap:
        raise CapExceededError("materialization (block index)", cap, index)
    return _shared.word(1, block_length(index))


def prefix(length: int, memory_cap: int = DEFAULT_MEMORY_CAP) -> Word:
    """The first ``length`` symbols of the sequence."""
    if length < 1:
        raise ValueError(f"prefix length must be >= 1, got {length}")
    if length > memory_cap:
        raise CapExceededError("memory (bits)", memory_cap, length)
    return _shared.word(1, length)


def prefix01(length: int, memory_cap: int = DEFAULT_MEMORY_CAP) -> str:
    """The first ``length`` symbols as a 0/1 string (scan-friendly form)."""
    if length < 1:
        raise ValueError(f"prefix length must be >= 1, got {length}")
    if length > memory_cap:
        raise CapExceededError("memory (bits)", memory_cap, length)
    return _shared.bits01(length)


def stream(limit: int | None = None,
           memory_cap: int = DEFAULT_MEMORY_CAP) -> Iterator[int]:
    """Yield the sequence bit by bit, starting at position 1.

    The cursor owns a private buffer that doubles as it runs dry, so the
    amortized cost per bit is constant. With ``limit`` unset it only stops
    once the buffer would outgrow ``memory_cap``.
    """
    buf = PrefixBuffer(memory_cap)
    positions = range(1, limit + 1) if limit is not None else itertools.count(1)
    chunk_start = 1
    chunk = ""
    for pos in positions:
        if pos - chunk_start >= len(chunk):
            grow_to = max(pos, min(2 * buf.length, memory_cap))
            buf.extend_to(grow_to)  # raises CapExceededError past the cap
            chunk_start = pos
            chunk = format(buf.value >> (pos - 1), f"0{buf.length - pos + 1}b")[::-1]
        yield 1 if chunk[pos - chunk_start] == "1" else 0
