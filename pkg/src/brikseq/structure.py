"""Borders, the recurrence chain, and the stammering witness decomposition.

An index i is good when stage i has a border of length i (its first i and
last i symbols agree). Goodness propagates from i to ell_i, which yields the
chain 1, 3, 8, 137, 2^136 + 138, ... of good indices along which every
factor reoccurs. Separately, each stage n splits as a head of length n and
a tail v with stage n+1 = head + v + v; this squared-tail prefix shape is
the witness used to pin down the ones-density arithmetically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import access, blocks
from .errors import CapExceededError, RepresentationLimitError
from .words import Word

GOOD_INDEX_CAP = 10_000
GOOD_CHAIN_CAP = 4


def is_good(i: int, window_cap: int = access.DEFAULT_WINDOW_CAP) -> bool:
    """Whether stage i has a border of length i.

    The suffix is fetched through reduction-based windows, so indices whose
    stages could never be materialized (length 2^136 and far beyond) are
    still checkable.
    """
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    if i > GOOD_INDEX_CAP:
        raise CapExceededError("good-index probe", GOOD_INDEX_CAP, i)
    head = blocks.prefix(i)
    tail = access.window(blocks.block_length(i) - i + 1, i, window_cap)
    return head == tail


def good_chain(k: int) -> list[int]:
    """The chain q_0 = 1, q_{j+1} = ell_{q_j}, through q_k.

    Every element is a good index. q_4 = 2^136 + 138 is the last one whose
    value fits in memory; q_5 has more bits than atoms.
    """
    if k < 0:
        raise ValueError(f"chain length must be >= 0, got {k}")
    if k > GOOD_CHAIN_CAP:
        raise RepresentationLimitError(
            f"chain element {k} has on the order of 2^(2^136) bits; "
            f"materialization stops at k={GOOD_CHAIN_CAP}"
        )
    chain = [1]
    for _ in range(k):
        chain.append(blocks.block_length(chain[-1]))
    return chain


def ends_with_block(s: int, i: int,
                    window_cap: int = access.DEFAULT_WINDOW_CAP) -> bool:
    """Whether stage s ends with stage i, read through windows.

    Works for stages far beyond materialization (s = 137 compares 137 bits
    near position 2^136); only stage i itself is built.
    """
    if not 1 <= i < s:
        raise ValueError(f"need 1 <= i < s, got i={i}, s={s}")
    if s > GOOD_INDEX_CAP:
        raise CapExceededError("stage index", GOOD_INDEX_CAP, s)
    ell_i = blocks.block_length(i)
    if ell_i > window_cap:
        raise CapExceededError("window length", window_cap, ell_i)
    suffix = access.window(blocks.block_length(s) - ell_i + 1, ell_i,
                           window_cap)
    return suffix == blocks.build_block(i)


def count_occurrences(w: Word, prefix_length: int,
                      memory_cap: int = blocks.DEFAULT_MEMORY_CAP) -> int:
    """Occurrences (overlapping allowed) of ``w`` in the first
    ``prefix_length`` bits."""
    if w.length == 0:
        raise ValueError("empty word")
    if w.length > prefix_length:
        raise ValueError("word longer than the scanned prefix")
    text = blocks.prefix01(prefix_length, memory_cap)
    pattern = w.to01()
    count = 0
    at = text.find(pattern)
    while at >= 0:
        count += 1
        at = text.find(pattern, at + 1)
    return count


@dataclass(frozen=True)
class WitnessRecord:
    """The head/tail split of stage n with its squared-tail prefix check.

    ``u`` is the first n symbols, ``v`` the remaining 2^(n-1) + 1; stage
    n+1 must equal u + v + v for ``prefix_ok`` to hold. ``ratio`` is
    |u|/|v|, the quantity that must stay bounded as n grows.
    """

    n: int
    u: Word
    v: Word
    ratio: Fraction
    prefix_ok: bool


def witness_ratio(n: int) -> Fraction:
    """|u|/|v| for the stage-n split, n / (2^(n-1) + 1), without building
    anything."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return Fraction(n, (1 << (n - 1)) + 1)


def witness(n: int, cap: int = blocks.DEFAULT_BLOCK_CAP) -> WitnessRecord:
    """Materialize the stage-n split and verify its squared-tail prefix."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    if n > cap - 1:
        raise CapExceededError("witness index (needs stage n+1)", cap - 1, n)
    stage = blocks.build_block(n, cap)
    succ = blocks.build_block(n + 1, cap)
    u = stage.slice(1, n)
    v = stage.slice(n + 1, stage.length)
    return WitnessRecord(n, u, v, witness_ratio(n), u + v + v == succ)
