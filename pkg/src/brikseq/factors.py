"""Factor membership, enumeration, and complexity counting.

A binary word occurs in the sequence exactly when it has no two adjacent
zeros, so the number of distinct length-n factors is the Fibonacci number
F_{n+2}. Scanning a finite prefix gives the empirical counterpart; the gap
between the two at n = 5 (the run 11111 first occurs near 2^2059) is the
concrete witness that recurrence is not uniform.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import blocks
from .errors import CapExceededError
from .words import Word

ENUMERATION_CAP = 25


def is_factor(w: Word) -> bool:
    """Whether ``w`` occurs somewhere in the sequence: no 00 allowed."""
    if w.length == 0:
        raise ValueError("empty word has no factor status")
    # A 00 at positions p, p+1 is a 1 in ~value at adjacent bits.
    inverted = ~w.value & ((1 << w.length) - 1)
    return inverted & (inverted >> 1) == 0


def fibonacci(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def complexity(n: int) -> int:
    """Number of distinct length-n factors: F_{n+2}."""
    if n < 1:
        raise ValueError(f"factor length must be >= 1, got {n}")
    return fibonacci(n + 2)


@dataclass(frozen=True)
class FactorSet:
    """A set of equal-length factors plus where it came from."""

    length: int
    members: frozenset[Word]
    source: str                      # "characterization" or "scan"
    scan_length: int | None = None   # prefix length for scan sources

    def __post_init__(self) -> None:
        if any(w.length != self.length for w in self.members):
            raise ValueError("member length differs from stated length")

    def sorted_members(self) -> list[Word]:
        """Members in lexicographic order with 0 < 1."""
        return sorted(self.members, key=Word.to01)

    def __len__(self) -> int:
        return len(self.members)


def enumerate_admissible(n: int) -> FactorSet:
    """All length-n words with no adjacent zeros, i.e. every length-n factor."""
    if n < 1:
        raise ValueError(f"factor length must be >= 1, got {n}")
    if n > ENUMERATION_CAP:
        raise CapExceededError("enumeration length", ENUMERATION_CAP, n)
    # Suffix lists stay lexicographically sorted under prefixing, so the
    # final list comes out in lexicographic order for free.
    words = ["0", "1"]
    for _ in range(n - 1):
        words = ["0" + w for w in words if w[0] == "1"] + \
                ["1" + w for w in words]
    return FactorSet(n, frozenset(Word.from01(w) for w in words),
                     "characterization")


def scan_factors(prefix_length: int, n: int,
                 memory_cap: int = blocks.DEFAULT_MEMORY_CAP) -> FactorSet:
    """Distinct length-n windows actually present in the first
    ``prefix_length`` bits."""
    if not 1 <= n <= prefix_length:
        raise ValueError(f"need 1 <= n <= prefix length, got n={n}")
    if n > ENUMERATION_CAP:
        raise CapExceededError("scan window length", ENUMERATION_CAP, n)
    text = blocks.prefix01(prefix_length, memory_cap)
    seen = {text[i:i + n] for i in range(prefix_length - n + 1)}
    return FactorSet(n, frozenset(Word.from01(w) for w in seen),
                     "scan", prefix_length)


def missing_factors(prefix_length: int, n: int,
                    memory_cap: int = blocks.DEFAULT_MEMORY_CAP) -> list[Word]:
    """Admissible length-n words not yet seen by ``prefix_length``.

    A nonempty result is expected behavior, not an error: some factors
    (long runs of ones) first occur astronomically late.
    """
    present = scan_factors(prefix_length, n, memory_cap).members
    return [w for w in enumerate_admissible(n).sorted_members()
            if w not in present]


def first_occurrence(w: Word, cutoff: int,
                     memory_cap: int = blocks.DEFAULT_MEMORY_CAP) -> int | None:
    """Least start position of ``w`` in the first ``cutoff`` bits, or None.

    Words failing is_factor simply never show up, so they yield None at any
    cutoff.
    """
    if w.length == 0:
        raise ValueError("empty word")
    if cutoff < w.length:
        return None
    hit = blocks.prefix01(cutoff, memory_cap).find(w.to01())
    return hit + 1 if hit >= 0 else None
