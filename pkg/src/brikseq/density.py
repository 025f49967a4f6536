"""Exact ones-counting and rigorous enclosures for the ones-density.

Let a(N) count the ones among the first N bits and s(n) = a(ell_n) count
them in stage n. The self-extension rule gives s(n) = 2 s(n-1) - a(n-1),
and the limiting density of ones comes out as alpha = 2 - 2 beta, where
beta is the real number whose binary expansion is the sequence itself.
Everything here is computed in exact rational arithmetic; floats appear
only when callers ask for display values. Truncating beta at k bits yields
an enclosure of width 2^-k, hence an alpha enclosure of width 2^(1-k):
digits are printed only once both endpoints agree on them.

The error term E(N) = a(N) - alpha * N measures how far a finite prefix
drifts from the limit; it is enclosed the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

from . import blocks
from .errors import CapExceededError, InsufficientPrecisionError

# First 14 decimal digits of the ones-density, the standard cross-check
# target for enclosure output.
ALPHA_REFERENCE_DECIMAL = "0.64505878493452"

DEFAULT_DENSITY_BITS = 64

# |E(N)|/N is naturally large at the first few positions (E(1) is about
# 0.355); sublinearity sweeps assert smallness from this position on.
ERROR_RATIO_TAIL_START = 100


def ones_prefix_count(length: int,
                      memory_cap: int = blocks.DEFAULT_MEMORY_CAP) -> int:
    """a(length): ones among the first ``length`` bits."""
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if length > memory_cap:
        raise CapExceededError("memory (bits)", memory_cap, length)
    return blocks.shared_buffer().ones(length)


def block_ones(n: int, cap: int = blocks.DEFAULT_BLOCK_CAP) -> int:
    """s(n): ones in stage n, by the recursion s(n) = 2 s(n-1) - a(n-1).

    Deliberately does not count bits of stage n itself; comparing against
    the direct count is the consistency check, not the definition.
    """
    if n < 1:
        raise ValueError(f"block index must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError("materialization (block index)", cap, n)
    s = 2
    if n == 1:
        return s
    text = blocks.prefix01(n - 1)
    a = 0
    for j in range(1, n):
        a += text[j - 1] == "1"
        s = 2 * s - a
    return s


class CountTable:
    """Cumulative ones-counts over a materialized prefix.

    ``ones(N)`` is O(1) after the single accumulation pass; ``block_ones``
    values are filled in from the recursion and checked lazily.
    """

    def __init__(self, limit: int,
                 memory_cap: int = blocks.DEFAULT_MEMORY_CAP) -> None:
        text = blocks.prefix01(limit, memory_cap)
        self.limit = limit
        self.counts = [0] + list(accumulate(c == "1" for c in text))
        self.block: dict[int, int] = {1: 2}

    def ones(self, length: int) -> int:
        return self.counts[length]

    def block_ones(self, n: int) -> int:
        for j in range(max(self.block) + 1, n + 1):
            self.block[j] = 2 * self.block[j - 1] - self.ones(j - 1)
        return self.block[n]


@dataclass(frozen=True)
class DensityInterval:
    """Exact rational enclosure [lower, upper] from a k-bit truncation."""

    lower: Fraction
    upper: Fraction
    bits: int

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def __contains__(self, value: object) -> bool:
        return self.lower <= value <= self.upper  # type: ignore[operator]

    def encloses(self, other: "DensityInterval") -> bool:
        return self.lower <= other.lower and other.upper <= self.upper

    def pinned_decimal(self, max_digits: int = 80) -> str:
        """Digits both endpoints agree on, e.g. "0.6450587849...".

        Returns "" when not even the integer part is pinned. Never emits a
        digit the enclosure does not force.
        """
        lo, up = self.lower, self.upper
        if lo < 0 or int(lo) != int(up):
            return ""
        out = [str(int(lo)), "."]
        lo -= int(lo)
        up -= int(up)
        for _ in range(max_digits):
            lo *= 10
            up *= 10
            d_lo, d_up = int(lo), int(up)
            if d_lo != d_up:
                break
            out.append(str(d_lo))
            lo -= d_lo
            up -= d_up
        return "".join(out) if len(out) > 2 else ""


def beta_bounds(bits: int,
                memory_cap: int = blocks.DEFAULT_MEMORY_CAP) -> DensityInterval:
    """Enclosure of beta, the binary real 0.b_1 b_2 b_3 ...

    The lower endpoint is the exact k-bit truncation; the tail adds less
    than 2^-k.
    """
    if bits < 1:
        raise ValueError(f"bits must be >= 1, got {bits}")
    scale = 1 << bits
    num = int(blocks.prefix01(bits, memory_cap), 2)
    lower = Fraction(num, scale)
    return DensityInterval(lower, lower + Fraction(1, scale), bits)


def alpha_bounds(bits: int,
                 memory_cap: int = blocks.DEFAULT_MEMORY_CAP) -> DensityInterval:
    """Enclosure of the ones-density alpha = 2 - 2 beta, width <= 2^(1-bits)."""
    b = beta_bounds(bits, memory_cap)
    return DensityInterval(2 - 2 * b.upper, 2 - 2 * b.lower, bits)


def alpha_block_estimate(n: int,
                         cap: int = blocks.DEFAULT_BLOCK_CAP) -> Fraction:
    """s(n) / ell_n, the stage-n density, converging to alpha."""
    return Fraction(block_ones(n, cap), blocks.block_length(n))


def count_identity_check(n: int, t: int,
                         cap: int = blocks.DEFAULT_BLOCK_CAP) -> bool:
    """Exact identity a(ell_n + t) = s(n) + a(n+t) - a(n) for 0 <= t <= ell_n - n.

    Pure integer arithmetic; nothing approximate cancels here.
    """
    if not 2 <= n <= cap - 1:
        raise ValueError(f"need 2 <= n <= {cap - 1}, got {n}")
    ell_n = blocks.block_length(n)
    if not 0 <= t <= ell_n - n:
        raise ValueError(f"offset t={t} outside 0..{ell_n - n}")
    lhs = ones_prefix_count(ell_n + t)
    rhs = block_ones(n, cap) + ones_prefix_count(n + t) - ones_prefix_count(n)
    return lhs == rhs


@dataclass(frozen=True)
class ErrorBounds:
    """Exact enclosure of E(N) = a(N) - alpha N at one position."""

    position: int
    ones: int
    lower: Fraction
    upper: Fraction

    @property
    def magnitude_bound(self) -> Fraction:
        """An exact upper bound for |E(N)|."""
        return max(self.upper, -self.lower)

    @property
    def ratio_bound(self) -> Fraction:
        """An exact upper bound for |E(N)| / N."""
        return self.magnitude_bound / self.position


def _require_precision(n_max: int, bits: int) -> None:
    # alpha enclosure width is 2^(1-bits); E enclosures inherit width * N.
    if Fraction(n_max, 1 << (bits - 1)) >= Fraction(1, 2):
        raise InsufficientPrecisionError(
            f"{bits}-bit enclosure is too wide for positions up to {n_max}; "
            f"need 2^(1-bits) * n_max < 1/2"
        )


def _sample_positions(n_max: int) -> list[int]:
    """Deterministic sweep samples: small positions, eight per decade, and
    every stage length in range."""
    samples = set(range(1, min(n_max, 10) + 1))
    value = 10
    while value <= n_max:
        for j in range(8):
            p = round(value * 10 ** (j / 8))
            if p <= n_max:
                samples.add(p)
        value *= 10
    i = 1
    while blocks.block_length(i) <= n_max:
        samples.add(blocks.block_length(i))
        i += 1
    samples.add(n_max)
    return sorted(samples)


def error_profile(n_max: int, bits: int = DEFAULT_DENSITY_BITS,
                  memory_cap: int = blocks.DEFAULT_MEMORY_CAP) -> list[ErrorBounds]:
    """Enclosures of E(N) at the deterministic sample positions up to
    ``n_max``."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    _require_precision(n_max, bits)
    enclosure = alpha_bounds(bits, memory_cap)
    buf = blocks.shared_buffer()
    buf.extend_to(n_max)
    rows = []
    for position in _sample_positions(n_max):
        a = buf.ones(position)
        rows.append(ErrorBounds(position, a,
                                a - enclosure.upper * position,
                                a - enclosure.lower * position))
    return rows


def block_error_bounds(n: int, bits: int = DEFAULT_DENSITY_BITS,
                       cap: int = blocks.DEFAULT_BLOCK_CAP) -> ErrorBounds:
    """Enclosure of E(ell_n) via the recursion value s(n)."""
    enclosure = alpha_bounds(bits)
    ell_n = blocks.block_length(n)
    s = block_ones(n, cap)
    return ErrorBounds(ell_n, s,
                       s - enclosure.upper * ell_n,
                       s - enclosure.lower * ell_n)


def error_ratio_max(n_max: int, bits: int = DEFAULT_DENSITY_BITS,
                    start: int = 1,
                    memory_cap: int = blocks.DEFAULT_MEMORY_CAP
                    ) -> tuple[Fraction, int]:
    """Exact maximum over N in [start, n_max] of the |E(N)|/N upper bound.

    Sweeps every position, but prunes whole chunks through monotonicity of
    a(N): a chunk whose coarse bound cannot beat the current best is
    skipped without per-position work. Returns (max ratio bound, argmax).
    """
    if not 1 <= start <= n_max:
        raise ValueError(f"need 1 <= start <= n_max, got {start}..{n_max}")
    _require_precision(n_max, bits)
    scale = 1 << bits
    beta_num = int(blocks.prefix01(bits, memory_cap), 2)
    a_lo_num = 2 * scale - 2 * beta_num - 2   # alpha lower * scale
    a_up_num = 2 * scale - 2 * beta_num       # alpha upper * scale
    text = blocks.prefix01(n_max, memory_cap)
    best_num, best_pos = -1, 1
    a_before = text[:start - 1].count("1")
    c0 = start
    while c0 <= n_max:
        c1 = min(c0 + max(512, c0 >> 8) - 1, n_max)
        a_after = a_before + text[c0 - 1:c1].count("1")
        coarse = max(a_after * scale - a_lo_num * c0,
                     a_up_num * c1 - a_before * scale)
        if coarse * best_pos > best_num * c0:
            a = a_before
            for offset, ch in enumerate(text[c0 - 1:c1]):
                position = c0 + offset
                a += ch == "1"
                num = max(a * scale - a_lo_num * position,
                          a_up_num * position - a * scale)
                if num * best_pos > best_num * position:
                    best_num, best_pos = num, position
        a_before = a_after
        c0 = c1 + 1
    return Fraction(best_num, scale * best_pos), best_pos


def density_report(bits: int = DEFAULT_DENSITY_BITS) -> dict:
    """JSON-ready density summary with exact endpoints as p/q strings."""
    enclosure = alpha_bounds(bits)
    return {
        "bits": bits,
        "alpha_lower": f"{enclosure.lower.numerator}/{enclosure.lower.denominator}",
        "alpha_upper": f"{enclosure.upper.numerator}/{enclosure.upper.denominator}",
        "pinned_decimal": enclosure.pinned_decimal(),
    }
