"""First occurrences of runs of ones.

The run 1^n first starts at position r_n, with r_1 = 1, r_2 = 5, and
r_{n+1} = 2^(r_n - 2) + r_n. Growth is a tower of exponents: r_5 already
equals 2^2059 + 2061, and r_6 would need on the order of 2^2059 bits just
to write down, so exact records stop at n = 5.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import access, blocks
from .errors import RepresentationLimitError

MAX_EXACT_RUN = 5
MAX_TETRATION = 5


@dataclass(frozen=True)
class RunRecord:
    """Run length ``n`` and the exact start ``start`` of its first occurrence."""

    n: int
    start: int
    exact: bool = True


def _run_start_value(n: int) -> int:
    r = 1
    for k in range(2, n + 1):
        r = 5 if k == 2 else (1 << (r - 2)) + r
    return r


def run_start(n: int) -> RunRecord:
    """First-occurrence start of the run 1^n, exact up to n = 5."""
    if n < 1:
        raise ValueError(f"run length must be >= 1, got {n}")
    if n > MAX_EXACT_RUN:
        raise RepresentationLimitError(
            f"run start for n={n} needs at least 2^2059 bits to materialize; "
            f"exact records stop at n={MAX_EXACT_RUN}"
        )
    return RunRecord(n, _run_start_value(n))


def verify_run(n: int) -> bool:
    """Check the run record against the sequence itself.

    Confirms 1^n at the recorded start; for n >= 2 also confirms the
    flanking zeros that first-occurrence minimality forces (a one just
    before would shift the occurrence earlier, a one just after would put
    1^{n+1} before its own record).
    """
    start = run_start(n).start
    if n == 1:
        return access.bit_at(1) == 1 and access.bit_at(2) == 0
    ones = access.window(start, n)
    if ones.value != (1 << n) - 1:
        return False
    return access.bit_at(start - 1) == 0 and access.bit_at(start + n) == 0


def scan_first_run(n: int, cutoff: int,
                   memory_cap: int = blocks.DEFAULT_MEMORY_CAP) -> int | None:
    """Least start of 1^n within the first ``cutoff`` bits, or None.

    Independent of the closed-form records: it just scans the generated
    prefix.
    """
    if n < 1:
        raise ValueError(f"run length must be >= 1, got {n}")
    if cutoff < n:
        return None
    hit = blocks.prefix01(cutoff, memory_cap).find("1" * n)
    return hit + 1 if hit >= 0 else None


def tetration(height: int) -> int:
    """Iterated power 2^2^...^2 of the given height (height 0 gives 1)."""
    if height < 0:
        raise ValueError(f"tetration height must be >= 0, got {height}")
    if height > MAX_TETRATION:
        raise RepresentationLimitError(
            f"tetration of height {height} needs more than 2^65536 bits; "
            f"heights stop at {MAX_TETRATION}"
        )
    value = 1
    for _ in range(height):
        value = 1 << value
    return value


def check_tetration_bound(n: int) -> bool:
    """Whether r_n >= 2^^(n-1) + 3.

    Stated for n >= 3; n = 2 is accepted too and holds with equality,
    which callers may want to report separately.
    """
    if not 2 <= n <= MAX_EXACT_RUN:
        raise ValueError(f"bound check defined for 2 <= n <= {MAX_EXACT_RUN}")
    return run_start(n).start >= tetration(n - 1) + 3
