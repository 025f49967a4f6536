"""Self-check suites wiring every module's invariants into one runner.

Two scales: "fast" finishes in seconds and stops at the first failure;
"full" runs the complete ranges and reports everything. Checks recompute
each claim through an independent route (direct scans against closed forms,
materialized words against reduction windows), so corrupting any one layer
surfaces as a cross-check failure rather than silent agreement.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import access, blocks, density, factors, runs, structure
from .errors import BrikseqError, RepresentationLimitError
from .words import Word


class CheckFailure(Exception):
    """A verification check did not hold."""


def _need(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailure(message)


@dataclass(frozen=True)
class Scale:
    """Sweep ranges for one suite."""

    length_max: int
    construction_max: int
    stream_bits: int
    selfsim_max: int
    oracle_max: int
    enum_max: int
    scan_subset_max: int
    divergence_scan: int
    good_cross_max: int
    witness_max: int
    blockones_max: int
    identity_max: int
    increment_max: int
    nesting_max: int
    ratio_sweep_max: int


FAST = Scale(
    length_max=2_000, construction_max=14, stream_bits=10_000,
    selfsim_max=16, oracle_max=20_000, enum_max=12, scan_subset_max=10,
    divergence_scan=1_000_000, good_cross_max=12, witness_max=12,
    blockones_max=16, identity_max=10, increment_max=10_000,
    nesting_max=64, ratio_sweep_max=100_000,
)

FULL = Scale(
    length_max=20_000, construction_max=29, stream_bits=100_000,
    selfsim_max=20, oracle_max=100_000, enum_max=20, scan_subset_max=10,
    divergence_scan=1_000_000, good_cross_max=25, witness_max=18,
    blockones_max=22, identity_max=15, increment_max=100_000,
    nesting_max=200, ratio_sweep_max=1_000_000,
)

RATIO_SWEEP_LIMIT = Fraction(1, 50)


def check_seed_shape(scale: Scale) -> str:
    first = blocks.build_block(1)
    _need(first.length == 3 == blocks.block_length(1), "seed is 3 bits")
    _need(first.to01().endswith("01"), "seed ends in 01")
    prev = blocks.block_length(1)
    for i in range(1, scale.length_max):
        cur = blocks.block_length(i + 1)
        _need(cur == 2 * prev - i, f"length recurrence breaks at {i + 1}")
        _need(cur == (1 << i) + i + 2, f"closed form breaks at {i + 1}")
        prev = cur
    return f"lengths consistent through index {scale.length_max}"


def check_construction(scale: Scale) -> str:
    cur = blocks.build_block(1)
    for i in range(1, scale.construction_max + 1):
        nxt = blocks.build_block(i + 1)
        _need(nxt == cur + cur.slice(i + 1, cur.length),
              f"self-extension fails at stage {i + 1}")
        _need(nxt.startswith(cur), f"stage {i} not a prefix of {i + 1}")
        _need(nxt.length == blocks.block_length(i + 1),
              f"stage {i + 1} length off")
        _need(nxt.to01().endswith("01"), f"stage {i + 1} does not end in 01")
        cur = nxt
    return f"stages rebuilt through {scale.construction_max + 1}"


def check_stream(scale: Scale) -> str:
    text = blocks.prefix01(scale.stream_bits)
    for pos, bit in enumerate(blocks.stream(scale.stream_bits), 1):
        _need(bit == (text[pos - 1] == "1"), f"stream diverges at {pos}")
    return f"stream matches prefix over {scale.stream_bits} bits"


def check_self_similarity(scale: Scale) -> str:
    buf = blocks.shared_buffer()
    for n in range(2, scale.selfsim_max + 1):
        ell = blocks.block_length(n)
        span = ell - n
        _need(buf.word(ell + 1, ell + span) == buf.word(n + 1, n + span),
              f"copied span differs at stage {n}")
    return f"prefix self-similarity holds for stages 2..{scale.selfsim_max}"


def check_reduction_oracle(scale: Scale) -> str:
    text = blocks.prefix01(scale.oracle_max)
    for position in range(1, scale.oracle_max + 1):
        bit, steps = access.bit_at_with_steps(position)
        _need(bit == (text[position - 1] == "1"),
              f"bit_at({position}) disagrees with the prefix")
        _need(steps <= position.bit_length() + 2,
              f"too many reduction steps at {position}")
        if position >= 4:
            smaller = access.reduce_index(position)
            _need(text[smaller - 1] == text[position - 1],
                  f"reduction changes the bit at {position}")
    return f"random access agrees with the prefix up to {scale.oracle_max}"


def check_big_positions(scale: Scale) -> str:
    rng = random.Random(20230811)
    for exponent in (20, 64, 150, 400, 1000, 2059):
        for _ in range(4):
            position = (1 << exponent) + rng.randrange(1 << (exponent // 2))
            n = access.find_block_index(position)
            _need(blocks.block_length(n) < position <= blocks.block_length(n + 1),
                  f"tier bracket wrong near 2^{exponent}")
            smaller = access.reduce_index(position)
            _need(n + 1 <= smaller <= blocks.block_length(n),
                  f"reduction lands outside its stage near 2^{exponent}")
            _need(smaller < position, "reduction fails to decrease")
            _, steps = access.bit_at_with_steps(position)
            _need(steps <= position.bit_length() + 2,
                  f"step bound violated near 2^{exponent}")
            win = access.window(position, 48)
            _need("00" not in win.to01(),
                  f"adjacent zeros in a window near 2^{exponent}")
            left, right = access.window(position, 20), access.window(position + 20, 28)
            _need(left + right == win, "window concatenation identity fails")
    return "reduction, step bounds, and windows behave at astronomical positions"


def check_runs(scale: Scale) -> str:
    for n in range(1, 5):
        scanned = runs.scan_first_run(n, 10_000)
        _need(scanned == runs.run_start(n).start,
              f"scan and recursion disagree for run length {n}")
    _need(runs.scan_first_run(5, 100_000) is None,
          "run of five ones appears impossibly early")
    starts = [runs.run_start(n).start for n in range(1, 6)]
    _need(all(a < b for a, b in zip(starts, starts[1:])),
          "run starts not strictly increasing")
    for n in range(1, 6):
        _need(runs.verify_run(n), f"run record fails on the sequence at n={n}")
    for n in range(2, 6):
        _need(runs.check_tetration_bound(n), f"tower bound fails at n={n}")
    _need(runs.run_start(2).start == runs.tetration(1) + 3,
          "n=2 tower bound should be an equality")
    for bad_call in (lambda: runs.run_start(6), lambda: runs.tetration(6)):
        try:
            bad_call()
        except RepresentationLimitError:
            pass
        else:
            raise CheckFailure("representation limit not enforced")
    return "run records verified through n=5, tower bounds through n=5"


def check_factor_counts(scale: Scale) -> str:
    fib_prev, fib_cur = 1, 2  # F_3, F_4
    for n in range(1, scale.enum_max + 1):
        enum = factors.enumerate_admissible(n)
        _need(len(enum) == factors.complexity(n) == fib_prev,
              f"factor count off at length {n}")
        ordered = enum.sorted_members()
        _need(all(a.to01() < b.to01() for a, b in zip(ordered, ordered[1:])),
              "enumeration not in lexicographic order")
        _need(all(factors.is_factor(w) for w in ordered),
              f"inadmissible word enumerated at length {n}")
        fib_prev, fib_cur = fib_cur, fib_prev + fib_cur
    for n in range(1, 5):
        _need(factors.scan_factors(6_000, n).members
              == factors.enumerate_admissible(n).members,
              f"scan at 6000 misses factors of length {n}")
    for n in range(1, scale.scan_subset_max + 1):
        scanned = factors.scan_factors(6_000, n)
        _need(scanned.members <= factors.enumerate_admissible(n).members,
              f"scan found an inadmissible factor of length {n}")
        _need(all(factors.is_factor(w) for w in scanned.members),
              "scanned member with adjacent zeros")
    _need(factors.complexity(20) > 4 * 20 ** 2,
          "length-20 complexity not clearly super-quadratic")
    scanned5 = factors.scan_factors(scale.divergence_scan, 5)
    _need(len(scanned5) == 12, "expected exactly 12 scanned factors at length 5")
    missing = factors.missing_factors(scale.divergence_scan, 5)
    _need(missing == [Word.from01("11111")],
          "the one late factor should be the run of five ones")
    return (f"complexity matches through length {scale.enum_max}; "
            f"length-5 scan shows the expected late run")


def check_structure(scale: Scale) -> str:
    chain = structure.good_chain(3)
    _need(chain == [1, 3, 8, 137], "good chain values changed")
    for q in chain:
        _need(structure.is_good(q), f"chain element {q} not good")
    for i in (2, 4, 5):
        _need(not structure.is_good(i), f"{i} wrongly reported good")
    for i in range(1, scale.good_cross_max + 1):
        stage = blocks.build_block(i)
        direct = stage.slice(1, i) == stage.slice(stage.length - i + 1,
                                                  stage.length)
        _need(structure.is_good(i) == direct,
              f"window route and direct border check disagree at {i}")
        if direct:
            _need(blocks.build_block(i + 1).endswith(stage),
                  f"good index {i} but stage {i + 1} lacks the suffix")
    _need(structure.ends_with_block(137, 8),
          "stage 137 should end with stage 8")
    _need(structure.ends_with_block(2, 1) and structure.ends_with_block(4, 3),
          "small suffix relations broken")
    prev_tail = 0
    for n in range(1, scale.witness_max + 1):
        rec = structure.witness(n)
        _need(rec.prefix_ok, f"squared-tail prefix fails at {n}")
        _need(rec.v.length == (1 << (n - 1)) + 1, f"tail length off at {n}")
        _need(rec.v.length > prev_tail, "tail lengths not increasing")
        _need(rec.ratio == structure.witness_ratio(n), "ratio mismatch")
        prev_tail = rec.v.length
    ratios = [structure.witness_ratio(n) for n in range(1, 31)]
    _need(max(ratios) == Fraction(2, 3) and ratios[1] == Fraction(2, 3),
          "head/tail ratio peak moved")
    _need(all(a > b for a, b in zip(ratios[1:], ratios[2:])),
          "head/tail ratios not decreasing past the peak")
    stage3 = blocks.build_block(3)
    seen = {stage3.slice(i, j).to01()
            for i in range(1, 9) for j in range(i, 9)}
    for text in seen:
        _need(structure.count_occurrences(Word.from01(text), 137) >= 2,
              f"factor {text} of stage 3 occurs once in the chain step")
    return "borders, chain, suffix relations, and witnesses all hold"


def check_density_counts(scale: Scale) -> str:
    for n in range(1, scale.blockones_max + 1):
        _need(density.block_ones(n)
              == density.ones_prefix_count(blocks.block_length(n)),
              f"ones recursion diverges from direct count at stage {n}")
    for n in range(2, scale.identity_max + 1):
        span = blocks.block_length(n) - n
        for t in range(span + 1):
            _need(density.count_identity_check(n, t),
                  f"count identity fails at n={n}, t={t}")
    text = blocks.prefix01(scale.increment_max)
    previous = 0
    table = density.CountTable(scale.increment_max)
    for position in range(1, scale.increment_max + 1):
        current = table.ones(position)
        _need(current - previous == access.bit_at(position),
              f"count increment is not the bit at {position}")
        if position % 7777 == 0:
            _need(current == text[:position].count("1"),
                  f"cumulative count off at {position}")
        previous = current
    return (f"recursion, identities (n<={scale.identity_max}), and "
            f"increments (N<={scale.increment_max}) agree")


def check_density_intervals(scale: Scale) -> str:
    previous = density.alpha_bounds(1)
    _need(previous.lower == 0 and previous.upper == 1,
          "1-bit enclosure should be the unit interval")
    for k in range(2, scale.nesting_max + 1):
        current = density.alpha_bounds(k)
        _need(previous.encloses(current), f"enclosures not nested at {k} bits")
        _need(current.width <= Fraction(1, 1 << (k - 1)),
              f"enclosure too wide at {k} bits")
        previous = current
    reference = density.alpha_bounds(64)
    _need(reference.width <= Fraction(1, 1 << 63), "64-bit enclosure too wide")
    _need(reference.pinned_decimal().startswith(density.ALPHA_REFERENCE_DECIMAL),
          "pinned digits disagree with the reference decimal")
    beta = density.beta_bounds(64)
    _need(reference.lower == 2 - 2 * beta.upper
          and reference.upper == 2 - 2 * beta.lower,
          "alpha and beta enclosures inconsistent")
    band = density.alpha_bounds(60)
    for n in range(15, 26):
        _need(density.alpha_block_estimate(n) in band,
              f"stage-{n} density estimate escapes the 60-bit enclosure")
    return f"enclosures nest through {scale.nesting_max} bits and pin digits"


def check_error_term(scale: Scale) -> str:
    for n in range(1, 21):
        bounds = density.block_error_bounds(n)
        _need(bounds.magnitude_bound <= 2 * n,
              f"stage-{n} drift exceeds the 2n envelope")
    ratio, at = density.error_ratio_max(scale.ratio_sweep_max,
                                        start=density.ERROR_RATIO_TAIL_START)
    _need(ratio < RATIO_SWEEP_LIMIT,
          f"relative drift {float(ratio):.4f} at {at} is not sublinear-small")
    head_ratio, head_at = density.error_ratio_max(scale.ratio_sweep_max)
    return (f"stage drift within 2n; tail ratio {float(ratio):.2e} at N={at} "
            f"(overall peak {float(head_ratio):.3f} at N={head_at})")


CHECKS: list[tuple[str, Callable[[Scale], str]]] = [
    ("seed-shape", check_seed_shape),
    ("construction", check_construction),
    ("stream-vs-prefix", check_stream),
    ("self-similarity", check_self_similarity),
    ("reduction-oracle", check_reduction_oracle),
    ("big-positions", check_big_positions),
    ("runs", check_runs),
    ("factor-counts", check_factor_counts),
    ("structure", check_structure),
    ("density-counts", check_density_counts),
    ("density-intervals", check_density_intervals),
    ("error-term", check_error_term),
]


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def run_suite(suite: str = "fast",
              stop_on_failure: bool | None = None) -> list[CheckResult]:
    """Run every check at the requested scale.

    The fast suite stops at the first failure; the full suite runs
    everything and reports all failures, unless ``stop_on_failure``
    overrides that.
    """
    if suite not in ("fast", "full"):
        raise ValueError(f"suite must be 'fast' or 'full', got {suite!r}")
    scale = FAST if suite == "fast" else FULL
    if stop_on_failure is None:
        stop_on_failure = suite == "fast"
    results = []
    for name, func in CHECKS:
        began = time.perf_counter()
        try:
            detail = func(scale)
            ok = True
        except (CheckFailure, BrikseqError, AssertionError, ValueError) as exc:
            detail = str(exc)
            ok = False
        results.append(CheckResult(name, ok, detail,
                                   time.perf_counter() - began))
        if not ok and stop_on_failure:
            break
    return results
