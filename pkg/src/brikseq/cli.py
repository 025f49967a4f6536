"""Command-line surface: generation, access, analysis, and verification.

Every subcommand is a thin front end over one library call, with
deterministic text or JSON output. Exit codes: 0 success, 1 check failure,
2 usage error, 3 resource or representation cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from . import access, blocks, density, factors, runs, structure, verify
from .errors import (CapExceededError, InsufficientPrecisionError,
                     RepresentationLimitError)
from .words import Word

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, Word):
        return value.to01()
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


@dataclass
class OutputRecord:
    """One command invocation's deterministic JSON payload."""

    command: str
    parameters: dict[str, Any]
    result: Any

    def to_json(self) -> str:
        return json.dumps(
            {"command": self.command,
             "parameters": _jsonable(self.parameters),
             "result": _jsonable(self.result)},
            indent=2, sort_keys=True)


def _emit(args: argparse.Namespace, record: OutputRecord,
          text_lines: list[str]) -> None:
    if getattr(args, "format", "text") == "json":
        print(record.to_json())
    else:
        for line in text_lines:
            print(line)


def _compact(value: int) -> str:
    """Small values in decimal, huge ones as 2^e+m expressions."""
    if value < 1 << 64:
        return str(value)
    exponent = value.bit_length() - 1
    rest = value - (1 << exponent)
    return f"2^{exponent}+{rest}" if rest else f"2^{exponent}"


def cmd_generate(args: argparse.Namespace) -> int:
    text = blocks.prefix01(args.length)
    if args.offset == "oeis":
        emitted = text[1:]
    else:
        emitted = text
    if args.format == "bfile":
        lines = [f"{i} {c}" for i, c in enumerate(emitted, 1)]
        body = "\n".join(lines) + ("\n" if lines else "")
    elif args.format == "json":
        record = OutputRecord("generate",
                              {"length": args.length, "offset": args.offset},
                              emitted)
        body = record.to_json() + "\n"
    else:
        body = emitted + "\n"
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(body)
    else:
        sys.stdout.write(body)
    return EXIT_OK


def cmd_bit(args: argparse.Namespace) -> int:
    position = access.parse_position(args.position)
    bit, steps = access.bit_at_with_steps(position)
    record = OutputRecord("bit", {"position": args.position},
                          {"bit": bit, "position": _compact(position),
                           "steps": steps})
    _emit(args, record, [f"{bit}", f"reduction steps: {steps}"])
    return EXIT_OK


def cmd_block(args: argparse.Namespace) -> int:
    word = blocks.build_block(args.index, args.cap_block)
    record = OutputRecord("block",
                          {"cap": args.cap_block, "index": args.index},
                          {"bits": word.to01(), "length": word.length})
    _emit(args, record, [word.to01()])
    return EXIT_OK


def cmd_runs(args: argparse.Namespace) -> int:
    rows = []
    for n in range(1, args.max_n + 1):
        start = runs.run_start(n).start
        scanned = runs.scan_first_run(n, args.scan_limit)
        row = {
            "n": n,
            "start": _compact(start),
            "verified": runs.verify_run(n),
            "scan": scanned if scanned is not None else "not-found",
            "scan_limit": args.scan_limit,
        }
        if n >= 2:
            row["tower_bound_ok"] = runs.check_tetration_bound(n)
            row["tower_bound_equality"] = (start == runs.tetration(n - 1) + 3)
        rows.append(row)
    lines = []
    for row in rows:
        parts = [f"n={row['n']}", f"start={row['start']}",
                 f"verified={row['verified']}", f"scan={row['scan']}"]
        if "tower_bound_ok" in row:
            mark = "=" if row["tower_bound_equality"] else ">"
            parts.append(f"tower_bound{mark}ok={row['tower_bound_ok']}")
        lines.append("  ".join(parts))
    record = OutputRecord("runs", {"max_n": args.max_n,
                                   "scan_limit": args.scan_limit}, rows)
    _emit(args, record, lines)
    return EXIT_OK


def cmd_factors(args: argparse.Namespace) -> int:
    n = args.length
    admissible = factors.enumerate_admissible(n)
    result: dict[str, Any] = {
        "length": n,
        "complexity": factors.complexity(n),
        "enumerated": len(admissible),
    }
    lines = [f"length {n}: {result['complexity']} distinct factors"]
    if n <= 6:
        listing = [w.to01() for w in admissible.sorted_members()]
        result["factors"] = listing
        lines.append("factors: " + " ".join(listing))
    if args.scan_limit:
        scanned = factors.scan_factors(args.scan_limit, n)
        missing = factors.missing_factors(args.scan_limit, n)
        result["scanned"] = len(scanned)
        result["scan_limit"] = args.scan_limit
        result["missing"] = [w.to01() for w in missing]
        lines.append(f"scan of prefix {args.scan_limit}: {len(scanned)} seen")
        if missing:
            lines.append("non-uniform recurrence witness: "
                         + " ".join(w.to01() for w in missing)
                         + f" not seen by position {args.scan_limit}")
    record = OutputRecord("factors", {"length": n,
                                      "scan_limit": args.scan_limit}, result)
    _emit(args, record, lines)
    return EXIT_OK


def cmd_good(args: argparse.Namespace) -> int:
    found = [i for i in range(1, args.max_index + 1)
             if structure.is_good(i, args.cap_window)]
    record = OutputRecord("good", {"max_index": args.max_index}, found)
    _emit(args, record,
          [f"good indices <= {args.max_index}: "
           + (" ".join(map(str, found)) if found else "none")])
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    rec = structure.witness(args.index, args.cap_block)
    result = {
        "n": rec.n,
        "head": rec.u.to01(),
        "tail_length": rec.v.length,
        "ratio": rec.ratio,
        "prefix_ok": rec.prefix_ok,
    }
    if rec.v.length <= 80:
        result["tail"] = rec.v.to01()
    lines = [f"head u = {rec.u.to01()}",
             f"tail v ({rec.v.length} bits)"
             + (f" = {rec.v.to01()}" if rec.v.length <= 80 else ""),
             f"ratio |u|/|v| = {rec.ratio}",
             f"u v v is a prefix: {rec.prefix_ok}"]
    record = OutputRecord("witness", {"index": args.index}, result)
    _emit(args, record, lines)
    return EXIT_OK


def cmd_chain(args: argparse.Namespace) -> int:
    values = structure.good_chain(args.count)
    shown = [_compact(v) for v in values]
    record = OutputRecord("chain", {"count": args.count}, shown)
    _emit(args, record, ["recurrence chain: " + " -> ".join(shown)])
    return EXIT_OK


def cmd_density(args: argparse.Namespace) -> int:
    payload = density.density_report(args.bits)
    enclosure = density.alpha_bounds(args.bits)
    pinned = payload["pinned_decimal"]
    lines = [
        "density of ones: " + (pinned + "…" if pinned
                               else "(no digits pinned)"),
        f"enclosure: [{payload['alpha_lower']}, {payload['alpha_upper']}]",
        f"width: 2^({1 - args.bits}) with {args.bits} sequence bits",
    ]
    if args.empirical:
        count = density.ones_prefix_count(args.empirical)
        ratio = Fraction(count, args.empirical)
        midpoint = (enclosure.lower + enclosure.upper) / 2
        payload["empirical"] = {
            "positions": args.empirical,
            "ones": count,
            "ratio": f"{float(ratio):.12g}",
            "offset_from_midpoint": f"{float(ratio - midpoint):.6g}",
        }
        lines.append(f"empirical a(N)/N at N={args.empirical}: "
                     f"{float(ratio):.12g} "
                     f"(offset {float(ratio - midpoint):+.3g})")
    if args.format == "json":
        print(json.dumps(_jsonable(payload), indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_suite(args.suite)
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        mark = "ok" if r.ok else "FAIL"
        print(f"[{mark:>4}] {r.name:<{width}}  {r.seconds:7.2f}s  {r.detail}")
        failed += not r.ok
    total = sum(r.seconds for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed "
          f"in {total:.2f}s ({args.suite} suite)")
    return EXIT_OK if failed == 0 else EXIT_CHECK_FAILED


def cmd_report(args: argparse.Namespace) -> int:
    from . import report

    manifest = report.build_report(args.out_dir, n_max=args.max_n,
                                   bits=args.bits, max_stage=args.max_stage,
                                   figures=not args.no_figures)
    print(f"report written to {args.out_dir}/")
    for name in manifest["files"]:
        print(f"  {name}")
    print(f"pinned density: {manifest['pinned_decimal']}…")
    print(f"drift ratio beyond N={manifest['tail_ratio_start']}: "
          f"{manifest['tail_ratio']} at N={manifest['tail_ratio_at']}")
    return EXIT_OK


def _int_at_least(minimum: int):
    def parse(text: str) -> int:
        value = int(text)
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}")
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brikseq",
        description="Generate and analyze the self-similar binary sequence "
                    "grown from 101 by appending its own tail.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("generate", help="emit a prefix of the sequence")
    p.add_argument("--length", type=_int_at_least(1), required=True)
    p.add_argument("--format", choices=["bits", "bfile", "json"],
                   default="bits")
    p.add_argument("--offset", choices=["full", "oeis"], default="full",
                   help="oeis drops the leading 1 to match the catalogued "
                        "entry")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("bit", help="random access at any position")
    p.add_argument("--position", required=True,
                   help="decimal or a sum like 2^2059+2061")
    add_format(p)
    p.set_defaults(handler=cmd_bit)

    p = sub.add_parser("block", help="materialize one construction stage")
    p.add_argument("--index", type=_int_at_least(1), required=True)
    p.add_argument("--cap-block", type=_int_at_least(1),
                   default=blocks.DEFAULT_BLOCK_CAP)
    add_format(p)
    p.set_defaults(handler=cmd_block)

    p = sub.add_parser("runs", help="first occurrences of runs of ones")
    p.add_argument("--max-n", type=_int_at_least(1), default=5)
    p.add_argument("--scan-limit", type=_int_at_least(1), default=10_000)
    add_format(p)
    p.set_defaults(handler=cmd_runs)

    p = sub.add_parser("factors", help="factor counts and scans")
    p.add_argument("--length", type=_int_at_least(1), required=True)
    p.add_argument("--scan-limit", type=_int_at_least(1),
                   help="also scan this much prefix and report gaps")
    add_format(p)
    p.set_defaults(handler=cmd_factors)

    p = sub.add_parser("good", help="indices whose stage has a border of "
                                    "its own length")
    p.add_argument("--max-index", type=_int_at_least(1), default=137)
    p.add_argument("--cap-window", type=_int_at_least(1),
                   default=access.DEFAULT_WINDOW_CAP)
    add_format(p)
    p.set_defaults(handler=cmd_good)

    p = sub.add_parser("witness", help="head/tail split with squared-tail "
                                       "prefix check")
    p.add_argument("--index", type=_int_at_least(1), required=True)
    p.add_argument("--cap-block", type=_int_at_least(2),
                   default=blocks.DEFAULT_BLOCK_CAP)
    add_format(p)
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("chain", help="the good-index recurrence chain")
    p.add_argument("--count", type=_int_at_least(0), default=4)
    add_format(p)
    p.set_defaults(handler=cmd_chain)

    p = sub.add_parser("density", help="rigorous ones-density enclosure")
    p.add_argument("--bits", type=_int_at_least(1),
                   default=density.DEFAULT_DENSITY_BITS)
    p.add_argument("--empirical", type=_int_at_least(1),
                   help="also report a(N)/N at this N")
    add_format(p)
    p.set_defaults(handler=cmd_density)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--suite", choices=["fast", "full"], default="fast")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("report", help="write CSV/JSON tables and figures")
    p.add_argument("--out-dir", default="reports")
    p.add_argument("--bits", type=_int_at_least(8),
                   default=density.DEFAULT_DENSITY_BITS)
    p.add_argument("--max-n", type=_int_at_least(100), default=1_000_000)
    p.add_argument("--max-stage", type=_int_at_least(1), default=25)
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(handler=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except access.PositionSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapExceededError, RepresentationLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InsufficientPrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
