"""Report rendering: delimited tables plus figures on disk.

Writes the density enclosure, the stage-density convergence table, and the
error-term sweep as CSV/JSON, and renders matplotlib figures next to them.
All numeric table cells carry exact rationals alongside rounded display
values, so the delimited output stays authoritative.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction
from pathlib import Path

from . import blocks, density, structure

FIGURE_DPI = 150


def _fraction_cell(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def write_density_json(path: Path, bits: int) -> dict:
    payload = density.density_report(bits)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return payload


def write_error_profile_csv(path: Path, rows: list[density.ErrorBounds]) -> None:
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["position", "ones", "error_lower", "error_upper",
                         "error_lower_float", "error_upper_float",
                         "ratio_bound_float"])
        for row in rows:
            writer.writerow([
                row.position, row.ones,
                _fraction_cell(row.lower), _fraction_cell(row.upper),
                f"{float(row.lower):.9g}", f"{float(row.upper):.9g}",
                f"{float(row.ratio_bound):.9g}",
            ])


def write_block_density_csv(path: Path, max_stage: int) -> None:
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["stage", "length", "ones", "density",
                         "density_float", "head_tail_ratio"])
        for n in range(1, max_stage + 1):
            estimate = density.alpha_block_estimate(n)
            writer.writerow([
                n, blocks.block_length(n), density.block_ones(n),
                _fraction_cell(estimate), f"{float(estimate):.12g}",
                _fraction_cell(structure.witness_ratio(n)),
            ])


def render_figures(out_dir: Path, rows: list[density.ErrorBounds],
                   max_stage: int, bits: int) -> list[Path]:
    """Render the drift and convergence figures; returns the files written."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    written = []
    enclosure = density.alpha_bounds(bits)

    fig, ax = plt.subplots(figsize=(7, 4.5))
    positions = [row.position for row in rows]
    ratios = [float(row.ratio_bound) for row in rows]
    ax.plot(positions, ratios, marker=".", lw=1, color="tab:blue",
            label="enclosed |E(N)| / N upper bound")
    ax.axhline(0.02, color="tab:red", ls="--", lw=1, label="0.02 reference")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("prefix length N")
    ax.set_ylabel("relative drift bound")
    ax.set_title("Ones-count drift is sublinear")
    ax.legend(loc="upper right", fontsize=8)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    target = out_dir / "error_ratio.png"
    fig.savefig(target, dpi=FIGURE_DPI)
    plt.close(fig)
    written.append(target)

    fig, ax = plt.subplots(figsize=(7, 4.5))
    stages = list(range(1, max_stage + 1))
    estimates = [float(density.alpha_block_estimate(n)) for n in stages]
    ax.plot(stages, estimates, marker="o", ms=3, lw=1, color="tab:green",
            label="stage density s(n) / len(n)")
    ax.axhspan(float(enclosure.lower), float(enclosure.upper),
               color="tab:orange", alpha=0.6,
               label=f"{bits}-bit enclosure of the limit")
    ax.set_xlabel("stage n")
    ax.set_ylabel("density of ones")
    ax.set_title("Stage densities converge to the limit")
    ax.legend(loc="upper right", fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    target = out_dir / "density_convergence.png"
    fig.savefig(target, dpi=FIGURE_DPI)
    plt.close(fig)
    written.append(target)
    return written


def build_report(out_dir: str | Path, n_max: int = 1_000_000,
                 bits: int = density.DEFAULT_DENSITY_BITS,
                 max_stage: int = 25, figures: bool = True) -> dict:
    """Write the full report bundle; returns a manifest of outputs."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows = density.error_profile(n_max, bits)
    write_error_profile_csv(out / "error_profile.csv", rows)
    write_block_density_csv(out / "block_density.csv", max_stage)
    payload = write_density_json(out / "density.json", bits)
    peak, peak_at = density.error_ratio_max(n_max, bits)
    tail_start = min(density.ERROR_RATIO_TAIL_START, n_max)
    tail, tail_at = density.error_ratio_max(n_max, bits, start=tail_start)
    files = ["block_density.csv", "density.json", "error_profile.csv"]
    if figures:
        files += [p.name for p in render_figures(out, rows, max_stage, bits)]
    manifest = {
        "bits": bits,
        "files": sorted(files),
        "n_max": n_max,
        "peak_ratio": f"{float(peak):.6g}",
        "peak_ratio_at": peak_at,
        "pinned_decimal": payload["pinned_decimal"],
        "tail_ratio": f"{float(tail):.6g}",
        "tail_ratio_at": tail_at,
        "tail_ratio_start": tail_start,
    }
    (out / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return manifest
