"""Tools for the self-similar binary sequence grown from 101.

Stage 1 is 101; each later stage appends a copy of the previous one with
its first i symbols dropped. All stages are prefixes of one infinite
sequence, explored here through exact construction, logarithmic-step
random access at arbitrary-precision positions, factor analysis, run
records, border structure, and rigorous density enclosures.
"""

from .access import (bit_at, bit_at_with_steps, find_block_index,
                     parse_position, reduce_index, window)
from .blocks import (BlockMeta, block_length, block_meta, build_block,
                     prefix, prefix01, stream)
from .density import (ALPHA_REFERENCE_DECIMAL, CountTable, DensityInterval,
                      ErrorBounds, alpha_block_estimate, alpha_bounds,
                      beta_bounds, block_error_bounds, block_ones,
                      count_identity_check, error_profile, error_ratio_max,
                      ones_prefix_count)
from .errors import (BrikseqError, CapExceededError,
                     InsufficientPrecisionError, RepresentationLimitError)
from .factors import (FactorSet, complexity, enumerate_admissible, fibonacci,
                      first_occurrence, is_factor, missing_factors,
                      scan_factors)
from .runs import (RunRecord, check_tetration_bound, run_start,
                   scan_first_run, tetration, verify_run)
from .structure import (WitnessRecord, count_occurrences, ends_with_block,
                        good_chain, is_good, witness, witness_ratio)
from .words import Word

__version__ = "0.1.0"

__all__ = [
    "ALPHA_REFERENCE_DECIMAL", "BlockMeta", "BrikseqError", "CapExceededError",
    "CountTable", "DensityInterval", "ErrorBounds", "FactorSet",
    "InsufficientPrecisionError", "RepresentationLimitError", "RunRecord",
    "WitnessRecord", "Word", "alpha_block_estimate", "alpha_bounds",
    "beta_bounds", "bit_at", "bit_at_with_steps", "block_error_bounds",
    "block_length", "block_meta", "block_ones", "build_block",
    "check_tetration_bound", "complexity", "count_identity_check",
    "count_occurrences", "ends_with_block", "enumerate_admissible",
    "error_profile", "error_ratio_max", "fibonacci", "find_block_index",
    "first_occurrence", "good_chain", "is_factor", "is_good",
    "missing_factors", "ones_prefix_count", "parse_position", "prefix",
    "prefix01", "reduce_index", "run_start", "scan_factors",
    "scan_first_run", "stream", "tetration", "verify_run", "window",
    "witness", "witness_ratio",
]
