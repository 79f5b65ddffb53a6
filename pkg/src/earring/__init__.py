"""Free-group words, inverse-limit projections and the oscillation number
for the fundamental group of the Hawaiian earring."""

from .oscillation import (
    MonotonicityError,
    ReductionTrace,
    min_oscillation_in_class,
    oscillation_number,
    verify_reduction_monotone,
)
from .projections import (
    CoherentSequence,
    DistanceValue,
    LimitReport,
    check_coherence,
    collapse_above,
    distance,
    erase_above,
    erase_top,
    phi_truncated,
    sequence_limit_report,
    trivial,
)
from .table import CounterexampleRow, run_table
from .text import ParseError, format_word, parse_word
from .verify import VerifyReport, run_verify
from .word_core import (
    EMPTY,
    Letter,
    ReducedWord,
    Word,
    build_counterexample_word,
    equal_in_group,
    inflate,
    invert,
    multiply,
    reduce,
)

__version__ = "0.1.0"
