"""Abelian runs: maximal anagram-periodic regions of a word.

A word has an abelian run for a period vector wherever one or more full
blocks with exactly that Parikh vector sit between a head and a tail
strictly contained in it and the whole stretch cannot grow by a single
position.  The package provides a streaming detector for one fixed
period, an offline detector for every block length at once, and slow
reference implementations the fast ones are tested against.
"""

from .gen import generate_word
from .offline import (
    OfflineRun,
    SquareCenterTable,
    WorkCounter,
    build_square_table,
    extend_head_tail,
    maximal_repetitions,
    offline_all_runs,
)
from .online import (
    OnlineRunScanner,
    RunOccurrence,
    abelian_runs,
    find_first_window,
    find_head,
    get_run,
    get_tail,
    state_footprint_bytes,
)
from .oracle import (
    OracleRunSet,
    canonical_tuple,
    interval_has_period,
    occurrence_intervals,
    occurrence_valid,
    oracle_all_repetitions,
    oracle_runs,
)
from .parikh import (
    Alphabet,
    ParikhVector,
    SuffixInclusionTracker,
    WindowComparator,
    Word,
    contains_strict,
    intern_word,
    parikh_of,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "OfflineRun",
    "OnlineRunScanner",
    "OracleRunSet",
    "ParikhVector",
    "RunOccurrence",
    "SquareCenterTable",
    "SuffixInclusionTracker",
    "WindowComparator",
    "Word",
    "WorkCounter",
    "abelian_runs",
    "build_square_table",
    "canonical_tuple",
    "contains_strict",
    "extend_head_tail",
    "find_first_window",
    "find_head",
    "generate_word",
    "get_run",
    "get_tail",
    "intern_word",
    "interval_has_period",
    "maximal_repetitions",
    "occurrence_intervals",
    "occurrence_valid",
    "offline_all_runs",
    "oracle_all_repetitions",
    "oracle_runs",
    "parikh_of",
    "state_footprint_bytes",
]
