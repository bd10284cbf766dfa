"""Single-pass detection of the abelian runs of one fixed Parikh vector.

An occurrence (b, h, t, e) factors w[b..e] into a head of length h, one
or more full blocks whose Parikh vector equals the target, and a tail of
length t, where head and tail are strictly contained in the target.  An
abelian run is an occurrence that cannot be stretched by one position on
either side and whose block part spans at least two full blocks.

The scanner consumes one symbol at a time and reports each run while
processing the position just past its end, keeping memory that depends
only on sigma and the target norm p.  Candidate starts live in a
circular table with one slot per block alignment:

* slot t0 is the alignment whose next full block would complete at the
  position currently being processed;
* walking the table from t0 in increasing slot order visits the live
  substrings in decreasing tail-length order.

While the trailing window keeps matching the target, a new alignment is
seeded with the leftmost start whose head is still contained in the
target.  When the window stops matching, alignments whose grown tail
would no longer be contained are retired in walk order; the walk stops
at the first extendable alignment because every later one has a shorter
tail and extends as well.  Among the candidates retired together, the
smallest start wins, with the later (shorter tail) factorization taking
precedence on ties.  The winner is emitted only if no surviving
alignment starts at or before it and its block part covers at least 2p
positions.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .parikh import ParikhVector, SuffixInclusionTracker, WindowComparator

__all__ = [
    "OnlineRunScanner",
    "RunOccurrence",
    "abelian_runs",
    "find_first_window",
    "find_head",
    "get_run",
    "get_tail",
    "state_footprint_bytes",
]


@dataclass(frozen=True)
class RunOccurrence:
    """One occurrence: start b, head length h, tail length t, end e (inclusive)."""

    b: int
    h: int
    t: int
    e: int

    @property
    def body_length(self) -> int:
        """Length of the full-block part, always a positive multiple of p."""
        return self.e - self.b - self.h - self.t + 1

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.b, self.h, self.t, self.e)


def get_tail(tail: int, t0: int, p: int) -> int:
    """Ring distance from slot tail up to slot t0: (t0 - tail + p) mod p.

    For a slot other than t0 this is one more than the tail length of the
    substring stored there (its tail would reach this length if it
    extended through the position being processed).
    """
    return (t0 - tail + p) % p


def get_run(slots: list, tail: int, t0: int, e: int, p: int) -> RunOccurrence:
    """Build the occurrence tuple for the candidate stored in slots[tail].

    e is the last position of the occurrence.  The slot must be occupied;
    callers guard for that.
    """
    b = slots[tail]
    if b is None:
        raise RuntimeError("get_run called on an empty candidate slot")
    t = p - 1 if tail == t0 else get_tail(tail, t0, p) - 1
    h = (e - t - b + 1) % p
    return RunOccurrence(b, h, t, e)


def find_head(word, i: int, target: ParikhVector) -> int:
    """Leftmost j <= i such that w[j..i-1] is strictly contained in target.

    Returns i itself when even the single preceding symbol fails (the
    head is then empty).  Containment forces the head shorter than the
    target norm, so at most norm-1 symbols are inspected.
    """
    tgt = target.counts
    cnt = [0] * len(tgt)
    best = i
    for length in range(1, min(target.norm - 1, i) + 1):
        c = word[i - length]
        cnt[c] += 1
        if cnt[c] > tgt[c]:
            break
        best = i - length
    return best


def find_first_window(target: ParikhVector, symbols: Iterable[int]) -> Optional[int]:
    """End position of the first window matching target, or None."""
    cmp = WindowComparator(target)
    for i, sym in enumerate(symbols):
        if cmp.advance(sym):
            return i
    return None


class OnlineRunScanner:
    """Streaming scanner: push symbols one at a time, collect finished runs.

    push returns the run that ends at the previous position, if that push
    completed one; finish flushes the table after the last symbol and may
    return one final run.  on_candidate, when given, is called with
    (position, occurrence) every time a retired candidate becomes the
    current best during a flush, whether or not it is emitted.
    """

    __slots__ = (
        "target",
        "p",
        "sigma",
        "window",
        "suffix",
        "slots",
        "t0",
        "position",
        "tracking",
        "live",
        "finished",
        "flush_iterations",
        "head_symbol_reads",
        "on_candidate",
        "_head_scratch",
    )

    def __init__(self, target: ParikhVector,
                 on_candidate: Callable[[int, RunOccurrence], None] | None = None):
        if target.norm < 1:
            raise ValueError("period vector norm must be at least 1")
        self.target = target
        self.p = target.norm
        self.sigma = len(target.counts)
        self.window = WindowComparator(target)
        self.suffix = SuffixInclusionTracker(target)
        self.slots: list = [None] * self.p
        self.t0 = 0
        self.position = 0
        self.tracking = False
        self.live = 0
        self.finished = False
        self.flush_iterations = 0
        self.head_symbol_reads = 0
        self.on_candidate = on_candidate
        self._head_scratch = [0] * self.sigma

    @property
    def operation_count(self) -> int:
        """Window, suffix, flush, and head work combined (unit cost each)."""
        return (self.window.comparisons + self.suffix.updates
                + self.flush_iterations + self.head_symbol_reads)

    def push(self, sym: int) -> RunOccurrence | None:
        if self.finished:
            raise ValueError("scanner already finished")
        pos = self.position
        matched = self.window.advance(sym)
        self.suffix.advance(sym)
        self.position = pos + 1
        if not self.tracking:
            if matched:
                self.tracking = True
                self.t0 = 0
                self._seed(pos)
            return None
        self.t0 = (self.t0 + 1) % self.p
        if matched:
            if self.slots[self.t0] is None:
                self._seed(pos)
            return None
        return self._flush(pos, final=False)

    def finish(self) -> RunOccurrence | None:
        if self.finished:
            raise ValueError("scanner already finished")
        self.finished = True
        if not self.tracking:
            return None
        self.t0 = (self.t0 + 1) % self.p
        return self._flush(self.position, final=True)

    def _seed(self, pos: int) -> None:
        # A block just completed at pos; store the leftmost start whose
        # head (ending at the position before the block) stays contained.
        p = self.p
        end = pos - p
        cnt = self._head_scratch
        for k in range(self.sigma):
            cnt[k] = 0
        tgt = self.window.target
        ring = self.window.ring
        rn = len(ring)
        start = end + 1
        for length in range(1, min(p - 1, end + 1) + 1):
            c = ring[(end - length + 1) % rn]
            self.head_symbol_reads += 1
            cnt[c] += 1
            if cnt[c] > tgt[c]:
                break
            start = end - length + 1
        self.slots[self.t0] = start
        self.live += 1

    def _flush(self, pos: int, final: bool) -> RunOccurrence | None:
        e = pos - 1
        self.flush_iterations += 1
        if self.live == 0:
            return None
        p = self.p
        slots = self.slots
        t0 = self.t0
        contained_len = self.suffix.s
        best: RunOccurrence | None = None
        best_b: int | None = None
        tail = t0
        while True:
            self.flush_iterations += 1
            b = slots[tail]
            if b is not None:
                if tail == t0 or final or get_tail(tail, t0, p) > contained_len:
                    if best_b is None or b <= best_b:
                        best = get_run(slots, tail, t0, e, p)
                        best_b = b
                        if self.on_candidate is not None:
                            self.on_candidate(pos, best)
                    slots[tail] = None
                    self.live -= 1
                else:
                    break
            tail = (tail + 1) % p
            if tail == t0:
                break
        if best is None:
            return None
        for survivor in slots:
            if survivor is not None and survivor <= best_b:
                return None
        body = best.e - best.t - best.h - best.b + 1
        if body >= 2 * p:
            return best
        return None


def abelian_runs(target: ParikhVector, word: Iterable[int],
                 on_candidate: Callable[[int, RunOccurrence], None] | None = None) -> list[RunOccurrence]:
    """All abelian runs of target in word, in order of their end positions."""
    scanner = OnlineRunScanner(target, on_candidate=on_candidate)
    out: list[RunOccurrence] = []
    for sym in word:
        run = scanner.push(sym)
        if run is not None:
            out.append(run)
    run = scanner.finish()
    if run is not None:
        out.append(run)
    return out


def state_footprint_bytes(scanner: OnlineRunScanner) -> int:
    """Container-shell footprint of a scanner's retained state.

    Sums the container shells reachable from the scanner: the scanner
    itself, its window comparator and suffix tracker, and every list or
    tuple attribute (whose allocation depends on sigma and the target
    norm).  Scalar leaves such as counters are deliberately excluded,
    since their pointer slots are already part of the parent shell and
    their object sizes vary with magnitude, not with retained state.
    The result is therefore a pure function of the alphabet size and
    the target norm, independent of how much input has been consumed.
    Used by tests to pin the O(sigma + p) memory claim.
    """
    seen: set[int] = set()

    def shell(obj) -> int:
        if obj is None or isinstance(obj, (int, float, bool, str, bytes)):
            return 0
        if callable(obj):
            return 0
        if id(obj) in seen:
            return 0
        seen.add(id(obj))
        size = sys.getsizeof(obj)
        if isinstance(obj, (list, tuple)):
            return size
        for name in getattr(type(obj), "__slots__", ()):
            size += shell(getattr(obj, name))
        return size

    return shell(scanner)
