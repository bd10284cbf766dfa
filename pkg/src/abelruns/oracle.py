"""Reference implementations used to cross-check the streaming scanner.

Everything here favours directness over speed.  occurrence_valid walks
the claimed factorization block by block; interval_has_period and
canonical_tuple try every tail length; oracle_runs keeps an interval
exactly when it admits the period and neither one-position extension
does.  occurrence_intervals enumerates the valid intervals faster than
the cubic triple loop so the reference stays usable on whole corpora,
but its output is itself property-checked against interval_has_period
by the test suite.

oracle_all_repetitions ignores heads and tails entirely: it lists every
maximal chain of two or more adjacent blocks sharing a Parikh vector,
for every block length.  The offline detector is checked against these
chains plus explicit head and tail extension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parikh import ParikhVector, Word, contains_strict, parikh_of
from .online import RunOccurrence

__all__ = [
    "OracleRunSet",
    "canonical_tuple",
    "interval_has_period",
    "occurrence_intervals",
    "occurrence_valid",
    "oracle_all_repetitions",
    "oracle_runs",
]


@dataclass(frozen=True)
class OracleRunSet:
    period: ParikhVector
    runs: tuple[RunOccurrence, ...]

    def __iter__(self):
        return iter(self.runs)

    def __len__(self) -> int:
        return len(self.runs)


def occurrence_valid(word: Word, b: int, e: int, h: int, t: int,
                     period: ParikhVector) -> bool:
    """Does (b, h, t, e) factor w[b..e] as head + full blocks + tail?

    The head and tail must be strictly contained in the period vector and
    the middle must be a positive whole number of blocks, each with
    Parikh vector exactly equal to the period.
    """
    p = period.norm
    if p < 1:
        raise ValueError("period vector norm must be at least 1")
    if not (0 <= b <= e < len(word)):
        return False
    if h < 0 or t < 0 or h > p - 1 or t > p - 1:
        return False
    body = e - b - h - t + 1
    if body <= 0 or body % p != 0:
        return False
    if h > 0 and not contains_strict(parikh_of(word, b, b + h - 1), period):
        return False
    if t > 0 and not contains_strict(parikh_of(word, e - t + 1, e), period):
        return False
    for x in range(b + h, e - t - p + 2, p):
        if parikh_of(word, x, x + p - 1) != period:
            return False
    return True


def interval_has_period(word: Word, b: int, e: int, period: ParikhVector) -> bool:
    """Is w[b..e] an occurrence of the period for some head/tail split?

    The interval length fixes h + t mod p, so each candidate tail length
    forces the head length.
    """
    p = period.norm
    length = e - b + 1
    for t in range(p):
        h = (length - t) % p
        if occurrence_valid(word, b, e, h, t, period):
            return True
    return False


def canonical_tuple(word: Word, b: int, e: int, period: ParikhVector) -> RunOccurrence:
    """The valid factorization of w[b..e] with the smallest tail length."""
    p = period.norm
    length = e - b + 1
    for t in range(p):
        h = (length - t) % p
        if occurrence_valid(word, b, e, h, t, period):
            return RunOccurrence(b, h, t, e)
    raise ValueError("interval admits no factorization with this period")


def occurrence_intervals(period: ParikhVector, word: Word) -> set[tuple[int, int]]:
    """Every interval (b, e) of word that is an occurrence of period.

    Built from the window-match positions: a chain of k adjacent matching
    blocks ending at position m yields intervals with every contained
    head before the chain and every contained tail after it.  s_arr[x]
    is the longest strictly contained suffix ending at x, which bounds
    both usable tails (a tail of length t ending at m + t needs
    t <= s_arr[m + t]) and usable heads.
    """
    n = len(word)
    p = period.norm
    tgt = period.counts
    sigma = period.sigma

    matches: list[int] = []
    counts = [0] * sigma
    mismatched = sum(1 for c in tgt if c != 0)
    for i in range(n):
        c = word[i]
        if counts[c] == tgt[c]:
            mismatched += 1
        counts[c] += 1
        if counts[c] == tgt[c]:
            mismatched -= 1
        if i >= p:
            d = word[i - p]
            if counts[d] == tgt[d]:
                mismatched += 1
            counts[d] -= 1
            if counts[d] == tgt[d]:
                mismatched -= 1
        if i >= p - 1 and mismatched == 0:
            matches.append(i)
    if not matches:
        return set()

    # Longest strictly contained suffix ending at each position.
    s_arr = [0] * n
    for x in range(n):
        cnt = [0] * sigma
        best = 0
        for length in range(1, min(p - 1, x + 1) + 1):
            c = word[x - length + 1]
            cnt[c] += 1
            if cnt[c] > tgt[c]:
                break
            best = length
        s_arr[x] = best

    # Chain counts need increasing order of m, which matches provides.
    run_len: dict[int, int] = {}
    for m in matches:
        run_len[m] = run_len.get(m - p, 0) + 1

    out: set[tuple[int, int]] = set()
    for m in matches:
        tails = [t for t in range(p) if m + t < n and t <= s_arr[m + t]]
        for k in range(1, run_len[m] + 1):
            bs = m - k * p + 1
            hmax = s_arr[bs - 1] if bs >= 1 else 0
            for h in range(hmax + 1):
                for t in tails:
                    out.add((bs - h, m + t))
    return out


def oracle_runs(period: ParikhVector, word: Word) -> OracleRunSet:
    """All abelian runs of period in word, by exhaustive interval testing.

    A run is an occurrence interval that stays an occurrence under no
    one-position extension and whose canonical factorization carries at
    least two full blocks.
    """
    intervals = occurrence_intervals(period, word)
    p = period.norm
    runs: list[RunOccurrence] = []
    for b, e in intervals:
        if (b - 1, e) in intervals or (b, e + 1) in intervals:
            continue
        ct = canonical_tuple(word, b, e, period)
        if ct.e - ct.b - ct.h - ct.t + 1 >= 2 * p:
            runs.append(ct)
    runs.sort(key=lambda r: (r.b, r.e))
    return OracleRunSet(period, tuple(runs))


def oracle_all_repetitions(word: Word) -> list[tuple[int, int, int]]:
    """Maximal chains of >= 2 adjacent equal-Parikh blocks, all block sizes.

    Returns (start, end, block_length) triples with end inclusive.  A
    chain is maximal when the block before it differs and no further
    block matches after it; heads and tails are not considered here.
    """
    n = len(word)
    out: list[tuple[int, int, int]] = []
    for p in range(1, n // 2 + 1):
        for s in range(0, n - 2 * p + 1):
            v = parikh_of(word, s, s + p - 1)
            if s - p >= 0 and parikh_of(word, s - p, s - 1) == v:
                continue
            m = 1
            while s + (m + 1) * p - 1 < n and parikh_of(word, s + m * p, s + (m + 1) * p - 1) == v:
                m += 1
            if m >= 2:
                out.append((s, s + m * p - 1, p))
    return out
