"""Offline detection of abelian runs for every block length at once.

A square-center table answers, for block length j and position i,
whether the j symbols ending at i and the j symbols starting at i+1
carry the same Parikh vector.  Each row is filled left to right with a
sliding difference counter, so a full table costs O(n) per row and
O(n^2) overall.  True cells that are j apart chain into repetitions of
two or more blocks; each maximal chain is then stretched with the
longest head and tail still strictly contained in the block vector.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parikh import Word, parikh_of

__all__ = [
    "OfflineRun",
    "SquareCenterTable",
    "WorkCounter",
    "build_square_table",
    "extend_head_tail",
    "maximal_repetitions",
    "offline_all_runs",
]


class WorkCounter:
    """Accumulates unit-cost steps so tests can pin the quadratic bound."""

    __slots__ = ("ops",)

    def __init__(self) -> None:
        self.ops = 0

    def add(self, n: int = 1) -> None:
        self.ops += n


@dataclass(frozen=True)
class OfflineRun:
    """A run found offline: interval [b, e], head h, tail t, block length p."""

    b: int
    h: int
    t: int
    e: int
    p: int

    def astuple(self) -> tuple[int, int, int, int, int]:
        return (self.b, self.h, self.t, self.e, self.p)


class SquareCenterTable:
    """Rows indexed by block length j >= 1; cells[j-1][i] marks a center.

    A true cell at (j, i) means Parikh(w[i-j+1..i]) == Parikh(w[i+1..i+j]).
    marks has the same shape and records cells already swallowed by a
    chain during repetition extraction.
    """

    __slots__ = ("n", "cells", "marks")

    def __init__(self, n: int, cells: list[list[bool]]):
        self.n = n
        self.cells = cells
        self.marks = [[False] * len(row) for row in cells]

    def cell(self, j: int, i: int) -> bool:
        row = self.cells[j - 1]
        return bool(row[i]) if 0 <= i < len(row) else False


def build_square_table(word: Word, counter: WorkCounter | None = None) -> SquareCenterTable:
    """Fill every row of the square-center table for word."""
    n = len(word)
    sigma = word.sigma
    cells: list[list[bool]] = []
    ops = 0
    for j in range(1, n // 2 + 1):
        row = [False] * n
        diff = [0] * sigma
        mismatched = 0

        def bump(c: int, delta: int) -> None:
            nonlocal mismatched
            if diff[c] == 0:
                mismatched += 1
            diff[c] += delta
            if diff[c] == 0:
                mismatched -= 1

        for x in range(j):
            bump(word[x], 1)
        for x in range(j, 2 * j):
            bump(word[x], -1)
        ops += 2 * j
        i = j - 1
        row[i] = mismatched == 0
        ops += 1
        while i + 1 + j < n:
            bump(word[i - j + 1], -1)
            bump(word[i + 1], 2)
            bump(word[i + j + 1], -1)
            i += 1
            row[i] = mismatched == 0
            ops += 4
        cells.append(row)
    if counter is not None:
        counter.add(ops)
    return SquareCenterTable(n, cells)


def maximal_repetitions(table: SquareCenterTable, j: int,
                        counter: WorkCounter | None = None) -> list[tuple[int, int]]:
    """Maximal chains of row j as (start, end) block intervals, end inclusive.

    A true cell at i starts a chain unless a chain already passed through
    it; the chain follows cells j apart, and a chain of k cells covers
    k + 1 adjacent blocks, i.e. the interval [i - j + 1, i + k * j].
    """
    row = table.cells[j - 1]
    marks = table.marks[j - 1]
    out: list[tuple[int, int]] = []
    ops = 0
    for i in range(len(row)):
        ops += 1
        if not row[i] or marks[i]:
            continue
        marks[i] = True
        k = 0
        x = i + j
        while x < len(row) and row[x]:
            marks[x] = True
            k += 1
            x += j
            ops += 1
        out.append((i - j + 1, i + (k + 1) * j))
    if counter is not None:
        counter.add(ops)
    return out


def extend_head_tail(word: Word, rep: tuple[int, int, int],
                     counter: WorkCounter | None = None) -> OfflineRun:
    """Stretch a block chain with the longest contained head and tail.

    rep is (start, end, p): the pure block part and its block length.
    Head and tail are grown one symbol at a time while every per-symbol
    count stays at or below the block vector's; both are capped at p - 1
    so they remain strictly contained.
    """
    start, end, p = rep
    block = parikh_of(word, start, start + p - 1)
    tgt = block.counts
    ops = p

    cnt = [0] * word.sigma
    h = 0
    for length in range(1, min(p - 1, start) + 1):
        c = word[start - length]
        cnt[c] += 1
        ops += 1
        if cnt[c] > tgt[c]:
            break
        h = length

    cnt = [0] * word.sigma
    t = 0
    n = len(word)
    for length in range(1, min(p - 1, n - 1 - end) + 1):
        c = word[end + length]
        cnt[c] += 1
        ops += 1
        if cnt[c] > tgt[c]:
            break
        t = length

    if counter is not None:
        counter.add(ops)
    return OfflineRun(start - h, h, t, end + t, p)


def offline_all_runs(word: Word, counter: WorkCounter | None = None) -> list[OfflineRun]:
    """Every abelian run of word over all block lengths, deduplicated.

    Output is sorted by (p, b, h, t, e).  Two different chains can
    stretch to the same factorization, hence the set.
    """
    n = len(word)
    if n < 2:
        return []
    table = build_square_table(word, counter)
    out: set[OfflineRun] = set()
    for j in range(1, n // 2 + 1):
        for start, end in maximal_repetitions(table, j, counter):
            out.add(extend_head_tail(word, (start, end, j), counter))
    return sorted(out, key=lambda r: (r.p, r.b, r.h, r.t, r.e))
