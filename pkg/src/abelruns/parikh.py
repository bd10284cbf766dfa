"""Dense alphabets, Parikh vectors, and the streaming per-symbol trackers.

The Parikh vector of a word counts how many times each alphabet symbol
occurs in it; two words have equal Parikh vectors exactly when they are
anagrams of each other.  Every engine in this package works on dense
symbol indices in [0, sigma), produced once by intern_word, so that all
per-symbol bookkeeping fits in flat lists of length sigma.

Two incremental trackers carry that bookkeeping for the streaming scan:

* WindowComparator answers, after each consumed symbol, whether the
  Parikh vector of the trailing window of |target| symbols equals the
  target.  It keeps a mismatch counter over symbol indices instead of
  comparing whole vectors, so one symbol costs O(1).
* SuffixInclusionTracker maintains the length of the longest trailing
  suffix whose Parikh vector is strictly contained in the target.
  Containment survives shortening a suffix, so the contained lengths at
  any moment are exactly 0..s and a two-pointer update keeps s exact in
  O(1) amortized work per symbol.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator

__all__ = [
    "Alphabet",
    "ParikhVector",
    "SuffixInclusionTracker",
    "WindowComparator",
    "Word",
    "contains_strict",
    "intern_word",
    "parikh_of",
]


class Alphabet:
    """Bijection between raw input symbols and dense indices 0..sigma-1."""

    __slots__ = ("symbols", "index_of")

    def __init__(self, symbols: Iterable[Hashable]):
        self.symbols: tuple = tuple(symbols)
        self.index_of: dict = {s: k for k, s in enumerate(self.symbols)}
        if len(self.index_of) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")

    @property
    def sigma(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.symbols)!r})"


class Word:
    """A text as a sequence of dense symbol indices, each below sigma."""

    __slots__ = ("indices", "sigma")

    def __init__(self, indices: Iterable[int], sigma: int):
        self.indices: tuple[int, ...] = tuple(indices)
        self.sigma = sigma
        for c in self.indices:
            if not 0 <= c < sigma:
                raise ValueError(f"symbol index {c} outside [0, {sigma})")

    def __len__(self) -> int:
        return len(self.indices)

    def __getitem__(self, key):
        return self.indices[key]

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.sigma == other.sigma and self.indices == other.indices

    def __hash__(self) -> int:
        return hash((self.sigma, self.indices))

    def __repr__(self) -> str:
        shown = "".join(map(str, self.indices[:24]))
        more = "..." if len(self.indices) > 24 else ""
        return f"Word([{shown}{more}], sigma={self.sigma})"


@dataclass(frozen=True)
class ParikhVector:
    """Per-symbol occurrence counts; norm is their sum (the window length)."""

    counts: tuple[int, ...]
    norm: int = field(init=False, compare=False)

    def __post_init__(self):
        counts = tuple(self.counts)
        object.__setattr__(self, "counts", counts)
        for c in counts:
            if c < 0:
                raise ValueError("Parikh vector counts must be non-negative")
        object.__setattr__(self, "norm", sum(counts))

    @property
    def sigma(self) -> int:
        return len(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, k: int) -> int:
        return self.counts[k]


def intern_word(text: Iterable[Hashable], extra_symbols: Iterable[Hashable] = ()) -> tuple[Alphabet, Word]:
    """Map raw symbols to dense indices, first occurrence first.

    extra_symbols are appended to the alphabet after the text's own
    symbols, so callers can reserve indices for symbols that appear only
    in a query vector.  Returns the alphabet and the encoded word.
    """
    seq = list(text)
    order: dict = dict.fromkeys(seq)
    for s in extra_symbols:
        order.setdefault(s, None)
    alphabet = Alphabet(order.keys())
    idx = alphabet.index_of
    return alphabet, Word((idx[s] for s in seq), alphabet.sigma)


def parikh_of(word: Word, lo: int, hi: int) -> ParikhVector:
    """Parikh vector of word[lo..hi], both ends inclusive; lo == hi+1 is empty."""
    n = len(word)
    if not 0 <= lo <= hi + 1 <= n:
        raise IndexError(f"range [{lo}..{hi}] out of bounds for word of length {n}")
    counts = [0] * word.sigma
    for c in word.indices[lo:hi + 1]:
        counts[c] += 1
    return ParikhVector(tuple(counts))


def contains_strict(small: ParikhVector, big: ParikhVector) -> bool:
    """Componentwise <= with strictly smaller norm (proper sub-multiset)."""
    if len(small.counts) != len(big.counts):
        raise ValueError("Parikh vectors have different dimensions")
    if small.norm >= big.norm:
        return False
    return all(a <= b for a, b in zip(small.counts, big.counts))


class WindowComparator:
    """Sliding-window equality test against a fixed target vector.

    Tracks counts of the last |target| consumed symbols plus r, the
    number of symbol indices whose window count differs from the target.
    The window matches exactly when r == 0 and at least |target| symbols
    have been consumed.  The ring keeps the last 2*|target| symbols so
    that callers scanning slightly further back (head detection) can
    share it instead of retaining the whole text.
    """

    __slots__ = ("target", "window_counts", "r", "ring", "filled", "comparisons", "_p", "_sigma")

    def __init__(self, target: ParikhVector):
        p = target.norm
        if p < 1:
            raise ValueError("target vector norm must be at least 1")
        self.target = list(target.counts)
        self._sigma = len(self.target)
        self._p = p
        self.window_counts = [0] * self._sigma
        self.r = sum(1 for c in self.target if c != 0)
        self.ring = [0] * (2 * p)
        self.filled = 0
        self.comparisons = 0

    @property
    def norm(self) -> int:
        return self._p

    def advance(self, sym: int) -> bool:
        """Consume one symbol; return whether the trailing window now matches."""
        if not 0 <= sym < self._sigma:
            raise ValueError(f"symbol index {sym} outside [0, {self._sigma})")
        i = self.filled
        ring = self.ring
        rn = len(ring)
        wc = self.window_counts
        tgt = self.target
        p = self._p
        if i >= p:
            out = ring[(i - p) % rn]
            if wc[out] == tgt[out]:
                self.r += 1
            wc[out] -= 1
            if wc[out] == tgt[out]:
                self.r -= 1
        ring[i % rn] = sym
        if wc[sym] == tgt[sym]:
            self.r += 1
        wc[sym] += 1
        if wc[sym] == tgt[sym]:
            self.r -= 1
        self.filled = i + 1
        self.comparisons += 2
        return self.r == 0 and self.filled >= p

    def history(self, pos: int) -> int:
        """Symbol consumed at absolute position pos; only the last 2*|target| are kept."""
        if not (0 <= pos < self.filled and pos >= self.filled - len(self.ring)):
            raise ValueError(f"position {pos} no longer in the history ring")
        return self.ring[pos % len(self.ring)]


class SuffixInclusionTracker:
    """Length of the longest trailing suffix strictly contained in the target.

    s is the largest L <= |target|-1 such that the Parikh vector of the
    last L consumed symbols is componentwise <= the target (the norm
    bound holds automatically because L < |target|).  The window only
    ever needs to shrink from the left, so a ring of the last |target|
    symbols suffices.
    """

    __slots__ = ("target", "counts", "s", "over", "ring", "consumed", "updates", "_p")

    def __init__(self, target: ParikhVector):
        p = target.norm
        if p < 1:
            raise ValueError("target vector norm must be at least 1")
        self.target = list(target.counts)
        self.counts = [0] * len(self.target)
        self.s = 0
        self.over = 0
        self.ring = [0] * p
        self.consumed = 0
        self.updates = 0
        self._p = p

    def advance(self, sym: int) -> int:
        """Consume one symbol; return the new longest contained suffix length."""
        if not 0 <= sym < len(self.target):
            raise ValueError(f"symbol index {sym} outside [0, {len(self.target)})")
        i = self.consumed
        ring = self.ring
        rn = len(ring)
        ring[i % rn] = sym
        cnt = self.counts
        tgt = self.target
        cnt[sym] += 1
        if cnt[sym] == tgt[sym] + 1:
            self.over += 1
        length = self.s + 1
        self.updates += 1
        while length > self._p - 1 or self.over:
            drop = ring[(i - length + 1) % rn]
            cnt[drop] -= 1
            if cnt[drop] == tgt[drop]:
                self.over -= 1
            length -= 1
            self.updates += 1
        self.s = length
        self.consumed = i + 1
        return length
