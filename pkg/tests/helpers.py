"""Shared fixtures and brute-force reference helpers for the test suite."""

from abelruns import ParikhVector, Word, contains_strict, parikh_of

REF_TEXT = "abaababaabbb"

# Square-center grid of REF_TEXT as computed from the definition,
# rows j = 1..6 top to bottom, one character per column i = 0..11.
CORRECT_ROWS = [
    "001000010110",
    "001011010000",
    "001011000000",
    "000000100000",
    "000010000000",
    "000000000000",
]

# The grid as printed in the source figure: identical except row 2,
# column 2, where the printed value contradicts the definition.
PRINTED_ROWS = [
    "001000010110",
    "000011010000",
    "001011000000",
    "000000100000",
    "000010000000",
    "000000000000",
]


def make_word(text: str, sigma: int | None = None) -> Word:
    """Encode a..z text with the fixed mapping a=0, b=1, ... .

    Unlike intern_word this keeps counts aligned with alphabetical
    order, so literal count tuples in tests read naturally.
    """
    indices = [ord(ch) - 97 for ch in text]
    if sigma is None:
        sigma = max(indices, default=-1) + 1
    return Word(indices, max(sigma, 1))


def brute_suffix_len(word: list[int], target: ParikhVector) -> int:
    """Longest strictly contained suffix length, checked from scratch."""
    best = 0
    for length in range(1, min(target.norm - 1, len(word)) + 1):
        counts = [0] * target.sigma
        for c in word[len(word) - length:]:
            counts[c] += 1
        if contains_strict(ParikhVector(tuple(counts)), target):
            best = length
    return best


def dumb_repetitions(word: Word) -> list[tuple[int, int, int]]:
    """Even dumber repetition check: filter every (start, end, p) triple."""
    n = len(word)
    out = []
    for p in range(1, n // 2 + 1):
        for start in range(n):
            for end in range(start + 2 * p - 1, n):
                length = end - start + 1
                if length % p != 0 or length < 2 * p:
                    continue
                v = parikh_of(word, start, start + p - 1)
                if any(parikh_of(word, x, x + p - 1) != v
                       for x in range(start + p, end - p + 2, p)):
                    continue
                if start - p >= 0 and parikh_of(word, start - p, start - 1) == v:
                    continue
                if end + p < n and parikh_of(word, end + 1, end + p) == v:
                    continue
                out.append((start, end, p))
    return out
