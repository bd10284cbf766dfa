"""Deterministic word generator shared by the CLI and the test corpus.

A fixed 64-bit linear congruential generator keeps the corpus
reproducible across platforms without depending on any library RNG's
stability guarantees.  The state is advanced before each extraction and
bits 33 and up drive the symbol choice.
"""

from __future__ import annotations

__all__ = ["generate_word"]

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


def generate_word(sigma: int, length: int, seed: int) -> str:
    """A pseudo-random word of the given length over a..(a + sigma - 1)."""
    if not 1 <= sigma <= 26:
        raise ValueError("sigma must be between 1 and 26")
    if length < 0:
        raise ValueError("length must be non-negative")
    state = seed & _MASK
    out = []
    for _ in range(length):
        state = (state * _MULT + _INC) & _MASK
        out.append(chr(ord("a") + ((state >> 33) % sigma)))
    return "".join(out)
