"""Seeded random word generators for property suites and the selfcheck
command.  All sampling is driven by an explicit random.Random so identical
seeds give identical words.
"""

from __future__ import annotations

from random import Random

from .params import GroupParams
from .words import Word, is_pinch_free

_LETTERS = "aAtT"
_NON_INVERSE = {
    "a": "atT",
    "A": "AtT",
    "t": "aAt",
    "T": "aAT",
}


def random_word(rng: Random, max_len: int, min_len: int = 0) -> Word:
    length = rng.randint(min_len, max_len)
    return "".join(rng.choice(_LETTERS) for _ in range(length))


def random_freely_reduced_word(rng: Random, max_len: int, min_len: int = 0) -> Word:
    length = rng.randint(min_len, max_len)
    out: list[str] = []
    for _ in range(length):
        out.append(rng.choice(_NON_INVERSE[out[-1]] if out else _LETTERS))
    return "".join(out)


def random_pinch_free_word(
    p: GroupParams, rng: Random, max_len: int, min_len: int = 0, max_t: int | None = None
) -> Word:
    """Rejection-sample a freely reduced pinch-free word, optionally capping
    the t-letter count (scan oracles grow geometrically in it)."""
    while True:
        w = random_freely_reduced_word(rng, max_len, min_len)
        if max_t is not None and sum(1 for ch in w if ch in "tT") > max_t:
            continue
        if is_pinch_free(p, w):
            return w
