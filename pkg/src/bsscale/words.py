"""Word algebra for BS(m, n): parsing, free and pinch reduction, the word
problem, t-exponent sum, and conjugacy normalization.

A word is a plain string over the four letters ``a A t T`` where the capital
letter is the inverse of the lowercase one.  A pinch is a subword
``t a^(cm) T`` or ``T a^(cn) t`` (c an integer, possibly 0 or negative);
replacing it by ``a^(cn)`` or ``a^(cm)`` respectively does not change the
group element.  A freely reduced word with no pinches represents the
identity only if it is empty, which decides the word problem.

Heavy arithmetic is done on the run-length "syllable" form
a^(e0) t^(s1) a^(e1) ... t^(sk) a^(ek), a pair of lists (exponents, signs),
so exponents can grow as big integers without materializing letter runs.
"""

from __future__ import annotations

from .errors import ParseError, WordConditionError
from .params import GroupParams

Word = str

_LETTERS = "aAtT"
_INVERT = str.maketrans("aAtT", "AaTt")


def invert_word(w: Word) -> Word:
    """Group inverse: reverse the word and invert each letter."""
    return w.translate(_INVERT)[::-1]


def t_exponent(w: Word) -> int:
    """Number of t letters minus number of t^-1 letters.

    Invariant under every relation of BS(m, n), so it is a well defined
    homomorphism to the integers on group elements.
    """
    return w.count("t") - w.count("T")


def parse_word(text: str) -> Word:
    """Parse word text into a flat letter string.

    Grammar: tokens separated by optional whitespace, each token a letter
    from ``a A t T`` optionally followed by ``^`` and a signed integer.
    ``a^-3`` expands to ``AAA``; an exponent on a capital letter composes
    inverses (``A^2`` is ``a^-2``); exponent 0 contributes nothing.
    Raises ParseError with the byte offset of the offending token.
    """
    out: list[str] = []
    i = 0
    ln = len(text)
    while i < ln:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch not in _LETTERS:
            raise ParseError(f"unexpected character {ch!r}", i)
        letter = ch
        i += 1
        exp = 1
        if i < ln and text[i] == "^":
            i += 1
            start = i
            if i < ln and text[i] in "+-":
                i += 1
            if i >= ln or not text[i].isdigit():
                raise ParseError("expected integer after '^'", start)
            while i < ln and text[i].isdigit():
                i += 1
            exp = int(text[start:i])
        if letter in "AT":
            letter = letter.lower()
            exp = -exp
        if exp >= 0:
            out.append(letter * exp)
        else:
            out.append(letter.upper() * (-exp))
    return "".join(out)


def format_word(w: Word) -> str:
    """Compact serialization: maximal runs folded into exponents >= 2,
    tokens space separated.  Inverse runs print as negative exponents
    (``TT`` becomes ``t^-2``).  The empty word prints as the empty string.
    """
    tokens: list[str] = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        ch = w[i]
        if run == 1:
            tokens.append(ch)
        elif ch in "aA":
            tokens.append(f"a^{run if ch == 'a' else -run}")
        else:
            tokens.append(f"t^{run if ch == 't' else -run}")
        i = j
    return " ".join(tokens)


def free_reduce(w: Word) -> Word:
    """Remove adjacent inverse pairs until none remain (free group
    reduction over {a, t}).  Idempotent."""
    stack: list[str] = []
    for ch in w:
        if stack and stack[-1] == ch.translate(_INVERT):
            stack.pop()
        else:
            stack.append(ch)
    return "".join(stack)


def is_freely_reduced(w: Word) -> bool:
    return all(w[i + 1] != w[i].translate(_INVERT) for i in range(len(w) - 1))


# ---------------------------------------------------------------------------
# Syllable form.


def word_syllables(w: Word) -> tuple[list[int], list[int]]:
    """Run-length form: lists (exps, signs) with len(exps) = len(signs) + 1,
    meaning a^exps[0] t^signs[0] a^exps[1] ... t^signs[-1] a^exps[-1].
    Adjacent a/A letters merge, so the form is free-reduced in the a runs.
    """
    exps = [0]
    signs: list[int] = []
    for ch in w:
        if ch == "a":
            exps[-1] += 1
        elif ch == "A":
            exps[-1] -= 1
        elif ch == "t":
            signs.append(1)
            exps.append(0)
        elif ch == "T":
            signs.append(-1)
            exps.append(0)
        else:
            raise ParseError(f"invalid letter {ch!r}", w.index(ch))
    return exps, signs


def syllables_to_word(exps: list[int], signs: list[int]) -> Word:
    parts: list[str] = []
    for k, e in enumerate(exps):
        parts.append("a" * e if e >= 0 else "A" * (-e))
        if k < len(signs):
            parts.append("t" if signs[k] > 0 else "T")
    return "".join(parts)


def reduce_syllables(
    p: GroupParams, exps: list[int], signs: list[int]
) -> tuple[list[int], list[int]]:
    """Full reduction in syllable form: removes every pinch (including the
    c = 0 case, which is a free t-cancellation) left to right, merging the
    replaced a power into the surrounding runs.  The output is the syllable
    form of a freely reduced, pinch-free word equal to the input in BS(m, n).
    Terminates: each merge removes two t letters.
    """
    m, n = p.m, p.n
    out_e = [exps[0]]
    out_s: list[int] = []
    for k, s in enumerate(signs):
        e_after = exps[k + 1]
        if out_s and out_s[-1] == 1 and s == -1 and out_e[-1] % m == 0:
            repl = (out_e[-1] // m) * n
            out_e.pop()
            out_s.pop()
            out_e[-1] += repl + e_after
        elif out_s and out_s[-1] == -1 and s == 1 and out_e[-1] % n == 0:
            repl = (out_e[-1] // n) * m
            out_e.pop()
            out_s.pop()
            out_e[-1] += repl + e_after
        else:
            out_s.append(s)
            out_e.append(e_after)
    return out_e, out_s


def syllables_pinch_free(p: GroupParams, exps: list[int], signs: list[int]) -> bool:
    """True iff no adjacent sign pair forms a pinch (exponent between a
    t...t^-1 pair divisible by m, or by n for the t^-1...t pair)."""
    for k in range(len(signs) - 1):
        if signs[k] == 1 and signs[k + 1] == -1 and exps[k + 1] % p.m == 0:
            return False
        if signs[k] == -1 and signs[k + 1] == 1 and exps[k + 1] % p.n == 0:
            return False
    return True


def is_pinch_free(p: GroupParams, w: Word) -> bool:
    exps, signs = word_syllables(w)
    return syllables_pinch_free(p, exps, signs)


def check_traceable(p: GroupParams, w: Word) -> None:
    """Raise unless w is freely reduced and pinch-free."""
    if not is_freely_reduced(w):
        raise WordConditionError(f"word {format_word(w)!r} is not freely reduced")
    if not is_pinch_free(p, w):
        raise WordConditionError(f"word {format_word(w)!r} contains a pinch")


# ---------------------------------------------------------------------------
# The word problem.


def britton_reduce(p: GroupParams, w: Word) -> Word:
    """Alternately free-reduce and remove pinches (leftmost first) until the
    word is freely reduced and pinch-free.  The result equals w in BS(m, n).
    """
    exps, signs = reduce_syllables(p, *word_syllables(w))
    return syllables_to_word(exps, signs)


def as_power_of_a(p: GroupParams, w: Word) -> int | None:
    """Return k when w = a^k in BS(m, n), else None.

    A reduced word with surviving t letters cannot lie in <a>, so the
    syllable reduction decides membership outright.
    """
    exps, signs = reduce_syllables(p, *word_syllables(w))
    return exps[0] if not signs else None


def equal_elements(p: GroupParams, w: Word, u: Word) -> bool:
    """Decide w = u in BS(m, n) by reducing w u^-1."""
    return as_power_of_a(p, w + invert_word(u)) == 0


# ---------------------------------------------------------------------------
# Conjugacy normalization.


def _signed_run(run: str) -> int:
    return len(run) if (not run or run[0] == "a") else -len(run)


def _leading_a_run(w: Word) -> int:
    i = 0
    while i < len(w) and w[i] in "aA":
        i += 1
    return i


def _trailing_a_run(w: Word) -> int:
    i = len(w)
    while i > 0 and w[i - 1] in "aA":
        i -= 1
    return i


def _a_power(e: int) -> Word:
    return "a" * e if e >= 0 else "A" * (-e)


def _find_pinch(p: GroupParams, w: Word):
    """Leftmost pinch as (start, end, replacement word), or None."""
    exps, signs = word_syllables(w)
    pos = abs(exps[0])
    for k in range(len(signs) - 1):
        mid = exps[k + 1]
        span = 1 + abs(mid) + 1
        if signs[k] == 1 and signs[k + 1] == -1 and mid % p.m == 0:
            return pos, pos + span, _a_power((mid // p.m) * p.n)
        if signs[k] == -1 and signs[k + 1] == 1 and mid % p.n == 0:
            return pos, pos + span, _a_power((mid // p.n) * p.m)
        pos += 1 + abs(mid)
    return None


def conjugacy_normalize_with_certificate(
    p: GroupParams, w: Word
) -> tuple[Word, Word]:
    """Return (z, h) with h z h^-1 = w in BS(m, n) and z z freely reduced and
    pinch-free, so every positive power of z is freely reduced and pinch-free.

    Four moves are applied greedily in a fixed order, restarting after each:
    (1) cancel a free inverse pair, (2) strip a conjugating first/last letter
    pair, (3) remove a pinch, (4) when the square (but not the word itself)
    has a pinch straddling the wrap boundary, conjugate it away.  Each move
    strictly decreases (t-letter count, length) lexicographically.
    """
    y = w
    h: list[str] = []
    while True:
        # move 1: free cancellation, leftmost pair
        red = next(
            (i for i in range(len(y) - 1) if y[i + 1] == y[i].translate(_INVERT)),
            None,
        )
        if red is not None:
            y = y[:red] + y[red + 2 :]
            continue
        # move 2: y = c z c^-1 for a single letter c
        if len(y) >= 2 and y[-1] == y[0].translate(_INVERT):
            h.append(y[0])
            y = y[1:-1]
            continue
        # move 3: remove a pinch inside y
        hit = _find_pinch(p, y)
        if hit is not None:
            start, end, repl = hit
            y = y[:start] + repl + y[end:]
            continue
        # move 4: pinch straddling the boundary of y y
        lead = _leading_a_run(y)
        trail = _trailing_a_run(y)
        if lead < trail:  # at least one t letter
            first_sign = 1 if y[lead] == "t" else -1
            last_sign = 1 if y[trail - 1] == "t" else -1
            i = _signed_run(y[:lead])
            j = _signed_run(y[trail:])
            core = y[lead + 1 : trail - 1]
            if first_sign == -1 and last_sign == 1 and (i + j) % p.m == 0:
                # y = a^i T v t a^j; conjugate by (t a^-i)^-1 to get v a^(kn)
                y = core + _a_power(((i + j) // p.m) * p.n)
                h.append(_a_power(i) + "T")
                continue
            if first_sign == 1 and last_sign == -1 and (i + j) % p.n == 0:
                # y = a^i t v T a^j; conjugate by (T a^-i)^-1 to get v a^(km)
                y = core + _a_power(((i + j) // p.n) * p.m)
                h.append(_a_power(i) + "t")
                continue
        return y, "".join(h)


def conjugacy_normalize(p: GroupParams, w: Word) -> Word:
    """Conjugate w to a word z whose square (hence every positive power) is
    freely reduced and pinch-free."""
    z, _ = conjugacy_normalize_with_certificate(p, w)
    return z
