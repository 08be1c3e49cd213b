"""Canonical forms for BS(m, n) elements.

The canonical form writes an element as
a^(c1) t^(s1) a^(c2) t^(s2) ... a^(cs) t^(ss) a^(tail)
with each residue c taken in a fixed transversal (0 <= c < |n| before a t
letter, 0 <= c < |m| before a t^-1 letter) and no backtracking (no zero
residue between opposite signs).  Overflow past the transversal is pushed
to the right through the defining relation, accumulating in the tail.
Dropping the tail indexes the left cosets of <a>, i.e. the vertices of the
Bass-Serre tree.

For |m| = 1 the group embeds in 2x2 upper triangular rational matrices,
giving an independent equality oracle, and every element has a unique
t^(-p) a^q t^r form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvariantError
from .params import GroupParams
from .words import Word, reduce_syllables, syllables_to_word, word_syllables

CosetId = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ElementNormalForm:
    """Syllables (residue, sign) followed by a trailing a power."""

    syllables: CosetId
    tail: int

    def to_word(self) -> Word:
        return syllables_to_word(
            [c for c, _ in self.syllables] + [self.tail],
            [s for _, s in self.syllables],
        )


def element_normal_form(p: GroupParams, w: Word) -> ElementNormalForm:
    """Unique canonical form of w; two words get the same form exactly when
    they are equal in BS(m, n)."""
    exps, signs = reduce_syllables(p, *word_syllables(w))
    return _normalize_reduced(p, exps, signs)


def _normalize_reduced(
    p: GroupParams, exps: list[int], signs: list[int]
) -> ElementNormalForm:
    # a^(qn + r) t = a^r t a^(qm) and a^(qm + r) T = a^r T a^(qn); pushing
    # the carry right cannot create a backtrack because the input has no
    # pinches and carries are multiples of the divisibility modulus.
    m, n = p.m, p.n
    syll: list[tuple[int, int]] = []
    acc = exps[0]
    for k, s in enumerate(signs):
        if s == 1:
            res = acc % abs(n)
            carry = ((acc - res) // n) * m
        else:
            res = acc % abs(m)
            carry = ((acc - res) // m) * n
        if syll and syll[-1][1] == -s and res == 0:
            raise InvariantError("carry produced a backtracking syllable")
        syll.append((res, s))
        acc = carry + exps[k + 1]
    return ElementNormalForm(tuple(syll), acc)


def coset_of(p: GroupParams, w: Word) -> CosetId:
    """Canonical index of the left coset w<a> (normal form with the tail
    dropped); the empty tuple is the base coset <a>."""
    return element_normal_form(p, w).syllables


def coset_word(cid: CosetId) -> Word:
    """The canonical representative word of a coset."""
    return ElementNormalForm(cid, 0).to_word()


# ---------------------------------------------------------------------------
# |m| = 1: the soluble case, with a faithful matrix representation.


def _require_unit_m(p: GroupParams) -> None:
    if abs(p.m) != 1:
        raise DomainError(f"operation requires |m| = 1, got m = {p.m}")


def bs1n_normal_form(p: GroupParams, w: Word) -> tuple[int, int, int]:
    """Write w as t^(-neg) a^q t^(pos) with neg, pos >= 0 and n dividing q
    only if neg = 0 or pos = 0.  Requires |m| = 1.

    Letters are absorbed left to right into the state (neg, q, pos) using
    t a^x = a^(x m n) t and a^x T = T a^(x m n), then inner pinches
    T a^(cn) t = a^(cm) are stripped.
    """
    _require_unit_m(p)
    mn = p.m * p.n
    neg, q, pos = 0, 0, 0
    for ch in w:
        if ch == "a" or ch == "A":
            q += (1 if ch == "a" else -1) * mn**pos
        elif ch == "t":
            pos += 1
        else:
            if pos > 0:
                pos -= 1
            else:
                neg += 1
                q *= mn
    while neg > 0 and pos > 0 and q % p.n == 0:
        q = (q // p.n) * p.m
        neg -= 1
        pos -= 1
    return neg, q, pos


@dataclass(frozen=True)
class BS1nMatrix:
    """Upper triangular matrix [[top_left, top_right], [0, 1]] with exact
    rational entries; top_left is a signed power of n and equals the
    determinant, top_right lies in Z[1/n]."""

    top_left: Fraction
    top_right: Fraction

    @property
    def entries(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return (
            (self.top_left, self.top_right),
            (Fraction(0), Fraction(1)),
        )

    @property
    def det(self) -> Fraction:
        return self.top_left

    def __mul__(self, other: "BS1nMatrix") -> "BS1nMatrix":
        return BS1nMatrix(
            self.top_left * other.top_left,
            self.top_left * other.top_right + self.top_right,
        )


def bs1n_matrix(p: GroupParams, w: Word) -> BS1nMatrix:
    """Image of w under a -> [[1,1],[0,1]], t -> [[mn,0],[0,1]]; a faithful
    homomorphism for |m| = 1.  (For m = 1 the t image is [[n,0],[0,1]]; the
    extra sign makes the relation hold for m = -1 as well.)"""
    _require_unit_m(p)
    mn = Fraction(p.m * p.n)
    gens = {
        "a": BS1nMatrix(Fraction(1), Fraction(1)),
        "A": BS1nMatrix(Fraction(1), Fraction(-1)),
        "t": BS1nMatrix(mn, Fraction(0)),
        "T": BS1nMatrix(1 / mn, Fraction(0)),
    }
    out = BS1nMatrix(Fraction(1), Fraction(0))
    for ch in w:
        out = out * gens[ch]
    return out
