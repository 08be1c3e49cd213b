"""Closed-form invariants of the tree completion of BS(m, n): scale,
modular function, flat rank, projection kernel, orbit orders of cosets
under <a>, the scale-value set, and p-adic local-structure reports.

With l = lcm(|m|, |n|) and rho the t-exponent sum of a word, the scale is
(l/|n|)^rho for rho >= 0 and (l/|m|)^|rho| otherwise, so every invariant
here is a closed form in (m, n, rho).  The asymptotic index sequence
(moller_sequence) recomputes the scale along conjugation powers through
the intersection graph and serves as an independent verification route.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import path_labels, step
from .params import GroupParams
from .words import (
    Word,
    conjugacy_normalize,
    reduce_syllables,
    t_exponent,
    word_syllables,
)


@dataclass(frozen=True)
class ScaleValue:
    """base^exponent with the base picked by the sign of the t-exponent."""

    base: int
    exponent: int
    value: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "value", self.base**self.exponent)

    def as_dict(self) -> dict:
        return {"base": self.base, "exponent": self.exponent, "value": str(self.value)}


@dataclass(frozen=True)
class ModularValue:
    """|m/n|^rho in lowest terms; equals scale(w) / scale(w^-1)."""

    numerator: int
    denominator: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def as_dict(self) -> dict:
        return {"numerator": self.numerator, "denominator": self.denominator}


@dataclass(frozen=True)
class StructureReport:
    """Tidy-subgroup prime content and degenerate-case summary for the
    completion (optionally specialized to one element)."""

    primes_vplus: tuple[int, ...]
    primes_vminus: tuple[int, ...]
    quotient_order_bound: int
    flat_rank: int
    kernel_exponent: int
    swap_applied: bool
    discrete: bool
    quasi_centre: str = "ker Δ"

    def as_dict(self) -> dict:
        return {
            "primes_vplus": list(self.primes_vplus),
            "primes_vminus": list(self.primes_vminus),
            "quotient_order_bound": self.quotient_order_bound,
            "flat_rank": self.flat_rank,
            "kernel_exponent": self.kernel_exponent,
            "swap_applied": self.swap_applied,
            "discrete": self.discrete,
            "quasi_centre": self.quasi_centre,
        }


def scale(p: GroupParams, w: Word) -> ScaleValue:
    """Scale of the element represented by w: (l/|n|)^rho for rho >= 0,
    else (l/|m|)^|rho|.  In the divisor case n = m r this degenerates to
    1 for rho >= 0 and |r|^|rho| otherwise."""
    rho = t_exponent(w)
    if rho >= 0:
        return ScaleValue(base=p.l_over_n, exponent=rho)
    return ScaleValue(base=p.l_over_m, exponent=-rho)


def modular(p: GroupParams, w: Word) -> ModularValue:
    """Modular function value |m/n|^rho in lowest terms."""
    f = Fraction(abs(p.m), abs(p.n)) ** t_exponent(w)
    return ModularValue(f.numerator, f.denominator)


def flat_rank(p: GroupParams) -> int:
    """1 when |m| != |n| (the cyclic group over t is a maximal flat), else 0."""
    return 0 if p.discrete else 1


def pi_kernel(p: GroupParams) -> int:
    """Exponent k with <a^k> the kernel of the coset-permutation action:
    |m| when |m| = |n|, else 0 (trivial kernel)."""
    return abs(p.m) if p.discrete else 0


def moller_sequence(p: GroupParams, w: Word, k_max: int) -> list[int]:
    """Indices r_k = [<a> : <a> intersect z^-k <a> z^k] for k = 1..k_max,
    where z is the conjugacy normalization of w (its powers stay pinch-free,
    so the intersection graph computes each index).  Consecutive ratios
    stabilize to scale(w) once k exceeds twice the t^-1 letter count of z,
    certifying the asymptotic index formula lim r_k^(1/k) = s(w).

    When |m| = |n| the completion is discrete and every index is reported
    as 1.
    """
    if p.discrete:
        return [1] * k_max
    labels = path_labels(conjugacy_normalize(p, w))
    out = []
    x = 1
    for _ in range(k_max):
        for eps in labels:
            x = step(p, x, eps)
        out.append(x)
    return out


def moller_stabilization(p: GroupParams, w: Word, k_max: int) -> tuple[list[int], bool]:
    """The index sequence plus whether every ratio past the engineering
    bound 2N + 1 (N the t^-1 count of the normalized word) equals scale(w)."""
    seq = moller_sequence(p, w, k_max)
    z = conjugacy_normalize(p, w)
    bound = 2 * z.count("T") + 1
    target = scale(p, w).value
    ok = all(
        seq[k] == seq[k - 1] * target
        for k in range(max(bound, 1), len(seq))
    )
    return seq, ok


def orbit_order(p: GroupParams, w: Word) -> int:
    """Order of the <a>-orbit of the coset w<a>: the minimal d > 0 with
    a^d w <a> = w <a>.

    The stabilizer of w<a> in <a> is <a> intersect w <a> w^-1, so the order
    is the trace of the reversed, sign-flipped t letters of the reduced
    word, starting from 1.
    """
    _, signs = reduce_syllables(p, *word_syllables(w))
    x = 1
    for s in reversed(signs):
        x = step(p, x, -s)
    return x


def orbit_order_factorization(
    p: GroupParams, d: int
) -> tuple[int, int, int] | None:
    """Decompose d as g' * (l/|m|)^r * (l/|n|)^s with g' dividing
    gcd(|m|, |n|); None when d has no such shape."""
    beta, alpha = p.l_over_m, p.l_over_n
    for gp in range(1, p.g + 1):
        if p.g % gp or d % gp:
            continue
        v = d // gp
        r = 0
        while beta > 1 and v % beta == 0:
            v //= beta
            r += 1
        s = 0
        while alpha > 1 and v % alpha == 0:
            v //= alpha
            s += 1
        if v == 1:
            return gp, r, s
    return None


def scale_value_set(p: GroupParams, rho_max: int) -> set[int]:
    """All scale values of elements with |t-exponent| <= rho_max."""
    return {p.l_over_m**k for k in range(rho_max + 1)} | {
        p.l_over_n**k for k in range(rho_max + 1)
    }


def _prime_divisors(v: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= v:
        if v % d == 0:
            out.append(d)
            while v % d == 0:
                v //= d
        d += 1
    if v > 1:
        out.append(v)
    return tuple(out)


def structure_report(p: GroupParams, w: Word | None = None) -> StructureReport:
    """Prime content of the tidy factorization V = V+ V- for the completion:
    V+ carries the primes of l/|n| and V- those of l/|m| (the two are
    coprime), with the roles swapped when the queried element has negative
    t-exponent.  The compact open subgroup built from <a> covers V with a
    cyclic quotient of order dividing gcd(|m|, |n|).
    """
    vplus = _prime_divisors(p.l_over_n)
    vminus = _prime_divisors(p.l_over_m)
    swap = w is not None and t_exponent(w) < 0
    if swap:
        vplus, vminus = vminus, vplus
    return StructureReport(
        primes_vplus=vplus,
        primes_vminus=vminus,
        quotient_order_bound=p.g,
        flat_rank=flat_rank(p),
        kernel_exponent=pi_kernel(p),
        swap_applied=swap,
        discrete=p.discrete,
    )
