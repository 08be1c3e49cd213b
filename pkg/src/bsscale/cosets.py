"""Brute-force ground truth on the Bass-Serre tree of BS(m, n).

A radius-R ball of the tree is enumerated as canonical left cosets of <a>
(vertices), with the partial permutation action of the generators and
orbit/index scans that decide everything through word reduction alone,
independently of the intersection-graph calculus.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import BudgetError, InvariantError
from .invariants import orbit_order, orbit_order_factorization
from .normal_forms import CosetId, coset_of, coset_word
from .params import GroupParams
from .words import (
    Word,
    as_power_of_a,
    format_word,
    invert_word,
    reduce_syllables,
    word_syllables,
)

DEFAULT_BUDGET = 200_000


@dataclass
class CosetTable:
    """A radius-R ball: vertices in BFS order (children enumerated t-label
    first, then by transversal residue), tree edges (parent, child, label),
    and the boundary vertex set."""

    params: GroupParams
    radius: int
    vertices: list[CosetId]
    edges: list[tuple[int, int, int]]
    boundary: frozenset[int]
    index: dict[CosetId, int] = field(repr=False)

    def vertex_word(self, v: int) -> Word:
        return coset_word(self.vertices[v])

    def as_dict(self) -> dict:
        return {
            "m": self.params.m,
            "n": self.params.n,
            "radius": self.radius,
            "vertices": [format_word(self.vertex_word(v)) or "e"
                         for v in range(len(self.vertices))],
            "edges": [list(e) for e in self.edges],
        }


def _ball_size(p: GroupParams, radius: int) -> int:
    deg = abs(p.m) + abs(p.n)
    total, shell = 1, deg
    for _ in range(radius):
        total += shell
        shell *= deg - 1
    return total


def enumerate_ball(
    p: GroupParams, radius: int, budget: int = DEFAULT_BUDGET
) -> CosetTable:
    """BFS enumeration of all cosets within tree distance ``radius`` of <a>.

    Each vertex u<a> has the |n| neighbors u a^c t <a> (c mod |n|) and the
    |m| neighbors u a^c t^-1 <a> (c mod |m|); one of them is u's parent, the
    rest are children, so interior vertices have degree |m| + |n|.
    """
    expected = _ball_size(p, radius)
    if expected > budget:
        raise BudgetError(
            f"radius {radius} ball has {expected} vertices, over budget {budget}"
        )
    base: CosetId = ()
    vertices = [base]
    index = {base: 0}
    edges: list[tuple[int, int, int]] = []
    frontier = [0]
    for _ in range(radius):
        nxt: list[int] = []
        for v in frontier:
            syll = vertices[v]
            for eps, count in ((1, abs(p.n)), (-1, abs(p.m))):
                for c in range(count):
                    if syll and syll[-1][1] == -eps and c == 0:
                        continue  # backtracks to the parent coset
                    child = syll + ((c, eps),)
                    idx = len(vertices)
                    vertices.append(child)
                    index[child] = idx
                    edges.append((v, idx, eps))
                    nxt.append(idx)
        frontier = nxt
    return CosetTable(
        params=p,
        radius=radius,
        vertices=vertices,
        edges=edges,
        boundary=frozenset(frontier),
        index=index,
    )


def act(p: GroupParams, table: CosetTable, gen: str, v: int) -> int | None:
    """Vertex index of gen * (coset v), or None when the image falls outside
    the ball.  gen is one of 'a', 'A', 't', 'T'."""
    if gen not in "aAtT":
        raise ValueError(f"generator must be one of a, A, t, T, got {gen!r}")
    image = coset_of(p, gen + table.vertex_word(v))
    return table.index.get(image)


def orbit_order_bruteforce(
    p: GroupParams, w: Word, d_max: int | None = None
) -> int | None:
    """Minimal d in 1..d_max with w^-1 a^d w a power of a, by direct scan;
    None if the scan bound is passed (with the default bound that signals
    a bug, not a property of the input)."""
    if d_max is None:
        d_max = default_scan_bound(p, w)
    we, ws = word_syllables(w)
    ie, is_ = word_syllables(invert_word(w))
    signs = is_ + ws
    for d in range(1, d_max + 1):
        exps = ie[:-1] + [ie[-1] + d + we[0]] + we[1:]
        _, left = reduce_syllables(p, exps, signs)
        if not left:
            return d
    return None


def index_bruteforce(
    p: GroupParams, w: Word, k: int, d_max: int | None = None
) -> int | None:
    """Minimal e in 1..d_max with w^k a^e w^-k a power of a: the generator
    exponent of <a> intersect w^-k <a> w^k, whose value is the index
    [<a> : <a> intersect w^-k <a> w^k].  None if the scan bound is passed.
    """
    if d_max is None:
        d_max = default_scan_bound(p, w, k)
    pe, ps = _power_syllables(p, w, k)
    ie, is_ = _power_syllables(p, invert_word(w), k)
    signs = ps + is_
    for e in range(1, d_max + 1):
        exps = pe[:-1] + [pe[-1] + e + ie[0]] + ie[1:]
        _, left = reduce_syllables(p, exps, signs)
        if not left:
            return e
    return None


def _power_syllables(p: GroupParams, w: Word, k: int):
    we, ws = word_syllables(w)
    exps = list(we)
    signs = list(ws)
    for _ in range(k - 1):
        exps[-1] += we[0]
        exps.extend(we[1:])
        signs.extend(ws)
    return exps, signs


def default_scan_bound(p: GroupParams, w: Word, k: int = 1) -> int:
    """Scan ceiling g * (l/|m|)^B * (l/|n|)^B with B the t-letter count of
    w^k; orbit and index values always sit below it."""
    b = k * sum(1 for ch in w if ch in "tT")
    return p.g * p.l_over_m**b * p.l_over_n**b


def step_bruteforce(p: GroupParams, x: int, eps: int) -> int:
    """Intersection exponent of t^(-eps) <a^x> t^(eps) with <a> found by
    scanning multiples of x through word reduction (no transition formula).
    """
    modulus = abs(p.n) if eps > 0 else abs(p.m)
    left, right = ("T", "t") if eps > 0 else ("t", "T")
    for c in range(1, modulus + 1):
        val = as_power_of_a(p, left + _a_word(x * c) + right)
        if val is not None:
            return abs(val)
    raise InvariantError(f"no multiple of {x} up to {modulus} conjugates into <a>")


def _a_word(e: int) -> Word:
    return "a" * e if e >= 0 else "A" * (-e)


def orbit_census(
    p: GroupParams, radius: int, budget: int = DEFAULT_BUDGET
) -> Counter[int]:
    """Multiset of <a>-orbit orders over all vertices of the radius ball.

    Every order must decompose as g' (l/|m|)^r (l/|n|)^s with g' dividing
    gcd(|m|, |n|); a violation raises, since it would falsify the orbit
    arithmetic this module cross-checks.
    """
    table = enumerate_ball(p, radius, budget=budget)
    census: Counter[int] = Counter()
    for v in range(len(table.vertices)):
        d = orbit_order(p, table.vertex_word(v))
        if orbit_order_factorization(p, d) is None:
            raise InvariantError(f"orbit order {d} outside the admissible shape")
        census[d] += 1
    return census


def export_dot(table: CosetTable) -> str:
    """DOT digraph of the ball: vertices labeled by compact coset words,
    t edges solid, t^-1 edges dashed."""
    lines = [
        f"digraph ball {{  // BS({table.params.m},{table.params.n}) "
        f"radius {table.radius}"
    ]
    for v in range(len(table.vertices)):
        label = format_word(table.vertex_word(v)) or "e"
        lines.append(f'  v{v} [label="{label}"];')
    for src, dst, eps in table.edges:
        if eps > 0:
            lines.append(f'  v{src} -> v{dst} [label="t"];')
        else:
            lines.append(f'  v{src} -> v{dst} [label="t^-1", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"
