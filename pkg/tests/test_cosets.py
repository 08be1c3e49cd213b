"""Tree-ball enumeration, generator actions, and brute-force cross-checks."""

import re
from random import Random

import pytest

from bsscale import (
    BudgetError,
    GroupParams,
    act,
    enumerate_ball,
    export_dot,
    index_bruteforce,
    orbit_census,
    orbit_order,
    orbit_order_bruteforce,
    orbit_order_factorization,
    trace,
)
from bsscale.sampling import random_pinch_free_word

P23 = GroupParams(2, 3)
P24 = GroupParams(2, 4)
P46 = GroupParams(4, 6)


class TestEnumerateBall:
    def test_radius_zero(self):
        t = enumerate_ball(P23, 0)
        assert len(t.vertices) == 1 and len(t.edges) == 0
        assert t.boundary == {0}

    def test_radius_one_counts(self):
        t = enumerate_ball(P23, 1)
        assert len(t.vertices) == 6  # base + 3 t-children + 2 T-children
        assert len(t.edges) == 5

    def test_radius_two_counts(self):
        t = enumerate_ball(P23, 2)
        assert len(t.vertices) == 26  # 6 + 5 * 4
        assert len(t.edges) == 25

    def test_tree_identity_and_uniqueness(self):
        for p in (P23, P46, GroupParams(2, -3)):
            t = enumerate_ball(p, 3)
            assert len(t.vertices) == len(t.edges) + 1
            assert len(set(t.vertices)) == len(t.vertices)

    def test_interior_degree(self):
        t = enumerate_ball(P23, 2)
        deg = [0] * len(t.vertices)
        for src, dst, _ in t.edges:
            deg[src] += 1
            deg[dst] += 1
        for v in range(len(t.vertices)):
            if v not in t.boundary:
                assert deg[v] == 5  # |m| + |n|

    def test_budget(self):
        with pytest.raises(BudgetError):
            enumerate_ball(P23, 10, budget=1000)

    def test_outgoing_edge_labels(self):
        t = enumerate_ball(P46, 1)
        t_edges = [e for e in t.edges if e[0] == 0 and e[2] == 1]
        inv_edges = [e for e in t.edges if e[0] == 0 and e[2] == -1]
        assert len(t_edges) == 6 and len(inv_edges) == 4


class TestAct:
    def test_a_fixes_base(self):
        t = enumerate_ball(P23, 1)
        assert act(P23, t, "a", 0) == 0

    def test_t_moves_base(self):
        t = enumerate_ball(P23, 1)
        v = act(P23, t, "t", 0)
        assert t.vertices[v] == ((0, 1),)

    def test_orbit_of_t_coset(self):
        t = enumerate_ball(P23, 1)
        v0 = act(P23, t, "t", 0)
        v1 = act(P23, t, "a", v0)
        v2 = act(P23, t, "a", v1)
        v3 = act(P23, t, "a", v2)
        assert len({v0, v1, v2}) == 3 and v3 == v0

    def test_a_and_inverse_are_inverse_permutations(self):
        t = enumerate_ball(P23, 2)
        for v in range(len(t.vertices)):
            img = act(P23, t, "a", v)
            assert img is not None
            assert act(P23, t, "A", img) == v

    def test_partial_at_boundary(self):
        t = enumerate_ball(P23, 1)
        outside = [v for v in t.boundary if act(P23, t, "t", v) is None]
        assert outside  # t-images of boundary t-children leave the ball

    def test_total_away_from_boundary(self):
        t = enumerate_ball(P23, 2)
        for v in range(len(t.vertices)):
            if v in t.boundary:
                continue
            for gen in "aAtT":
                assert act(P23, t, gen, v) is not None


class TestBruteForce:
    def test_orbit_scan_values(self):
        assert orbit_order_bruteforce(P23, "t", 10) == 3
        assert orbit_order_bruteforce(P23, "tt", 10) == 9
        assert orbit_order_bruteforce(P23, "a", 1) == 1

    def test_orbit_scan_respects_bound(self):
        assert orbit_order_bruteforce(P23, "tt", 8) is None

    def test_index_scan_values(self):
        assert index_bruteforce(P23, "t", 3) == 8
        assert index_bruteforce(P23, "a", 2) == 1
        assert index_bruteforce(P24, "T", 2) == 8

    def test_orbit_matches_trace_route(self):
        rng = Random(7)
        for p in (P23, P46, GroupParams(3, 2)):
            for _ in range(40):
                w = random_pinch_free_word(p, rng, max_len=7)
                assert orbit_order(p, w) == orbit_order_bruteforce(p, w)

    def test_index_matches_trace_route(self):
        rng = Random(8)
        for p in (P23, P24, GroupParams(3, 2)):
            for _ in range(30):
                w = random_pinch_free_word(p, rng, max_len=8)
                assert index_bruteforce(p, w, 1) == trace(p, w)

    def test_index_matches_trace_at_powers(self):
        from bsscale import conjugacy_normalize

        rng = Random(9)
        for p in (P23, P24, GroupParams(3, 2)):
            for _ in range(12):
                z = conjugacy_normalize(p, random_pinch_free_word(p, rng, max_len=8, max_t=4))
                for k in (1, 2, 3):
                    expected = trace(p, z * k) if z else 1
                    assert index_bruteforce(p, z, k) == expected


class TestCensus:
    def test_radius_zero(self):
        assert dict(orbit_census(P23, 0)) == {1: 1}

    def test_radius_one(self):
        assert dict(orbit_census(P23, 1)) == {1: 1, 3: 3, 2: 2}

    def test_common_factor_group(self):
        census = orbit_census(P46, 1)
        assert census[1] == 1
        for order in census:
            assert orbit_order_factorization(P46, order) is not None

    def test_a_cycles_appear_in_census(self):
        t = enumerate_ball(P23, 2)
        census = orbit_census(P23, 2)
        seen = set()
        cycle_lengths = set()
        for v in range(len(t.vertices)):
            if v in seen:
                continue
            cycle = [v]
            cur = act(P23, t, "a", v)
            while cur is not None and cur != v:
                cycle.append(cur)
                cur = act(P23, t, "a", cur)
            if cur == v:
                seen.update(cycle)
                cycle_lengths.add(len(cycle))
        assert cycle_lengths <= set(census)


class TestDot:
    def test_single_vertex(self):
        dot = export_dot(enumerate_ball(P23, 0))
        assert 'v0 [label="e"]' in dot

    def test_radius_one_shape(self):
        dot = export_dot(enumerate_ball(P23, 1))
        assert len(re.findall(r'-> v\d+ \[label="t"\]', dot)) == 3
        assert dot.count("style=dashed") == 2

    def test_reparses_to_same_counts(self):
        t = enumerate_ball(P23, 2)
        dot = export_dot(t)
        nodes = re.findall(r"^\s*v(\d+) \[label=", dot, re.M)
        edges = re.findall(r"^\s*v(\d+) -> v(\d+)", dot, re.M)
        assert len(nodes) == len(t.vertices)
        assert len(edges) == len(t.edges)

    def test_deterministic(self):
        assert export_dot(enumerate_ball(P23, 2)) == export_dot(enumerate_ball(P23, 2))


def test_table_json_dump():
    t = enumerate_ball(P23, 1)
    d = t.as_dict()
    assert d["m"] == 2 and d["n"] == 3 and d["radius"] == 1
    assert d["vertices"][0] == "e"
    assert len(d["edges"]) == 5
    assert all(len(e) == 3 for e in d["edges"])
