"""Tests for the branch-and-bound matching oracle."""

from itertools import combinations

import pytest

from hypermatch.constructions import cut_family, extremal_star, random_triples
from hypermatch.core import Matching, build
from hypermatch.exact import SolveBudget, has_d_matching, max_matching, max_matching_in_subset
from oracles import naive_max_matching, pairing_has_pm_n6


def complete(n):
    return build(n, combinations(range(n), 3))


class TestMaxMatching:
    def test_empty(self):
        rep = max_matching(build(7, []))
        assert rep.size == 0 and rep.optimal

    def test_complete_k9(self):
        rep = max_matching(complete(9))
        assert rep.size == 3 and rep.optimal

    def test_star9_certified(self):
        H, _ = extremal_star(9)
        rep = max_matching(H)
        assert rep.size == 2 and rep.optimal

    def test_matching_always_valid(self):
        for seed in range(10):
            H = random_triples(9, 0.4, seed)
            rep = max_matching(H, SolveBudget(node_limit=25))
            Matching(H, rep.edges)  # validates disjointness + membership

    def test_budget_exhaustion_is_report(self):
        H = complete(12)
        rep = max_matching(H, SolveBudget(node_limit=2))
        assert not rep.optimal
        assert rep.detail == "node budget exhausted"
        Matching(H, rep.edges)

    def test_determinism(self):
        H = random_triples(11, 0.5, 17)
        a = max_matching(H)
        b = max_matching(H)
        assert (a.size, a.edges, a.nodes, a.optimal) == (b.size, b.edges, b.nodes, b.optimal)

    def test_against_naive_oracle(self):
        for seed in range(60):
            n = 5 + seed % 5
            H = random_triples(n, 0.1 * (1 + seed % 9), seed)
            rep = max_matching(H)
            assert rep.optimal
            assert rep.size == naive_max_matching(H), f"seed={seed}"

    def test_monotone_under_edge_addition(self):
        for seed in range(12):
            H_small = random_triples(12, 0.2, seed)
            H_big = build(12, H_small.edges + random_triples(12, 0.2, seed + 100).edges)
            assert max_matching(H_small).size <= max_matching(H_big).size

    def test_perfect_matching_n6_vs_pairings(self):
        for seed in range(40):
            H = random_triples(6, 0.05 * (1 + seed % 18), seed)
            rep = max_matching(H)
            assert (rep.size == 2) == pairing_has_pm_n6(H)


class TestHasDMatching:
    def test_cut_family_yes(self):
        H, _ = cut_family(9, 3)
        status, rep = has_d_matching(H, 3)
        assert status == "yes"
        assert rep.size >= 3
        Matching(H, rep.edges)

    def test_star_no(self):
        H, _ = extremal_star(9)
        status, rep = has_d_matching(H, 3)
        assert status == "no" and rep.optimal

    def test_d_zero(self):
        status, _ = has_d_matching(build(4, []), 0)
        assert status == "yes"

    def test_unknown_on_tiny_budget(self):
        H, _ = extremal_star(12)
        status, _ = has_d_matching(H, 4, SolveBudget(node_limit=3))
        assert status == "unknown"


class TestSubsetSolve:
    def test_full_subset_equals_max(self):
        H = random_triples(10, 0.5, 3)
        assert max_matching_in_subset(H, range(10)).size == max_matching(H).size

    def test_single_edge_subset(self):
        H = complete(9)
        rep = max_matching_in_subset(H, [0, 1, 2])
        assert rep.size == 1 and rep.edges == ((0, 1, 2),)

    def test_six_vertex_absorption_check(self):
        H = complete(9)
        assert max_matching_in_subset(H, [0, 1, 2, 3, 4, 5]).size == 2
        Hs, P = extremal_star(9)
        # one blocker vertex among 6: two disjoint edges would need two
        e = next(e for e in Hs.edges if sum(v in P.W for v in e) == 1)
        T = [v for v in P.V if v not in e][:3]
        assert max_matching_in_subset(Hs, list(e) + T).size == 1

    def test_rejects_bad_vertex(self):
        with pytest.raises(ValueError):
            max_matching_in_subset(complete(6), [0, 9])


def test_budget_validation():
    with pytest.raises(ValueError):
        SolveBudget(node_limit=0)
    with pytest.raises(ValueError):
        SolveBudget(time_limit_ms=-1)
