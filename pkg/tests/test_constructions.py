"""Tests for the instance generators."""

import math
from itertools import combinations

import pytest

from hypermatch.constructions import (
    blocker_family,
    cut_family,
    extremal_star,
    pad_to_perfect,
    perturb_remove,
    random_triples,
)
from hypermatch.core import build, threshold
from oracles import naive_has_k_matching, naive_max_matching


class TestExtremalStar:
    def test_star6_shape(self):
        H, P = extremal_star(6)
        assert len(P.V) == 5 and len(P.W) == 1
        assert H.m == 10
        assert all(any(v in P.W for v in e) for e in H.edges)

    def test_star9_min_degree(self):
        H, _ = extremal_star(9)
        assert H.min_degree(1) == 13 == math.comb(8, 2) - math.comb(6, 2)

    def test_star9_max_matching(self):
        H, _ = extremal_star(9)
        assert naive_max_matching(H) == 2

    @pytest.mark.parametrize("n", [6, 9, 12, 15])
    def test_delta1_formula(self, n):
        H, _ = extremal_star(n)
        assert H.min_degree(1) == math.comb(n - 1, 2) - math.comb(2 * n // 3, 2)
        assert H.min_degree(1) == threshold(n, n // 3)

    def test_refuses_bad_n(self):
        with pytest.raises(ValueError):
            extremal_star(10)
        with pytest.raises(ValueError):
            extremal_star(3)

    def test_edge_count_star9(self):
        # triples meeting W = all minus triples inside V: C(9,3) - C(7,3) = 49
        H, _ = extremal_star(9)
        assert H.m == math.comb(9, 3) - math.comb(7, 3) == 49


class TestCutFamily:
    def test_min_degree_9_3(self):
        H, _ = cut_family(9, 3)
        assert H.min_degree(1) == 18 == math.comb(8, 2) - math.comb(5, 2)

    def test_has_d_matching(self):
        H, _ = cut_family(9, 3)
        assert naive_has_k_matching(H, 3)

    def test_d_zero_empty(self):
        H, _ = cut_family(8, 0)
        assert H.m == 0

    def test_edge_count_9_3(self):
        # 45 with one W endpoint plus 18 with two
        H, _ = cut_family(9, 3)
        assert H.m == math.comb(6, 2) * 3 + 6 * math.comb(3, 2) == 63

    def test_custom_w(self):
        H, P = cut_family(9, 3, W=[0, 1, 2])
        assert sorted(P.W) == [0, 1, 2]
        assert H.min_degree(1) == 18

    @pytest.mark.parametrize("n,d", [(n, d) for n in range(4, 14) for d in range(1, n // 3 + 1)])
    def test_delta1_formula_scan(self, n, d):
        H, _ = cut_family(n, d)
        assert H.min_degree(1) == math.comb(n - 1, 2) - math.comb(n - d - 1, 2)

    def test_delta1_dominates_quadratic_form(self):
        # delta1(cut_family) = d(n - d/2) - 3d/2 >= (1 - 3/n) d (n - d/2),
        # checked in exact integer arithmetic over the whole desk range
        for n in range(9, 201):
            for d in range(1, n // 3 + 1):
                lhs = math.comb(n - 1, 2) - math.comb(n - d - 1, 2)
                assert 2 * n * lhs >= (n - 3) * d * (2 * n - d)


class TestBlockerFamily:
    def test_9_3(self):
        H, P = blocker_family(9, 3)
        assert len(P.W) == 2
        assert naive_max_matching(H) == 2

    def test_d1_empty(self):
        H, _ = blocker_family(10, 1)
        assert H.m == 0

    def test_12_2_delta(self):
        H, _ = blocker_family(12, 2)
        assert H.min_degree(1) == math.comb(11, 2) - math.comb(10, 2) == 10
        assert H.min_degree(1) == threshold(12, 2)

    @pytest.mark.parametrize("n,d", [(n, d) for n in range(6, 13) for d in range(2, n // 3 + 1)])
    def test_delta_equals_threshold(self, n, d):
        H, P = blocker_family(n, d)
        assert H.min_degree(1) == threshold(n, d)
        # V-vertex degree is C(n-1,2) - C(|V|-1,2)
        v = P.V[0]
        assert H.degree(v) == math.comb(n - 1, 2) - math.comb(len(P.V) - 1, 2)


class TestRandomTriples:
    def test_p_extremes(self):
        assert random_triples(8, 0.0, 1).m == 0
        assert random_triples(8, 1.0, 1).m == math.comb(8, 3)

    def test_determinism(self):
        a = random_triples(12, 0.5, seed=1)
        b = random_triples(12, 0.5, seed=1)
        assert a == b

    def test_seed_matters(self):
        assert random_triples(12, 0.5, 1) != random_triples(12, 0.5, 2)

    def test_frozen_vector(self):
        # reference vector for cross-implementation checks
        H = random_triples(7, 0.5, seed=42)
        assert H.m == 15
        assert H.edges[:3] == ((0, 1, 3), (0, 1, 4), (0, 1, 5))

    def test_bad_p(self):
        with pytest.raises(ValueError):
            random_triples(6, 1.5, 0)


class TestPerturbRemove:
    def test_k_zero(self):
        H, _ = cut_family(9, 3)
        assert perturb_remove(H, 0, 7) == H

    def test_k_all(self):
        H, _ = cut_family(9, 3)
        assert perturb_remove(H, H.m, 7).m == 0

    def test_removed_count(self):
        H, _ = cut_family(12, 4)
        Hp = perturb_remove(H, 5, seed=3)
        assert Hp.m == H.m - 5
        assert Hp.edge_set < H.edge_set

    def test_determinism(self):
        H, _ = cut_family(12, 4)
        assert perturb_remove(H, 5, seed=3) == perturb_remove(H, 5, seed=3)

    def test_bad_k(self):
        H, _ = cut_family(9, 3)
        with pytest.raises(ValueError):
            perturb_remove(H, H.m + 1, 0)


class TestPadToPerfect:
    def test_no_padding_needed(self):
        H, _ = cut_family(12, 4)
        assert pad_to_perfect(H, 4) == H

    def test_pad_12_2(self):
        H, _ = cut_family(12, 2)
        Hp = pad_to_perfect(H, 2)
        assert Hp.n == 15
        assert Hp.degree(12) == math.comb(14, 2) == 91

    def test_old_edges_kept(self):
        H, _ = cut_family(10, 2)
        Hp = pad_to_perfect(H, 2)
        assert H.edge_set <= Hp.edge_set

    @pytest.mark.parametrize("n,d", [(n, d) for n in range(6, 31, 3) for d in (1, 2, n // 3)])
    def test_padded_degree_bound(self, n, d):
        # whenever delta1(H) > threshold(n, d), the padded hypergraph clears
        # the near-perfect boundary on its own order
        H, _ = cut_family(n, d)
        assert H.min_degree(1) > threshold(n, d)
        Hp = pad_to_perfect(H, d)
        n2 = Hp.n
        bound = math.comb(n2 - 1, 2) - math.comb(n2 - n2 // 3, 2)
        assert Hp.min_degree(1) > bound
