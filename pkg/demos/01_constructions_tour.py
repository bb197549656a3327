"""Tour of the instance generators and their degree identities."""

from math import comb

from hypermatch.constructions import blocker_family, cut_family, extremal_star, pad_to_perfect
from hypermatch.core import threshold

print("=== star family (all edges through a small class) ===")
for n in (6, 9, 12, 15):
    H, P = extremal_star(n)
    formula = comb(n - 1, 2) - comb(2 * n // 3, 2)
    print(
        f"n={n:2d}: |V|={len(P.V):2d} |W|={len(P.W)} edges={H.m:3d} "
        f"delta1={H.min_degree(1):3d} (= C(n-1,2)-C(2n/3,2) = {formula})"
    )

print("\n=== cut family (every edge crosses the (V, W) split) ===")
for n, d in ((9, 3), (12, 4), (15, 5)):
    H, P = cut_family(n, d)
    formula = comb(n - 1, 2) - comb(n - d - 1, 2)
    print(f"n={n:2d} d={d}: edges={H.m:3d} delta1={H.min_degree(1):3d} (formula {formula})")

print("\n=== blocker family (degree exactly at the d-matching boundary) ===")
for n, d in ((9, 3), (12, 2), (15, 5)):
    H, P = blocker_family(n, d)
    print(f"n={n:2d} d={d}: |W|={len(P.W)} delta1={H.min_degree(1):3d} threshold(n,d)={threshold(n, d):3d}")

print("\n=== padding a small-d question up to near-perfect size ===")
H, _ = cut_family(12, 2)
Hp = pad_to_perfect(H, 2)
print(f"order 12 -> {Hp.n}, new-vertex degree {Hp.degree(12)} (= C({Hp.n - 1},2) = {comb(Hp.n - 1, 2)})")
