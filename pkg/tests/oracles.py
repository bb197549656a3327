"""Independent brute-force oracles used by the tests.

These deliberately avoid the package's search code: matchings are found
by raw combination enumeration, pattern perfect matchings by the 3x3
permanent.  They are slow and obviously correct, which is the point.
"""

from itertools import combinations, permutations


def naive_max_matching(H) -> int:
    """Largest k such that some k edges are pairwise disjoint (combinations scan)."""
    masks = H.edge_masks
    for k in range(H.n // 3, 0, -1):
        for combo in combinations(masks, k):
            total = 0
            ok = True
            for m in combo:
                if total & m:
                    ok = False
                    break
                total |= m
            if ok:
                return k
    return 0


def naive_has_k_matching(H, k: int) -> bool:
    if k == 0:
        return True
    for combo in combinations(H.edge_masks, k):
        total = 0
        ok = True
        for m in combo:
            if total & m:
                ok = False
                break
            total |= m
        if ok:
            return True
    return False


def permanent3(mask: int) -> int:
    """Permanent of the 3x3 biadjacency matrix encoded row-major in 9 bits."""
    total = 0
    for perm in permutations(range(3)):
        total += (
            (mask >> (3 * 0 + perm[0]) & 1)
            * (mask >> (3 * 1 + perm[1]) & 1)
            * (mask >> (3 * 2 + perm[2]) & 1)
        )
    return total


def pairing_has_pm_n6(H) -> bool:
    """Perfect matching on 6 vertices by direct check of the 10 triple pairings."""
    assert H.n == 6
    vs = list(range(6))
    for two in combinations(vs[1:], 2):
        t1 = tuple(sorted((vs[0],) + two))
        t2 = tuple(sorted(set(vs) - set(t1)))
        if t1 in H.edge_set and t2 in H.edge_set:
            return True
    return False
