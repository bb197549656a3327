"""Generators for extremal, near-extremal and random instances.

All generators that come with a natural two-class structure return the
Partition along with the hypergraph, so callers never have to re-infer
it.  The distinguished class W always sits at the top of the index range
unless the caller supplies one.

Randomness is a seeded splitmix64 stream (documented below), chosen so
that any implementation in any language can reproduce the exact same
instances from (n, p, seed).
"""

from __future__ import annotations

from itertools import combinations

from .core import Hypergraph3, Partition

__all__ = [
    "extremal_star",
    "cut_family",
    "blocker_family",
    "random_triples",
    "perturb_remove",
    "pad_to_perfect",
    "splitmix64_stream",
]

_M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64_stream(seed: int):
    """Yield the standard splitmix64 output stream for a 64-bit seed.

    state_{i+1} = state_i + 0x9E3779B97F4A7C15 (mod 2^64), output is the
    usual xor-shift/multiply finalizer of the new state.  This is the
    reference generator for every seeded construction in this module.
    """
    s = seed & _M64
    while True:
        s = (s + _GOLDEN) & _M64
        z = s
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        yield z ^ (z >> 31)


def extremal_star(n: int) -> tuple[Hypergraph3, Partition]:
    """The tight example for the perfect-matching degree bound.

    Classes V and W of sizes 2n/3 + 1 and n/3 - 1; the edges are exactly
    the triples with at least one endpoint in W.  Every matching edge
    spends a W-vertex, so the maximum matching has size n/3 - 1: one
    short of perfect, while the minimum degree is exactly
    C(n-1,2) - C(2n/3,2).
    """
    if n < 6:
        raise ValueError("need n >= 6")
    if n % 3 != 0:
        raise ValueError("the construction needs n divisible by 3")
    return blocker_family(n, n // 3)


def cut_family(n: int, d: int, W=None) -> tuple[Hypergraph3, Partition]:
    """All triples with exactly one or two endpoints in a class W of size d.

    The densest hypergraph in which no edge lies inside V or inside W.
    It has a d-matching (pair up W with V two at a time) and minimum
    degree C(n-1,2) - C(n-d-1,2), attained on V.
    """
    if d < 0 or 3 * d > n:
        raise ValueError("need 0 <= d <= n/3")
    if W is None:
        W = range(n - d, n)
    Wset = frozenset(W)
    if len(Wset) != d:
        raise ValueError(f"W must have exactly {d} vertices")
    edges = [
        e for e in combinations(range(n), 3) if 1 <= sum(v in Wset for v in e) <= 2
    ]
    return Hypergraph3(n, edges), Partition(n, Wset, d)


def blocker_family(n: int, d: int) -> tuple[Hypergraph3, Partition]:
    """All triples meeting a blocker class W of size d - 1.

    Every edge spends a W-vertex, so the maximum matching is d - 1, while
    the minimum degree equals the d-matching boundary C(n-1,2) - C(n-d,2)
    exactly (attained on V; boundary, not exceeding).
    """
    if d < 1 or 3 * d > n:
        raise ValueError("need 1 <= d <= n/3")
    W = frozenset(range(n - (d - 1), n))
    edges = [e for e in combinations(range(n), 3) if any(v in W for v in e)]
    return Hypergraph3(n, edges), Partition(n, W, d)


def random_triples(n: int, p: float, seed: int) -> Hypergraph3:
    """Include each of the C(n,3) triples independently with probability p.

    Triples are enumerated in lexicographic order; triple i is included
    iff the i-th splitmix64 output for `seed` is < floor(p * 2^64).  Two
    runs (in any conforming implementation) with equal (n, p, seed)
    produce identical edge sets.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    cut = int(p * 2**64)
    rng = splitmix64_stream(seed)
    edges = [e for e in combinations(range(n), 3) if next(rng) < cut]
    return Hypergraph3(n, edges)


def perturb_remove(H: Hypergraph3, k: int, seed: int) -> Hypergraph3:
    """Remove k uniformly chosen edges (partial Fisher-Yates on the edge list)."""
    if not 0 <= k <= H.m:
        raise ValueError(f"k must be in 0..{H.m}")
    idx = list(range(H.m))
    rng = splitmix64_stream(seed)
    for j in range(k):
        r = j + next(rng) % (H.m - j)
        idx[j], idx[r] = idx[r], idx[j]
    dropped = set(idx[:k])
    return Hypergraph3(H.n, [e for i, e in enumerate(H.edges) if i not in dropped])


def pad_to_perfect(H: Hypergraph3, d: int) -> Hypergraph3:
    """Pad with universal vertices so a d-matching question becomes near-perfect.

    Adds a = floor((n - 3d)/2) new vertices, each forming an edge with
    every pair of other vertices of the padded hypergraph.  If the
    original minimum degree exceeds the d-matching boundary, the padded
    one exceeds the floor(n'/3)-matching boundary on its order n'.
    """
    if d < 0 or 3 * d > H.n:
        raise ValueError("need 0 <= d <= n/3")
    a = (H.n - 3 * d) // 2
    if a == 0:
        return H
    n2 = H.n + a
    edges = list(H.edges)
    # new vertices are the top indices, so "meets a new vertex" = max >= old n
    edges.extend(e for e in combinations(range(n2), 3) if e[2] >= H.n)
    return Hypergraph3(n2, edges)
