"""Core types for 3-uniform hypergraphs on dense integer vertices.

Vertices are the indices 0..n-1.  Edges are unordered 3-element subsets,
stored canonically: each triple sorted ascending, the edge list sorted
lexicographically, duplicates removed.  Alongside the edge list every
hypergraph keeps one incidence bitmask per vertex (bit i set iff edge i
contains the vertex), so degree, codegree and link extraction are
word-level operations at the instance sizes this library targets.

All objects here are immutable after construction; operations that
"modify" a hypergraph return a new one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "Hypergraph3",
    "Partition",
    "Matching",
    "DegreeProfile",
    "build",
    "threshold",
    "edge_type",
    "degree_profile",
    "to_h3",
    "parse_h3",
    "write_h3",
    "read_h3",
]

Edge = tuple[int, int, int]


def _canon_edge(edge, n: int) -> Edge:
    t = tuple(sorted(int(v) for v in edge))
    if len(t) != 3 or len(set(t)) != 3:
        raise ValueError(f"edge {edge!r} must have exactly 3 distinct vertices")
    if t[0] < 0 or t[2] >= n:
        raise ValueError(f"edge {edge!r} has a vertex outside 0..{n - 1}")
    return t


class Hypergraph3:
    """A 3-uniform hypergraph with canonical edge storage.

    Attributes
    ----------
    n : number of vertices (indices 0..n-1; n = 0 is legal and empty).
    edges : tuple of sorted vertex triples, lexicographically ordered.
    edge_set : frozenset of the same triples, for O(1) membership.
    edge_masks : per-edge vertex bitmask (bit v set iff v in edge).
    incidence : per-vertex bitmask over edge indices.
    """

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = int(n)
        self.edges: tuple[Edge, ...] = tuple(sorted({_canon_edge(e, n) for e in edges}))
        self.edge_set = frozenset(self.edges)
        self.edge_masks = tuple((1 << a) | (1 << b) | (1 << c) for a, b, c in self.edges)
        self.edge_mask_set = frozenset(self.edge_masks)
        inc = [0] * self.n
        for i, (a, b, c) in enumerate(self.edges):
            bit = 1 << i
            inc[a] |= bit
            inc[b] |= bit
            inc[c] |= bit
        self.incidence = tuple(inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, edge) -> bool:
        return tuple(sorted(edge)) in self.edge_set

    def _check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")
        return v

    def degree(self, v: int) -> int:
        """Number of edges containing v."""
        return self.incidence[self._check_vertex(v)].bit_count()

    def codegree(self, u: int, v: int) -> int:
        """Number of edges containing both u and v."""
        if u == v:
            raise ValueError("codegree requires two distinct vertices")
        return (self.incidence[self._check_vertex(u)] & self.incidence[self._check_vertex(v)]).bit_count()

    def min_degree(self, ell: int = 1) -> int:
        """Minimum degree (ell=1) or minimum codegree (ell=2) over the whole graph."""
        if ell == 1:
            if self.n == 0:
                raise ValueError("minimum degree of an empty vertex set is undefined")
            return min(self.incidence[v].bit_count() for v in range(self.n))
        if ell == 2:
            if self.n < 2:
                raise ValueError("minimum codegree needs at least 2 vertices")
            return min(
                (self.incidence[u] & self.incidence[v]).bit_count()
                for u, v in combinations(range(self.n), 2)
            )
        raise ValueError("ell must be 1 or 2")

    def remove_vertices(self, remove) -> tuple["Hypergraph3", tuple[int, ...]]:
        """Delete a vertex set and every edge meeting it.

        The surviving vertices are reindexed to 0..n'-1 in increasing order
        of their old labels.  Returns (subhypergraph, new_to_old) where
        new_to_old[i] is the old label of new vertex i.
        """
        gone = set(remove)
        for v in gone:
            self._check_vertex(v)
        kept = tuple(v for v in range(self.n) if v not in gone)
        old_to_new = {v: i for i, v in enumerate(kept)}
        sub_edges = [
            (old_to_new[a], old_to_new[b], old_to_new[c])
            for a, b, c in self.edges
            if a not in gone and b not in gone and c not in gone
        ]
        return Hypergraph3(len(kept), sub_edges), kept

    def __eq__(self, other):
        return (
            isinstance(other, Hypergraph3)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph3(n={self.n}, m={self.m})"


def build(n: int, edges) -> Hypergraph3:
    """Build a hypergraph from raw triples (validated, deduplicated, sorted)."""
    return Hypergraph3(n, edges)


def threshold(n: int, d: int) -> int:
    """Minimum-degree boundary for a d-matching: C(n-1,2) - C(n-d,2).

    A hypergraph whose minimum degree strictly exceeds this value is the
    regime where a d-matching is forced (for d <= n/3 and n large); the
    blocker construction attains the value exactly without a d-matching.
    """
    if d < 1 or 3 * d > n:
        raise ValueError("need 1 <= d <= n/3")
    return math.comb(n - 1, 2) - math.comb(n - d, 2)


@dataclass(frozen=True)
class Partition:
    """A two-class vertex partition (V, W) with a target matching size d.

    W is the distinguished (usually small) class; V is everything else.
    d is the matching size the partition is associated with, which need
    not equal |W| (the blocker family uses |W| = d - 1).
    """

    n: int
    W: frozenset[int]
    d: int

    def __init__(self, n: int, W, d: int):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "W", frozenset(int(v) for v in W))
        object.__setattr__(self, "d", int(d))
        if any(v < 0 or v >= self.n for v in self.W):
            raise ValueError("W contains a vertex outside 0..n-1")
        if self.d < 0 or 3 * self.d > self.n:
            raise ValueError("need 0 <= d <= n/3")

    @property
    def V(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if v not in self.W)

    def w_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.W))


def edge_type(edge, partition: Partition) -> str:
    """Type tag of a triple against a partition: VVV, VVW, VWW or WWW."""
    k = sum(1 for v in edge if v in partition.W)
    return ("VVV", "VVW", "VWW", "WWW")[k]


@dataclass
class Matching:
    """A set of pairwise-disjoint edges of a host hypergraph.

    Validates membership and disjointness on construction.  Exposes the
    covered vertex set and its complement (the uncovered vertices).
    """

    host: Hypergraph3
    edges: tuple[Edge, ...]

    def __init__(self, host: Hypergraph3, edges):
        self.host = host
        self.edges = tuple(tuple(sorted(e)) for e in edges)
        seen: set[int] = set()
        for e in self.edges:
            if e not in host.edge_set:
                raise ValueError(f"{e} is not an edge of the host hypergraph")
            if seen & set(e):
                raise ValueError(f"edge {e} overlaps another matching edge")
            seen.update(e)
        self._covered = frozenset(seen)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def covered(self) -> frozenset[int]:
        return self._covered

    @property
    def uncovered(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.host.n) if v not in self._covered)

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degrees, per-pair codegrees and their minima."""

    degrees: tuple[int, ...]
    codegrees: dict[tuple[int, int], int]
    delta1: int
    delta2: int | None


def degree_profile(H: Hypergraph3) -> DegreeProfile:
    if H.n == 0:
        raise ValueError("degree profile of an empty vertex set is undefined")
    degs = tuple(H.incidence[v].bit_count() for v in range(H.n))
    cods = {
        (u, v): (H.incidence[u] & H.incidence[v]).bit_count()
        for u, v in combinations(range(H.n), 2)
    }
    return DegreeProfile(
        degrees=degs,
        codegrees=cods,
        delta1=min(degs),
        delta2=min(cods.values()) if cods else None,
    )


# --- .h3 text format -------------------------------------------------------
#
# Line 1: "n m"; then m lines "a b c" with 0-based vertex indices.  Text
# after '#' on any line is a comment.  Serialization is canonical (edges
# already sorted), so equal hypergraphs produce byte-identical files.


def to_h3(H: Hypergraph3) -> str:
    lines = [f"{H.n} {H.m}"]
    lines.extend(f"{a} {b} {c}" for a, b, c in H.edges)
    return "\n".join(lines) + "\n"


def parse_h3(text: str) -> Hypergraph3:
    tokens: list[str] = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        tokens.extend(body.split())
    if len(tokens) < 2:
        raise ValueError("missing 'n m' header")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"non-integer token in .h3 input: {exc}") from None
    n, m = nums[0], nums[1]
    body = nums[2:]
    if len(body) != 3 * m:
        raise ValueError(f"expected {3 * m} vertex tokens for {m} edges, got {len(body)}")
    edges = [tuple(body[3 * i : 3 * i + 3]) for i in range(m)]
    return Hypergraph3(n, edges)


def write_h3(H: Hypergraph3, path) -> None:
    with open(path, "w") as fh:
        fh.write(to_h3(H))


def read_h3(path) -> Hypergraph3:
    with open(path) as fh:
        return parse_h3(fh.read())
