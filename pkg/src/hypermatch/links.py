"""Link graphs and the exhaustive classification of 3x3 bipartite patterns.

A labeled balanced bipartite graph on classes X = {x0,x1,x2} and
Y = {y0,y1,y2} is encoded in 9 bits, row-major: bit 3*i + j set iff
x_i y_j is present.  Among the 512 patterns, the ones with at least 5
edges and no perfect matching fall into exactly three isomorphism
classes, named here by the degree sequence of one class:

  b033  e=6, one side has degrees (0,3,3)   (K_{2,3} plus isolated vertex)
  b023  e=5, one side has degrees (0,2,3)
  b113  e=5, both sides have degrees (1,1,3)

b113 has a unique vertex of degree 3 on each side; those are its base
vertices and the edge between them (always present) is its base edge.

The class table is derived, not assumed: `_derive_classification`
enumerates all 512 masks, groups the perfect-matching-free ones with
5 or 6 edges by isomorphism, and checks that exactly the classes above
appear.  `verify_fact1` re-runs the derivation and reports the counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations

from .core import Hypergraph3

__all__ = [
    "PatternKind",
    "PatternClass",
    "LinkGraph",
    "pattern_edge_count",
    "pattern_has_pm",
    "canonical_form",
    "classify",
    "base_edge",
    "verify_fact1",
    "link_bipartite",
    "link_within",
    "link_chain",
    "link_of_pair",
    "edge_through",
]

_PERMS = tuple(permutations(range(3)))


class PatternKind(Enum):
    HAS_PM = "pm"
    B033 = "b033"
    B023 = "b023"
    B113 = "b113"
    DEFICIENT = "deficient"


@dataclass(frozen=True)
class PatternClass:
    kind: PatternKind
    base: tuple[int, int] | None = None  # only for B113: (row, col) of the base edge


def pattern_edge_count(mask: int) -> int:
    return mask.bit_count()


def pattern_has_pm(mask: int) -> bool:
    """True iff some system of 3 disjoint edges exists (6 permutations)."""
    return any(all(mask >> (3 * i + s[i]) & 1 for i in range(3)) for s in _PERMS)


def _relabel(mask: int, rows, cols) -> int:
    out = 0
    for i in range(3):
        for j in range(3):
            if mask >> (3 * i + j) & 1:
                out |= 1 << (3 * rows[i] + cols[j])
    return out


def _transpose(mask: int) -> int:
    out = 0
    for i in range(3):
        for j in range(3):
            if mask >> (3 * i + j) & 1:
                out |= 1 << (3 * j + i)
    return out


def canonical_form(mask: int) -> int:
    """Lexicographic minimum over the 36 class-preserving relabelings."""
    return min(_relabel(mask, r, c) for r in _PERMS for c in _PERMS)


def _canon_iso(mask: int) -> int:
    # full isomorphism, classes allowed to swap
    return min(canonical_form(mask), canonical_form(_transpose(mask)))


def _row_degrees(mask: int) -> tuple[int, ...]:
    return tuple((mask >> 3 * i & 0b111).bit_count() for i in range(3))


def _col_degrees(mask: int) -> tuple[int, ...]:
    return tuple(sum(mask >> (3 * i + j) & 1 for i in range(3)) for j in range(3))


def _derive_classification() -> dict[int, PatternClass]:
    """Enumerate all 512 masks and derive the class of each one.

    Raises if the pattern-free structure differs from the expected three
    classes; that cannot happen, but the check is what makes the table
    derived rather than hard-coded.
    """
    table: dict[int, PatternClass] = {}
    groups5: dict[int, list[int]] = {}
    groups6: dict[int, list[int]] = {}
    for mask in range(512):
        if pattern_has_pm(mask):
            table[mask] = PatternClass(PatternKind.HAS_PM)
            continue
        e = mask.bit_count()
        if e >= 7:
            raise AssertionError(f"mask {mask:09b} has 7+ edges but no perfect matching")
        if e == 6:
            groups6.setdefault(_canon_iso(mask), []).append(mask)
        elif e == 5:
            groups5.setdefault(_canon_iso(mask), []).append(mask)
        else:
            table[mask] = PatternClass(PatternKind.DEFICIENT)

    if len(groups6) != 1:
        raise AssertionError(f"expected one 6-edge PM-free class, found {len(groups6)}")
    if len(groups5) != 2:
        raise AssertionError(f"expected two 5-edge PM-free classes, found {len(groups5)}")

    for mask in next(iter(groups6.values())):
        degs = {tuple(sorted(_row_degrees(mask))), tuple(sorted(_col_degrees(mask)))}
        if (0, 3, 3) not in degs:
            raise AssertionError("6-edge PM-free mask without a (0,3,3) side")
        table[mask] = PatternClass(PatternKind.B033)

    for masks in groups5.values():
        rd = tuple(sorted(_row_degrees(masks[0])))
        cd = tuple(sorted(_col_degrees(masks[0])))
        if rd == (1, 1, 3) and cd == (1, 1, 3):
            for mask in masks:
                table[mask] = PatternClass(PatternKind.B113, base=_find_base(mask))
        elif (0, 2, 3) in (rd, cd):
            for mask in masks:
                table[mask] = PatternClass(PatternKind.B023)
        else:
            raise AssertionError(f"unexpected 5-edge PM-free degree sequences {rd}/{cd}")

    if len(table) != 512:
        raise AssertionError("classification table incomplete")
    return table


def _find_base(mask: int) -> tuple[int, int]:
    rows = [i for i, deg in enumerate(_row_degrees(mask)) if deg == 3]
    cols = [j for j, deg in enumerate(_col_degrees(mask)) if deg == 3]
    if len(rows) != 1 or len(cols) != 1 or not mask >> (3 * rows[0] + cols[0]) & 1:
        raise AssertionError("not a b113 base structure")
    return rows[0], cols[0]


_TABLE: dict[int, PatternClass] | None = None


def _table() -> dict[int, PatternClass]:
    global _TABLE
    if _TABLE is None:
        _TABLE = _derive_classification()
    return _TABLE


def classify(mask: int) -> PatternClass:
    """Classify a 9-bit pattern: perfect matching, b033, b023, b113 or deficient."""
    if not 0 <= mask < 512:
        raise ValueError("pattern mask must be a 9-bit integer")
    return _table()[mask]


def base_edge(mask: int) -> tuple[int, int]:
    """The (row, col) base pair of a b113 pattern; error for any other class."""
    cls = classify(mask)
    if cls.kind is not PatternKind.B113:
        raise ValueError(f"base edge is only defined for b113 patterns, got {cls.kind.value}")
    assert cls.base is not None
    return cls.base


def verify_fact1() -> dict:
    """Exhaustively re-derive the classification and report per-class counts.

    Checks, over all 512 labeled patterns: 7+ edges force a perfect
    matching; 6 edges without one are b033; 5 edges without one are b023
    or b113.  Violations would make the derivation raise; the report
    carries the counts and violations = 0.
    """
    table = _derive_classification()
    counts: dict[str, int] = {}
    by_edges: dict[int, dict[str, int]] = {}
    for mask, cls in table.items():
        counts[cls.kind.value] = counts.get(cls.kind.value, 0) + 1
        row = by_edges.setdefault(mask.bit_count(), {})
        row[cls.kind.value] = row.get(cls.kind.value, 0) + 1
    for e in range(7, 10):
        bad = sum(v for k, v in by_edges.get(e, {}).items() if k != "pm")
        if bad:
            raise AssertionError(f"{bad} patterns with {e} edges lack a perfect matching")
    return {
        "schema": "hypermatch.fact1/1",
        "total": len(table),
        "counts": dict(sorted(counts.items())),
        "counts_by_edge_count": {str(e): dict(sorted(v.items())) for e, v in sorted(by_edges.items())},
        "violations": 0,
    }


# --- link graphs ------------------------------------------------------------


@dataclass(frozen=True)
class LinkGraph:
    """Pairs completing an edge with a fixed center vertex.

    parts are the vertex sets the link was taken against (each sorted);
    edges are unordered pairs {a, b} with {center, a, b} an edge of the
    host.  For two parts of size 3, `pattern()` gives the 9-bit encoding
    with rows indexed by the sorted first part and columns by the second.
    """

    center: int
    parts: tuple[tuple[int, ...], ...]
    edges: frozenset[frozenset[int]]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has(self, a: int, b: int) -> bool:
        return frozenset((a, b)) in self.edges

    def pattern(self) -> int:
        if len(self.parts) != 2 or any(len(p) != 3 for p in self.parts):
            raise ValueError("pattern encoding needs exactly two parts of size 3")
        A, B = self.parts
        mask = 0
        for i in range(3):
            for j in range(3):
                if self.has(A[i], B[j]):
                    mask |= 1 << (3 * i + j)
        return mask


def _check_disjoint_sets(v: int, sets) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    out = []
    for s in sets:
        t = tuple(sorted(s))
        if v in t:
            raise ValueError("center vertex lies inside a link set")
        if seen & set(t):
            raise ValueError("link sets must be pairwise disjoint")
        seen.update(t)
        out.append(t)
    return out


def link_bipartite(H: Hypergraph3, v: int, A, B) -> LinkGraph:
    """Bipartite link of v: a in A joined to b in B iff {v,a,b} is an edge."""
    pa, pb = _check_disjoint_sets(v, (A, B))
    edges = frozenset(
        frozenset((a, b)) for a in pa for b in pb if H.has_edge((v, a, b))
    )
    return LinkGraph(center=v, parts=(pa, pb), edges=edges)


def link_within(H: Hypergraph3, v: int, A) -> LinkGraph:
    """Link of v inside a single set: a, a' joined iff {v,a,a'} is an edge."""
    (pa,) = _check_disjoint_sets(v, (A,))
    edges = frozenset(
        frozenset((a, b)) for a, b in combinations(pa, 2) if H.has_edge((v, a, b))
    )
    return LinkGraph(center=v, parts=(pa,), edges=edges)


def link_chain(H: Hypergraph3, v: int, sets) -> LinkGraph:
    """Union of the bipartite links along consecutive pairs of 2..5 sets."""
    parts = _check_disjoint_sets(v, sets)
    if not 2 <= len(parts) <= 5:
        raise ValueError("chain takes between 2 and 5 sets")
    edges: set[frozenset[int]] = set()
    for left, right in zip(parts, parts[1:]):
        edges |= link_bipartite(H, v, left, right).edges
    return LinkGraph(center=v, parts=tuple(parts), edges=frozenset(edges))


def link_of_pair(H: Hypergraph3, v: int, E, F) -> LinkGraph:
    """Link of v against two disjoint matching edges (3+3 vertices)."""
    return link_bipartite(H, v, tuple(E), tuple(F))


def edge_through(v: int, pair) -> tuple[int, int, int]:
    """Reconstruct the host edge from a center vertex and one of its link pairs."""
    a, b = tuple(pair)
    return tuple(sorted((v, a, b)))
