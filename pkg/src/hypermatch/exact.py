"""Exact maximum-matching oracle via branch and bound.

Search state is a partial matching plus the list of still-available
edges (pairwise disjoint from the chosen ones).  Branching rule: among
uncovered vertices that still lie on an available edge, pick the one
with minimum remaining degree (lowest index on ties) and branch on each
of its edges in lexicographic order, with the "leave it unmatched"
branch explored last.  With a target size and early exit this makes the
first descent a greedy dive, which produces certificates fast on dense
instances.

Pruning at each node, against the best size found so far:
  * counting bound: |chosen| + floor(#coverable_vertices / 3),
  * cover bound:    |chosen| + (size of a greedy vertex cover of the
                    available edges), since any vertex cover bounds the
                    matching size from above.
The cover bound is what keeps certification cheap on instances whose
edges all pass through a small blocker set.  Vertices with no available
edge are dropped from the counting bound (degree-zero elimination).

Everything is deterministic: identical inputs give identical reports,
including node counts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import Edge, Hypergraph3

__all__ = ["SolveBudget", "SolveReport", "max_matching", "max_matching_in_subset", "has_d_matching"]


@dataclass(frozen=True)
class SolveBudget:
    """Limits for one solve call.  target enables early exit at that size."""

    node_limit: int = 10_000_000
    time_limit_ms: float | None = None
    target: int | None = None

    def __post_init__(self):
        if self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit_ms is not None and self.time_limit_ms <= 0:
            raise ValueError("time_limit_ms must be positive")


@dataclass(frozen=True)
class SolveReport:
    """Result of a solve: best matching found plus search statistics.

    optimal is True only if the search space was exhausted or the
    requested target size was reached; a budgeted stop reports
    optimal=False with the reason in detail.
    """

    size: int
    edges: tuple[Edge, ...]
    optimal: bool
    nodes: int
    wall_ms: float
    detail: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "schema": "hypermatch.solve/1",
            "size": self.size,
            "matching": [list(e) for e in self.edges],
            "optimal": self.optimal,
            "nodes": self.nodes,
            "wall_ms": round(self.wall_ms, 3),
            "detail": self.detail,
        }


class _Stop(Exception):
    pass


class _Search:
    def __init__(self, H: Hypergraph3, active: int, budget: SolveBudget):
        self.H = H
        self.budget = budget
        self.nodes = 0
        self.best: list[Edge] = []
        self.stopped: str | None = None
        self.t0 = time.perf_counter()
        self.edge_items = [
            (H.edge_masks[i], H.edges[i])
            for i in range(H.m)
            if H.edge_masks[i] & active == H.edge_masks[i]
        ]
        self.active = active

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            self.stopped = "node budget exhausted"
            raise _Stop
        if (
            self.budget.time_limit_ms is not None
            and self.nodes % 256 == 0
            and (time.perf_counter() - self.t0) * 1000.0 > self.budget.time_limit_ms
        ):
            self.stopped = "time budget exhausted"
            raise _Stop

    def run(self) -> SolveReport:
        try:
            self._node(0, self.active, self.edge_items, [])
            optimal = True
            detail = None
        except _Stop:
            if self.stopped == "target reached":
                optimal = True
                detail = self.stopped
            else:
                optimal = False
                detail = self.stopped
        wall = (time.perf_counter() - self.t0) * 1000.0
        return SolveReport(
            size=len(self.best),
            edges=tuple(self.best),
            optimal=optimal,
            nodes=self.nodes,
            wall_ms=wall,
            detail=detail,
        )

    def _node(self, covered: int, active: int, avail, chosen: list[Edge]):
        self._tick()
        if len(chosen) > len(self.best):
            self.best = list(chosen)
            if self.budget.target is not None and len(self.best) >= self.budget.target:
                self.stopped = "target reached"
                raise _Stop
        if not avail:
            return

        free = active & ~covered
        coverable = 0
        degs: dict[int, int] = {}
        for mask, _ in avail:
            mm = mask & free
            while mm:
                v = (mm & -mm).bit_length() - 1
                degs[v] = degs.get(v, 0) + 1
                mm &= mm - 1
        coverable = len(degs)

        limit = len(self.best)
        if len(chosen) + coverable // 3 <= limit:
            return
        if len(chosen) + min(coverable // 3, self._cover_bound(avail)) <= limit:
            return

        pivot = min(degs, key=lambda v: (degs[v], v))
        pbit = 1 << pivot
        branch = [(mask, edge) for mask, edge in avail if mask & pbit]
        rest = [(mask, edge) for mask, edge in avail if not mask & pbit]
        for mask, edge in branch:
            chosen.append(edge)
            sub = [(m2, e2) for m2, e2 in avail if not m2 & mask]
            self._node(covered | mask, active, sub, chosen)
            chosen.pop()
        # pivot left unmatched: remove it from play entirely
        self._node(covered, active & ~pbit, rest, chosen)

    def _cover_bound(self, avail) -> int:
        masks = [m for m, _ in avail]
        count = 0
        while masks:
            degs: dict[int, int] = {}
            for m in masks:
                mm = m
                while mm:
                    v = (mm & -mm).bit_length() - 1
                    degs[v] = degs.get(v, 0) + 1
                    mm &= mm - 1
            v = max(degs, key=lambda u: (degs[u], -u))
            bit = 1 << v
            masks = [m for m in masks if not m & bit]
            count += 1
        return count


def max_matching(H: Hypergraph3, budget: SolveBudget | None = None) -> SolveReport:
    """Maximum matching of H, exact unless the budget runs out first."""
    budget = budget or SolveBudget()
    active = (1 << H.n) - 1 if H.n else 0
    return _Search(H, active, budget).run()


def max_matching_in_subset(H: Hypergraph3, subset, budget: SolveBudget | None = None) -> SolveReport:
    """Maximum matching using only edges entirely inside the given vertex set."""
    budget = budget or SolveBudget()
    active = 0
    for v in subset:
        if not 0 <= v < H.n:
            raise ValueError(f"vertex {v} out of range 0..{H.n - 1}")
        active |= 1 << v
    return _Search(H, active, budget).run()


def has_d_matching(
    H: Hypergraph3, d: int, budget: SolveBudget | None = None
) -> tuple[str, SolveReport]:
    """Decide whether H has a matching of size d.

    Returns ("yes", report-with-certificate), ("no", report) when the
    search space was exhausted, or ("unknown", report) on budget stop.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    if d == 0:
        return "yes", SolveReport(size=0, edges=(), optimal=True, nodes=0, wall_ms=0.0)
    base = budget or SolveBudget()
    rep = max_matching(H, SolveBudget(base.node_limit, base.time_limit_ms, target=d))
    if rep.size >= d:
        return "yes", rep
    return ("no", rep) if rep.optimal else ("unknown", rep)
