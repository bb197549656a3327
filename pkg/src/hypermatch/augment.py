"""Local search by swap moves: trade k matching edges for k + 1.

A move removes a subset S of k matching edges and re-matches the freed
vertices V(S) together with a small set U' of uncovered vertices into
k + 1 disjoint edges.  Rather than pattern-matching each known move
shape separately, the candidate subproblem (find a (k+1)-matching
inside V(S) ∪ U') is handed to the exact solver; the named move shapes
become fixtures the generic search must find.

A standard component argument shows the size range |U'| in 3..k+3 is
complete: if a larger matching exists, some connected component of the
edge-intersection graph between the current and the larger matching has
k old edges, k+1 new ones, and the new edges use at most k+3 vertices
outside the old ones.  So with exhaustive candidate enumeration the
search never misses an available move.

Candidate subsets are enumerated exhaustively below the configured caps
and sampled (deterministically, from the seed) above them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .constructions import splitmix64_stream
from .core import Edge, Hypergraph3, Matching
from .exact import SolveBudget, SolveReport, max_matching_in_subset

__all__ = ["AugmentConfig", "Move", "MoveTrace", "greedy_matching", "augment_once", "solve", "replay"]


@dataclass(frozen=True)
class AugmentConfig:
    """Knobs for the move search.

    k_max: most matching edges removable in one move (1..5 by default).
    s_cap: candidate removed-subsets tried per k.
    u_cap: candidate uncovered-subsets tried per (k, S, size) class.
    probe_nodes: node budget per exact-solver probe.
    """

    k_max: int = 5
    s_cap: int = 200
    u_cap: int = 200
    probe_nodes: int = 200_000
    seed: int = 0
    max_moves: int = 10_000

    def __post_init__(self):
        if not 1 <= self.k_max:
            raise ValueError("k_max must be at least 1")
        if min(self.s_cap, self.u_cap, self.probe_nodes, self.max_moves) <= 0:
            raise ValueError("caps and budgets must be positive")


@dataclass(frozen=True)
class Move:
    removed: tuple[Edge, ...]
    added: tuple[Edge, ...]
    uncovered_used: tuple[int, ...]


@dataclass
class MoveTrace:
    initial: tuple[Edge, ...]
    moves: list[Move] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "schema": "hypermatch.trace/1",
            "initial": [list(e) for e in self.initial],
            "moves": [
                {
                    "removed": [list(e) for e in mv.removed],
                    "added": [list(e) for e in mv.added],
                    "uncovered_used": list(mv.uncovered_used),
                }
                for mv in self.moves
            ],
        }


def replay(H: Hypergraph3, trace: MoveTrace) -> Matching:
    """Re-apply a trace from its initial matching; validates every step."""
    edges = list(trace.initial)
    Matching(H, edges)
    for mv in trace.moves:
        for e in mv.removed:
            edges.remove(e)
        edges.extend(mv.added)
        Matching(H, edges)
    return Matching(H, sorted(edges))


def greedy_matching(H: Hypergraph3, seed: int | None = None) -> Matching:
    """Maximal matching: scan edges (lexicographic, or shuffled by seed) greedily."""
    order = list(range(H.m))
    if seed is not None:
        rng = splitmix64_stream(seed)
        for j in range(len(order) - 1):
            r = j + next(rng) % (len(order) - j)
            order[j], order[r] = order[r], order[j]
    covered = 0
    picked = []
    for i in order:
        mask = H.edge_masks[i]
        if not mask & covered:
            covered |= mask
            picked.append(H.edges[i])
    return Matching(H, sorted(picked))


def _subsets(pool: tuple, size: int, cap: int | None, rng) -> list[tuple]:
    """All size-subsets of pool when few enough, else cap distinct samples."""
    import math

    total = math.comb(len(pool), size)
    if cap is None or total <= cap:
        return list(combinations(pool, size))
    seen = set()
    out = []
    idx = list(range(len(pool)))
    while len(out) < cap:
        # Floyd-ish sample of a size-subset, deterministic from the stream
        chosen = []
        avail = idx[:]
        for _ in range(size):
            chosen.append(avail.pop(next(rng) % len(avail)))
        key = tuple(sorted(chosen))
        if key not in seen:
            seen.add(key)
            out.append(tuple(pool[i] for i in key))
    return out


def augment_once(
    H: Hypergraph3, M: Matching, cfg: AugmentConfig | None = None
) -> tuple[Matching, Move] | None:
    """Find and apply one size-increasing move, or return None if none is found.

    Enumerates k = 1..k_max, removed subsets S of the matching, uncovered
    subsets U' with 3 <= |U'| <= k+3, and asks the exact solver for a
    (k+1)-matching inside V(S) ∪ U'.  The first success (in deterministic
    enumeration order) is applied.
    """
    cfg = cfg or AugmentConfig()
    uncovered = M.uncovered
    medges = M.edges
    rng = splitmix64_stream(cfg.seed)
    for k in range(1, min(cfg.k_max, len(medges)) + 1):
        for S in _subsets(medges, k, cfg.s_cap, rng):
            vs = [v for e in S for v in e]
            for usize in range(3, min(k + 3, len(uncovered)) + 1):
                for up in _subsets(uncovered, usize, cfg.u_cap, rng):
                    rep = max_matching_in_subset(
                        H,
                        vs + list(up),
                        SolveBudget(node_limit=cfg.probe_nodes, target=k + 1),
                    )
                    if rep.size >= k + 1:
                        removed = set(S)
                        new_edges = [e for e in medges if e not in removed]
                        new_edges.extend(rep.edges)
                        move = Move(removed=tuple(S), added=rep.edges, uncovered_used=tuple(up))
                        return Matching(H, sorted(new_edges)), move
    return None


def solve(
    H: Hypergraph3, d: int, cfg: AugmentConfig | None = None
) -> tuple[SolveReport, MoveTrace]:
    """Greedy start, then swap moves until size d, stall, or the move cap.

    The report's optimal flag records whether the target was reached;
    a stall is a result, not an error.
    """
    cfg = cfg or AugmentConfig()
    t0 = time.perf_counter()
    M = greedy_matching(H)
    trace = MoveTrace(initial=M.edges)
    while M.size < d and len(trace.moves) < cfg.max_moves:
        step = augment_once(H, M, cfg)
        if step is None:
            break
        M, move = step
        trace.moves.append(move)
    wall = (time.perf_counter() - t0) * 1000.0
    reached = M.size >= d
    return (
        SolveReport(
            size=M.size,
            edges=M.edges,
            optimal=reached,
            nodes=0,
            wall_ms=wall,
            detail="target reached" if reached else "stalled",
        ),
        trace,
    )
