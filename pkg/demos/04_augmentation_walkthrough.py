"""Watch the local search trade k matching edges for k+1.

Three hand-built instances each admit exactly one kind of move (1-for-2,
2-for-3, 5-for-6); the generic subset search finds them all.  Then a
random instance is solved move by move and the trace replayed.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from move_fixtures import five_for_six_fixture, one_for_two_fixture, two_for_three_fixture

from hypermatch.augment import AugmentConfig, augment_once, replay, solve
from hypermatch.constructions import random_triples
from hypermatch.exact import max_matching

for name, fixture in (
    ("1-for-2", one_for_two_fixture),
    ("2-for-3", two_for_three_fixture),
    ("5-for-6", five_for_six_fixture),
):
    H, M = fixture()
    new, move = augment_once(H, M, AugmentConfig(k_max=5))
    print(f"{name}: {M.size} -> {new.size}")
    print(f"  removed {list(move.removed)}")
    print(f"  added   {list(move.added)}")
    print(f"  pulled in uncovered {list(move.uncovered_used)}")

print("\nrandom instance, move by move:")
H = random_triples(12, 0.4, seed=11)
rep, trace = solve(H, 4)
print(f"greedy start: {len(trace.initial)} edges")
for i, mv in enumerate(trace.moves, 1):
    print(f"  move {i}: -{len(mv.removed)} +{len(mv.added)}")
print(f"final: {rep.size} ({rep.detail}); exact optimum: {max_matching(H).size}")
final = replay(H, trace)
print(f"trace replay reproduces the result: {set(final.edges) == set(rep.edges)}")
