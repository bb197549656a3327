"""Enumerate all 512 labeled 3x3 bipartite patterns and print the class table.

The interesting fact: with 7+ edges a perfect matching is unavoidable,
and the only ways to have 5 or 6 edges without one are three specific
shapes (named by one side's degree sequence).
"""

from hypermatch.links import base_edge, classify, verify_fact1

rep = verify_fact1()
print(f"patterns processed: {rep['total']}, violations: {rep['violations']}")
print("\ncounts by class:")
for kind, count in rep["counts"].items():
    print(f"  {kind:10s} {count}")

print("\ncounts by edge count:")
for e, row in rep["counts_by_edge_count"].items():
    print(f"  e={e}: {row}")

ref = 0
for i, j in [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]:
    ref |= 1 << (3 * i + j)
print(f"\nreference b113 mask {ref:09b}: class={classify(ref).kind.value}, base edge={base_edge(ref)}")
