# Counting in label space: no permutations are built at all.
# The succession rule maps a label to the labels of its children, so the
# whole tree collapses onto a (much smaller) set of label states.

import time

from hexavoid.label_dp import distributions_through, succeed
from hexavoid.oracle import enumerate_level
from hexavoid.perm import PatternFamily

HEX8 = PatternFamily.HEX8

print(succeed((1, 1, 1, 1)))          # the root: grow, or start a new active run
print(succeed((4, 4, 4, 4)))          # no constraint yet: every site open
print(succeed((5, 1, 0, 0)))          # hexagons close most sites off

t0 = time.perf_counter()
dists = distributions_through(40, HEX8)
print(f"40 levels in {time.perf_counter() - t0:.2f}s")
for d in dists[::6]:
    print(f"n={d.n:2d}  states={len(d.counts):6d}  total={d.total}")

# Same histogram as brute force, level by level
for n in range(1, 10):
    assert dists[n - 1].counts == enumerate_level(n, HEX8).projected_histogram()
print("label DP matches the tree through n=9")

# The smaller families use truncated labels
for fam in (PatternFamily.HEX6, PatternFamily.HEX4):
    print(fam.name, [d.total for d in distributions_through(12, fam)])
