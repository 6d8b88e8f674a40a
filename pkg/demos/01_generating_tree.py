# Walking the pruned generating tree by hand.
# Every node is a permutation; its children come from inserting the next
# largest value at "active sites", counted by how many entries sit right of it.

from collections import Counter

import numpy as np

from hexavoid.labels import decompose, label_of
from hexavoid.oracle import children, enumerate_level
from hexavoid.perm import PatternFamily

HEX8 = PatternFamily.HEX8

# The smallest forbidden pattern and its two-row split
w = (4, 6, 7, 1, 8, 2, 3, 5)
d = decompose(w)
print("right-to-left minima:", d.b1_values)
print("the rest            :", d.b2_values)
print("K, L, M             :", (d.K, d.L, d.M))
print("label               :", label_of(w))

# A few generations below [1]
frontier = [(1,)]
for n in range(2, 5):
    frontier = [c for w in frontier for c in children(w, HEX8)]
    print(n, len(frontier), frontier[:6], "..." if len(frontier) > 6 else "")

# Level sizes and successive ratios
sizes = np.array([enumerate_level(n, HEX8).count for n in range(1, 11)])
print("level sizes:", sizes)
print("ratios     :", np.round(sizes[1:] / sizes[:-1], 4))

# Which labels show up at level 8?
hist = Counter(enumerate_level(8, HEX8).label_histogram)
for label, c in hist.most_common(8):
    print(tuple(label), c)
