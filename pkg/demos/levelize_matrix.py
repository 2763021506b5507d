# Reorder a sparse matrix into block tridiagonal form.
# Run: python demos/levelize_matrix.py

import random
from fractions import Fraction

import numpy as np

from tensorlayers.levelize import SparseMatrix, bandwidth_report, check_levelization, levelize, to_text

# %% a ring of 8 labels plus an isolated pair, given in scrambled order
rng = random.Random(3)
ring = [f"r{i}" for i in range(8)]
entries = {(a, b): Fraction(1) for a, b in zip(ring, ring[1:] + ring[:1])}
entries[("p", "q")] = Fraction(1, 2)
entries[("q", "q")] = Fraction(-1)
labels = ring + ["p", "q"]
rng.shuffle(labels)
m = SparseMatrix(labels, entries)

# %% levels grow from each class's first label
lev = levelize(m)
print(to_text(lev))
print("problems:", check_levelization(lev, m))
print(bandwidth_report(lev, m))

# %% look at it densely before and after
def dense(order):
    pos = {x: i for i, x in enumerate(order)}
    a = np.zeros((len(order), len(order)), dtype=int)
    for (r, c) in m.entries:
        a[pos[r], pos[c]] = 1
    return a

print(dense(m.labels))
print(dense(lev.order))
