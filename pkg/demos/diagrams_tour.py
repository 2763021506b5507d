# Young diagrams and Littlewood-Richardson numbers, step by step.
# Run: python demos/diagrams_tour.py

from tensorlayers.diagrams import (
    conjugate,
    decompose_power,
    lr_coefficient,
    lr_product,
    partitions,
    sn_dim,
)
from tensorlayers.oracle import lr_oracle

# %% a partition and its transpose
lam = (3, 2, 1)
print("lam", lam, "conjugate", conjugate(lam))
print("self-conjugate partitions of 6:", [p for p in partitions(6) if conjugate(p) == p])

# %% one coefficient, two ways
print("N^(3,2,1)_(2,1),(2,1) =", lr_coefficient((3, 2, 1), (2, 1), (2, 1)))
print("via Kostka numbers   =", lr_oracle((3, 2, 1), (2, 1), (2, 1)))

# %% a whole product s_(2,1) * s_(2,1)
for nu, c in lr_product((2, 1), (2, 1)).items():
    print(f"  {nu}: {c}")

# %% dimensions of S_n irreps, and a sanity sum
n = 5
dims = {p: sn_dim(p) for p in partitions(n)}
print(dims)
print("sum of squares", sum(d * d for d in dims.values()), "= 5! =", 120)

# %% degree-3 powers of X ⊗ Y: symmetric, exterior, full tensor
for kind in ("sym", "ext"):
    print(kind, decompose_power(kind, 3))
tensor = decompose_power("tensor", 3)
print("tensor", len(tensor), "pairs, total dim", sum(c for *_, c in tensor), "= (3!)^2")
