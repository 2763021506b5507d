# Level sets of degree-vector posets, with a DOT dump at the end.
# Run: python demos/poset_levels.py > levels.dot  (the last block prints DOT)

import sys

from tensorlayers.formats import format_degree, parse_degree
from tensorlayers.oracle import poset_level_oracle
from tensorlayers.posets import convolve_levels, level_sets, one_step, q_max, split_sides

l = parse_degree("0,1,1;1,0,0", 1)
print("q_max", q_max(l), file=sys.stderr)

# %% bounded order: finitely many levels
for q, lev in enumerate(level_sets(l, "bfP", q_max(l) + 1)):
    print(q, sorted(map(format_degree, lev)), file=sys.stderr)

# %% unbounded order: levels go on, each one finite
for q, lev in enumerate(level_sets(l, "P", 4)):
    print(q, len(lev), file=sys.stderr)

# %% the brute-force oracle sees the same levels
print(poset_level_oracle(l, "P", 4) == [set(x) for x in level_sets(l, "P", 4)], file=sys.stderr)

# %% sides add up
sides = convolve_levels((level_sets(x, "bfP", 4) for x in split_sides(l)), 4)
print(sides == [set(x) for x in level_sets(l, "bfP", 4)], file=sys.stderr)

# %% Hasse-style DOT of the one-step moves inside the bounded order
levels = level_sets(l, "bfP", q_max(l))
print("digraph levels {")
for lev in levels:
    print("  { rank=same; " + " ".join(f'"{format_degree(x)}"' for x in sorted(lev)) + " }")
for lev in levels:
    for x in sorted(lev):
        for y in sorted(one_step(x, "bfP")):
            print(f'  "{format_degree(x)}" -> "{format_degree(y)}";')
print("}")
