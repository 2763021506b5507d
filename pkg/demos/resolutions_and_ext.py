# Injective resolutions of simples and the Ext tables they produce.
# Run: python demos/resolutions_and_ext.py

from tensorlayers.formats import format_tuple, parse_tuple
from tensorlayers.resolutions import (
    balanced_degree_doubled,
    closed_form_degree,
    ext_profile,
    resolution_bfT,
    resolution_smallTT,
    resolution_TT,
)

# %% the inner-only case: length is the overlap of lam and mu^T
r = resolution_smallTT((2, 1), (2,))
print("length", r.length)
for k, term in enumerate(r.terms):
    print(k, term)

# %% full category, trivial target: term j is sum_{|zeta|=j} (zeta,∅;∅,zeta^T)
for k, term in enumerate(resolution_TT(parse_tuple("-|-;-|-", 0), 3).terms):
    print(k, sorted(format_tuple(x) for x in term))

# %% I-free modules: a finite resolution
lam = parse_tuple("1|1;1|-", 0)
res = resolution_bfT(lam)
for k, term in enumerate(res.terms):
    print(k, {format_tuple(x): c for x, c in term.items()})

# %% Ext profile and where the one-line degree formula lands
kap = parse_tuple("1|-;-|-", 0)
tgt = parse_tuple("-|1;-|-", 0)
print("profile", ext_profile(kap, tgt, 4, "bfT"))
print("one-line formula", closed_form_degree(kap, tgt), "balanced", balanced_degree_doubled(kap, tgt) / 2)
print("flagged keys", len(resolution_bfT(tgt).degree_violations))
