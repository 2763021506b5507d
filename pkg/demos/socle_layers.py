# Socle layers of a few injectives, printed in the CLI tuple notation.
# Run: python demos/socle_layers.py

from tensorlayers.diagrams import DiagramTuple
from tensorlayers.formats import format_degree, format_tuple, parse_degree, parse_tuple
from tensorlayers.posets import q_max
from tensorlayers.socle import (
    closed_form_b_layer,
    layers_J,
    socle_layers_I,
    socle_layers_J_degree,
    tensor_simples_layers,
)

# %% J for one box on each inner side, t = 1
t = 1
lam = parse_tuple("-/-|1;1|-/-", t)
for q, layer in enumerate(layers_J(lam)):
    print(q, ", ".join(f"{format_tuple(k)}x{v}" for k, v in layer.items()))

# %% the same object at the level of degree vectors
l = parse_degree("0,0,1;1,0,0", t)
print("q_max", q_max(l))
for q in range(q_max(l) + 1):
    conv = socle_layers_J_degree(l, q)
    print(q, {format_degree(k): v for k, v in conv.items()})

# the multinomial shortcut agrees here...
print(closed_form_b_layer(l, 1) == socle_layers_J_degree(l, 1))
# ...but not for two contractions: the convolution has 2 where the shortcut has 1
l2 = parse_degree("0,2;2,0", 0)
print(socle_layers_J_degree(l2, 2)[parse_degree("0,0;0,0", 0)], closed_form_b_layer(l2, 2).get(parse_degree("0,0;0,0", 0)))

# %% layers of I (t = 0): the pairs (zeta, ∅; ∅, zeta)
for q in range(4):
    print(q, sorted(format_tuple(k) for k in socle_layers_I(q, 0)))

# %% tensoring two simples: semisimple or not
a, b = parse_tuple("-|1;-|-", 0), parse_tuple("-|-;1|-", 0)
for q in range(3):
    print(q, {format_tuple(k): v for k, v in tensor_simples_layers(a, b, q).items()})
