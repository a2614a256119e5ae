"""A tour of the Boltzmann weight tables.

The four model families share two ordinary vertex types: Gamma rows
(particles drift right) and Delta rows (particles drift left), joined on
the right boundary by U-turn caps.  Every weight is an exact rational in
the spectral parameter z and the deformation parameter q, and each table
is stochastic: fixing the input edges, the weights of all completions sum
to exactly 1.
"""

from fractions import Fraction as F
from itertools import product

from symplectic_ice import (Family, Model, alphabet, cap_weight,
                            in_stochastic_regime, ParamPoint,
                            stochastic_row_check, vertex_weight, zprime)

q = F(1, 2)
z = F(3, 4)
print(f"z = {z}, q = {q}, z' = q + 1 - 1/z = {zprime(z, q)}")
print()

# ------------------------------------------------------------------
# the uncolored tables ('-' is the occupied label, encoded as -1)
# ------------------------------------------------------------------
print("uncolored Gamma vertex (left, top, right, bottom) -> weight")
for edges in product((0, -1), repeat=4):
    w = vertex_weight(Model.UNCOLORED_REFLECTING, Family.GAMMA, edges, (z,), q)
    if w != 0:
        pretty = "".join("-" if e == -1 else "+" for e in edges)
        print(f"   {pretty}  {w}")
print()

print("row sums with fixed inputs (left, top):")
for inputs in product((0, -1), repeat=2):
    s = stochastic_row_check(Model.UNCOLORED_REFLECTING, Family.GAMMA, inputs, (z,), q)
    print(f"   inputs {inputs} -> {s}")
print()

# ------------------------------------------------------------------
# caps: reflecting bounces the spin back, absorbing flips it
# ------------------------------------------------------------------
for model in (Model.UNCOLORED_REFLECTING, Model.UNCOLORED_ABSORBING):
    pairs = [(t, b) for t in (0, -1) for b in (0, -1)
             if cap_weight(model, t, b) == 1]
    print(f"{model.value} cap pairs (top -> bottom): {pairs}")
print()

# ------------------------------------------------------------------
# colored tables depend only on the relative order of the labels
# ------------------------------------------------------------------
print("colored Gamma, exchange pattern (c_b, c_a, c_a, c_b) with a < b:")
for a, b in [(-2, 1), (0, 3), (1, 2)]:
    w = vertex_weight(Model.COLORED_SIGNED, Family.GAMMA, (b, a, a, b), (z,), q)
    print(f"   colors ({b}, {a}, {a}, {b}) -> {w}   (always 1 - q z)")
print()

print("signed-colored caps negate the color; positive-colored caps keep it:")
print("   signed  cap(c_2) ->", [b for b in alphabet(Model.COLORED_SIGNED, 2)
                                 if cap_weight(Model.COLORED_SIGNED, 2, b) == 1][0])
print("   positive cap(c_2) ->", [b for b in alphabet(Model.COLORED_POSITIVE, 2)
                                  if cap_weight(Model.COLORED_POSITIVE, 2, b) == 1][0])
print()

# ------------------------------------------------------------------
# the stochastic regime: all weights are probabilities
# ------------------------------------------------------------------
for zz, qq in [(F(3, 4), F(1, 2)), (F(3, 4), F(2)), (F(1, 2), F(1))]:
    point = ParamPoint((zz,), qq)
    print(f"z = {zz}, q = {qq}: in stochastic regime? {in_stochastic_regime(point)}")
