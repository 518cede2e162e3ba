"""
Removable edges
===============

Cutting a circle at an edge leaves a path.  If every pair is still the right
distance apart along that path, the edge is *removable* and the path reads as
a Skolem sequence in both directions.  A circle with j removable edges
therefore carries 2j sequences.
"""

# %%
from skolemcircles import (
    CircleLabeling,
    interior_mask,
    removable_count_weight,
    removable_edges_fast,
    removable_edges_oracle,
    sequences_of_circle,
)

order4 = CircleLabeling.parse("1 1 4 2 3 2 4 3")

# %%
# The interior mask zeroes every cell strictly inside the arc of a symbol
# 2..m-1.  Its weight w gives j = ceil(w / 2).
mask = interior_mask(order4)
print(mask.bits, "weight", mask.weight, "-> j =", removable_count_weight(order4))

# %%
# The fast rule reads the edges off the mask; the brute-force arc check agrees.
print(sorted(removable_edges_fast(order4)), sorted(removable_edges_oracle(order4)))

# %%
# Six sequences, two per removable edge.
for s in sequences_of_circle(order4):
    print(s)

# %%
# An order-8 circle with no removable edge at all: a Skolem labeled cycle.
rigid8 = CircleLabeling.parse("1 1 4 8 7 5 4 2 6 2 5 8 3 7 6 3")
print(interior_mask(rigid8).weight, sorted(removable_edges_fast(rigid8)))
