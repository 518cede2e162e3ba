"""
Building circles from Langford sequences
========================================

Gluing Skolem-type sequences with disjoint symbol sets end to end, and
closing the loop, gives a circle in which every junction is removable.
Langford sequences of order 3**n and defect (3**n + 1) / 2 fit together
exactly, giving circles of order (3**k - 1) / 2 with at least k removable
edges.
"""

# %%
from skolemcircles import (
    bounds,
    glue,
    junction_edges,
    langford_power3,
    removable_edges_fast,
    theorem9_circle,
)

for n in range(3):
    print(n, langford_power3(n))

# %%
parts = [langford_power3(n) for n in range(4)]
forty = glue(parts)
print("order", forty.order, "junctions", sorted(junction_edges(parts)))
print("removable", sorted(removable_edges_fast(forty)))

# %%
for k in range(1, 7):
    c = theorem9_circle(k)
    print(f"k={k} order={c.order} removable={len(removable_edges_fast(c))}")

# %%
# Counting bounds; the integer ones are exact however large m gets.
b = bounds(12)
print(b)
print(bounds(17).sequence_lower_bound)
