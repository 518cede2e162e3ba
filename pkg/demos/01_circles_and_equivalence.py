"""
Skolem circles and their standard form
======================================

A Skolem circle of order m puts the numbers 1..m twice each around a cycle
of 2m nodes so that the two copies of i are i steps apart (going the short
way round).  Rotating or reflecting the cycle gives an equivalent circle;
every class has exactly one member with the 1s at positions 1, 2 and the
first 2 somewhere in 3..m.
"""

# %%
# Build the order-4 circle and look at its pairs.
from skolemcircles import CircleLabeling, pairs_from_symbols, validate_circle

c = CircleLabeling.parse("1 1 4 2 3 2 4 3")
print(c, "valid:", validate_circle(c).valid)
print(pairs_from_symbols(c).as_dict())

# %%
# A broken labeling is reported rather than raised.
report = validate_circle((1, 1, 2, 2))
for v in report.violations:
    print(v.kind, v.where, v.detail)

# %%
# Rotations and reflections all canonicalize back to the same labeling.
from skolemcircles import canonicalize, equivalent, images, reflect, rotate

for img in list(images(c))[:4]:
    print(img, "->", canonicalize(img))
print(equivalent(c, rotate(reflect(c), 3)))

# %%
# Any linear Skolem sequence wraps into a circle.
from skolemcircles import wrap

print(canonicalize(wrap((3, 4, 2, 3, 2, 4, 1, 1))))
