"""
Counting circles by removable edges
===================================

The enumerator visits each circle class once, in standard form, with a
compiled bitmask search.  Counting by j and summing 2j per circle recovers
the number of Skolem sequences.
"""

# %%
import time

from skolemcircles import classify, enumerate_sequences, iter_circles

for m in (4, 5, 8, 9, 12):
    start = time.perf_counter()
    counts = classify(m)
    print(f"m={m:2d}  {counts}  ({time.perf_counter() - start:.2f}s)")
    print(f"      sequences: {counts.sequence_count()} == {enumerate_sequences(m)}")

# %%
# The circles themselves, e.g. both classes of order 5.
for c in iter_circles(5):
    print(c)

# %%
# Orders 2, 3, 6, 7 have no circles at all.
print([classify(m).total for m in (2, 3, 6, 7)])

# %%
# Compare against the bundled reference counts.
from skolemcircles.catalog import diff_counts, expected_counts

print(diff_counts(classify(9), expected_counts()) or "matches")
