"""
Catalogs, shards and checkpoints
================================

Large orders are split into shards by fixing the first few placements.
Shards are independent, so they can run in threads or separate processes
and their counts simply add up.  Each finished shard can be saved to a
checkpoint file so an interrupted run picks up where it stopped.
"""

# %%
import tempfile
from pathlib import Path

from skolemcircles import classify, enumerate_shard, iter_circles, merge, plan_shards, verify_partition
from skolemcircles.catalog import read_catalog, write_catalog

shards = plan_shards(12, 6)
verify_partition(shards)
for s in shards:
    print(s.shard_id, len(s.prefixes), "prefixes")

# %%
print(merge(enumerate_shard(s) for s in shards))
print(classify(12, shards=6, threads=2))

# %%
with tempfile.TemporaryDirectory() as tmp:
    classify(12, shards=6, checkpoint_dir=tmp)
    files = sorted(Path(tmp).iterdir())
    print(files[0].read_text())
    files[0].unlink()
    # only the missing shard is recomputed
    print(classify(12, shards=6, checkpoint_dir=tmp))

# %%
# A catalog is a sorted, tab-separated list of circles in standard form.
text = write_catalog(iter_circles(8))
print("\n".join(text.splitlines()[:5]))
print(len(read_catalog(text)), "records read back")
