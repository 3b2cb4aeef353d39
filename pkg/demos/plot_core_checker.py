"""
Checking the core without listing coalitions
============================================

A coalition only matters through its size and number of reds, so a
partition can be tested for core stability by asking, for every ratio,
whether enough agents of each colour would rather have it.
"""

import time

import numpy as np

from divgames import Partition, find_blocking_coalition, random_single_peaked

g = random_single_peaked(8, 6, seed=1)
rng = np.random.default_rng(1)
p = Partition.from_labels(rng.integers(0, 4, size=g.n).tolist())
print("partition:", p.as_lists())

start = time.perf_counter()
w = find_blocking_coalition(g, p)
print(f"checked in {1000 * (time.perf_counter() - start):.2f} ms")
if w is None:
    print("core stable")
else:
    print("blocked by", [g.name(i) for i in w.agents], "at ratio", w.ratio)

# %%
# The same question by brute force looks at all 2^n - 1 coalitions.
cur = [g.red_ratio(p.block_of(i)) for i in range(g.n)]
start = time.perf_counter()
blockers = 0
for mask in range(1, 1 << g.n):
    ratio = g.red_ratio(mask)
    if all(g.prefers(i, ratio, cur[i]) for i in range(g.n) if mask >> i & 1):
        blockers += 1
print(f"{blockers} blocking coalitions found by enumeration "
      f"in {time.perf_counter() - start:.2f} s")
