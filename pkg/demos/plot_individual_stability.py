"""
Individually stable partitions always exist
===========================================

With single-peaked preferences an individually stable partition can be
built directly: mixed coalitions with a red majority first, then with a
blue majority, then mixed pairs, then singletons.
"""

import numpy as np

from divgames import is_individually_stable, is_nash_stable, random_single_peaked
from divgames.individual import individually_stable_trace

g = random_single_peaked(5, 4, seed=3)
trace = individually_stable_trace(g)


def show(mask):
    return "{" + ", ".join(g.name(i) for i in range(g.n) if mask >> i & 1) + "}"


print("red-majority coalitions:", [show(b) for b in trace.red_mixed])
print("blue-majority coalitions:", [show(b) for b in trace.blue_mixed])
print("mixed pairs:", [show(b) for b in trace.pairs])
print("alone:", [g.name(i) for i in trace.singles])
print("individually stable:", is_individually_stable(g, trace.partition))
print("Nash stable:", is_nash_stable(g, trace.partition))

# %%
# Many random games, all sizes up to six of each colour.
rng = np.random.default_rng(0)
ok = 0
for seed in range(300):
    red, blue = rng.integers(1, 7, size=2)
    h = random_single_peaked(int(red), int(blue), seed)
    ok += is_individually_stable(h, individually_stable_trace(h).partition)
print(f"{ok}/300 random games solved")
