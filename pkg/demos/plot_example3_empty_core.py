"""
A diversity game with an empty core
===================================

Seven red agents and two blue agents, each with a single-peaked ranking of
the possible red ratios.  Every one of the 21147 partitions is blocked.
"""

from divgames import Partition, bell, core_brute_force, find_blocking_coalition, make_example3

g = make_example3()
print("ratios:", ", ".join(str(x) for x in g.theta))

# the agents' favourite ratios
for i in range(g.n):
    print(f"  {g.name(i)} likes {g.top(i)} best")

# %%
# Everybody alone is blocked: three reds and a blue prefer ratio 3/4.
w = find_blocking_coalition(g, Partition.singletons(g.n))
print("singletons blocked by", [g.name(i) for i in w.agents], "at", w.ratio)

# %%
# Whatever partition we start from, some coalition blocks it.
stable = core_brute_force(g)
print(f"core-stable partitions among {bell(g.n)}: {len(stable)}")
