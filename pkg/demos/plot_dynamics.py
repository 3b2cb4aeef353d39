"""
Better-response dynamics
========================

Agents keep moving to coalitions they prefer.  With Nash deviations the
process can cycle forever; with individually stable deviations the host
coalition has a veto.
"""

from divgames import DiversityGame, Partition, random_single_peaked, run_dynamics
from divgames.model import HALF, ONE, ZERO
from divgames.stability import IS, NS

# a red agent who wants to be alone and a blue agent who wants a red partner
g = DiversityGame(1, 1, ((ONE, HALF, ZERO), (HALF, ZERO, ONE)))
trace = run_dynamics(g, Partition.singletons(2), kind=NS, step_limit=6)
for part in trace.partitions:
    print("  ", part.as_lists())
print("converged:", trace.converged)

# %%
# Under IS deviations the red agent simply refuses the blue one.
trace = run_dynamics(g, Partition.singletons(2), kind=IS, step_limit=6)
print("IS converged after", len(trace.steps), "steps")

# %%
# How often do IS dynamics settle on random single-peaked games?
settled = 0
for seed in range(100):
    h = random_single_peaked(4, 4, seed)
    settled += run_dynamics(h, None, kind=IS, step_limit=10 * h.n ** 2, seed=seed).converged
print(f"{settled}/100 runs settled")
