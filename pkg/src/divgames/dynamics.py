"""Deterministic better-response dynamics under NS- or IS-deviations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import ValidationError
from .model import DiversityGame, Partition, check_partition
from .stability import IS, NS, Deviation, enumerate_is_deviations, enumerate_ns_deviations


@dataclass
class DynamicsTrace:
    steps: list[Deviation] = field(default_factory=list)
    partitions: list[Partition] = field(default_factory=list)
    final: Optional[Partition] = None
    converged: bool = False
    step_limit: int = 0


def random_partition(n: int, seed: int) -> Partition:
    """Partition from uniformly random block labels (not uniform over partitions)."""
    rng = np.random.default_rng(seed)
    return Partition.from_labels([int(x) for x in rng.integers(0, n, size=n)])


def apply_deviation(partition: Partition, dev: Deviation) -> Partition:
    bit = 1 << dev.agent
    blocks = list(partition.blocks)
    blocks[dev.from_block] &= ~bit
    if dev.target is None:
        blocks.append(bit)
    else:
        blocks[dev.target] |= bit
    return Partition(partition.n, tuple(b for b in blocks if b))


def pick_deviation(game: DiversityGame, devs: list[Deviation]) -> Deviation:
    """Lowest-id deviating agent, moving to its favourite target.

    Ties between targets go to the lowest block index, leaving alone last.
    """
    agent = min(d.agent for d in devs)
    mine = [d for d in devs if d.agent == agent]
    return min(mine, key=lambda d: (game.rank(agent, d.ratio),
                                    d.target is None,
                                    -1 if d.target is None else d.target))


def run_dynamics(game: DiversityGame, start: Optional[Partition] = None, kind: str = IS,
                 step_limit: int = 100, seed: int = 0) -> DynamicsTrace:
    """Apply deviations until none is left or ``step_limit`` moves were made.

    ``start=None`` draws a random starting partition from ``seed``; the
    dynamics themselves involve no randomness.
    """
    if kind not in (NS, IS):
        raise ValidationError(f"unknown deviation kind {kind!r}")
    if step_limit < 1:
        raise ValidationError("step_limit must be positive")
    part = random_partition(game.n, seed) if start is None else start
    check_partition(part, game)
    enumerate_devs = enumerate_ns_deviations if kind == NS else enumerate_is_deviations
    trace = DynamicsTrace(partitions=[part], step_limit=step_limit)
    while True:
        devs = enumerate_devs(game, part)
        if not devs:
            trace.converged = True
            break
        if len(trace.steps) >= step_limit:
            break
        dev = pick_deviation(game, devs)
        part = apply_deviation(part, dev)
        trace.steps.append(dev)
        trace.partitions.append(part)
    trace.final = part
    return trace
