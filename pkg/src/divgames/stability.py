"""Stability checks for a fixed partition: core, Nash and individual stability."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .model import DiversityGame, Partition, check_partition, members

NS = "NS"
IS = "IS"


@dataclass(frozen=True)
class BlockingWitness:
    coalition: int
    ratio: Fraction

    @property
    def agents(self) -> list[int]:
        return members(self.coalition)


@dataclass(frozen=True)
class Deviation:
    """A move of ``agent`` out of block ``from_block``.

    ``target`` is a block index of the partition, or ``None`` for leaving to
    form a singleton.
    """

    agent: int
    from_block: int
    target: Optional[int]
    kind: str
    ratio: Fraction


def current_ratios(game: DiversityGame, partition: Partition) -> list[Fraction]:
    """Red ratio of each agent's own block, indexed by agent id."""
    check_partition(partition, game)
    out = [Fraction(0)] * game.n
    for b in partition.blocks:
        ratio = game.red_ratio(b)
        for i in members(b):
            out[i] = ratio
    return out


def find_blocking_coalition(game: DiversityGame, partition: Partition) -> Optional[BlockingWitness]:
    """First blocking coalition in (size, red count) lexicographic order.

    For every feasible size ``s`` and red count ``r`` the agents strictly
    preferring ``r/s`` to their current ratio are collected; a block exists
    for ``(s, r)`` iff that set holds at least ``r`` reds and ``s - r``
    blues.  The witness takes the lowest ids of each colour.
    """
    cur = current_ratios(game, partition)
    eager: dict[Fraction, tuple[list[int], list[int]]] = {}
    for theta in game.theta:
        who = [i for i in range(game.n) if game.prefers(i, theta, cur[i])]
        eager[theta] = ([i for i in who if i < game.red_count],
                        [i for i in who if i >= game.red_count])
    for s in range(1, game.n + 1):
        for r in range(max(0, s - game.blue_count), min(s, game.red_count) + 1):
            theta = Fraction(r, s)
            reds, blues = eager[theta]
            if len(reds) >= r and len(blues) >= s - r:
                mask = 0
                for i in reds[:r] + blues[:s - r]:
                    mask |= 1 << i
                return BlockingWitness(mask, theta)
    return None


def is_core_stable(game: DiversityGame, partition: Partition) -> bool:
    return find_blocking_coalition(game, partition) is None


def accepts(game: DiversityGame, agent: int, block: int, incomer: int) -> bool:
    """Whether ``agent`` (a member of ``block``) lets ``incomer`` join."""
    return game.weakly_prefers(agent, game.red_ratio(block | (1 << incomer)), game.red_ratio(block))


def _deviations(game: DiversityGame, partition: Partition, kind: str) -> list[Deviation]:
    check_partition(partition, game)
    ratios = [game.red_ratio(b) for b in partition.blocks]
    out = []
    for i in range(game.n):
        own = partition.block_index(i)
        here = ratios[own]
        for k, block in enumerate(partition.blocks):
            if k == own:
                continue
            theta = game.red_ratio(block | (1 << i))
            if not game.prefers(i, theta, here):
                continue
            if kind == IS and not all(accepts(game, j, block, i) for j in members(block)):
                continue
            out.append(Deviation(i, own, k, kind, theta))
        if partition.blocks[own] != 1 << i:
            alone = game.singleton_ratio(i)
            if game.prefers(i, alone, here):
                out.append(Deviation(i, own, None, kind, alone))
    return out


def enumerate_ns_deviations(game: DiversityGame, partition: Partition) -> list[Deviation]:
    """All moves an agent strictly prefers, ordered by agent then target (empty set last)."""
    return _deviations(game, partition, NS)


def enumerate_is_deviations(game: DiversityGame, partition: Partition) -> list[Deviation]:
    """NS-deviations that every member of the target block accepts."""
    return _deviations(game, partition, IS)


def is_nash_stable(game: DiversityGame, partition: Partition) -> bool:
    return not enumerate_ns_deviations(game, partition)


def is_individually_stable(game: DiversityGame, partition: Partition) -> bool:
    return not enumerate_is_deviations(game, partition)


def is_individually_rational_partition(game: DiversityGame, partition: Partition) -> bool:
    check_partition(partition, game)
    return all(game.is_individually_rational(b) for b in partition.blocks)
