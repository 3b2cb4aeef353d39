"""Individually stable partitions for single-peaked diversity games.

:func:`half` grows mixed coalitions with a red majority, one blue agent per
coalition.  :func:`solve_individually_stable` runs it once for each colour
(the second time on the colour-swapped game), pairs up what is left, lets
leftovers join mixed coalitions that take them, and puts everyone else in a
singleton.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import ValidationError
from .model import HALF, ONE, DiversityGame, Partition, coalition, members
from .preferences import (
    is_single_peaked,
    mirror_game,
    mirror_id,
    to_mirror_id,
    virtual_peak,
)

S0 = 0  # target index of "go alone"; mixed coalitions are numbered from 1


@dataclass
class HalfResult:
    """Output of :func:`half`.

    ``blocks[t]`` is the coalition numbered ``t + 1``; ``defaults[t]`` holds
    its blue agent and the reds that entered it through the growth step.
    ``default_ratios`` is the red ratio of each default set when the main
    loop ends.
    """

    blocks: list[int] = field(default_factory=list)
    defaults: list[int] = field(default_factory=list)
    singles: list[int] = field(default_factory=list)
    leftover_reds: list[int] = field(default_factory=list)
    leftover_blues: list[int] = field(default_factory=list)
    default_ratios: list[Fraction] = field(default_factory=list)

    def coalitions(self) -> list[int]:
        return list(self.blocks) + [1 << r for r in self.singles]


class _Half:
    def __init__(self, game: DiversityGame, reds: Iterable[int], blues: Iterable[int]):
        self.game = game
        reds, blues = sorted(set(reds)), sorted(set(blues))
        for i in reds:
            if not game.is_red(i):
                raise ValidationError(f"agent {i} is not red")
        for i in blues:
            if game.is_red(i):
                raise ValidationError(f"agent {i} is not blue")
        for i in reds + blues:
            if not is_single_peaked(game.prefs[i], game.theta):
                raise ValidationError(f"preferences of agent {i} are not single-peaked")
        self.reds_in, self.blues_in = reds, blues
        r_keen = [r for r in reds if game.top(r) >= HALF]
        b_keen = [b for b in blues if game.top(b) >= HALF]
        if not game.blue_count:
            r_keen = []  # nothing to mix with
        self.q = {i: virtual_peak(game, i) for i in r_keen + b_keen}
        self.r_line = sorted(r_keen, key=lambda i: (-self.q[i], i))
        self.b_line = sorted(b_keen, key=lambda i: (-self.q[i], i))
        self.blocks: list[int] = []
        self.defaults: list[int] = []
        self.singles: list[int] = []
        self.waiting = list(self.r_line)   # R' in line order

    def ratio(self, mask: int) -> Fraction:
        return self.game.red_ratio(mask)

    def accepted(self, target: int, agent: int) -> bool:
        block = self.blocks[target - 1]
        joined = self.ratio(block | (1 << agent))
        here = self.ratio(block)
        return all(self.game.weakly_prefers(j, joined, here) for j in members(block))

    def best_target(self, agent: int, targets: Iterable[int], better_than: Fraction) -> Optional[int]:
        """Agent's favourite admissible target whose ratio beats ``better_than``."""
        g = self.game
        best, best_rank = None, None
        for t in targets:
            if t == S0:
                joined = ONE
            else:
                if not self.accepted(t, agent):
                    continue
                joined = self.ratio(self.blocks[t - 1] | (1 << agent))
            if not g.prefers(agent, joined, better_than):
                continue
            rank = g.rank(agent, joined)
            if best_rank is None or rank < best_rank:
                best, best_rank = t, rank
        return best

    def move(self, agent: int, target: int) -> None:
        if target == S0:
            self.singles.append(agent)
        else:
            self.blocks[target - 1] |= 1 << agent

    def can_join(self, k: int) -> bool:
        if not self.waiting:
            return False
        r = self.waiting[0]
        b = self.b_line[k - 1]
        return self.ratio(self.blocks[k - 1] | (1 << r)) <= min(self.q[r], self.q[b])

    def leaver(self, k: int) -> Optional[tuple[int, int]]:
        current = self.blocks[k - 1]
        here = self.ratio(current)
        for r in members(current & self.game.red_mask):
            t = self.best_target(r, range(k), here)
            if t is not None:
                return r, t
        return None

    def run(self, guard: int) -> HalfResult:
        k = 0
        while self.waiting and k < len(self.b_line):
            k += 1
            b = self.b_line[k - 1]
            self.blocks.append(1 << b)
            self.defaults.append(1 << b)
            steps = 0
            while True:
                steps += 1
                if steps > guard:
                    raise RuntimeError("growth loop did not settle; please report this game")
                joined = False
                while self.can_join(k):
                    r = self.waiting.pop(0)
                    self.blocks[k - 1] |= 1 << r
                    self.defaults[k - 1] |= 1 << r
                    joined = True
                move = self.leaver(k)
                if move is not None:
                    r, t = move
                    self.blocks[k - 1] &= ~(1 << r)
                    self.defaults[k - 1] &= ~(1 << r)
                    self.move(r, t)
                elif not joined:
                    break
        default_ratios = [self.ratio(d) for d in self.defaults]
        # leftover keen reds join a coalition they like better than a mixed pair
        while True:
            choice = None
            for r in sorted(self.waiting):
                t = self.best_target(r, range(len(self.blocks) + 1), HALF)
                if t is not None:
                    choice = (r, t)
                    break
            if choice is None:
                break
            r, t = choice
            self.waiting.remove(r)
            self.move(r, t)
        blocks, defaults = self.blocks, self.defaults
        if not self.waiting and blocks and blocks[-1] & self.game.red_mask == 0:
            blocks, defaults = blocks[:-1], defaults[:-1]
            default_ratios = default_ratios[:-1]
        used = 0
        for m in blocks:
            used |= m
        for r in self.singles:
            used |= 1 << r
        return HalfResult(
            blocks=list(blocks),
            defaults=list(defaults),
            singles=sorted(self.singles),
            leftover_reds=[r for r in self.reds_in if not used >> r & 1],
            leftover_blues=[b for b in self.blues_in if not used >> b & 1],
            default_ratios=default_ratios,
        )


def half(game: DiversityGame, reds: Iterable[int], blues: Iterable[int]) -> HalfResult:
    """Form mixed coalitions with a red majority among the given agents.

    Only agents whose peak is at least 1/2 take part.  Both lines are sorted
    by decreasing virtual peak (ties by id).  Each new coalition starts from
    the next blue agent and admits reds while the red ratio stays within the
    smaller of the entering red's and the blue's virtual peaks; in between,
    reds of the newest coalition may leave for an earlier coalition (or go
    alone) when that is an individually stable move for them.  Deviators are
    picked by lowest id and move to their favourite target, ties going to
    the lower index with "alone" first.
    """
    return _Half(game, reds, blues).run(guard=4 * (game.n + 1) ** 2)


def _mirror_result(game: DiversityGame, res: HalfResult) -> HalfResult:
    def back(mask: int) -> int:
        return coalition(mirror_id(game, j) for j in members(mask))

    return HalfResult(
        blocks=[back(m) for m in res.blocks],
        defaults=[back(m) for m in res.defaults],
        singles=sorted(mirror_id(game, j) for j in res.singles),
        leftover_reds=sorted(mirror_id(game, j) for j in res.leftover_blues),
        leftover_blues=sorted(mirror_id(game, j) for j in res.leftover_reds),
        default_ratios=[ONE - x for x in res.default_ratios],
    )


def half_blue(game: DiversityGame, reds: Iterable[int], blues: Iterable[int]) -> HalfResult:
    """:func:`half` with the colours swapped, reported in the original ids.

    ``singles`` then lists blue agents; ``default_ratios`` are red ratios.
    """
    mg = mirror_game(game)
    res = half(mg, [to_mirror_id(game, b) for b in blues], [to_mirror_id(game, r) for r in reds])
    return _mirror_result(game, res)


@dataclass
class ISTrace:
    """Intermediate pieces of :func:`solve_individually_stable`."""

    red_half: HalfResult
    blue_half: HalfResult
    pairs: list[int]
    red_mixed: list[int]
    blue_mixed: list[int]
    singles: list[int]
    partition: Partition


def _admit(game: DiversityGame, pool: list[int], mixed: list[int]) -> None:
    """Let agents from ``pool`` join coalitions in ``mixed`` that accept them."""
    while True:
        choice = None
        for i in sorted(pool):
            best, best_rank = None, None
            for t, block in enumerate(mixed):
                grown = block | (1 << i)
                if not game.is_individually_rational(grown):
                    continue
                ratio, here = game.red_ratio(grown), game.red_ratio(block)
                if not all(game.weakly_prefers(j, ratio, here) for j in members(block)):
                    continue
                rank = game.rank(i, ratio)
                if best_rank is None or rank < best_rank:
                    best, best_rank = t, rank
            if best is not None:
                choice = (i, best)
                break
        if choice is None:
            return
        i, t = choice
        mixed[t] |= 1 << i
        pool.remove(i)


def individually_stable_trace(game: DiversityGame) -> ISTrace:
    for i, order in enumerate(game.prefs):
        if not is_single_peaked(order, game.theta):
            raise ValidationError(f"preferences of agent {i} are not single-peaked")
    red_half = half(game, game.reds, game.blues)
    blue_half = half_blue(game, red_half.leftover_reds, red_half.leftover_blues)
    r_left = list(blue_half.leftover_reds)
    b_left = list(blue_half.leftover_blues)

    r_pair, b_pair = [], []
    if game.red_count and game.blue_count:
        r_pair = [r for r in r_left if game.prefers(r, HALF, ONE)]
        b_pair = [b for b in b_left if game.prefers(b, HALF, Fraction(0))]
    pairs = [(1 << r) | (1 << b) for r, b in zip(r_pair, b_pair)]
    paired = coalition(r_pair[:len(pairs)] + b_pair[:len(pairs)])
    r_left = [r for r in r_left if not paired >> r & 1]
    b_left = [b for b in b_left if not paired >> b & 1]

    red_mixed = list(red_half.blocks)
    blue_mixed = list(blue_half.blocks)
    _admit(game, r_left, red_mixed)
    _admit(game, b_left, blue_mixed)

    singles = sorted(red_half.singles + blue_half.singles + r_left + b_left)
    blocks = red_mixed + blue_mixed + pairs + [1 << i for i in singles]
    return ISTrace(red_half, blue_half, pairs, red_mixed, blue_mixed, singles,
                   Partition(game.n, tuple(blocks)))


def solve_individually_stable(game: DiversityGame) -> Partition:
    """Individually stable partition of a game with single-peaked preferences."""
    return individually_stable_trace(game).partition
