"""Anonymous hedonic games and their encoding as diversity games.

Every player ``a_i`` of an anonymous game becomes a blue agent that ranks
``1/(s+1)`` (one red among ``s`` blues) the way ``a_i`` ranks size ``s``,
with 0 next.  For each size ``t`` there are ``ceil(n/t) + 1`` gadget reds
who want ratio ``1/(t+1)`` and otherwise stay alone.  The anonymous core is
non-empty iff the diversity core is.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Sequence

import numpy as np

from .enumeration import BRUTE_FORCE_CAP, bell, core_brute_force, restricted_growth_strings
from .errors import ResourceLimitError, ValidationError
from .model import ONE, ZERO, DiversityGame, Partition, build_theta
from .preferences import complete_order

#: Largest anonymous game the source-side oracle enumerates.
ANON_CAP = 8


@dataclass(frozen=True)
class AnonymousGame:
    """``orders[i]`` lists coalition sizes 1..n, most preferred first."""

    orders: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        orders = tuple(tuple(int(s) for s in o) for o in self.orders)
        n = len(orders)
        if n < 1:
            raise ValidationError("an anonymous game needs at least one player")
        for i, o in enumerate(orders):
            if sorted(o) != list(range(1, n + 1)):
                raise ValidationError(f"order of player {i} is not a permutation of sizes 1..{n}: {list(o)}")
        object.__setattr__(self, "orders", orders)

    @property
    def n(self) -> int:
        return len(self.orders)

    def rank(self, player: int, size: int) -> int:
        return self.orders[player].index(size)


def gadget_counts(n: int) -> list[int]:
    """Number of gadget reds for each size t = 1..n."""
    return [ceil(n / t) + 1 for t in range(1, n + 1)]


def reduced_size(n: int) -> int:
    return n + sum(gadget_counts(n))


@dataclass(frozen=True)
class Reduction:
    """A reduced game with its id layout.

    Reds come first, grouped by size ``t`` ascending and then by copy
    ``l``; ``gadgets[j] = (t, l)`` describes red ``j``.  Player ``i`` is
    the blue agent ``game.red_count + i``.
    """

    game: DiversityGame
    gadgets: tuple[tuple[int, int], ...]

    def blue_of(self, player: int) -> int:
        return self.game.red_count + player


def reduce_to_diversity(anon: AnonymousGame) -> Reduction:
    n = anon.n
    gadgets = tuple((t, l) for t, count in zip(range(1, n + 1), gadget_counts(n))
                    for l in range(1, count + 1))
    red_count = len(gadgets)
    theta = build_theta(red_count, n)
    prefs = [complete_order([Fraction(1, t + 1), ONE], theta) for t, _ in gadgets]
    for order in anon.orders:
        prefs.append(complete_order([Fraction(1, s + 1) for s in order] + [ZERO], theta))
    return Reduction(DiversityGame(red_count, n, tuple(prefs)), gadgets)


def _anon_blocked(anon: AnonymousGame, sizes: Sequence[int]) -> bool:
    for s in range(1, anon.n + 1):
        keen = sum(1 for i in range(anon.n) if anon.rank(i, s) < anon.rank(i, sizes[i]))
        if keen >= s:
            return True
    return False


def anon_core_brute_force(anon: AnonymousGame, find_all: bool = True) -> list[Partition]:
    """Core-stable partitions of an anonymous game, in RGS order.

    A partition is blocked when, for some size ``s``, at least ``s`` players
    strictly prefer size ``s`` to the size of their own block.
    """
    if anon.n > ANON_CAP:
        raise ResourceLimitError(f"anonymous games above {ANON_CAP} players are not enumerated")
    out = []
    for labels in restricted_growth_strings(anon.n):
        counts = np.bincount(labels)
        sizes = [int(counts[lab]) for lab in labels]
        if not _anon_blocked(anon, sizes):
            out.append(Partition.from_labels(labels))
            if not find_all:
                break
    return out


@dataclass(frozen=True)
class EquivalenceReport:
    source_core_nonempty: bool
    target_core_nonempty: bool
    reduced_agents: int

    @property
    def agree(self) -> bool:
        return self.source_core_nonempty == self.target_core_nonempty


def check_reduction_equivalence(anon: AnonymousGame, cap: int = BRUTE_FORCE_CAP, jobs: int = 1) -> EquivalenceReport:
    """Decide core non-emptiness on both sides of the reduction by enumeration."""
    size = reduced_size(anon.n)
    if size > cap:
        raise ResourceLimitError(
            f"anonymous game with {anon.n} players reduces to {size} agents "
            f"(Bell({size}) = {bell(size)} partitions); the cap is {cap}")
    red = reduce_to_diversity(anon)
    source = bool(anon_core_brute_force(anon, find_all=False))
    target = bool(core_brute_force(red.game, find_all=False, cap=cap, jobs=jobs))
    return EquivalenceReport(source, target, size)


def random_anonymous(n: int, seed: int) -> AnonymousGame:
    rng = np.random.default_rng(seed)
    return AnonymousGame(tuple(tuple(int(x) + 1 for x in rng.permutation(n)) for _ in range(n)))
