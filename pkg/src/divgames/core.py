"""Core-stable partitions for two classes where the core is never empty."""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError
from .model import ONE, ZERO, DiversityGame, Partition, coalition
from .preferences import mirror_game, mirror_id, shares_interior_order


def _single_red(game: DiversityGame) -> Partition:
    r = 0
    best, best_m = ONE, 0
    for m in range(1, game.blue_count + 1):
        theta = Fraction(1, 1 + m)
        if not game.weakly_prefers(r, theta, ONE):
            continue
        willing = [b for b in game.blues if game.weakly_prefers(b, theta, ZERO)]
        if len(willing) >= m and game.prefers(r, theta, best):
            best, best_m = theta, m
    willing = [b for b in game.blues if game.weakly_prefers(b, best, ZERO)]
    chosen = willing[:best_m]
    star = coalition([r] + chosen)
    rest = [1 << b for b in game.blues if b not in chosen]
    return Partition(game.n, (star, *rest))


def core_single_red(game: DiversityGame) -> Partition:
    """Core-stable partition when one colour has a single agent.

    The lone agent picks its favourite ratio among the individually rational
    coalitions it can head, takes the lowest-id agents of the other colour
    who accept that ratio, and everyone else stays alone.
    """
    if game.red_count == 0 or game.blue_count == 0:
        return Partition.singletons(game.n)
    if game.red_count == 1:
        return _single_red(game)
    if game.blue_count == 1:
        mirrored = _single_red(mirror_game(game))
        blocks = [coalition(mirror_id(game, j) for j in part) for part in mirrored.as_lists()]
        return Partition(game.n, tuple(blocks))
    raise PreconditionError(
        f"need one red or one blue agent, got {game.red_count} red and {game.blue_count} blue")


def _top_coalition(game: DiversityGame, reds: list[int], blues: list[int]) -> int:
    mixed = sorted({Fraction(a, a + c) for a in range(1, len(reds) + 1)
                    for c in range(1, len(blues) + 1)})
    pool = reds + blues
    if not mixed:
        return 1 << min(pool)
    for i in sorted(pool):
        alone = game.singleton_ratio(i)
        if all(game.weakly_prefers(i, alone, x) for x in mixed):
            return 1 << i
    # the interior order is shared, so any agent's ranking decides
    top = min(mixed, key=lambda x: game.rank(pool[0], x))
    a, b = top.numerator, top.denominator
    return coalition(reds[:a] + blues[:b - a])


def core_common_preference(game: DiversityGame) -> Partition:
    """Core-stable partition when all agents rank the mixed ratios alike.

    Repeatedly removes a top coalition from the remaining agents: a lowest-id
    agent content to stay alone if there is one, otherwise the smallest
    coalition of remaining agents realising the shared favourite mixed ratio.
    """
    if not shares_interior_order(game):
        raise PreconditionError("agents do not share one order over the ratios strictly between 0 and 1")
    reds, blues = list(game.reds), list(game.blues)
    blocks = []
    while reds or blues:
        top = _top_coalition(game, reds, blues)
        blocks.append(top)
        reds = [i for i in reds if not top >> i & 1]
        blues = [i for i in blues if not top >> i & 1]
    return Partition(game.n, tuple(blocks))
