"""Preference orders over red ratios: single-peakedness, peaks, instance families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, InvalidGameError, ValidationError
from .model import HALF, ONE, DiversityGame, build_theta, check_permutation

PEAK_RULES = ("closest", "left", "right")


@dataclass(frozen=True)
class PeakReport:
    is_single_peaked: bool
    top: Optional[Fraction] = None


def verify_single_peaked(order: Sequence[Fraction], theta: Sequence[Fraction]) -> PeakReport:
    """Check single-peakedness of ``order`` along the ascending axis ``theta``.

    An order is single-peaked iff each prefix of the ranking covers a
    contiguous run of ``theta``: every next element extends the current run
    by one step on the left or on the right.
    """
    check_permutation(order, theta)
    index = {x: j for j, x in enumerate(theta)}
    lo = hi = index[order[0]]
    for x in order[1:]:
        j = index[x]
        if j == lo - 1:
            lo = j
        elif j == hi + 1:
            hi = j
        else:
            return PeakReport(False)
    return PeakReport(True, order[0])


def is_single_peaked(order: Sequence[Fraction], theta: Sequence[Fraction]) -> bool:
    return verify_single_peaked(order, theta).is_single_peaked


def require_single_peaked(game: DiversityGame) -> None:
    for i, order in enumerate(game.prefs):
        if not verify_single_peaked(order, game.theta).is_single_peaked:
            raise ValidationError(f"preferences of agent {i} are not single-peaked")


def peak_at_least_half(game: DiversityGame, agent: int) -> bool:
    """Whether the agent's peak lies at or above one half.

    The top-ranked ratio stands in for the peak.  Since 1/2 is feasible
    whenever both colours are present, the top sits on the same side of 1/2
    as any peak consistent with the order.
    """
    if not is_single_peaked(game.prefs[agent], game.theta):
        raise ValidationError(f"preferences of agent {agent} are not single-peaked")
    return game.top(agent) >= HALF


def virtual_peak(game: DiversityGame, agent: int) -> Fraction:
    """Favourite ratio among coalitions with exactly one blue agent."""
    if game.blue_count < 1:
        raise DomainError("virtual peaks need at least one blue agent")
    candidates = [Fraction(m, m + 1) for m in range(game.red_count + 1)]
    return min(candidates, key=lambda x: game.rank(agent, x))


def blue_mirror(order: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Re-express an order over red ratios as an order over blue ratios."""
    return tuple(ONE - x for x in order)


def mirror_game(game: DiversityGame) -> DiversityGame:
    """Swap colours: blues become agents ``0..|B|-1``, reds follow.

    The mirrored agent ``j`` is the original agent :func:`mirror_id` ``(game, j)``.
    """
    original = [*game.blues, *game.reds]
    prefs = tuple(blue_mirror(game.prefs[i]) for i in original)
    return DiversityGame(game.blue_count, game.red_count, prefs)


def mirror_id(game: DiversityGame, mirrored_agent: int) -> int:
    """Original id of agent ``mirrored_agent`` of ``mirror_game(game)``."""
    if mirrored_agent < game.blue_count:
        return game.red_count + mirrored_agent
    return mirrored_agent - game.blue_count


def to_mirror_id(game: DiversityGame, agent: int) -> int:
    if agent < game.red_count:
        return game.blue_count + agent
    return agent - game.red_count


# -- instance families --------------------------------------------------------

def _require_counts(red_count: int, blue_count: int) -> None:
    if red_count < 0 or blue_count < 0 or red_count + blue_count < 1:
        raise InvalidGameError(f"invalid agent counts ({red_count}, {blue_count})")


def make_homophilic(red_count: int, blue_count: int) -> DiversityGame:
    """Everyone wants as many agents of their own colour as possible."""
    _require_counts(red_count, blue_count)
    theta = build_theta(red_count, blue_count)
    desc = tuple(reversed(theta))
    return DiversityGame(red_count, blue_count, (desc,) * red_count + (theta,) * blue_count)


def make_bakers_millers(red_count: int, blue_count: int) -> DiversityGame:
    """Everyone wants as many agents of the other colour as possible."""
    _require_counts(red_count, blue_count)
    theta = build_theta(red_count, blue_count)
    desc = tuple(reversed(theta))
    return DiversityGame(red_count, blue_count, (theta,) * red_count + (desc,) * blue_count)


def complete_order(prefix: Sequence[Fraction], theta: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Extend a ranked prefix to a full order; unlisted ratios follow, descending."""
    listed = set(prefix)
    if len(listed) != len(prefix):
        raise ValidationError("prefix lists a ratio twice")
    rest = sorted((x for x in theta if x not in listed), reverse=True)
    order = tuple(prefix) + tuple(rest)
    check_permutation(order, theta)
    return order


def _q(*pairs):
    return [Fraction(a, b) for a, b in pairs]


def make_example3() -> DiversityGame:
    """Nine-agent single-peaked game with an empty core.

    Agents 0-3 and 7 share one taste, agent 4 another, agents 5, 6 and 8 a
    third.  Ids 0..6 are the reds r1..r7, ids 7 and 8 the blues b1, b2.
    """
    theta = build_theta(7, 2)
    x_red = _q((6, 7), (5, 6), (4, 5), (7, 9), (3, 4), (7, 8), (1, 1), (5, 7))
    x_blue = _q((6, 7), (5, 6), (4, 5), (7, 9), (3, 4), (7, 8), (5, 7))
    y_red = _q((5, 6), (4, 5), (7, 9), (3, 4), (6, 7), (7, 8), (1, 1), (5, 7))
    z_blue = _q((3, 4), (7, 9), (4, 5), (5, 6), (6, 7), (7, 8), (5, 7))
    z_red = _q((3, 4), (7, 9), (4, 5), (5, 6), (6, 7), (7, 8), (1, 1), (5, 7))
    prefixes = [x_red] * 4 + [y_red] + [z_red] * 2 + [x_blue, z_blue]
    return DiversityGame(7, 2, tuple(complete_order(p, theta) for p in prefixes))


def order_from_peak(theta: Sequence[Fraction], peak: Fraction, rule: str = "closest") -> tuple[Fraction, ...]:
    """Deterministic single-peaked order topped by ``peak``.

    ``closest`` takes whichever neighbour of the ranked run is nearer to the
    peak (the smaller ratio on ties); ``left`` ranks everything below the peak
    before anything above it; ``right`` does the opposite.
    """
    if rule not in PEAK_RULES:
        raise ValidationError(f"unknown completion rule {rule!r}; expected one of {PEAK_RULES}")
    try:
        p = list(theta).index(peak)
    except ValueError:
        raise ValidationError(f"peak {peak} is not a feasible ratio") from None
    below = list(reversed(theta[:p]))
    above = list(theta[p + 1:])
    order = [peak]
    if rule == "left":
        return tuple(order + below + above)
    if rule == "right":
        return tuple(order + above + below)
    i = j = 0
    while i < len(below) or j < len(above):
        if j >= len(above) or (i < len(below) and peak - below[i] <= above[j] - peak):
            order.append(below[i])
            i += 1
        else:
            order.append(above[j])
            j += 1
    return tuple(order)


def random_single_peaked_order(theta: Sequence[Fraction], rng: np.random.Generator) -> tuple[Fraction, ...]:
    """Uniform peak, then a fair coin picks the side whenever both sides remain."""
    p = int(rng.integers(len(theta)))
    lo = hi = p
    order = [theta[p]]
    while lo > 0 or hi < len(theta) - 1:
        if lo == 0:
            go_left = False
        elif hi == len(theta) - 1:
            go_left = True
        else:
            go_left = bool(rng.integers(2))
        if go_left:
            lo -= 1
            order.append(theta[lo])
        else:
            hi += 1
            order.append(theta[hi])
    return tuple(order)


def random_single_peaked(red_count: int, blue_count: int, seed: int) -> DiversityGame:
    """Game whose agents get independent random single-peaked orders.

    Draws come from ``numpy.random.default_rng(seed)`` in agent-id order.
    """
    _require_counts(red_count, blue_count)
    theta = build_theta(red_count, blue_count)
    rng = np.random.default_rng(seed)
    prefs = tuple(random_single_peaked_order(theta, rng) for _ in range(red_count + blue_count))
    return DiversityGame(red_count, blue_count, prefs)


def random_game(red_count: int, blue_count: int, seed: int) -> DiversityGame:
    """Game with uniformly random (not necessarily single-peaked) orders."""
    _require_counts(red_count, blue_count)
    theta = build_theta(red_count, blue_count)
    rng = np.random.default_rng(seed)
    prefs = tuple(tuple(theta[j] for j in rng.permutation(len(theta)))
                  for _ in range(red_count + blue_count))
    return DiversityGame(red_count, blue_count, prefs)


def random_common_preference(red_count: int, blue_count: int, seed: int) -> DiversityGame:
    """All agents share one random order of the mixed ratios.

    Each agent then inserts 0 and 1 at independent random positions.
    """
    _require_counts(red_count, blue_count)
    theta = build_theta(red_count, blue_count)
    rng = np.random.default_rng(seed)
    ends = [x for x in theta if x in (0, 1)]
    interior = [x for x in theta if x not in (0, 1)]
    shared = [interior[j] for j in rng.permutation(len(interior))]
    prefs = []
    for _ in range(red_count + blue_count):
        order = list(shared)
        for x in ends:
            order.insert(int(rng.integers(len(order) + 1)), x)
        prefs.append(tuple(order))
    return DiversityGame(red_count, blue_count, tuple(prefs))


def shares_interior_order(game: DiversityGame) -> bool:
    """True iff all agents rank the ratios strictly between 0 and 1 alike."""
    interiors = {tuple(x for x in order if 0 < x < 1) for order in game.prefs}
    return len(interiors) <= 1
