"""Diversity games: feasible red ratios, agents, coalitions and partitions.

Ratios are :class:`fractions.Fraction` values, which are always stored in
reduced form and compare exactly.  Coalitions are plain ``int`` bit sets over
agent ids; red agents occupy ids ``0 .. red_count - 1`` and blue agents the
ids after them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, InvalidGameError, ValidationError

Ratio = Fraction

#: Largest number of agents a game may have.  Coalitions are bit sets and the
#: batched enumeration code packs them into 64-bit words.
MAX_AGENTS = 64

RED = "red"
BLUE = "blue"

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)


def make_ratio(num: int, den: int) -> Fraction:
    """Reduced ratio ``num/den`` checked to lie in [0, 1]."""
    if den <= 0 or num < 0 or num > den:
        raise DomainError(f"{num}/{den} is not a ratio in [0, 1]")
    return Fraction(num, den)


@lru_cache(maxsize=256)
def build_theta(red_count: int, blue_count: int) -> tuple[Fraction, ...]:
    """All red ratios a coalition can realise, ascending.

    A value ``r/s`` is feasible when at most ``red_count`` reds and at most
    ``blue_count`` blues are needed, i.e. ``r <= red_count`` and
    ``s - r <= blue_count``.
    """
    if red_count < 0 or blue_count < 0:
        raise InvalidGameError("agent counts must be non-negative")
    if red_count + blue_count == 0:
        raise InvalidGameError("a game needs at least one agent")
    values = set()
    for s in range(1, red_count + blue_count + 1):
        for r in range(max(0, s - blue_count), min(s, red_count) + 1):
            values.add(Fraction(r, s))
    return tuple(sorted(values))


def theta_size(red_count: int, blue_count: int) -> int:
    return len(build_theta(red_count, blue_count))


# -- coalitions as bit sets -------------------------------------------------

def coalition(ids: Iterable[int]) -> int:
    mask = 0
    for i in ids:
        if i < 0:
            raise DomainError(f"negative agent id {i}")
        mask |= 1 << i
    return mask


def members(mask: int) -> list[int]:
    """Agent ids in ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class DiversityGame:
    """Two-colour hedonic game with preferences over red ratios.

    ``prefs[i]`` ranks every ratio of :attr:`theta`, most preferred first.
    """

    red_count: int
    blue_count: int
    prefs: tuple[tuple[Fraction, ...], ...]
    theta: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.red_count + self.blue_count
        if n > MAX_AGENTS:
            raise InvalidGameError(f"{n} agents exceed the cap of {MAX_AGENTS}")
        theta = build_theta(self.red_count, self.blue_count)
        prefs = tuple(tuple(Fraction(x) for x in order) for order in self.prefs)
        if len(prefs) != n:
            raise InvalidGameError(f"expected {n} preference orders, got {len(prefs)}")
        for i, order in enumerate(prefs):
            check_permutation(order, theta, what=f"order of agent {i}")
        object.__setattr__(self, "prefs", prefs)
        object.__setattr__(self, "theta", theta)

    @property
    def n(self) -> int:
        return self.red_count + self.blue_count

    @property
    def red_mask(self) -> int:
        return (1 << self.red_count) - 1

    @property
    def blue_mask(self) -> int:
        return ((1 << self.n) - 1) & ~self.red_mask

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def reds(self) -> range:
        return range(self.red_count)

    @property
    def blues(self) -> range:
        return range(self.red_count, self.n)

    def is_red(self, agent: int) -> bool:
        self._check_agent(agent)
        return agent < self.red_count

    def color(self, agent: int) -> str:
        return RED if self.is_red(agent) else BLUE

    @cached_property
    def _positions(self) -> tuple[dict[Fraction, int], ...]:
        return tuple({x: k for k, x in enumerate(order)} for order in self.prefs)

    @cached_property
    def rank_table(self) -> np.ndarray:
        """``rank_table[i, j]`` is agent i's rank of ``theta[j]`` (0 = best)."""
        index = {x: j for j, x in enumerate(self.theta)}
        table = np.empty((self.n, len(self.theta)), dtype=np.int16)
        for i, order in enumerate(self.prefs):
            for k, x in enumerate(order):
                table[i, index[x]] = k
        return table

    def _check_agent(self, agent: int) -> None:
        if not 0 <= agent < self.n:
            raise DomainError(f"agent {agent} is not in a game with {self.n} agents")

    def rank(self, agent: int, ratio: Fraction) -> int:
        self._check_agent(agent)
        try:
            return self._positions[agent][ratio]
        except KeyError:
            raise DomainError(f"ratio {ratio} is not a feasible ratio of this game") from None

    def top(self, agent: int) -> Fraction:
        self._check_agent(agent)
        return self.prefs[agent][0]

    def prefers(self, agent: int, a: Fraction, b: Fraction) -> bool:
        """True iff ``agent`` ranks ratio ``a`` strictly above ``b``."""
        return self.rank(agent, a) < self.rank(agent, b)

    def weakly_prefers(self, agent: int, a: Fraction, b: Fraction) -> bool:
        return self.rank(agent, a) <= self.rank(agent, b)

    def singleton_ratio(self, agent: int) -> Fraction:
        return ONE if self.is_red(agent) else ZERO

    def red_ratio(self, mask: int) -> Fraction:
        size = mask.bit_count()
        if size == 0:
            raise DomainError("the red ratio of an empty coalition is undefined")
        if mask >> self.n:
            raise DomainError("coalition contains agents outside the game")
        return Fraction((mask & self.red_mask).bit_count(), size)

    def is_individually_rational(self, mask: int) -> bool:
        ratio = self.red_ratio(mask)
        return all(self.weakly_prefers(i, ratio, self.singleton_ratio(i)) for i in members(mask))

    def name(self, agent: int) -> str:
        """Human-readable name: ``r1..`` for reds, ``b1..`` for blues."""
        if self.is_red(agent):
            return f"r{agent + 1}"
        return f"b{agent - self.red_count + 1}"


def check_permutation(order: Sequence[Fraction], theta: Sequence[Fraction], what: str = "order") -> None:
    seen = set()
    allowed = set(theta)
    for x in order:
        if x not in allowed:
            raise ValidationError(f"{what}: {x} is not a feasible ratio")
        if x in seen:
            raise ValidationError(f"{what}: {x} is listed twice")
        seen.add(x)
    missing = [x for x in theta if x not in seen]
    if missing:
        listed = ", ".join(str(x) for x in missing)
        raise ValidationError(f"{what}: missing ratio(s) {listed}")


@dataclass(frozen=True)
class Partition:
    """Exact cover of agents ``0 .. n-1`` by disjoint non-empty bit sets.

    Blocks are kept sorted by their lowest member, so two partitions are
    equal iff they group the agents the same way.
    """

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(sorted(self.blocks, key=lowest))
        seen = 0
        for b in blocks:
            if b <= 0:
                raise ValidationError("partition blocks must be non-empty")
            if b & seen:
                overlap = members(b & seen)
                raise ValidationError(f"agents {overlap} appear in more than one block")
            seen |= b
        if seen != (1 << self.n) - 1:
            missing = members(((1 << self.n) - 1) & ~seen)
            extra = members(seen >> self.n << self.n)
            raise ValidationError(f"partition does not cover agents 0..{self.n - 1}: "
                                  f"missing {missing}, unknown {extra}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_lists(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        return cls(n, tuple(coalition(b) for b in blocks))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def grand(cls, n: int) -> "Partition":
        return cls(n, ((1 << n) - 1,))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        """Partition grouping agents with equal labels (e.g. a growth string)."""
        groups: dict[int, int] = {}
        for i, lab in enumerate(labels):
            groups[int(lab)] = groups.get(int(lab), 0) | (1 << i)
        return cls(len(labels), tuple(groups.values()))

    def as_lists(self) -> list[list[int]]:
        return [members(b) for b in self.blocks]

    def block_index(self, agent: int) -> int:
        bit = 1 << agent
        for k, b in enumerate(self.blocks):
            if b & bit:
                return k
        raise DomainError(f"agent {agent} is not covered")

    def block_of(self, agent: int) -> int:
        return self.blocks[self.block_index(agent)]

    def labels(self) -> list[int]:
        """Restricted growth string of the partition."""
        out = [0] * self.n
        for k, b in enumerate(self.blocks):
            for i in members(b):
                out[i] = k
        return out

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


def check_partition(partition: Partition, game: DiversityGame) -> None:
    if partition.n != game.n:
        raise ValidationError(f"partition covers {partition.n} agents, game has {game.n}")


def gcd_reduced(num: int, den: int) -> bool:
    return den > 0 and gcd(num, den) == 1
