"""Exhaustive search over set partitions.

Partitions are enumerated as restricted growth strings (RGS) in
lexicographic order: ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``.  Core
stability is evaluated on whole batches of strings with numpy; Nash and
individual stability go through the per-partition checks.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Optional

import numpy as np

from .errors import ResourceLimitError
from .model import DiversityGame, Partition
from .stability import is_individually_stable, is_nash_stable

#: Default largest game handed to the brute-force solvers; Bell(13) ~ 2.8e7.
BRUTE_FORCE_CAP = 13

_BATCH = 1 << 15
_SUFFIX = 7


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Number of set partitions of an n-element set."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All RGS of length ``n`` in lexicographic order."""
    if n <= 0:
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[:i+1])
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]


def check_cap(n: int, cap: int = BRUTE_FORCE_CAP) -> None:
    if n > cap:
        raise ResourceLimitError(
            f"exhaustive search over {n} agents needs Bell({n}) = {bell(n)} partitions; "
            f"the cap is {cap} agents")


def _extend(rows: np.ndarray, top: np.ndarray, steps: int) -> np.ndarray:
    """Append ``steps`` positions to every RGS prefix in ``rows``, keeping lex order."""
    for _ in range(steps):
        counts = top.astype(np.int64) + 2
        total = int(counts.sum())
        starts = np.repeat(np.cumsum(counts) - counts, counts)
        col = (np.arange(total) - starts).astype(np.int8)
        rows = np.repeat(rows, counts, axis=0)
        top = np.maximum(np.repeat(top, counts), col)
        rows = np.concatenate([rows, col[:, None]], axis=1)
    return rows


def _prefixes(n: int) -> list[tuple[int, ...]]:
    p = max(1, n - _SUFFIX)
    return list(restricted_growth_strings(p))


def rgs_batches(n: int, prefixes: Optional[list[tuple[int, ...]]] = None,
                batch: int = _BATCH) -> Iterator[np.ndarray]:
    """Yield ``(m, n)`` int8 arrays that together list every RGS once, in lex order."""
    if n <= 0:
        return
    p = max(1, n - _SUFFIX)
    for prefix in (prefixes if prefixes is not None else _prefixes(n)):
        rows = np.array([prefix], dtype=np.int8)
        full = _extend(rows, np.array([max(prefix)]), n - p)
        for k in range(0, len(full), batch):
            yield full[k:k + batch]


class CoreBatchChecker:
    """Vectorised core test for many partitions of one game.

    A coalition with red ratio ``a/b`` (reduced) blocks iff at least ``a``
    reds and ``b - a`` blues strictly prefer ``a/b`` to their current ratio;
    larger realisations of the same ratio need more agents of each colour.
    """

    def __init__(self, game: DiversityGame):
        self.n = game.n
        self.red_count = game.red_count
        theta = game.theta
        index = {x: j for j, x in enumerate(theta)}
        size = game.n + 1
        lookup = np.full((size, size), -1, dtype=np.int16)
        for s in range(1, size):
            for r in range(0, s + 1):
                x = Fraction(r, s)
                if x in index:
                    lookup[r, s] = index[x]
        self.lookup = lookup
        rank = game.rank_table.astype(np.int32)
        # better[i, j, c]: agent i strictly prefers theta[j] to theta[c]
        self.better = rank[:, :, None] < rank[:, None, :]
        self.need_red = np.array([x.numerator for x in theta])
        self.need_blue = np.array([x.denominator - x.numerator for x in theta])

    def current_index(self, labels: np.ndarray) -> np.ndarray:
        labels = labels.astype(np.intp)
        onehot = labels[:, :, None] == np.arange(self.n)[None, None, :]
        sizes = onehot.sum(axis=1)
        reds = onehot[:, :self.red_count, :].sum(axis=1)
        own_size = np.take_along_axis(sizes, labels, axis=1)
        own_red = np.take_along_axis(reds, labels, axis=1)
        return self.lookup[own_red, own_size]

    def stable(self, labels: np.ndarray) -> np.ndarray:
        """Boolean mask: which rows of ``labels`` are core stable."""
        cur = self.current_index(labels)
        agents = np.arange(self.n)[None, :]
        prefer = self.better[agents, :, cur]          # (m, n, |theta|)
        red_votes = prefer[:, :self.red_count, :].sum(axis=1)
        blue_votes = prefer[:, self.red_count:, :].sum(axis=1)
        blocked = (red_votes >= self.need_red) & (blue_votes >= self.need_blue)
        return ~blocked.any(axis=1)


def _core_hits(game: DiversityGame, prefixes: list[tuple[int, ...]], find_all: bool) -> list[tuple[int, ...]]:
    checker = CoreBatchChecker(game)
    hits: list[tuple[int, ...]] = []
    for rows in rgs_batches(game.n, prefixes):
        ok = checker.stable(rows)
        if ok.any():
            found = rows[ok]
            if not find_all:
                return [tuple(int(v) for v in found[0])]
            hits.extend(tuple(int(v) for v in r) for r in found)
    return hits


def _split(items: list, parts: int) -> list[list]:
    size = -(-len(items) // parts)
    return [items[k:k + size] for k in range(0, len(items), size)]


def core_brute_force(game: DiversityGame, find_all: bool = True, cap: int = BRUTE_FORCE_CAP,
                     jobs: int = 1) -> list[Partition]:
    """Core-stable partitions of ``game``, in RGS order.

    With ``find_all=False`` only the first one (if any) is returned.  With
    ``jobs > 1`` contiguous runs of prefixes go to worker processes and the
    results are merged back in prefix order, so the output does not depend
    on ``jobs``.
    """
    check_cap(game.n, cap)
    prefixes = _prefixes(game.n)
    if jobs <= 1 or len(prefixes) < 2:
        hits = _core_hits(game, prefixes, find_all)
    else:
        chunks = _split(prefixes, min(jobs * 4, len(prefixes)))
        hits = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_core_hits, game, chunk, find_all) for chunk in chunks]
            for fut in futures:
                hits.extend(fut.result())
                if hits and not find_all:
                    for other in futures:
                        other.cancel()
                    break
        if not find_all:
            hits = hits[:1]
    return [Partition.from_labels(h) for h in hits]


def brute_force(game: DiversityGame, predicate: Callable[[DiversityGame, Partition], bool],
                find_all: bool = True, cap: int = BRUTE_FORCE_CAP) -> list[Partition]:
    """Partitions satisfying ``predicate``, scanning RGS one at a time."""
    check_cap(game.n, cap)
    out = []
    for labels in restricted_growth_strings(game.n):
        part = Partition.from_labels(labels)
        if predicate(game, part):
            out.append(part)
            if not find_all:
                break
    return out


def nash_brute_force(game: DiversityGame, find_all: bool = True, cap: int = BRUTE_FORCE_CAP) -> list[Partition]:
    return brute_force(game, is_nash_stable, find_all, cap)


def is_brute_force(game: DiversityGame, find_all: bool = True, cap: int = BRUTE_FORCE_CAP) -> list[Partition]:
    return brute_force(game, is_individually_stable, find_all, cap)
