import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divgames import (
    DiversityGame,
    Partition,
    bell,
    core_brute_force,
    find_blocking_coalition,
    is_brute_force,
    is_core_stable,
    make_bakers_millers,
    make_homophilic,
    nash_brute_force,
    random_single_peaked,
    restricted_growth_strings,
)
from divgames.enumeration import CoreBatchChecker, rgs_batches
from divgames.errors import ResourceLimitError
from divgames.preferences import random_game

from oracles import has_blocking_coalition, set_partitions

# OEIS A000110
BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597, 27644437]


def test_bell_numbers():
    assert [bell(n) for n in range(len(BELL))] == BELL


@pytest.mark.parametrize("n", range(1, 8))
def test_rgs_cover_every_partition_once(n):
    seen = [Partition.from_labels(a) for a in restricted_growth_strings(n)]
    assert len(seen) == bell(n) == len(set(seen))
    expected = {Partition.from_lists(n, blocks) for blocks in set_partitions(range(n))}
    assert set(seen) == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_rgs_lexicographic(n):
    strings = list(restricted_growth_strings(n))
    assert strings == sorted(strings)


@pytest.mark.parametrize("n", [1, 3, 7, 8, 10])
def test_batches_match_generator(n):
    rows = np.concatenate(list(rgs_batches(n, batch=1000)))
    assert [tuple(r) for r in rows.tolist()] == list(restricted_growth_strings(n))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 10**6))
def test_batch_checker_matches_single_checker(red, blue, seed):
    if red + blue == 0:
        return
    g = random_game(red, blue, seed)
    rows = np.concatenate(list(rgs_batches(g.n)))
    mask = CoreBatchChecker(g).stable(rows)
    for labels, ok in zip(rows.tolist(), mask):
        assert bool(ok) == is_core_stable(g, Partition.from_labels(labels))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 10**6))
def test_core_brute_force_matches_oracle(red, blue, seed):
    if red + blue == 0:
        return
    g = random_single_peaked(red, blue, seed)
    found = set(core_brute_force(g))
    for blocks in set_partitions(range(g.n)):
        p = Partition.from_lists(g.n, blocks)
        assert (p in found) == (not has_blocking_coalition(g, blocks))


def test_example3_core_empty(ex3):
    assert core_brute_force(ex3) == []


def test_bakers_millers_pairs_in_core():
    pairs = Partition.from_lists(4, [[0, 2], [1, 3]])
    assert pairs in core_brute_force(make_bakers_millers(2, 2))


def test_single_agent():
    g = DiversityGame(0, 1, [(0,)])
    assert core_brute_force(g) == [Partition.singletons(1)]


def test_red_alone_blue_mixed(rabm):
    assert nash_brute_force(rabm) == []
    assert Partition.singletons(2) in is_brute_force(rabm)


def test_homophilic_singletons_everywhere():
    g = make_homophilic(1, 1)
    assert Partition.singletons(2) in nash_brute_force(g)
    assert Partition.singletons(2) in is_brute_force(g)


def test_find_first_is_prefix_of_all():
    g = make_bakers_millers(2, 2)
    everything = core_brute_force(g)
    assert core_brute_force(g, find_all=False) == everything[:1]
    assert is_brute_force(g, find_all=False) == is_brute_force(g)[:1]


def test_results_in_rgs_order():
    g = random_single_peaked(3, 3, seed=2)
    labels = [p.labels() for p in core_brute_force(g)]
    assert labels == sorted(labels)


def test_cap_is_enforced():
    g = make_homophilic(3, 3)
    with pytest.raises(ResourceLimitError, match="Bell\\(6\\) = 203"):
        core_brute_force(g, cap=5)
    with pytest.raises(ResourceLimitError):
        nash_brute_force(g, cap=5)


def test_parallel_matches_serial():
    g = random_single_peaked(5, 4, seed=7)
    serial = core_brute_force(g)
    assert core_brute_force(g, jobs=3) == serial
    assert core_brute_force(g, find_all=False, jobs=3) == serial[:1]


def test_brute_force_hits_are_unblocked():
    g = random_single_peaked(4, 3, seed=3)
    for p in core_brute_force(g):
        assert find_blocking_coalition(g, p) is None
