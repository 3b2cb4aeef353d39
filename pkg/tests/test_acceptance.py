"""Acceptance criteria 1-8.

Run with ``pytest tests/test_acceptance.py`` (one PASS/FAIL line per
criterion is printed in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import sys
import time
from itertools import permutations, product
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from divgames import (  # noqa: E402
    AnonymousGame,
    Partition,
    bell,
    check_reduction_equivalence,
    core_brute_force,
    core_common_preference,
    core_single_red,
    find_blocking_coalition,
    is_brute_force,
    is_core_stable,
    is_individually_stable,
    is_nash_stable,
    make_bakers_millers,
    make_example3,
    make_homophilic,
    nash_brute_force,
    random_single_peaked,
)
from divgames.individual import individually_stable_trace  # noqa: E402
from divgames.model import HALF, ONE  # noqa: E402
from divgames.preferences import random_common_preference, random_game  # noqa: E402
from divgames.reduction import random_anonymous  # noqa: E402
from divgames.stability import is_individually_rational_partition  # noqa: E402

from helpers import red_alone_blue_mixed  # noqa: E402
from oracles import has_blocking_coalition  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}


def _is_suite():
    """The 1000 seeded games shared by criteria 4 and 8."""
    rng = np.random.default_rng(2024)
    for k in range(1000):
        red, blue = (int(x) for x in rng.integers(1, 7, size=2))
        yield random_single_peaked(red, blue, seed=k)


def criterion_1():
    g = make_example3()
    start = time.perf_counter()
    found = core_brute_force(g)
    took = time.perf_counter() - start
    ok = bell(9) == 21147 and found == [] and took < 5
    return ok, f"example3: {len(found)} core-stable partitions out of {bell(9)}, {took:.2f}s"


def criterion_2():
    homo, bm = make_homophilic(2, 2), make_bakers_millers(2, 2)
    alone = Partition.singletons(4)
    pairs = Partition.from_lists(4, [[0, 2], [1, 3]])
    ok = (is_core_stable(homo, alone) and is_nash_stable(homo, alone)
          and is_core_stable(bm, pairs) and is_nash_stable(bm, pairs)
          and alone in core_brute_force(homo) and pairs in core_brute_force(bm))
    return ok, "homophilic singletons and Bakers-Millers pairs are core and Nash stable"


def criterion_3():
    g = red_alone_blue_mixed()
    nash, ind = nash_brute_force(g), is_brute_force(g)
    ok = nash == [] and len(ind) > 0
    return ok, f"red-alone/blue-mixed: {len(nash)} Nash stable, {len(ind)} individually stable"


def criterion_4():
    good, total = 0, 0
    start = time.perf_counter()
    for g in _is_suite():
        total += 1
        p = individually_stable_trace(g).partition
        good += is_individually_stable(g, p) and is_individually_rational_partition(g, p)
    took = time.perf_counter() - start
    return good == total == 1000 and took < 30, f"{good}/{total} individually stable and rational, {took:.1f}s"


def criterion_5():
    rng = np.random.default_rng(5)
    agree, total = 0, 500
    start = time.perf_counter()
    for k in range(total):
        n = int(rng.integers(1, 8))
        red = int(rng.integers(0, n + 1))
        g = random_game(red, n - red, seed=k) if k % 2 else random_single_peaked(red, n - red, seed=k)
        p = Partition.from_labels([int(x) for x in rng.integers(0, n, size=n)])
        fast = find_blocking_coalition(g, p) is None
        slow = not has_blocking_coalition(g, p.as_lists())
        agree += fast == slow
    took = time.perf_counter() - start
    return agree == total and took < 30, f"{agree}/{total} checker verdicts match the exhaustive oracle, {took:.1f}s"


def criterion_6():
    rng = np.random.default_rng(6)
    stable, agree = 0, 0
    start = time.perf_counter()
    for k in range(200):
        others = int(rng.integers(0, 8))
        g = random_single_peaked(1, others, seed=k) if k % 2 else random_single_peaked(others, 1, seed=k)
        p = core_single_red(g)
        stable += is_core_stable(g, p)
        agree += bool(core_brute_force(g, find_all=False))
    for k in range(200):
        n = int(rng.integers(1, 9))
        red = int(rng.integers(0, n + 1))
        g = random_common_preference(red, n - red, seed=k)
        p = core_common_preference(g)
        stable += is_core_stable(g, p)
        agree += bool(core_brute_force(g, find_all=False))
    took = time.perf_counter() - start
    ok = stable == agree == 400 and took < 60
    return ok, f"{stable}/400 constructions core stable, {agree}/400 brute force agrees non-empty, {took:.1f}s"


def criterion_7(random_games=20):
    start = time.perf_counter()
    two = [check_reduction_equivalence(AnonymousGame(o)) for o in product(permutations((1, 2)), repeat=2)]
    three = [check_reduction_equivalence(random_anonymous(3, seed)) for seed in range(random_games)]
    took = time.perf_counter() - start
    reports = two + three
    agree = sum(r.agree for r in reports)
    ok = agree == len(reports) and took < 600
    return ok, (f"{agree}/{len(reports)} anonymous games agree "
                f"({len(two)} with n=2, {len(three)} with n=3), {took:.1f}s")


def _half_ok(g, res, red_side):
    major = g.red_mask if red_side else g.blue_mask
    minor = g.blue_mask if red_side else g.red_mask
    for block in res.blocks:
        ratio = g.red_ratio(block)
        if (block & minor).bit_count() != 1 or not block & major:
            return False
        if (ratio < HALF) if red_side else (ratio > HALF):
            return False
    lone = ONE if red_side else 0
    if not all(g.prefers(i, lone, HALF) for i in res.singles):
        return False
    ratios = res.default_ratios if red_side else [1 - x for x in res.default_ratios]
    return all(a >= b for a, b in zip(ratios, ratios[1:]))


def criterion_8():
    good, total = 0, 0
    for g in _is_suite():
        trace = individually_stable_trace(g)
        total += 1
        good += _half_ok(g, trace.red_half, True) and _half_ok(g, trace.blue_half, False)
    return good == total, f"{good}/{total} HALF results satisfy the structural invariants"


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8}


def _run(number):
    ok, detail = CRITERIA[number]()
    RESULTS[number] = (ok, detail)
    assert ok, detail


def test_criterion_1_example3_empty_core():
    _run(1)


def test_criterion_2_core_witnesses():
    _run(2)


def test_criterion_3_no_nash_but_individually_stable():
    _run(3)


def test_criterion_4_individual_stability_suite():
    _run(4)


def test_criterion_5_core_checker_against_oracle():
    _run(5)


def test_criterion_6_special_case_constructions():
    _run(6)


@pytest.mark.extended
def test_criterion_7_reduction_equivalence():
    _run(7)


def test_criterion_8_half_invariants():
    _run(8)


if __name__ == "__main__":
    failed = 0
    for number, fn in CRITERIA.items():
        ok, detail = fn()
        failed += not ok
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    sys.exit(1 if failed else 0)
