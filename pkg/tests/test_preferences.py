from fractions import Fraction as F
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divgames import (
    DiversityGame,
    blue_mirror,
    build_theta,
    make_bakers_millers,
    make_homophilic,
    peak_at_least_half,
    random_single_peaked,
    verify_single_peaked,
    virtual_peak,
)
from divgames.errors import DomainError, ValidationError
from divgames.preferences import (
    complete_order,
    mirror_game,
    mirror_id,
    order_from_peak,
    random_common_preference,
    random_single_peaked_order,
    shares_interior_order,
)

from helpers import ids
from oracles import single_peaked_by_peaks


def test_example3_r5_is_single_peaked(ex3):
    (r5,) = ids("r5")
    report = verify_single_peaked(ex3.prefs[r5], ex3.theta)
    assert report.is_single_peaked
    assert report.top == F(5, 6)


def test_full_homophily_is_single_peaked():
    theta = build_theta(3, 3)
    report = verify_single_peaked(tuple(reversed(theta)), theta)
    assert report.is_single_peaked and report.top == 1


def test_valley_is_not_single_peaked():
    theta = (F(0), F(1, 2), F(1))
    assert not verify_single_peaked((F(0), F(1), F(1, 2)), theta).is_single_peaked


def test_non_permutation_is_rejected():
    theta = (F(0), F(1, 2), F(1))
    with pytest.raises(ValidationError):
        verify_single_peaked((F(0), F(1)), theta)


@pytest.mark.parametrize("theta", [
    (F(0), F(1)),
    (F(0), F(1, 2), F(1)),
    tuple(build_theta(2, 2)),
    (F(0), F(1, 3), F(1, 2), F(2, 3), F(3, 4), F(1)),
])
def test_single_peaked_matches_peak_search(theta):
    for order in permutations(theta):
        assert verify_single_peaked(order, theta).is_single_peaked == single_peaked_by_peaks(order, theta)


def test_peak_at_least_half(ex3):
    b2, r5 = ids("b2", "r5")
    assert peak_at_least_half(ex3, b2)
    assert peak_at_least_half(ex3, r5)
    bm = make_bakers_millers(3, 2)
    assert not peak_at_least_half(bm, 0)


def test_virtual_peaks(ex3):
    b2, r5, r1 = ids("b2", "r5", "r1")
    assert virtual_peak(ex3, b2) == F(3, 4)
    assert virtual_peak(ex3, r5) == F(5, 6)
    assert virtual_peak(ex3, r1) == F(6, 7)


def test_virtual_peak_needs_blue():
    g = make_homophilic(2, 0)
    with pytest.raises(DomainError):
        virtual_peak(g, 0)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 10**6))
def test_virtual_peak_is_best_one_blue_ratio(red, blue, seed):
    g = random_single_peaked(red, blue, seed)
    for i in range(g.n):
        q = virtual_peak(g, i)
        for m in range(red + 1):
            assert g.weakly_prefers(i, q, F(m, m + 1))


def test_blue_mirror_reflects():
    assert blue_mirror((F(1), F(1, 2), F(0))) == (F(0), F(1, 2), F(1))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 10**6))
def test_blue_mirror_keeps_single_peakedness(red, blue, seed):
    if red + blue == 0:
        return
    theta = build_theta(red, blue)
    order = random_single_peaked_order(theta, np.random.default_rng(seed))
    mirrored = blue_mirror(order)
    report = verify_single_peaked(mirrored, build_theta(blue, red))
    assert report.is_single_peaked
    assert report.top == 1 - order[0]


@pytest.mark.parametrize("k", [1, 2, 4])
def test_blue_mirror_is_an_involution_for_balanced_games(k):
    g = random_single_peaked(k, k, seed=k)
    for order in g.prefs:
        assert blue_mirror(blue_mirror(order)) == order
    assert mirror_game(mirror_game(g)) == g


def test_mirror_game_ids():
    g = random_single_peaked(3, 2, seed=5)
    mg = mirror_game(g)
    assert (mg.red_count, mg.blue_count) == (2, 3)
    for j in range(mg.n):
        i = mirror_id(g, j)
        assert mg.prefs[j] == blue_mirror(g.prefs[i])
        assert mg.is_red(j) != g.is_red(i)


def test_homophilic_orders():
    g = make_homophilic(1, 1)
    assert g.prefs[0] == (F(1), F(1, 2), F(0))
    assert g.prefs[1] == (F(0), F(1, 2), F(1))


def test_bakers_millers_orders():
    g = make_bakers_millers(1, 1)
    assert g.prefs[0] == (F(0), F(1, 2), F(1))
    assert g.prefs[1] == (F(1), F(1, 2), F(0))


@pytest.mark.parametrize("maker", [make_homophilic, make_bakers_millers])
@pytest.mark.parametrize("red,blue", [(1, 1), (2, 3), (4, 2)])
def test_extreme_families_peak_at_the_ends(maker, red, blue):
    g = maker(red, blue)
    for i in range(g.n):
        report = verify_single_peaked(g.prefs[i], g.theta)
        assert report.is_single_peaked
        assert report.top in (0, 1)


def test_example3_tops_and_single_peakedness(ex3):
    assert ex3.top(ids("r5")[0]) == F(5, 6)
    for order in ex3.prefs:
        assert verify_single_peaked(order, ex3.theta).is_single_peaked


def test_example3_listed_prefixes(ex3):
    (r1,) = ids("r1")
    assert ex3.prefs[r1][:8] == (F(6, 7), F(5, 6), F(4, 5), F(7, 9), F(3, 4), F(7, 8), F(1), F(5, 7))
    assert ex3.prefs[r1][8:] == (F(2, 3), F(3, 5), F(1, 2), F(1, 3), F(0))


def test_complete_order_appends_descending():
    theta = build_theta(1, 1)
    assert complete_order([F(1, 2)], theta) == (F(1, 2), F(1), F(0))


@pytest.mark.parametrize("rule", ["closest", "left", "right"])
def test_order_from_peak_is_single_peaked(rule):
    theta = build_theta(4, 3)
    for peak in theta:
        order = order_from_peak(theta, peak, rule)
        report = verify_single_peaked(order, theta)
        assert report.is_single_peaked and report.top == peak


def test_order_from_peak_closest():
    theta = (F(0), F(1, 3), F(1, 2), F(2, 3), F(1))
    assert order_from_peak(theta, F(1, 2)) == (F(1, 2), F(1, 3), F(2, 3), F(0), F(1))


def test_random_single_peaked_properties():
    g = random_single_peaked(7, 2, seed=11)
    assert len(g.theta) == 13
    assert all(verify_single_peaked(o, g.theta).is_single_peaked for o in g.prefs)
    assert random_single_peaked(7, 2, seed=11) == g
    assert random_single_peaked(7, 2, seed=12) != g


def test_random_common_preference_shares_interior():
    g = random_common_preference(3, 3, seed=4)
    assert shares_interior_order(g)
    theta = build_theta(2, 2)
    assert shares_interior_order(DiversityGame(2, 2, [theta] * 4))
    assert not shares_interior_order(make_homophilic(2, 2))
