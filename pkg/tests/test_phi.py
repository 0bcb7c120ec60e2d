import random

import pytest

from stpd import Text, TextArrays, bwt, build_phi, cobwt, count_runs
from stpd.phi import PA, SA
from textgen import repetitive_text, texts


def test_worked_example_steps(t0):
    sa_phi = build_phi(t0, SA)
    assert sa_phi.phi_next(11) == (10, False)
    assert sa_phi.phi_next(4) == (11, True)
    assert build_phi(t0, PA).phi_next(1) == (2, False)


def test_sample_counts_match_runs(t0):
    assert len(build_phi(t0, SA)) <= count_runs(bwt(t0)) == 7
    assert len(build_phi(t0, PA)) <= count_runs(cobwt(t0)) == 7


def test_two_symbol_text():
    ps = build_phi(Text([1, 0]), SA)
    assert ps.phi_next(2) == (1, False)
    assert ps.phi_next(1) == (2, True)


@pytest.mark.parametrize("variant", [SA, PA])
def test_successor_matches_full_arrays(variant):
    for t in texts(51, 300, 64):
        arrays = TextArrays(t)
        perm = arrays.sa if variant == SA else arrays.pa
        order, inv = perm.inverse, perm.forward
        n = len(t)
        ps = build_phi(t, variant, arrays)
        for i in range(1, n + 1):
            rank = inv[i - 1]
            want = order[rank] if rank < n else order[0]
            assert ps.phi_next(i) == (want, rank == n)


@pytest.mark.parametrize("variant", [SA, PA])
def test_storage_is_one_pair_per_run(variant):
    rng = random.Random(52)
    for t in texts(52, 100, 64) + [repetitive_text(rng, 200) for _ in range(30)]:
        ps = build_phi(t, variant)
        column = bwt(t) if variant == SA else cobwt(t)
        assert len(ps) <= count_runs(column)
        assert len(ps.keys) == len(ps.values)


@pytest.mark.parametrize("variant", [SA, PA])
def test_iteration_visits_the_whole_array_in_order(variant):
    for t in texts(53, 50, 64):
        arrays = TextArrays(t)
        order = (arrays.sa if variant == SA else arrays.pa).inverse
        ps = build_phi(t, variant, arrays)
        seen = [order[0]]
        while True:
            step = ps.phi_next(seen[-1])
            if step.wrapped:
                assert step.position == order[0]
                break
            seen.append(step.position)
        assert seen == order


def test_out_of_range(t0):
    ps = build_phi(t0, SA)
    with pytest.raises(IndexError):
        ps.phi_next(0)
    with pytest.raises(IndexError):
        ps.phi_next(12)
    with pytest.raises(ValueError):
        build_phi(t0, "XA")
