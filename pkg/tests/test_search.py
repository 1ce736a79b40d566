import random

import pytest
from hypothesis import given, settings, strategies as st

from sympcp.search import (
    EXHAUSTED, LENGTH_MONOTONE, NO_START, SOLUTION, STATE_EXHAUSTED, UNSOLVABLE,
    SearchLimits, enumerate_solutions, solve,
)
from sympcp.words import PcpInstance, check_solution
from conftest import random_instance


def test_counterexample_is_length_monotone(counterexample):
    out = solve(counterexample)
    assert out.status == UNSOLVABLE and out.reason == LENGTH_MONOTONE


def test_closure_solution(closure):
    out = solve(closure, SearchLimits(4, 8, 10_000))
    assert out.status == SOLUTION and out.witness.indices == (0, 1)


def test_no_start():
    out = solve(PcpInstance.parse([("01", "1"), ("1", "00")]))
    assert out.status == UNSOLVABLE and out.reason == NO_START


def test_state_exhausted():
    # every start leaves overhang "1" on top, which no tile can ever consume
    inst = PcpInstance.parse([("01", "0"), ("1", "11"), ("0", "01")])
    out = solve(inst, SearchLimits(40, 64, 10_000))
    assert out.status in (UNSOLVABLE, SOLUTION)
    if out.status == UNSOLVABLE:
        assert out.reason == STATE_EXHAUSTED
        assert enumerate_solutions(inst, 6) == []


def test_known_solution():
    out = solve(PcpInstance.parse([("01", "0"), ("1", "11")]))
    assert out.witness.indices == (0, 1)
    out = solve(PcpInstance.parse([("1", "111"), ("10111", "10"), ("10", "0")]))
    assert out.witness.indices == (1, 0, 0, 2)


def test_exhausted_on_tight_limits():
    # shortest solution is far longer than five tiles
    inst = PcpInstance.parse([("100", "1"), ("0", "100"), ("1", "0")])
    out = solve(inst, SearchLimits(5, 64, 10_000))
    assert out.status == EXHAUSTED


def test_limits_must_be_positive():
    with pytest.raises(ValueError):
        SearchLimits(0, 1, 1)
    with pytest.raises(ValueError):
        SearchLimits(1, 1, 0)


def test_oracle_equivalence_seeded():
    rng = random.Random(7)
    for _ in range(60):
        inst = random_instance(rng)
        sols = enumerate_solutions(inst, 6)
        out = solve(inst, SearchLimits(6, 64, 100_000))
        assert out.found == bool(sols)
        if sols:
            assert out.witness == sols[0]
        if out.status == UNSOLVABLE:
            assert not sols


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_workers_do_not_change_outcome(seed):
    inst = random_instance(random.Random(seed), k_max=4)
    limits = SearchLimits(8, 16, 5_000)
    a, b = solve(inst, limits), solve(inst, limits, workers=4)
    assert (a.status, a.witness, a.reason) == (b.status, b.witness, b.reason)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_found_witness_checks(seed):
    inst = random_instance(random.Random(seed), k_max=4, max_len=4)
    out = solve(inst, SearchLimits(10, 20, 5_000))
    if out.found:
        assert check_solution(inst, out.witness)


def test_enumerate_order(closure):
    assert [s.indices for s in enumerate_solutions(closure, 2)] == [(0, 1), (1, 0)]
