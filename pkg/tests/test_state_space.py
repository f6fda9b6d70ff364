import math

import pytest
from hypothesis import given, strategies as st

from iqfu.errors import CapacityExceeded, DomainError, StateCountOverflow
from iqfu.state_space import (boundary_count, enumerate_states, is_boundary,
                              state_space_size)

from oracles import brute_states


def test_two_type_ordering():
    space = enumerate_states(2, 3)
    assert space.states == ((0, 0), (0, 1), (0, 2), (0, 3), (1, 0),
                            (1, 1), (1, 2), (2, 0), (2, 1), (3, 0))
    assert [space.index_of(s) for s in space.states] == list(range(10))


def test_single_type_is_range():
    assert enumerate_states(1, 3).states == ((0,), (1,), (2,), (3,))


def test_size_three_types():
    expected = math.factorial(19) // (math.factorial(16) * math.factorial(3))
    assert expected == 969
    assert state_space_size(3, 16) == 969
    assert len(enumerate_states(3, 16)) == 969


@pytest.mark.parametrize("T,N,expected", [(2, 3, 10), (1, 7, 8), (4, 8, 495)])
def test_size_examples(T, N, expected):
    assert state_space_size(T, N) == expected


def test_size_four_eight_by_enumeration():
    assert len(brute_states(4, 8)) == 495


def test_size_is_exact_for_large_inputs():
    assert state_space_size(20, 40) == math.comb(60, 20)
    with pytest.raises(StateCountOverflow):
        state_space_size(40, 60)


@pytest.mark.parametrize("T", range(1, 5))
@pytest.mark.parametrize("N", range(1, 9))
def test_matches_brute_force(T, N):
    space = enumerate_states(T, N)
    brute = brute_states(T, N)
    assert list(space.states) == brute
    assert len(space) == state_space_size(T, N)
    for k, s in enumerate(brute):
        assert space.index_of(s) == k
    full = [s for s in brute if sum(s) == N]
    assert int(space.boundary_mask.sum()) == len(full) == boundary_count(T, N)
    assert boundary_count(T, N) == math.factorial(T + N - 1) // (math.factorial(N) * math.factorial(T - 1))


@given(st.integers(1, 5), st.integers(1, 12))
def test_strictly_increasing(T, N):
    states = enumerate_states(T, N).states
    assert all(a < b for a, b in zip(states, states[1:]))
    assert all(min(s) >= 0 and sum(s) <= N for s in states)


def test_is_boundary():
    assert is_boundary((1, 2), 3)
    assert not is_boundary((0, 0), 3)
    assert not is_boundary((2, 0), 3)


def test_ceiling():
    with pytest.raises(CapacityExceeded):
        enumerate_states(6, 30)
    assert len(enumerate_states(2, 4, max_states=15)) == 15
    with pytest.raises(CapacityExceeded):
        enumerate_states(2, 4, max_states=14)


@pytest.mark.parametrize("T,N", [(0, 3), (2, 0), (-1, 2)])
def test_bad_dimensions(T, N):
    with pytest.raises(DomainError):
        state_space_size(T, N)


def test_unknown_state():
    with pytest.raises(DomainError):
        enumerate_states(2, 3).index_of((2, 2))
