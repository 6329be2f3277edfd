from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from sympy import bell as sympy_bell
from sympy.functions.combinatorial.numbers import stirling as sympy_stirling

from combinatorics import (
    CombinatoricTables,
    as_count,
    bell,
    bell_triangle,
    binomial,
    factorial,
    stirling2,
    stirling_row,
)
from errors import InternalConsistencyError

K = 30


@pytest.mark.parametrize('k, expected', [(0, 1), (1, 1), (3, 5), (6, 203), (12, 4213597)])
def test_bell_values(k, expected):
    assert bell(k) == expected


@pytest.mark.parametrize('r, t, expected', [(4, 4, 1), (4, 2, 7), (5, 0, 0), (0, 0, 1), (3, 5, 0)])
def test_stirling2_values(r, t, expected):
    assert stirling2(r, t) == expected


def test_factorial_and_binomial():
    assert factorial(0) == 1
    assert factorial(10) == 3628800
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0


def test_negative_arguments_rejected():
    with pytest.raises(ValueError):
        bell(-1)
    with pytest.raises(ValueError):
        stirling2(2, -1)


def test_bell_recurrence():
    for k in range(K):
        assert bell(k + 1) == sum(binomial(k, i) * bell(i) for i in range(k + 1))


def test_stirling_recurrence():
    for r in range(K):
        for t in range(1, r + 2):
            assert stirling2(r + 1, t) == t * stirling2(r, t) + stirling2(r, t - 1)


def test_stirling_boundaries():
    for r in range(1, K + 1):
        assert stirling2(r, r) == 1
        assert stirling2(r, 0) == 0


def test_row_sums_are_bell_numbers():
    for r in range(K + 1):
        assert sum(stirling_row(r)) == bell(r)


def test_bell_triangle_first_column():
    rows = bell_triangle(10)
    assert [row[0] for row in rows] == [bell(k) for k in range(11)]
    assert rows[2] == [2, 3, 5]


def test_matches_sympy():
    for r in range(K + 1):
        assert bell(r) == int(sympy_bell(r))
        for t in range(r + 1):
            assert stirling2(r, t) == int(sympy_stirling(r, t))


def test_tables_grow_past_cap():
    tables = CombinatoricTables(cap=5)
    tables.ensure(20)
    assert tables.cap >= 20
    assert tables.bell[20] == bell(20)


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=0, max_value=40))
def test_binomial_pascal(n, k):
    assert binomial(n + 1, k + 1) == binomial(n, k) + binomial(n, k + 1)


def test_as_count_rejects_fractions():
    assert as_count(Fraction(12, 4)) == 3
    with pytest.raises(InternalConsistencyError):
        as_count(Fraction(277, 4))
