"""
Combinatorics - exact Bell, Stirling (second kind), factorial and binomial
tables shared by every formula in the counting engine.

Python ints are unbounded and fractions.Fraction is always kept in lowest
terms, so nothing here can overflow or drift.
"""

import math
import threading
from fractions import Fraction

from config import config, debug_print
from errors import InternalConsistencyError


class CombinatoricTables:
    """
    Bell numbers, Stirling numbers of the second kind and factorials for
    0..cap, built once from their recurrences.

    Grows on demand if a caller asks past the cap; growth rebuilds under
    the lock so concurrent first use sees one consistent table.
    """

    def __init__(self, cap=None):
        self._lock = threading.Lock()
        self.cap = -1
        self.bell = []
        self.stirling2 = []
        self.factorial = []
        self._build(int(cap if cap is not None else config.get('tables.cap', 64)))

    def _build(self, cap):
        # Bell triangle: each row starts with the last entry of the previous
        # row; the first entry of row k is bell(k).
        bell = [1]
        row = [1]
        for _ in range(cap):
            nxt = [row[-1]]
            for value in row:
                nxt.append(nxt[-1] + value)
            row = nxt
            bell.append(row[0])

        stirling = [[1]]
        for r in range(cap):
            prev = stirling[r]
            cur = [0] * (r + 2)
            for t in range(1, r + 2):
                above = prev[t] if t <= r else 0
                cur[t] = t * above + prev[t - 1]
            stirling.append(cur)

        fact = [1]
        for k in range(1, cap + 1):
            fact.append(fact[-1] * k)

        self.bell, self.stirling2, self.factorial = bell, stirling, fact
        self.cap = cap
        debug_print(f'CombinatoricTables built to K={cap}')

    def ensure(self, k):
        if k <= self.cap:
            return
        with self._lock:
            if k > self.cap:
                self._build(max(k, 2 * self.cap))


_tables = None
_tables_lock = threading.Lock()


def tables():
    global _tables
    if _tables is None:
        with _tables_lock:
            if _tables is None:
                _tables = CombinatoricTables()
    return _tables


def _check_nonnegative(**values):
    for name, value in values.items():
        if value < 0:
            raise ValueError(f'{name} must be >= 0, got {value}')


def bell(k):
    """Number of set partitions of a k-element set."""
    _check_nonnegative(k=k)
    t = tables()
    t.ensure(k)
    return t.bell[k]


def stirling2(r, t):
    """Partitions of an r-set into exactly t nonempty blocks (0 when t > r)."""
    _check_nonnegative(r=r, t=t)
    if t > r:
        return 0
    tab = tables()
    tab.ensure(r)
    return tab.stirling2[r][t]


def stirling_row(r):
    _check_nonnegative(r=r)
    tab = tables()
    tab.ensure(r)
    return list(tab.stirling2[r])


def bell_triangle(k):
    """First k+1 rows of the Bell triangle (row i has i+1 entries)."""
    _check_nonnegative(k=k)
    rows = [[1]]
    for _ in range(k):
        nxt = [rows[-1][-1]]
        for value in rows[-1]:
            nxt.append(nxt[-1] + value)
        rows.append(nxt)
    return rows


def factorial(k):
    _check_nonnegative(k=k)
    tab = tables()
    tab.ensure(k)
    return tab.factorial[k]


def binomial(n, k):
    _check_nonnegative(n=n, k=k)
    return math.comb(n, k)


def as_count(value, what='count'):
    """
    Clear an exact rational to an int. Every count is an integer, so a
    leftover denominator means the formula that produced it is wrong.
    """
    value = Fraction(value)
    if value.denominator != 1:
        raise InternalConsistencyError(f'{what} is not an integer: {value}')
    return value.numerator
