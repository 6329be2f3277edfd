"""
Partition Counter - how many set partitions of an m x n grid each element
of the Klein four-group fixes, how many the whole group fixes, and the
number of inequivalent partitions (the group average of the fixed counts).

H, V and R all come from one bivariate generating function: a grid
symmetry is an involution on the cells, and the number of partitions it
fixes depends only on its cycle type (t swapped pairs, u fixed cells):

    c(t, u) = t! u! [y^t x^u] exp(e^(x+y) + e^(2y)/2 - 3/2)

The fully symmetric count S needs one generating function per parity
class. Each is exp of a sum over the five subgroups K of the group:
(e^(i z) - 1) / i, with i the index of K and z the sum of the variables
for the cell orbits whose stabiliser lies inside K. The closed sums at the bottom of the module are kept as
independent cross-checks of the series values.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import series_engine as se
from combinatorics import as_count, bell, factorial, stirling2
from config import debug_print
from errors import InternalConsistencyError, ShapeError
from grid_symmetry import (
    GridShape,
    InvolutionProfile,
    SymmetryElement,
    involution_profile,
)


# ── Generating functions ──────────────────────────────────────
def _exponent(desc, atoms, const):
    """sum of scale * exp(weights . vars) over atoms, plus a constant."""
    g = se.constant(desc, const)
    for weights, scale in atoms:
        g = g + se.exp_atom(desc, weights, scale)
    return g


def bell_egf(order):
    """exp(e^t - 1)"""
    desc = se.SeriesDescriptor(('t',), (order,))
    return se.series_exp(_exponent(desc, [((1,), 1)], -1))


def pairs_only_egf(order):
    """exp((e^t + 3)(e^t - 1)/2): partitions fixed by a fixed-point-free involution."""
    desc = se.SeriesDescriptor(('t',), (order,))
    return se.series_exp(_exponent(desc, [((1,), 1), ((2,), Fraction(1, 2))], Fraction(-3, 2)))


def involution_egf(pairs_order, fixed_order):
    """exp(e^(x+y) + e^(2y)/2 - 3/2); y counts swapped pairs, x fixed points."""
    desc = se.SeriesDescriptor(('y', 'x'), (pairs_order, fixed_order))
    g = _exponent(desc, [((1, 1), 1), ((2, 0), Fraction(1, 2))], Fraction(-3, 2))
    return se.series_exp(g)


def odd_rotation_egf(order):
    """exp(2e^t - 2 + t + (e^t - 1)^2 / 2): half-turn of an odd x odd grid."""
    desc = se.SeriesDescriptor(('t',), (order,))
    e_minus_1 = se.exp_atom(desc, (1,)) - se.one(desc)
    g = (se.exp_atom(desc, (1,), 2) - se.constant(desc, 2)
         + se.variable(desc, 't')
         + Fraction(1, 2) * (e_minus_1 * e_minus_1))
    return se.series_exp(g)


def full_symmetry_even_egf(order):
    """
    exp((e^t - 1) + 3(e^(2t) - 1)/2 + (e^(4t) - 1)/4); t counts cells of one
    quadrant. In u = e^t - 1 this is exp(5u + 3u^2 + u^3 + u^4/4).
    """
    desc = se.SeriesDescriptor(('t',), (order,))
    return se.series_exp(_exponent(desc, [
        ((1,), 1),
        ((2,), Fraction(3, 2)),
        ((4,), Fraction(1, 4)),
    ], Fraction(-11, 4)))


def full_symmetry_mixed_egf(y_order, x_order):
    """
    exp(e^(x+y) + e^(2x+2y)/2 + e^(2x) + e^(4x)/4 - 11/4) for 2a x (2b+1):
    y counts half the middle column, x the cells of one quadrant.
    """
    desc = se.SeriesDescriptor(('y', 'x'), (y_order, x_order))
    return se.series_exp(_exponent(desc, [
        ((1, 1), 1),
        ((2, 2), Fraction(1, 2)),
        ((0, 2), 1),
        ((0, 4), Fraction(1, 4)),
    ], Fraction(-11, 4)))


def full_symmetry_odd_egf(y_order, x_order, l_order):
    """
    exp(l + x + y) exp(e^(l+x+y) + e^(2l+2x)/2 + e^(2l+2y)/2 + e^(2l)/2
    + e^(4l)/4 - 11/4) for (2a+1) x (2b+1): y and x count the half arms of
    the middle cross, l the cells of one quadrant.
    """
    desc = se.SeriesDescriptor(('y', 'x', 'l'), (y_order, x_order, l_order))
    half = Fraction(1, 2)
    g = _exponent(desc, [
        ((1, 1, 1), 1),
        ((0, 2, 2), half),
        ((2, 0, 2), half),
        ((0, 0, 2), half),
        ((0, 0, 4), Fraction(1, 4)),
    ], Fraction(-11, 4))
    for name in desc.vars:
        g = g + se.variable(desc, name)
    return se.series_exp(g)


# The published even x odd and odd x odd series. Both lose the block
# orbits spread over three or four cells of a quadrant, so they agree with
# the ones above only while a quadrant has at most two cells.
def published_mixed_egf(y_order, x_order):
    """exp((e^x (2e^y - 4) + e^(2x) (e^(2y) + 5) - 4) / 2)"""
    desc = se.SeriesDescriptor(('y', 'x'), (y_order, x_order))
    half = Fraction(1, 2)
    g = _exponent(desc, [
        ((0, 1), -2),
        ((1, 1), 1),
        ((2, 2), half),
        ((0, 2), 5 * half),
    ], -2)
    return se.series_exp(g)


def published_odd_egf(y_order, x_order, l_order):
    """exp(l + x + y) exp(2e^(2l) + e^(2l+2x)/2 + e^(2l+2y)/2 + e^(l+x+y) - 2e^l - 2)"""
    desc = se.SeriesDescriptor(('y', 'x', 'l'), (y_order, x_order, l_order))
    half = Fraction(1, 2)
    g = _exponent(desc, [
        ((0, 0, 2), 2),
        ((0, 2, 2), half),
        ((2, 0, 2), half),
        ((1, 1, 1), 1),
        ((0, 0, 1), -2),
    ], -2)
    for name in desc.vars:
        g = g + se.variable(desc, name)
    return se.series_exp(g)


@dataclass(frozen=True)
class GeneratingFunction:
    key: str
    title: str
    vars: tuple
    build: object

    def series(self, orders):
        return self.build(*orders)


GENERATING_FUNCTIONS = {
    gf.key: gf for gf in (
        GeneratingFunction('bell', 'exp(e^t - 1)  [Bell numbers]', ('t',), bell_egf),
        GeneratingFunction('3.1', 'exp((e^t + 3)(e^t - 1)/2)  [H for 2m x n]',
                           ('t',), pairs_only_egf),
        GeneratingFunction('3.2', 'exp(e^(y+x) + e^(2y)/2 - 3/2)  [c(t,u); y=pairs, x=fixed]',
                           ('y', 'x'), involution_egf),
        GeneratingFunction('4.1', 'exp(2e^t - 2 + t + (e^t - 1)^2/2)  [R for odd x odd]',
                           ('t',), odd_rotation_egf),
        GeneratingFunction('5.1c', 'CORRECTED: exp(e^t + 3e^(2t)/2 + e^(4t)/4 - 11/4)  '
                           '[S for 2m x 2n; the printed exp(5(e^t-1)e^(3(e^t+1)^2)) is wrong]',
                           ('t',), full_symmetry_even_egf),
        GeneratingFunction('5.2', 'AS PRINTED, wrong once a quadrant has 3+ cells: '
                           'exp((e^x(2e^y - 4) + e^(2x)(e^(2y) + 5) - 4)/2)  [use 5.2c]',
                           ('y', 'x'), published_mixed_egf),
        GeneratingFunction('5.2c', 'CORRECTED: exp(e^(x+y) + e^(2x+2y)/2 + e^(2x) + e^(4x)/4 - 11/4)  '
                           '[S for 2m x (2n+1)]',
                           ('y', 'x'), full_symmetry_mixed_egf),
        GeneratingFunction('5.3', 'AS PRINTED, wrong once a quadrant has 3+ cells: '
                           'exp(l + x + y) exp(2e^(2l) + e^(2l+2x)/2 + e^(2l+2y)/2 '
                           '+ e^(l+x+y) - 2e^l - 2)  [use 5.3c]',
                           ('y', 'x', 'l'), published_odd_egf),
        GeneratingFunction('5.3c', 'CORRECTED: exp(l + x + y) exp(e^(l+x+y) + e^(2l+2x)/2 '
                           '+ e^(2l+2y)/2 + e^(2l)/2 + e^(4l)/4 - 11/4)  [S for (2m+1) x (2n+1)]',
                           ('y', 'x', 'l'), full_symmetry_odd_egf),
    )
}


# ── Fixed counts ──────────────────────────────────────────────
@lru_cache(maxsize=None)
def _fixed_count(pairs, fixed):
    f = involution_egf(pairs, fixed)
    return se.egf_count(f, (pairs, fixed))


def fixed_partition_count(profile):
    """c(t, u): partitions of a (2t+u)-set fixed by an involution of that cycle type."""
    return _fixed_count(profile.pairs, profile.fixed)


def count_b(shape):
    return bell(shape.cells)


def count_h(shape):
    return fixed_partition_count(involution_profile(shape, SymmetryElement.REFLECT_ROWS))


def count_v(shape):
    return fixed_partition_count(involution_profile(shape, SymmetryElement.REFLECT_COLS))


def count_r(shape):
    return fixed_partition_count(involution_profile(shape, SymmetryElement.ROTATE_180))


def count_fixed(shape, g):
    if g is SymmetryElement.IDENTITY:
        return count_b(shape)
    return fixed_partition_count(involution_profile(shape, g))


@lru_cache(maxsize=None)
def _count_s(rows, cols):
    if rows % 2 == 1 and cols % 2 == 0:
        rows, cols = cols, rows
    a, b = rows // 2, cols // 2
    if rows % 2 == 0 and cols % 2 == 0:
        f = full_symmetry_even_egf(a * b)
        return se.egf_count(f, (a * b,))
    if rows % 2 == 0:
        f = full_symmetry_mixed_egf(a, a * b)
        return se.egf_count(f, (a, a * b))
    f = full_symmetry_odd_egf(a, b, a * b)
    return se.egf_count(f, (a, b, a * b))


def count_s(shape):
    """Partitions fixed by the whole Klein four-group."""
    return _count_s(shape.rows, shape.cols)


# ── Closed sums ───────────────────────────────────────────────
def closed_sum_h_even(m, n):
    """H of the 2m x n grid by summing over the letters of the top half."""
    _check_positive(m, n)
    k = m * n
    total = Fraction(0)
    for j in range(1, k + 1):
        s_kj = stirling2(k, j)
        for s in range(j // 2 + 1):
            total += s_kj * Fraction(2) ** (j - 3 * s) * factorial(j) / (
                factorial(s) * factorial(j - 2 * s))
    return as_count(total, f'closed H sum for {2 * m}x{n}')


def closed_sum_r_odd(m, n):
    """R of an odd m x n grid, summing over the letters of the top L."""
    _check_positive(m, n)
    if m % 2 == 0 or n % 2 == 0:
        raise ShapeError(f'closed rotation sum needs odd dimensions, got {m}x{n}')
    q = n * (m // 2) + n // 2
    if q == 0:
        return 1
    total = Fraction(0)
    for i in range(1, q + 1):
        lead = stirling2(q, i) * factorial(i)
        for s in range(i // 2 + 1):
            for r in range(i - 2 * s + 1):
                rest = i - 2 * s - r
                total += Fraction(lead * (rest + 1),
                                  2 ** s * factorial(s) * factorial(r) * factorial(rest))
    return as_count(total, f'closed R sum for {m}x{n}')


def closed_sum_s_even_even(m, n):
    """
    S of the 2m x 2n grid. Each of the j letters used by one quadrant joins
    a block orbit: alone (5 ways), with one other letter (3 ways), with two
    others, or with three others (weight 1/4).
    """
    _check_positive(m, n)
    k = m * n
    total = Fraction(0)
    for j in range(1, k + 1):
        lead = stirling2(k, j) * factorial(j)
        for quads in range(j // 4 + 1):
            for triples in range((j - 4 * quads) // 3 + 1):
                for pairs in range((j - 4 * quads - 3 * triples) // 2 + 1):
                    singles = j - 4 * quads - 3 * triples - 2 * pairs
                    total += Fraction(
                        lead * 5 ** singles * 3 ** pairs,
                        4 ** quads * factorial(singles) * factorial(pairs)
                        * factorial(triples) * factorial(quads))
    return as_count(total, f'closed S sum for {2 * m}x{2 * n}')


def _check_positive(m, n):
    if m < 1 or n < 1:
        raise ShapeError(f'dimensions must be >= 1, got {m}x{n}')


# ── Report ────────────────────────────────────────────────────
@dataclass(frozen=True)
class ClassDecomposition:
    h_only: int
    v_only: int
    r_only: int
    fully: int
    asymmetric: int


@dataclass(frozen=True)
class CountReport:
    shape: GridShape
    B: int
    H: int
    V: int
    R: int
    S: int
    L: int
    C: int
    classes: ClassDecomposition

    def values(self):
        return {'B': self.B, 'H': self.H, 'V': self.V, 'R': self.R,
                'S': self.S, 'L': self.L, 'C': self.C}


def count_report(shape, cross_check=False):
    B, H, V, R, S = count_b(shape), count_h(shape), count_v(shape), count_r(shape), count_s(shape)

    total = B + H + V + R
    if total % 4:
        raise InternalConsistencyError(
            f'{shape}: B+H+V+R = {total} is not divisible by 4')
    L = total // 4

    classes = ClassDecomposition(
        h_only=H - S, v_only=V - S, r_only=R - S, fully=S,
        asymmetric=B - H - V - R + 2 * S,
    )
    negative = [k for k, v in vars(classes).items() if v < 0]
    if negative:
        raise InternalConsistencyError(f'{shape}: negative class count(s) {negative}')

    # Orbit sizes: 4 for asymmetric, 2 for exactly one stabiliser, 1 for S.
    by_class = (Fraction(classes.asymmetric, 4)
                + Fraction(classes.h_only + classes.v_only + classes.r_only, 2)
                + S)
    if by_class != L:
        raise InternalConsistencyError(
            f'{shape}: orbit count by class {by_class} != group average {L}')

    if cross_check:
        _cross_check(shape, H, R, S)

    debug_print(f'count_report {shape}: B={B} H={H} V={V} R={R} S={S} L={L}')
    return CountReport(shape, B, H, V, R, S, L, classes.asymmetric, classes)


def _cross_check(shape, H, R, S):
    m, n = shape.rows, shape.cols
    checks = []
    if m % 2 == 0:
        checks.append(('H', H, closed_sum_h_even(m // 2, n)))
    if m % 2 == 1 and n % 2 == 1:
        checks.append(('R', R, closed_sum_r_odd(m, n)))
    if m % 2 == 0 and n % 2 == 0:
        checks.append(('S', S, closed_sum_s_even_even(m // 2, n // 2)))
    for name, series_value, sum_value in checks:
        if series_value != sum_value:
            raise InternalConsistencyError(
                f'{shape}: {name} series gives {series_value}, closed sum gives {sum_value}')
