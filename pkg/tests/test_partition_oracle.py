import pytest

import partition_counter as pc
import partition_oracle as oracle
from combinatorics import bell
from errors import CapacityError, DimensionError
from grid_symmetry import GridShape, InvolutionProfile, SymmetryElement, cell_permutation


def _shapes(max_cells):
    return [GridShape(m, n) for m in range(1, max_cells + 1) for n in range(1, max_cells // m + 1)]


# ── Enumeration ───────────────────────────────────────────────
def test_enumerate_counts_are_bell():
    for k in range(9):
        assert sum(1 for _ in oracle.enumerate_partitions(k)) == bell(k)


def test_enumerate_order_and_form():
    rgs = [p.rgs for p in oracle.enumerate_partitions(4)]
    assert rgs == sorted(rgs)
    assert len(set(rgs)) == 15
    assert all(oracle.is_rgs(r) for r in rgs)
    assert rgs[0] == (0, 0, 0, 0)
    assert rgs[-1] == (0, 1, 2, 3)


def test_enumerate_three():
    assert [p.rgs for p in oracle.enumerate_partitions(3)] == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]


def test_enumerate_empty_set():
    assert [p.rgs for p in oracle.enumerate_partitions(0)] == [()]


def test_capacity():
    with pytest.raises(CapacityError):
        next(oracle.enumerate_partitions(13, cap=12))
    with pytest.raises(CapacityError):
        oracle.count_partitions(16, cap=20)


def test_set_partition_validation():
    with pytest.raises(ValueError):
        oracle.SetPartition((1, 0))
    with pytest.raises(ValueError):
        oracle.SetPartition((0, 2))
    assert oracle.SetPartition((0, 1, 0)).blocks() == [[0, 2], [1]]


def test_canonical():
    assert oracle.canonical((5, 5, 2, 7, 2)) == (0, 0, 1, 2, 1)


def test_chunks_cover_every_partition():
    for k in range(1, 8):
        total = sum(sum(1 for _ in oracle._completions(list(prefix), k))
                    for prefix in oracle._chunks(k, 3))
        assert total == bell(k)


# ── Symmetry checks ───────────────────────────────────────────
def test_apply_permutation():
    p = oracle.SetPartition((0, 0, 1))
    image = oracle.apply_permutation(p, (2, 1, 0))
    assert image == oracle.SetPartition((0, 1, 1))
    assert oracle.apply_permutation((0, 1, 1), (0, 1, 2)) == (0, 1, 1)


def test_apply_permutation_length_mismatch():
    with pytest.raises(DimensionError):
        oracle.apply_permutation((0, 1), (0, 1, 2))


def test_is_invariant_agrees_with_apply_permutation():
    shape = GridShape(2, 3)
    perms = [cell_permutation(shape, g) for g in SymmetryElement]
    for p in oracle.enumerate_partitions(shape.cells):
        for perm in perms:
            assert oracle.is_invariant(p.rgs, perm) == (oracle.apply_permutation(p, perm) == p)


def test_orbit_of():
    shape = GridShape(3, 1)
    orbit = oracle.orbit_of((0, 0, 1), shape)
    assert orbit == [(0, 0, 1), (0, 1, 1)]
    assert oracle.orbit_of((0, 1, 0), shape) == [(0, 1, 0)]


# ── Exhaustive counts ─────────────────────────────────────────
def test_counts_3x1():
    shape = GridShape(3, 1)
    assert oracle.count_invariant(shape, SymmetryElement.IDENTITY) == 5
    assert oracle.count_invariant(shape, SymmetryElement.REFLECT_ROWS) == 3
    assert oracle.count_invariant(shape, SymmetryElement.REFLECT_COLS) == 5
    assert oracle.count_klein_invariant(shape) == 3
    assert oracle.count_orbits(shape) == 4


def test_counts_2x3():
    shape = GridShape(2, 3)
    t = oracle.shape_tally(shape)
    assert (t.B, t.H, t.V, t.R, t.S, t.L) == (203, 31, 31, 31, 13, 74)
    assert (t.h_only, t.v_only, t.r_only, t.asymmetric) == (18, 18, 18, 136)
    assert t.fixed(SymmetryElement.REFLECT_COLS) == 31
    assert oracle.class_decomposition(shape) == {
        'h_only': 18, 'v_only': 18, 'r_only': 18, 'fully': 13, 'asymmetric': 136}


def test_invariant_profile():
    assert oracle.count_invariant_profile(InvolutionProfile(2, 1)) == 12
    assert oracle.count_invariant_profile(InvolutionProfile(3, 0)) == 31


@pytest.mark.parametrize('shape', _shapes(10), ids=str)
def test_oracle_matches_formulas(shape):
    t = oracle.shape_tally(shape)
    report = pc.count_report(shape)
    assert (t.B, t.H, t.V, t.R, t.S, t.L) == (
        report.B, report.H, report.V, report.R, report.S, report.L)
    assert t.asymmetric == report.C
    assert (t.h_only, t.v_only, t.r_only) == (
        report.classes.h_only, report.classes.v_only, report.classes.r_only)


@pytest.mark.slow
@pytest.mark.parametrize('shape', [s for s in _shapes(12) if s.cells > 10], ids=str)
def test_oracle_matches_formulas_to_12_cells(shape):
    t = oracle.shape_tally(shape)
    assert (t.B, t.H, t.V, t.R, t.S) == (
        pc.count_b(shape), pc.count_h(shape), pc.count_v(shape),
        pc.count_r(shape), pc.count_s(shape))


def test_klein_invariant_2x6_by_enumeration():
    # Smallest grid whose quadrant holds three cells.
    assert oracle.count_klein_invariant(GridShape(2, 6)) == pc.count_s(GridShape(2, 6)) == 319


# ── Pruned search ─────────────────────────────────────────────
@pytest.mark.parametrize('shape', _shapes(9), ids=str)
def test_search_matches_enumeration(shape):
    assert oracle.search_klein_invariant(shape) == oracle.count_klein_invariant(shape)


@pytest.mark.parametrize('shape', [s for s in _shapes(16) if min(s.rows, s.cols) >= 2], ids=str)
def test_search_matches_full_symmetry_count(shape):
    assert oracle.search_klein_invariant(shape) == pc.count_s(shape)


@pytest.mark.parametrize('shape, expected', [
    (GridShape(2, 6), 319), (GridShape(6, 2), 319), (GridShape(2, 7), 1046),
    (GridShape(4, 4), 3307),
])
def test_search_values(shape, expected):
    assert oracle.search_klein_invariant(shape) == expected


@pytest.mark.slow
def test_search_3x7():
    assert oracle.search_klein_invariant(GridShape(3, 7)) == pc.count_s(GridShape(3, 7)) == 283095


def test_jobs_do_not_change_the_answer():
    shape = GridShape(2, 4)
    assert oracle.shape_tally(shape, jobs=1) == oracle.shape_tally(shape, jobs=2)


# ── Independent recurrence ────────────────────────────────────
def test_recurrence_matches_series():
    for t in range(8):
        for u in range(16 - 2 * t):
            profile = InvolutionProfile(t, u)
            assert oracle.fixed_count_recurrence(profile) == pc.fixed_partition_count(profile)


def test_recurrence_matches_enumeration():
    for t in range(5):
        for u in range(10 - 2 * t):
            profile = InvolutionProfile(t, u)
            assert oracle.fixed_count_recurrence(profile) == oracle.count_invariant_profile(profile)


@pytest.mark.parametrize('t, u, expected', [(2, 1, 12), (4, 1, 339), (0, 6, 203), (3, 0, 31)])
def test_recurrence_values(t, u, expected):
    assert oracle.fixed_count_recurrence(InvolutionProfile(t, u)) == expected


@pytest.mark.slow
def test_recurrence_matches_enumeration_to_12():
    for t in range(7):
        for u in range(max(0, 11 - 2 * t), 13 - 2 * t):
            profile = InvolutionProfile(t, u)
            assert oracle.fixed_count_recurrence(profile) == oracle.count_invariant_profile(profile)


def test_invariant_examples():
    assert oracle.count_invariant(GridShape(2, 3), SymmetryElement.REFLECT_ROWS) == 31
    assert oracle.count_invariant(GridShape(2, 3), SymmetryElement.REFLECT_COLS) == 31
    assert oracle.count_klein_invariant(GridShape(2, 4)) == 36
    assert oracle.count_klein_invariant(GridShape(1, 1)) == 1
    assert oracle.count_orbits(GridShape(1, 1)) == 1


@pytest.mark.parametrize('shape', _shapes(8), ids=str)
def test_burnside_at_oracle_level(shape):
    fixed = sum(oracle.count_invariant(shape, g) for g in SymmetryElement)
    assert fixed == 4 * oracle.count_orbits(shape)


def test_involution_applied_twice_is_identity():
    shape = GridShape(2, 3)
    for g in SymmetryElement:
        perm = cell_permutation(shape, g)
        for p in oracle.enumerate_partitions(shape.cells):
            assert oracle.apply_permutation(oracle.apply_permutation(p, perm), perm) == p
