"""
Partition Oracle - ground truth by brute force.

Walks every set partition of the grid cells as a restricted growth string
(RGS) and counts the ones each symmetry fixes, the ones the whole group
fixes, and the orbits directly (a partition counts once if it is the
smallest of its images). The RGS space is cut into chunks by prefix;
chunks are independent and their tallies are summed, so the answer does
not depend on how many worker processes run them.

fixed_count_recurrence() is a second, enumeration-free route to c(t, u)
that shares no code with the series engine.
"""

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from config import config, debug_print
from errors import CapacityError, DimensionError
from grid_symmetry import (
    KLEIN_GROUP,
    SymmetryElement,
    cell_permutation,
    profile_permutation,
)

_NON_IDENTITY = (SymmetryElement.REFLECT_ROWS, SymmetryElement.REFLECT_COLS,
                 SymmetryElement.ROTATE_180)


@dataclass(frozen=True)
class SetPartition:
    rgs: tuple

    def __post_init__(self):
        object.__setattr__(self, 'rgs', tuple(self.rgs))
        if not is_rgs(self.rgs):
            raise ValueError(f'not a restricted growth string: {self.rgs}')

    def __len__(self):
        return len(self.rgs)

    def blocks(self):
        out = {}
        for cell, label in enumerate(self.rgs):
            out.setdefault(label, []).append(cell)
        return [out[label] for label in sorted(out)]


def is_rgs(labels):
    top = -1
    for label in labels:
        if label < 0 or label > top + 1:
            return False
        top = max(top, label)
    return True


def canonical(labels):
    """Relabel blocks in order of first appearance."""
    seen = {}
    return tuple(seen.setdefault(label, len(seen)) for label in labels)


# ── Capacity ──────────────────────────────────────────────────
def oracle_cap(unsafe_cells=None):
    hard = int(config.get('oracle.hard_cap', 15))
    if unsafe_cells is not None:
        return min(int(unsafe_cells), hard)
    return min(int(config.get('oracle.max_cells', 12)), hard)


def check_capacity(cells, cap=None):
    limit = oracle_cap() if cap is None else min(cap, int(config.get('oracle.hard_cap', 15)))
    if cells > limit:
        raise CapacityError(cells, limit)


# ── Enumeration ───────────────────────────────────────────────
def _completions(prefix, k):
    """Every RGS of length k extending prefix (len >= 1), in lexicographic order."""
    p = len(prefix)
    a = list(prefix) + [0] * (k - p)
    top = [0] * k
    running = -1
    for i in range(p):
        running = max(running, a[i])
        top[i] = running
    for i in range(p, k):
        top[i] = top[i - 1]

    while True:
        yield tuple(a)
        i = k - 1
        while i >= p and a[i] > top[i - 1]:
            i -= 1
        if i < p:
            return
        a[i] += 1
        top[i] = max(top[i - 1], a[i])
        for j in range(i + 1, k):
            a[j] = 0
            top[j] = top[i]


def _raw_partitions(k):
    if k == 0:
        yield ()
        return
    yield from _completions([0], k)


def enumerate_partitions(k, cap=None):
    """All bell(k) partitions of a k-set as SetPartitions, lexicographically."""
    if k < 0:
        raise ValueError(f'k must be >= 0, got {k}')
    check_capacity(k, cap)
    for rgs in _raw_partitions(k):
        yield SetPartition(rgs)


def _chunks(k, depth):
    if k == 0:
        return [()]
    depth = max(1, min(depth, k))
    return list(_completions([0], depth))


# ── Symmetry checks ───────────────────────────────────────────
def apply_permutation(p, perm):
    """Canonical RGS of the partition that puts cell perm[i] where cell i was."""
    rgs = p.rgs if isinstance(p, SetPartition) else tuple(p)
    if len(perm) != len(rgs):
        raise DimensionError(f'permutation of length {len(perm)} for {len(rgs)} cells')
    moved = [0] * len(rgs)
    for i, label in enumerate(rgs):
        moved[perm[i]] = label
    image = canonical(moved)
    return SetPartition(image) if isinstance(p, SetPartition) else image


def is_invariant(rgs, perm):
    """
    True iff the permuted partition equals rgs. Holds exactly when
    block(perm[i]) is a function of block(i); such a map on blocks is
    automatically a bijection, so no canonical form is needed.
    """
    image_of = {}
    for i, label in enumerate(rgs):
        target = rgs[perm[i]]
        known = image_of.setdefault(label, target)
        if known != target:
            return False
    return True


def _is_orbit_minimum(rgs, perms, fixed_flags):
    for perm, fixed in zip(perms, fixed_flags):
        if not fixed and apply_permutation(rgs, perm) < rgs:
            return False
    return True


def _tally_chunk(task):
    prefix, k, perms, with_orbits = task
    patterns = Counter()
    orbits = 0
    source = _completions(list(prefix), k) if prefix else _raw_partitions(k)
    for rgs in source:
        flags = tuple(is_invariant(rgs, perm) for perm in perms)
        patterns[flags] += 1
        if with_orbits and _is_orbit_minimum(rgs, perms, flags):
            orbits += 1
    return patterns, orbits


def _run(k, perms, with_orbits, jobs=None, cap=None):
    check_capacity(k, cap)
    jobs = int(jobs if jobs is not None else config.get('jobs', 1))
    depth = int(config.get('oracle.chunk_depth', 4))
    tasks = [(prefix, k, perms, with_orbits) for prefix in _chunks(k, depth)]
    debug_print(f'oracle: {k} cells, {len(tasks)} chunks, jobs={jobs}')

    patterns, orbits = Counter(), 0
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_tally_chunk, tasks))
    else:
        results = [_tally_chunk(task) for task in tasks]
    for chunk_patterns, chunk_orbits in results:
        patterns.update(chunk_patterns)
        orbits += chunk_orbits
    return patterns, orbits


# ── Public counts ─────────────────────────────────────────────
@dataclass(frozen=True)
class OracleTally:
    """Exhaustive counts for one shape."""
    B: int
    H: int
    V: int
    R: int
    S: int
    L: int
    h_only: int
    v_only: int
    r_only: int
    asymmetric: int

    def fixed(self, g):
        return {
            SymmetryElement.IDENTITY:     self.B,
            SymmetryElement.REFLECT_ROWS: self.H,
            SymmetryElement.REFLECT_COLS: self.V,
            SymmetryElement.ROTATE_180:   self.R,
        }[g]


def shape_tally(shape, with_orbits=True, cap=None, jobs=None):
    perms = tuple(cell_permutation(shape, g) for g in _NON_IDENTITY)
    patterns, orbits = _run(shape.cells, perms, with_orbits, jobs, cap)

    def fixed_by(index):
        return sum(n for flags, n in patterns.items() if flags[index])

    return OracleTally(
        B=sum(patterns.values()),
        H=fixed_by(0),
        V=fixed_by(1),
        R=fixed_by(2),
        S=patterns[(True, True, True)],
        L=orbits if with_orbits else None,
        h_only=patterns[(True, False, False)],
        v_only=patterns[(False, True, False)],
        r_only=patterns[(False, False, True)],
        asymmetric=patterns[(False, False, False)],
    )


def count_invariant(shape, g, cap=None, jobs=None):
    if g is SymmetryElement.IDENTITY:
        return count_partitions(shape.cells, cap, jobs)
    patterns, _ = _run(shape.cells, (cell_permutation(shape, g),), False, jobs, cap)
    return patterns[(True,)]


def count_partitions(k, cap=None, jobs=None):
    patterns, _ = _run(k, (), False, jobs, cap)
    return sum(patterns.values())


def count_klein_invariant(shape, cap=None, jobs=None):
    # The two reflections generate the group.
    perms = (cell_permutation(shape, SymmetryElement.REFLECT_ROWS),
             cell_permutation(shape, SymmetryElement.REFLECT_COLS))
    patterns, _ = _run(shape.cells, perms, False, jobs, cap)
    return patterns[(True, True)]


def search_klein_invariant(shape):
    """
    Klein-invariant partitions by depth-first search instead of a walk over
    all of them. Cells are labelled one group orbit at a time, and a branch
    is cut as soon as a reflection sends two placed cells that share a block
    to two placed cells that do not (or the reverse). The work grows with
    the answer, not with Bell(mn), so no oracle cap applies.
    """
    perms = (cell_permutation(shape, SymmetryElement.REFLECT_ROWS),
             cell_permutation(shape, SymmetryElement.REFLECT_COLS))
    order, seen = [], set()
    for cell in range(shape.cells):
        if cell not in seen:
            orbit = sorted({cell, *(p[cell] for p in perms), perms[0][perms[1][cell]]})
            order.extend(orbit)
            seen.update(orbit)
    position = {cell: i for i, cell in enumerate(order)}
    moves = [tuple(position[p[cell]] for cell in order) for p in perms]
    labels = [0] * len(order)

    def consistent(pos):
        for move in moves:
            image = move[pos]
            if image > pos:
                continue
            same_image = labels[image]
            mine = labels[pos]
            for i in range(pos):
                j = move[i]
                if j <= pos and (labels[i] == mine) != (labels[j] == same_image):
                    return False
        return True

    def walk(pos, blocks):
        if pos == len(order):
            return 1
        total = 0
        for label in range(blocks + 1):
            labels[pos] = label
            if consistent(pos):
                total += walk(pos + 1, max(blocks, label + 1))
        return total

    count = walk(0, 0)
    debug_print(f'search_klein_invariant {shape}: {count}')
    return count


def count_orbits(shape, cap=None, jobs=None):
    return shape_tally(shape, with_orbits=True, cap=cap, jobs=jobs).L


def class_decomposition(shape, cap=None, jobs=None):
    t = shape_tally(shape, with_orbits=False, cap=cap, jobs=jobs)
    return {'h_only': t.h_only, 'v_only': t.v_only, 'r_only': t.r_only,
            'fully': t.S, 'asymmetric': t.asymmetric}


def count_invariant_profile(profile, cap=None, jobs=None):
    """Partitions of a (2t+u)-set fixed by an explicit involution of type (t, u)."""
    patterns, _ = _run(profile.size, (profile_permutation(profile),), False, jobs, cap)
    return patterns[(True,)]


def orbit_of(p, shape):
    """The distinct canonical images of p under the four group elements."""
    rgs = p.rgs if isinstance(p, SetPartition) else tuple(p)
    return sorted({apply_permutation(rgs, cell_permutation(shape, g)) for g in KLEIN_GROUP})


# ── Independent recurrence ────────────────────────────────────
@lru_cache(maxsize=None)
def _pairs_only(t):
    # Orbit of blocks holding a distinguished pair and j-1 other pairs: one
    # invariant block, or two blocks swapped by the involution (2^(j-1) ways).
    if t == 0:
        return 1
    k = t - 1
    return sum(math.comb(k, j - 1) * (2 ** (j - 1) + 1) * _pairs_only(k + 1 - j)
               for j in range(1, t + 1))


@lru_cache(maxsize=None)
def _recurrence(t, u):
    if u == 0:
        return _pairs_only(t)
    # The block holding a distinguished fixed point is invariant: it takes
    # a of the other fixed points and b whole pairs.
    return sum(math.comb(u - 1, a) * math.comb(t, b) * _recurrence(t - b, u - 1 - a)
               for a in range(u)
               for b in range(t + 1))


def fixed_count_recurrence(profile):
    return _recurrence(profile.pairs, profile.fixed)
