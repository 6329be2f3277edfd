"""
Grid Symmetry - the m x n grid, the Klein four-group acting on it, and the
cycle type (pairs, fixed cells) each element induces on the cells.

Cells are indexed row-major from 0; rows and columns are 0-based here and
only printed in m x n form.
"""

from dataclasses import dataclass
from enum import Enum

from errors import ShapeError


@dataclass(frozen=True)
class GridShape:
    rows: int
    cols: int

    def __post_init__(self):
        for label, value in (('rows', self.rows), ('cols', self.cols)):
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ShapeError(f'{label} must be a positive integer, got {value!r}')

    @property
    def cells(self):
        return self.rows * self.cols

    @property
    def is_square(self):
        return self.rows == self.cols

    def transpose(self):
        return GridShape(self.cols, self.rows)

    def cell(self, i, j):
        return i * self.cols + j

    def __str__(self):
        return f'{self.rows}x{self.cols}'


class SymmetryElement(Enum):
    IDENTITY     = 'identity'
    REFLECT_ROWS = 'reflect_rows'   # row i <-> row m-1-i
    REFLECT_COLS = 'reflect_cols'   # col j <-> col n-1-j
    ROTATE_180   = 'rotate_180'

    @property
    def flips(self):
        """(flips rows, flips cols)"""
        return _FLIPS[self]

    def compose(self, other):
        r1, c1 = self.flips
        r2, c2 = other.flips
        return _BY_FLIPS[(r1 != r2, c1 != c2)]


_FLIPS = {
    SymmetryElement.IDENTITY:     (False, False),
    SymmetryElement.REFLECT_ROWS: (True,  False),
    SymmetryElement.REFLECT_COLS: (False, True),
    SymmetryElement.ROTATE_180:   (True,  True),
}
_BY_FLIPS = {v: k for k, v in _FLIPS.items()}

KLEIN_GROUP = tuple(SymmetryElement)


@dataclass(frozen=True)
class InvolutionProfile:
    pairs: int
    fixed: int

    def __post_init__(self):
        if self.pairs < 0 or self.fixed < 0:
            raise ValueError(f'negative involution profile ({self.pairs}, {self.fixed})')

    @property
    def size(self):
        return 2 * self.pairs + self.fixed


def cell_permutation(shape, g):
    """perm[c] is the cell that cell c is sent to by g."""
    flip_rows, flip_cols = g.flips
    m, n = shape.rows, shape.cols
    perm = []
    for i in range(m):
        for j in range(n):
            ii = m - 1 - i if flip_rows else i
            jj = n - 1 - j if flip_cols else j
            perm.append(ii * n + jj)
    return tuple(perm)


def involution_profile(shape, g):
    m, n = shape.rows, shape.cols
    if g is SymmetryElement.IDENTITY:
        return InvolutionProfile(0, m * n)
    if g is SymmetryElement.REFLECT_ROWS:
        return InvolutionProfile((m // 2) * n, (m % 2) * n)
    if g is SymmetryElement.REFLECT_COLS:
        return InvolutionProfile(m * (n // 2), m * (n % 2))
    return InvolutionProfile((m * n) // 2, (m * n) % 2)


def cycle_type(perm):
    """(2-cycles, fixed points) of an involution; ValueError otherwise."""
    pairs = fixed = 0
    for c, image in enumerate(perm):
        if perm[image] != c:
            raise ValueError(f'not an involution at cell {c}')
        if image == c:
            fixed += 1
        elif c < image:
            pairs += 1
    return InvolutionProfile(pairs, fixed)


def profile_permutation(profile):
    """
    An explicit involution with the given cycle type on 0..2t+u-1:
    (0 1)(2 3)...(2t-2 2t-1), then u fixed points.
    """
    perm = []
    for p in range(profile.pairs):
        perm.extend((2 * p + 1, 2 * p))
    perm.extend(range(2 * profile.pairs, profile.size))
    return tuple(perm)
