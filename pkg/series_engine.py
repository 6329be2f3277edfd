"""
Series Engine - dense truncated power series in 1-3 variables with exact
rational coefficients.

Every operand of an expression is built from one SeriesDescriptor, so two
series can only be combined when they agree on variable names *and*
truncation orders; nothing is aligned implicitly.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from combinatorics import as_count, factorial
from config import debug_print
from errors import DimensionError, ExponentRangeError, SeriesDomainError


@dataclass(frozen=True)
class SeriesDescriptor:
    vars: tuple
    orders: tuple

    def __post_init__(self):
        object.__setattr__(self, 'vars', tuple(self.vars))
        object.__setattr__(self, 'orders', tuple(int(o) for o in self.orders))
        if not 1 <= len(self.vars) <= 3:
            raise DimensionError(f'need 1 to 3 variables, got {len(self.vars)}')
        if len(set(self.vars)) != len(self.vars):
            raise DimensionError(f'duplicate variable names: {self.vars}')
        if len(self.orders) != len(self.vars):
            raise DimensionError('one truncation order per variable')
        if any(o < 0 for o in self.orders):
            raise DimensionError(f'orders must be >= 0, got {self.orders}')

    @cached_property
    def exponents(self):
        """All exponent tuples within bounds, row-major (last variable fastest)."""
        return tuple(itertools.product(*(range(o + 1) for o in self.orders)))

    @cached_property
    def strides(self):
        strides, step = [], 1
        for o in reversed(self.orders):
            strides.append(step)
            step *= o + 1
        return tuple(reversed(strides))

    @property
    def size(self):
        return math.prod(o + 1 for o in self.orders)

    def index(self, exps):
        exps = tuple(exps)
        if len(exps) != len(self.orders):
            raise DimensionError(f'expected {len(self.orders)} exponents, got {len(exps)}')
        for e, o in zip(exps, self.orders):
            if not 0 <= e <= o:
                raise ExponentRangeError(
                    f'exponents {exps} outside orders {self.orders} for {self.vars}')
        return sum(e * s for e, s in zip(exps, self.strides))

    def fits(self, exps):
        return all(e <= o for e, o in zip(exps, self.orders))


@dataclass(frozen=True)
class TruncatedSeries:
    descriptor: SeriesDescriptor
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.descriptor.size:
            raise DimensionError('coefficient table does not match descriptor')

    @property
    def vars(self):
        return self.descriptor.vars

    @property
    def orders(self):
        return self.descriptor.orders

    def coefficient(self, exps):
        return self.coeffs[self.descriptor.index(exps)]

    def terms(self):
        """(exponents, coefficient) for every nonzero coefficient."""
        return [(e, c) for e, c in zip(self.descriptor.exponents, self.coeffs) if c]

    def is_zero(self):
        return not any(self.coeffs)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(other, -1))

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__


# ── Builders ──────────────────────────────────────────────────
def zero(desc):
    return TruncatedSeries(desc, (Fraction(0),) * desc.size)


def constant(desc, c):
    coeffs = [Fraction(0)] * desc.size
    coeffs[0] = Fraction(c)
    return TruncatedSeries(desc, tuple(coeffs))


def one(desc):
    return constant(desc, 1)


def variable(desc, name):
    if name not in desc.vars:
        raise DimensionError(f'{name!r} is not one of {desc.vars}')
    exps = [0] * len(desc.vars)
    exps[desc.vars.index(name)] = 1
    coeffs = [Fraction(0)] * desc.size
    if desc.fits(exps):
        coeffs[desc.index(exps)] = Fraction(1)
    return TruncatedSeries(desc, tuple(coeffs))


def exp_atom(desc, weights, scale=1):
    """
    scale * exp(sum_i weights[i] * var_i), truncated: the coefficient of
    (k1..kd) is scale * prod_i weights[i]**k_i / k_i!.
    """
    weights = tuple(weights)
    if len(weights) != len(desc.vars):
        raise DimensionError(f'expected {len(desc.vars)} weights, got {len(weights)}')
    scale = Fraction(scale)
    coeffs = []
    for exps in desc.exponents:
        c = scale
        for w, k in zip(weights, exps):
            c *= Fraction(w ** k, factorial(k))
        coeffs.append(c)
    return TruncatedSeries(desc, tuple(coeffs))


# ── Arithmetic ────────────────────────────────────────────────
def _same_shape(a, b):
    if a.descriptor != b.descriptor:
        raise DimensionError(
            f'series shape mismatch: {a.vars}{a.orders} vs {b.vars}{b.orders}')


def add(a, b):
    _same_shape(a, b)
    return TruncatedSeries(a.descriptor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def scale(a, c):
    c = Fraction(c)
    return TruncatedSeries(a.descriptor, tuple(x * c for x in a.coeffs))


def mul(a, b):
    """Truncated Cauchy product."""
    _same_shape(a, b)
    desc = a.descriptor
    out = [Fraction(0)] * desc.size
    b_terms = b.terms()
    for ea, ca in a.terms():
        for eb, cb in b_terms:
            e = tuple(x + y for x, y in zip(ea, eb))
            if desc.fits(e):
                out[desc.index(e)] += ca * cb
    return TruncatedSeries(desc, tuple(out))


def series_exp(g):
    """
    exp(g) for g with zero constant term.

    Uses the Euler operator D = sum x_i d/dx_i, a derivation with
    D(x^a) = |a| x^a, so D exp(g) = D(g) exp(g) gives, for |a| > 0,
        |a| f[a] = sum_{0 < b <= a} |b| g[b] f[a - b].
    Exponent tuples are visited by total degree, so every f[a - b] is
    final before it is read.
    """
    desc = g.descriptor
    if g.coeffs[0] != 0:
        raise SeriesDomainError(f'exp needs a zero constant term, got {g.coeffs[0]}')

    g_terms = [(e, sum(e) * c) for e, c in g.terms()]
    f = [Fraction(0)] * desc.size
    f[0] = Fraction(1)
    for exps in sorted(desc.exponents, key=sum):
        degree = sum(exps)
        if degree == 0:
            continue
        acc = Fraction(0)
        for eb, weighted in g_terms:
            if all(x <= y for x, y in zip(eb, exps)):
                rest = tuple(y - x for x, y in zip(eb, exps))
                acc += weighted * f[desc.index(rest)]
        f[desc.index(exps)] = acc / degree
    debug_print(f'series_exp over {desc.vars} orders {desc.orders} ({desc.size} coefficients)')
    return TruncatedSeries(desc, tuple(f))


# ── Coefficient extraction ────────────────────────────────────
def egf_count(f, exps):
    """(prod_i exps[i]!) * [vars^exps] f, which must be an integer."""
    c = f.coefficient(exps)
    weight = math.prod(factorial(e) for e in exps)
    return as_count(c * weight, f'EGF coefficient at {tuple(exps)}')


def egf_grid(f):
    """Factorial-scaled coefficients for every exponent tuple, row-major."""
    return [(exps, egf_count(f, exps)) for exps in f.descriptor.exponents]
