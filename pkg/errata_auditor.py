"""
Errata Auditor - compares formula values with the exhaustive oracle and
with the published fixture values.

The fixture is plain data (data/paper_table.json) with a source note per
entry; no conclusion about which published value is wrong lives in code.
Each comparison becomes a VerifyFinding:

  CONFIRMED      formula == oracle (== published value, if there is one)
  PAPER_ERRATUM  formula == oracle != published value
  FORMULA_BUG    formula != oracle
  FORMULA_ONLY   shape too large to enumerate; nothing to judge against
"""

import json
import logging
import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import partition_counter as pc
import partition_oracle as oracle
from combinatorics import bell
from config import debug_print
from errors import CapacityError
from grid_symmetry import GridShape

log = logging.getLogger('gridcount.verify')

FIXTURE_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'paper_table.json')

QUANTITIES = ('B', 'H', 'V', 'R', 'S', 'L')


class Status(Enum):
    CONFIRMED     = 'CONFIRMED'
    PAPER_ERRATUM = 'PAPER_ERRATUM'
    FORMULA_BUG   = 'FORMULA_BUG'
    FORMULA_ONLY  = 'FORMULA_ONLY'


@dataclass(frozen=True)
class FixtureEntry:
    rows: int
    cols: int
    quantity: str
    value: int
    source: str

    @property
    def shape(self):
        return GridShape(self.rows, self.cols)


class PaperFixture:
    def __init__(self, data_file=FIXTURE_FILE):
        self.data_file = data_file
        self.entries = []
        self.load()

    def load(self):
        with open(self.data_file, 'r') as f:
            data = json.load(f)
        self.entries = [
            FixtureEntry(int(e['rows']), int(e['cols']), e['quantity'], int(e['value']), e['source'])
            for e in data.get('entries', [])
        ]
        debug_print(f'Loaded {len(self.entries)} fixture entries from {self.data_file}')

    def value(self, shape, quantity):
        for e in self.entries:
            if e.rows == shape.rows and e.cols == shape.cols and e.quantity == quantity:
                return e.value
        return None

    def shapes(self):
        return sorted({e.shape for e in self.entries}, key=lambda s: (s.rows, s.cols))


@dataclass(frozen=True)
class VerifyFinding:
    shape: GridShape
    quantity: str
    formula_value: object
    oracle_value: object
    fixture_value: object
    status: Status


@dataclass(frozen=True)
class BurnsideTripwire:
    """Divisibility of B + H + V + R using the published H, V, R."""
    shape: GridShape
    total: int

    @property
    def remainder(self):
        return self.total % 4

    @property
    def tripped(self):
        return self.remainder != 0


def classify(formula_value, oracle_value, fixture_value):
    if oracle_value is None:
        return Status.FORMULA_ONLY
    if formula_value != oracle_value:
        return Status.FORMULA_BUG
    if fixture_value is not None and fixture_value != formula_value:
        return Status.PAPER_ERRATUM
    return Status.CONFIRMED


def formula_values(shape):
    """B..S from the formulas; L stays a Fraction if the group average is not whole."""
    values = {
        'B': pc.count_b(shape),
        'H': pc.count_h(shape),
        'V': pc.count_v(shape),
        'R': pc.count_r(shape),
        'S': pc.count_s(shape),
    }
    L = Fraction(values['B'] + values['H'] + values['V'] + values['R'], 4)
    values['L'] = L.numerator if L.denominator == 1 else L
    return values


def shapes_up_to(max_cells):
    return [GridShape(m, n)
            for m in range(1, max_cells + 1)
            for n in range(1, max_cells // m + 1)]


def audit_shape(shape, fixture=None, cap=None, jobs=None):
    values = formula_values(shape)
    try:
        tally = oracle.shape_tally(shape, with_orbits=True, cap=cap, jobs=jobs)
        truth = {q: getattr(tally, q) for q in QUANTITIES}
    except CapacityError:
        truth = {}

    findings = []
    for q in QUANTITIES:
        published = fixture.value(shape, q) if fixture else None
        findings.append(VerifyFinding(
            shape, q, values[q], truth.get(q), published,
            classify(values[q], truth.get(q), published),
        ))
    return findings


def burnside_tripwires(fixture):
    checks = []
    for shape in fixture.shapes():
        published = [fixture.value(shape, q) for q in ('H', 'V', 'R')]
        if None in published:
            continue
        checks.append(BurnsideTripwire(shape, bell(shape.cells) + sum(published)))
    return checks


def audit(max_cells, against_paper=False, cap=None, jobs=None):
    """
    Findings for every shape with at most max_cells cells, plus (with
    against_paper) every published shape beyond that. Returns (findings,
    tripwires); the order is fixed by shape, then quantity.
    """
    fixture = PaperFixture() if against_paper else None
    shapes = shapes_up_to(max_cells)
    if fixture:
        seen = set(shapes)
        shapes += [s for s in fixture.shapes() if s not in seen]

    findings = []
    for i, shape in enumerate(shapes, 1):
        log.info('verify %s (%d/%d)', shape, i, len(shapes))
        findings.extend(audit_shape(shape, fixture, cap, jobs))

    tripwires = burnside_tripwires(fixture) if fixture else []
    return findings, tripwires


def has_formula_bug(findings):
    return any(f.status is Status.FORMULA_BUG for f in findings)
