"""
Report Writer - renders reports, tables, verify findings and series dumps
as text, JSON or CSV. Big integers always go out as decimal strings in
JSON so no consumer truncates them to 64 bits.
"""

import csv
import io
import json

COLUMNS = ('rows', 'cols', 'B', 'H', 'V', 'R', 'S', 'L', 'C')
FORMATS = ('text', 'json', 'csv')

SQUARE_NOTE = 'D2 only; square grids also have diagonal and quarter-turn symmetry, not counted here'

_LABELS = {
    'B': 'all partitions (Bell number)',
    'H': 'fixed by reflecting rows',
    'V': 'fixed by reflecting columns',
    'R': 'fixed by the half-turn',
    'S': 'fixed by all four symmetries',
    'L': 'inequivalent under symmetry',
    'C': 'fixed by no symmetry but the identity',
}


def _row(report):
    values = report.values()
    return [report.shape.rows, report.shape.cols] + [values[k] for k in COLUMNS[2:]]


def _json_row(report):
    values = report.values()
    out = {'rows': report.shape.rows, 'cols': report.shape.cols}
    out.update({k: str(values[k]) for k in COLUMNS[2:]})
    return out


def _csv(rows, header=None):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    if header:
        writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip('\n')


def _dumps(obj):
    return json.dumps(obj, separators=(',', ':'))


# ── count ─────────────────────────────────────────────────────
def render_report(report, fmt='text'):
    if fmt == 'json':
        return _dumps(_json_row(report))
    if fmt == 'csv':
        return _csv([_row(report)])

    values = report.values()
    width = max(len(str(v)) for v in values.values())
    lines = [f'{report.shape.rows}x{report.shape.cols} grid ({report.shape.cells} cells)']
    for key in COLUMNS[2:]:
        lines.append(f'  {key} = {str(values[key]).rjust(width)}   {_LABELS[key]}')
    c = report.classes
    lines.append(f'  classes: h_only={c.h_only} v_only={c.v_only} r_only={c.r_only} '
                 f'fully={c.fully} asymmetric={c.asymmetric}')
    if report.shape.is_square:
        lines.append(f'  note: {SQUARE_NOTE}')
    return '\n'.join(lines)


# ── table ─────────────────────────────────────────────────────
def render_table(reports, fmt='text'):
    if fmt == 'json':
        return _dumps([_json_row(r) for r in reports])
    if fmt == 'csv':
        return _csv([_row(r) for r in reports], header=COLUMNS)

    rows = [[str(v) for v in _row(r)] for r in reports]
    widths = [max([len(h)] + [len(row[i]) for row in rows]) for i, h in enumerate(COLUMNS)]
    lines = ['  '.join(h.rjust(w) for h, w in zip(COLUMNS, widths))]
    for report, row in zip(reports, rows):
        line = '  '.join(v.rjust(w) for v, w in zip(row, widths))
        if report.shape.is_square:
            line += '  *'
        lines.append(line)
    if any(r.shape.is_square for r in reports):
        lines.append(f'* {SQUARE_NOTE}')
    return '\n'.join(lines)


# ── verify ────────────────────────────────────────────────────
def _opt(value):
    return '-' if value is None else str(value)


def render_findings(findings, tripwires=(), fmt='text'):
    if fmt == 'json':
        return _dumps({
            'findings': [{
                'status': f.status.value,
                'op': f.quantity,
                'rows': f.shape.rows,
                'cols': f.shape.cols,
                'formula': str(f.formula_value),
                'oracle': None if f.oracle_value is None else str(f.oracle_value),
                'paper': None if f.fixture_value is None else str(f.fixture_value),
            } for f in findings],
            'tripwires': [{
                'op': 'L', 'rows': t.shape.rows, 'cols': t.shape.cols,
                'sum': str(t.total), 'mod4': t.remainder,
            } for t in tripwires if t.tripped],
        })
    if fmt == 'csv':
        return _csv([[f.status.value, f.quantity, f.shape.rows, f.shape.cols,
                      f.formula_value, _opt(f.oracle_value), _opt(f.fixture_value)]
                     for f in findings],
                    header=('status', 'op', 'rows', 'cols', 'formula', 'oracle', 'paper'))

    lines = [f'{f.status.value} op={f.quantity} shape={f.shape} formula={f.formula_value} '
             f'oracle={_opt(f.oracle_value)} paper={_opt(f.fixture_value)}'
             for f in findings]
    lines += [f'TRIPWIRE op=L shape={t.shape} sum={t.total} mod4={t.remainder}'
              for t in tripwires if t.tripped]
    return '\n'.join(lines)


# ── series ────────────────────────────────────────────────────
def _nest(desc, grid):
    """Nested lists of scaled coefficients, outermost = first variable."""
    values = dict(grid)

    def build(prefix):
        depth = len(prefix)
        if depth == len(desc.orders):
            return values[tuple(prefix)]
        return [build(prefix + [e]) for e in range(desc.orders[depth] + 1)]

    return build([])


def render_series(gf, series, grid, fmt='text'):
    desc = series.descriptor
    if fmt == 'json':
        def stringify(node):
            return [stringify(n) for n in node] if isinstance(node, list) else str(node)
        return _dumps({
            'id': gf.key, 'title': gf.title,
            'vars': list(desc.vars), 'orders': list(desc.orders),
            'coefficients': stringify(_nest(desc, grid)),
        })
    if fmt == 'csv':
        return _csv([list(exps) + [value] for exps, value in grid],
                    header=list(desc.vars) + ['value'])

    lines = [f'# {gf.key}: {gf.title}']
    nested = _nest(desc, grid)
    if len(desc.vars) == 1:
        lines.append(' '.join(str(v) for v in nested))
    elif len(desc.vars) == 2:
        lines.append(f'# one line per power of {desc.vars[0]}, columns are powers of {desc.vars[1]}')
        lines += [' '.join(str(v) for v in row) for row in nested]
    else:
        lines.append(f'# blocks by power of {desc.vars[0]}; lines by {desc.vars[1]}, '
                     f'columns by {desc.vars[2]}')
        for i, block in enumerate(nested):
            lines.append(f'# {desc.vars[0]}^{i}')
            lines += [' '.join(str(v) for v in row) for row in block]
    return '\n'.join(lines)
