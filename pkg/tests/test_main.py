import csv
import io
import json

import pytest

from main import EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_json(capsys):
    code, out, _ = run(capsys, 'count', '2', '3', '--format', 'json')
    assert code == EXIT_OK
    assert out == ('{"rows":2,"cols":3,"B":"203","H":"31","V":"31","R":"31",'
                   '"S":"13","L":"74","C":"136"}\n')


def test_count_csv(capsys):
    code, out, _ = run(capsys, 'count', '3', '1', '--format', 'csv')
    assert code == EXIT_OK
    assert out == '3,1,5,3,5,3,3,4,0\n'


def test_count_text(capsys):
    code, out, err = run(capsys, 'count', '2', '3')
    assert code == EXIT_OK
    assert out.startswith('2x3 grid (6 cells)')
    assert 'h_only=18' in out
    assert err == ''


def test_count_square_warns(capsys):
    code, out, err = run(capsys, 'count', '2', '2', '--format', 'json')
    assert code == EXIT_OK
    assert 'square grids' in err
    assert json.loads(out)['S'] == '5'


def test_count_bad_shape(capsys):
    code, _, err = run(capsys, 'count', '0', '3')
    assert code == EXIT_USAGE
    assert 'rows' in err


def test_bad_arguments_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(['count', 'x', '3'])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(['frobnicate'])
    assert exc.value.code == EXIT_USAGE


def test_table_csv(capsys):
    code, out, _ = run(capsys, 'table', '--max-cells', '3', '--format', 'csv')
    assert code == EXIT_OK
    assert out.splitlines() == [
        'rows,cols,B,H,V,R,S,L,C',
        '1,2,2,2,2,2,2,2,0',
        '1,3,5,5,3,3,3,4,0',
        '2,1,2,2,2,2,2,2,0',
        '3,1,5,3,5,3,3,4,0',
    ]


def test_table_squares(capsys):
    code, out, _ = run(capsys, 'table', '--max-cells', '4', '--include-squares')
    assert code == EXIT_OK
    assert out.rstrip().splitlines()[-1].startswith('* D2 only')


def test_table_limit(capsys):
    code, _, _ = run(capsys, 'table', '--max-cells', '31')
    assert code == EXIT_USAGE


def test_verify(capsys):
    code, out, _ = run(capsys, 'verify', '--max-cells', '4')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == 'CONFIRMED op=B shape=1x1 formula=1 oracle=1 paper=-'
    assert all(line.startswith('CONFIRMED') for line in lines)


def test_verify_json(capsys):
    code, out, _ = run(capsys, 'verify', '--max-cells', '2', '--format', 'json')
    assert code == EXIT_OK
    data = json.loads(out)
    assert len(data['findings']) == 18
    assert data['tripwires'] == []


def test_verify_bad_unsafe_cells(capsys):
    code, _, _ = run(capsys, 'verify', '--unsafe-cells', '16')
    assert code == EXIT_USAGE


def test_series_bell(capsys):
    code, out, _ = run(capsys, 'series', 'bell', '--order', '6')
    assert code == EXIT_OK
    assert out.splitlines()[-1] == '1 1 2 5 15 52 203'


def test_series_pairs_only(capsys):
    code, out, _ = run(capsys, 'series', '3.1')
    assert code == EXIT_OK
    assert out.splitlines()[-1] == '1 2 7 31 164 999 6841'


def test_series_order_zero(capsys):
    code, out, _ = run(capsys, 'series', '4.1', '--order', '0')
    assert code == EXIT_OK
    assert out.splitlines()[-1] == '1'


def test_series_bivariate_json(capsys):
    code, out, _ = run(capsys, 'series', '3.2', '--orders', '2,2', '--format', 'json')
    assert code == EXIT_OK
    data = json.loads(out)
    assert data['vars'] == ['y', 'x']
    assert data['coefficients'][2][2] == '31'


def test_series_order_errors(capsys):
    assert run(capsys, 'series', 'bell', '--orders', '1,2')[0] == EXIT_USAGE
    assert run(capsys, 'series', 'bell', '--orders', 'a')[0] == EXIT_USAGE
    assert run(capsys, 'series', 'bell', '--order', '-1')[0] == EXIT_USAGE
    assert run(capsys, 'series', '5.3', '--order', '40')[0] == EXIT_USAGE


def test_count_worked_example_json(capsys):
    code, out, _ = run(capsys, 'count', '3', '1', '--format', 'json')
    assert code == EXIT_OK
    assert out == '{"rows":3,"cols":1,"B":"5","H":"3","V":"5","R":"3","S":"3","L":"4","C":"0"}\n'


def test_count_csv_2x3(capsys):
    code, out, _ = run(capsys, 'count', '2', '3', '--format', 'csv')
    assert code == EXIT_OK
    assert out == '2,3,203,31,31,31,13,74,136\n'


def test_verify_is_repeatable(capsys):
    first = run(capsys, 'verify', '--max-cells', '6', '--against-paper', '--unsafe-cells', '6')
    second = run(capsys, 'verify', '--max-cells', '6', '--against-paper', '--unsafe-cells', '6')
    assert first == second


def test_verify_json_and_csv_agree(capsys):
    _, as_json, _ = run(capsys, 'verify', '--max-cells', '4', '--format', 'json')
    _, as_csv, _ = run(capsys, 'verify', '--max-cells', '4', '--format', 'csv')
    rows = list(csv.DictReader(io.StringIO(as_csv)))
    findings = json.loads(as_json)['findings']
    assert len(rows) == len(findings)
    for row, f in zip(rows, findings):
        assert (row['status'], row['op'], int(row['rows']), int(row['cols'])) == (
            f['status'], f['op'], f['rows'], f['cols'])
        assert row['formula'] == f['formula']
        assert row['oracle'] == (f['oracle'] or '-')
        assert row['paper'] == (f['paper'] or '-')


def test_series_corrected_header(capsys):
    code, out, _ = run(capsys, 'series', '5.1c', '--order', '4')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith('# 5.1c: CORRECTED')
    assert lines[-1] == '1 5 36 319 3307'
    _, out, _ = run(capsys, 'series', '5.3', '--orders', '1,1,1')
    assert out.startswith('# 5.3: AS PRINTED')
