import json

import pytest

import run
from kummer.toric import parse_chart_bundle, triangulation_from_charts, triangulation_to_dict



def call(capsys, *argv):
    code = run.main(list(argv))
    return code, capsys.readouterr().out


def call_json(capsys, *argv):
    code, out = call(capsys, *argv)
    return code, json.loads(out)



def test_hodge_both_methods_agree(capsys):
    code, data = call_json(capsys, 'hodge', '--d', '2', '--n', '3', '--method', 'both')
    assert code == 0
    assert data['match'] is True
    assert data['brute']['entries'][1][2] == '3'
    assert data['closed']['euler'] == '96'


def test_hodge_sixfold_surface(capsys):
    code, data = call_json(capsys, 'hodge', '--d', '6', '--n', '2', '--method', 'both')
    assert code == 0
    assert data['brute']['euler'] == '24'


def test_hodge_table(capsys):
    code, out = call(capsys, 'hodge', '--d', '3', '--n', '1', '--format', 'table')
    assert code == 0
    assert 'euler: 0' in out


def test_diamond_layout(capsys):
    code, out = call(capsys, 'diamond', '--d', '2', '--n', '2', '--format', 'table')
    assert code == 0
    assert 'betti: 1 0 22 0 1' in out
    assert out.split("\n")[1].split() == ['1']


def test_output_is_deterministic(capsys):
    first = call(capsys, 'hodge', '--d', '4', '--n', '3')
    second = call(capsys, 'hodge', '--d', '4', '--n', '3')
    assert first == second


def test_output_independent_of_workers(capsys):
    # |G_{6,4}| = 216 elements, four chunks of 64
    argv = ['hodge', '--d', '6', '--n', '4', '--method', 'brute']
    serial = call(capsys, *argv, '--workers', '1')
    parallel = call(capsys, *argv, '--workers', '2')
    assert serial[0] == 0
    assert serial == parallel


@pytest.mark.parametrize('d, n, expected', [(4, 2, '24'), (2, 1, '0'), (6, 3, '168')])
def test_euler(capsys, d, n, expected):
    code, data = call_json(capsys, 'euler', '--d', str(d), '--n', str(n))
    assert code == 0
    assert data['euler'] == {'closed': expected, 'roots_of_unity': expected}


def test_euler_both(capsys):
    code, data = call_json(capsys, 'euler', '--d', '3', '--n', '3', '--method', 'both')
    assert code == 0
    assert data['match'] is True
    assert data['euler']['brute'] == '168'


def test_usage_errors(capsys):
    assert run.main(['hodge', '--d', '5', '--n', '2']) == 1
    assert run.main(['hodge', '--d', '2']) == 1
    assert run.main(['frobnicate']) == 1
    assert run.main(['toric', 'juniors', '--r', '6', '--weights', '1,a']) == 1


@pytest.mark.parametrize('argv', [
    ['hodge', '--d', '2', '--n', '0'],
    ['hodge', '--d', '2', '--n', '-1'],
    ['diamond', '--d', '3', '--n', '0'],
    ['euler', '--d', '4', '--n', '0'],
    ['euler', '--d', '4', '--n', '-1', '--method', 'both'],
    ['toric', 'juniors', '--r', '0', '--weights', '1,5'],
    ['toric', 'juniors', '--r', '-3', '--weights', '1,5'],
    ['invariants', 'gens', '--n', '0'],
])
def test_nonpositive_sizes_are_usage_errors(capsys, argv):
    assert run.main(argv) == 1
    assert capsys.readouterr().out == ''


def test_budget_exit_code(capsys):
    assert run.main(['hodge', '--d', '6', '--n', '6', '--method', 'brute']) == 4
    assert run.main(['hodge', '--d', '2', '--n', '3', '--method', 'brute', '--budget', '2']) == 4


def test_out_file(capsys, tmp_path):
    path = tmp_path / 'report.json'
    code, out = call(capsys, 'euler', '--d', '2', '--n', '2', '--out', str(path))
    assert code == 0
    assert out == ''
    assert json.loads(path.read_text())['euler']['closed'] == '24'


@pytest.mark.parametrize('r, weights', [(6, '1,1,5,5'), (2, '1,1,1,1'), (3, '1,1,2,2')])
def test_no_juniors(capsys, r, weights):
    code, data = call_json(capsys, 'toric', 'juniors', '--r', str(r), '--weights', weights)
    assert code == 0
    assert data['juniors'] == []


def test_juniors_table(capsys):
    code, out = call(capsys, 'toric', 'juniors', '--r', '6', '--weights', '1,1,4', '--format', 'table')
    assert code == 0
    assert 'junior elements [1, 2, 3]' in out


def test_toric_verify_fixture(capsys):
    code, data = call_json(capsys, 'toric', 'verify')
    assert code == 0
    assert (data['charts'], data['passed'], data['ok']) == (24, 24, True)
    assert all(case['fan']['passed'] for case in data['cases'])


def test_toric_verify_failure_names_chart(capsys, tmp_path, caplog):
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps({'r': 6, 'weights': [1, 5], 'charts': [{'label': 'bad', 'rows': [[1, 0], [0, 1]]}]}))
    code, data = call_json(capsys, 'toric', 'verify', '--file', str(path))
    assert code == 3
    assert data['cases'][0]['charts'][0]['label'] == 'bad'
    assert any('chart bad' in rec.getMessage() for rec in caplog.records)


def test_toric_verify_parse_error(capsys, tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"cases": [')
    assert run.main(['toric', 'verify', '--file', str(path)]) == 2


@pytest.mark.parametrize('content', [
    {'r': 6, 'weights': [1, 5], 'cones': 5},
    {'r': 0, 'weights': [1, 5], 'charts': []},
    {'cases': [{'r': 6, 'weights': [1, 5], 'charts': [{'rows': 7}]}]},
])
def test_toric_verify_malformed_shapes(capsys, tmp_path, content):
    path = tmp_path / 'shape.json'
    path.write_text(json.dumps(content))
    assert run.main(['toric', 'verify', '--file', str(path)]) == 2


def test_toric_verify_triangulation(capsys, tmp_path, chart_bundle):
    case = parse_chart_bundle(chart_bundle)[3]
    path = tmp_path / 'fan.json'
    path.write_text(json.dumps(triangulation_to_dict(triangulation_from_charts(case.charts, case.quotient))))
    code, data = call_json(capsys, 'toric', 'verify', '--file', str(path))
    assert code == 0
    assert data['passed'] is True


def test_invariant_generators(capsys):
    code, data = call_json(capsys, 'invariants', 'gens', '--family', 'g1', '--d', '3', '--n', '2', '--max-degree', '6')
    assert code == 0
    assert len(data['generators']) == 4
    assert data['vars'] == ['x1', 'x2']


def test_family_and_d_must_agree(capsys):
    assert run.main(['invariants', 'gens', '--family', 'h1', '--d', '3', '--n', '2']) == 1


@pytest.mark.parametrize('family, n', [('g1', 3), ('h1', 2)])
def test_invariant_lists(capsys, family, n):
    code, data = call_json(capsys, 'invariants', 'verify', '--family', family, '--n', str(n), '--max-degree', '9')
    assert code == 0
    lists = {entry['list']: entry for entry in data['lists']}
    assert lists['displayed']['passed'] is False
    assert lists['displayed']['witness'] is not None


def test_invariant_list_from_file(capsys, tmp_path):
    path = tmp_path / 'action.json'
    path.write_text(json.dumps({'d': 2, 'vars': 2, 'generators': [[1, 1]], 'claimed': [[2, 0], [0, 2]]}))
    code, data = call_json(capsys, 'invariants', 'verify', '--n', '2', '--file', str(path), '--max-degree', '4')
    assert code == 3
    assert data['lists'][0]['witness'] == [1, 1]


def test_identities(capsys):
    code, data = call_json(capsys, 'invariants', 'identity', '--n', '3')
    assert code == 0
    errata = [entry for entry in data['identities'] if entry['erratum']]
    assert len(errata) == 2
    assert all(entry['printed'] is False and entry['corrected'] is True for entry in errata)


@pytest.mark.parametrize('d, n', [(3, 4), (4, 2)])
def test_twist(capsys, d, n):
    code, data = call_json(capsys, 'invariants', 'twist', '--d', str(d), '--n', str(n))
    assert code == 0
    assert data['passed'] is True
    assert data['target'] == {3: 'g2', 4: 'h3'}[d]


def test_twist_not_coprime(capsys):
    assert run.main(['invariants', 'twist', '--d', '4', '--n', '3', '--twist', '2']) == 1
