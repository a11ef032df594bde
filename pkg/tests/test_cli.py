import json

import pytest

from twisted_phase_space.__main__ import main
from twisted_phase_space.heisenberg_double.phase_space import build_phase_space
from twisted_phase_space.poincare.setup_carrier import setup_carrier
from twisted_phase_space.utils.emitters import parse_table, setup_emitter, table_to_json
from twisted_phase_space.utils.ledger import DiscrepancyLedger
from twisted_phase_space.utils.parse_args import parse_args, selected_checks
from twisted_phase_space.utils.reports import CheckReport


def test_parse_args_defaults():
    args = parse_args(argv=[])
    assert args.command == 'phase-space' and args.order == 8 and args.format == 'text'
    assert selected_checks(args) == ['coproducts', 'hopf', 'group', 'tables', 'jacobi',
                                     'contraction', 'bounds', 'numeric']
    args = parse_args(argv=['verify', '--jacobi', '--numeric', '-c', 'boost'])
    assert selected_checks(args) == ['jacobi', 'numeric'] and args.carrier == 'boost'


def test_config_file_sets_defaults(tmp_path):
    config = tmp_path / 'run.json'
    config.write_text(json.dumps({'order': 3, 'carrier': 'boost', 'format': 'json'}))
    args = parse_args(argv=['phase-space', '--config', str(config), '-n', '2'])
    assert args.order == 2 and args.carrier == 'boost' and args.format == 'json'


def test_json_round_trip():
    table = build_phase_space(setup_carrier('boost'), 3)
    document = json.loads(setup_emitter('json').emit([('table', table)]))
    assert parse_table(document['table']) == table
    assert parse_table(json.loads(json.dumps(table_to_json(table)))).relations == table.relations


def test_emitter_sections():
    ledger = DiscrepancyLedger('demo')
    ledger.add('demo/[x_0, p_0]', '-i', '-i', 'match')
    report = CheckReport('demo')
    report.add('one', True)
    text = setup_emitter('text').emit([('ledger', ledger), ('report', report)])
    assert '# ledger demo: match=1' in text and '# demo: 1/1 passed' in text
    document = json.loads(setup_emitter('json').emit([('ledger', ledger), ('report', report)]))
    assert document['ledgers'][0]['entries'][0]['verdict'] == 'match'
    assert document['reports'][0]['passed'] is True
    with pytest.raises(ValueError):
        setup_emitter('yaml')
    with pytest.raises(ValueError):
        ledger.add('demo', '', '', 'unknown')


def test_phase_space_latex(tmp_path):
    out = tmp_path / 'table.tex'
    code = main(['phase-space', '-c', 'rotation-gamma', '-k', '1', '-l', '2', '-g', '3',
                 '-n', '3', '-f', 'latex', '-o', str(out)])
    assert code == 0
    assert r'[x_1, x_3] = (i/\xi) x_2' in out.read_text()


def test_phase_space_json_boost(tmp_path):
    out = tmp_path / 'table.json'
    assert main(['phase-space', '-c', 'boost', '-n', '4', '-f', 'json', '-o', str(out)]) == 0
    document = json.loads(out.read_text())
    relations = {tuple(r['lhs']): r for r in document['table']['relations']}
    assert relations[('x_0', 'p_0')]['closed_form'] == '-i*cosh(s*p_2)'


def test_deterministic_output(tmp_path):
    first, second = tmp_path / 'a.json', tmp_path / 'b.json'
    for out in (first, second):
        main(['coproducts', '-c', 'rotation-zero', '-n', '2', '-f', 'json', '-o', str(out)])
    assert first.read_bytes() == second.read_bytes()


def test_invalid_config_exit_code(capsys):
    assert main(['phase-space', '-c', 'rotation-gamma', '-k', '1', '-l', '1']) == 2
    assert 'error:' in capsys.readouterr().err


def test_unreadable_config_exit_code(tmp_path, capsys):
    assert main(['phase-space', '--config', str(tmp_path / 'missing.json'), '-n', '1']) == 2
    assert 'error: Cannot read config' in capsys.readouterr().err
    broken = tmp_path / 'broken.json'
    broken.write_text('{"order": ')
    assert main(['phase-space', '--config', str(broken), '-n', '1']) == 2
    listed = tmp_path / 'listed.json'
    listed.write_text('[1, 2]')
    assert main(['phase-space', '--config', str(listed), '-n', '1']) == 2
    assert 'must hold a JSON object' in capsys.readouterr().err


def test_verify_gamma_without_carrier(tmp_path):
    out = tmp_path / 'verify.txt'
    assert main(['verify', '--tables', '-g', '3', '-n', '0', '-o', str(out)]) == 0
    text = out.read_text()
    assert 'rotation-zero' in text and 'boost' in text


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as error:
        main(['phase-space', '-f', 'yaml'])
    assert error.value.code == 2


def test_verify_order_zero(tmp_path):
    out = tmp_path / 'verify.json'
    code = main(['verify', '-n', '0', '--states', '2', '--grid-points', '64', '-f', 'json', '-o', str(out)])
    assert code == 0
    document = json.loads(out.read_text())
    assert all(report['passed'] for report in document['reports'])


def test_verify_jacobi_boost(tmp_path):
    out = tmp_path / 'verify.txt'
    assert main(['verify', '--jacobi', '-c', 'boost', '-n', '3', '-o', str(out)]) == 0
    assert '# jacobi relativistic: 56/56 passed' in out.read_text()


@pytest.mark.slow
def test_uncertainty_galilean_numeric(tmp_path):
    out = tmp_path / 'bounds.json'
    code = main(['uncertainty', '-c', 'boost', '--galilean', '--numeric', '--states', '3',
                 '--grid-points', '256', '-n', '4', '-f', 'json', '-o', str(out)])
    assert code == 0
    document = json.loads(out.read_text())
    assert len(document['bounds']) == 7
    assert document['numeric']['passed']
