import io
import json
import logging

import pytest

from PyPcCycles.main import *
from PyPcCycles.mylib.graph.pc_cycle import InvalidCycleError, PcCycle
from PyPcCycles.pc_cycle_report import WALL_TIME_KEY, input_digest
from PyPcCycles.pc_cycle_resources import fixtures_path


@pytest.fixture
def app(tmp_path):
    return PcCycleApp(config_directory=tmp_path / 'config')


@pytest.fixture
def run_json(app, capsys):
    """ Run the app with --json and return (exit code, parsed report). """
    def run(*argv):
        exit_code = app.run(['--json', *argv])
        out = capsys.readouterr().out
        return exit_code, json.loads(out) if out else None
    return run


@pytest.mark.parametrize("argv, exit_code", [
    (['exists', '@fig1'], EXIT_YES),
    (['exists', '@fig2'], EXIT_NO),
    (['--seed', '1', 'odd', '@fig1'], EXIT_NO),
    (['--seed', '1', 'odd', '@rainbow-triangle'], EXIT_YES),
    (['--seed', '1', 'odd', '@fig2'], EXIT_NO),
    (['--seed', '1', 'find-odd', '@k4-proper'], EXIT_YES),
    (['--seed', '1', 'find-odd', '@fig1'], EXIT_NO),
    (['closed-walk', '@fig2'], EXIT_YES),
    (['closed-walk', '@mono-triangle'], EXIT_NO),
    (['odd-dicycle', '@directed-triangle'], EXIT_YES),
    (['odd-dicycle', '@directed-c4'], EXIT_NO),
    (['odd-dicycle', '@acyclic-triangle'], EXIT_NO),
])
def test_exit_codes(app, capsys, argv, exit_code):
    assert app.run(argv) == exit_code
    assert capsys.readouterr().out.startswith(argv[-2])


@pytest.mark.parametrize("argv, exit_code", [
    (['odd', '@fig1', '--seed', '7'], EXIT_NO),
    (['find-odd', '@k4-proper', '--seed', '3'], EXIT_YES),
    (['--small-prime', 'odd', '@rainbow-triangle', '--seed', '1'], EXIT_YES),
    (['exists', '@fig1', '-v'], EXIT_YES),
])
def test_flags_after_the_command(app, argv, exit_code):
    assert app.run(argv) == exit_code


def test_json_flag_after_the_command(app, capsys):
    assert app.run(['find-odd', '@k4-proper', '--json', '--seed', '5']) == EXIT_YES
    report = json.loads(capsys.readouterr().out)
    assert report['answer'] == 'yes'
    assert report['params']['seed'] == 5


def test_flags_on_both_sides_of_the_command(run_json):
    _, report = run_json('--seed', '1', 'odd', '@rainbow-triangle', '--trials', '3')
    assert report['params']['seed'] == 1
    assert report['params']['trials'] == 3

    _, report = run_json('--seed', '1', 'odd', '@rainbow-triangle', '--seed', '2')
    assert report['params']['seed'] == 2


def test_program_name(app):
    assert app.build_parser().prog == 'pc-cycle'


def test_find_odd_report(run_json):
    exit_code, report = run_json('--seed', '3', 'find-odd', '@rainbow-triangle')
    assert exit_code == EXIT_YES
    assert report['command'] == 'find-odd'
    assert report['answer'] == 'yes'
    assert report['error_bound'] == 0.0
    witness = report['evidence'][0]
    assert witness['kind'] == 'cycle'
    assert witness['length'] == 3
    assert sorted(witness['colors']) == [1, 2, 3]


def test_report_keys_and_digest(run_json):
    exit_code, report = run_json('--seed', '3', 'odd', '@fig1')
    assert exit_code == EXIT_NO
    assert {'command', 'input_digest', 'answer', 'evidence', 'params', 'error_bound', WALL_TIME_KEY, 'branch'} <= set(report)
    assert report['params'] == {'prime': (1 << 61) - 1, 'trials': 10, 'seed': 3}
    assert report['input_digest'] == input_digest((fixtures_path() / 'fig1.ecg').read_bytes())
    assert report['error_bound'] > 0.0


def test_json_report_is_deterministic(run_json):
    _, first = run_json('--seed', '5', 'find-odd', '@k4-proper')
    _, second = run_json('--seed', '5', 'find-odd', '@k4-proper')
    first.pop(WALL_TIME_KEY)
    second.pop(WALL_TIME_KEY)
    assert first == second


def test_text_report(app, capsys):
    assert app.run(['--seed', '2', 'odd', '@rainbow-triangle']) == EXIT_YES
    out = capsys.readouterr().out
    assert out.startswith('odd: yes\n')
    assert 'seed 2' in out


@pytest.mark.parametrize("argv", [
    ['exists', '@mono-triangle'],
    ['closed-walk', '@fig2'],
    ['odd-dicycle', '@directed-triangle'],
    ['oracle', '@rainbow-triangle'],
])
def test_deterministic_text_report_has_no_randomness_parameters(app, capsys, argv):
    app.run(argv)
    out = capsys.readouterr().out
    assert 'seed' not in out
    assert 'trials' not in out


@pytest.mark.parametrize("e0", ['v1 v2', 'v1,v2'])
def test_matching_parity_both(run_json, e0):
    exit_code, report = run_json('--seed', '1', 'matching-parity', '@c4', '--e0', e0)
    assert exit_code == EXIT_YES
    assert report['answer'] == 'both_parities'


@pytest.mark.parametrize("want, exit_code", [(None, EXIT_YES), ('even', EXIT_YES), ('odd', EXIT_NO)])
def test_matching_parity_want(run_json, want, exit_code):
    argv = ['--seed', '1', 'matching-parity', '@c4', '--e0', 'v1 v2 v3 v4']
    if want:
        argv += ['--want', want]
    code, report = run_json(*argv)
    assert code == exit_code
    assert report['answer'] == 'all_even'


def test_matching_parity_uses_annotated_edges(app, capsys, tmp_path):
    path = tmp_path / 'annotated.g'
    path.write_text("a b e2\nb c\nc d e2\nd a\n")
    assert app.run(['--seed', '1', '--json', 'matching-parity', str(path)]) == EXIT_YES
    assert json.loads(capsys.readouterr().out)['answer'] == 'all_even'


def test_gadget_dump(app, capsys):
    assert app.run(['gadget-dump', '@rainbow-triangle']) == EXIT_NO
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 24
    assert sum(line.endswith(' e2') for line in lines) == 3


def test_gadget_dump_json(run_json):
    exit_code, report = run_json('gadget-dump', '@fig1')
    assert exit_code == EXIT_NO
    assert report['answer'] == 'dumped'
    assert (report['gadget_vertices'], report['gadget_e1_edges'], report['gadget_e2_edges']) == (36, 42, 8)


def test_oracle_command(run_json):
    exit_code, report = run_json('oracle', '@k4-proper')
    assert exit_code == EXIT_YES
    assert report['pc_cycle_subgraph_sizes'] == [0, 3, 4]
    assert len(report['evidence']) == 7


def test_oracle_cross_check(run_json):
    _, report = run_json('--seed', '1', 'odd', '@fig1', '--oracle')
    assert report['oracle_answer'] == report['answer'] == 'no'


def test_small_prime(run_json):
    _, report = run_json('--seed', '1', '--small-prime', 'odd', '@rainbow-triangle')
    assert report['params']['prime'] == 73


def test_stdin_input(app, capsys, monkeypatch):
    monkeypatch.setattr('sys.stdin', io.TextIOWrapper(io.BytesIO(b"a b 1\nb c 2\nc a 3\n")))
    assert app.run(['--seed', '1', 'odd', '-']) == EXIT_YES


@pytest.mark.parametrize("argv", [
    ['exists'],
    ['frobnicate', '@fig1'],
    ['--prime', '7', '--small-prime', 'odd', '@fig1'],
    ['odd', '@fig1', '--prime', '7', '--small-prime'],
    ['--prime', '7', 'odd', '@fig1', '--small-prime'],
    ['odd', '@fig1', '--seed', 'x'],
])
def test_usage_errors(app, argv):
    assert app.run(argv) == EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ['--trials', '0', 'odd', '@fig1'],
    ['--prime', '4', 'odd', '@fig1'],
    ['--seed', '-3', 'odd', '@fig1'],
    ['--prime', '101', 'odd', '@fig1'],
    ['exists', '@no-such-fixture'],
    ['exists', 'no/such/file.ecg'],
    ['matching-parity', '@c4', '--e0', 'v1 v3'],
])
def test_input_and_parameter_errors(app, capsys, argv):
    assert app.run(argv) == EXIT_USAGE
    assert 'error:' in capsys.readouterr().err


def test_help_exits_cleanly(app):
    assert app.run(['--help']) == EXIT_NO


def test_parse_error_names_the_line(app, capsys, tmp_path):
    path = tmp_path / 'bad.ecg'
    path.write_text("a b 1\nb c x\n")
    assert app.run(['exists', str(path)]) == EXIT_USAGE
    assert 'line 2' in capsys.readouterr().err


def test_randomness_failure_exit_code(app, mocker):
    mocker.patch.object(PcCycle, 'from_edge_set', side_effect=InvalidCycleError("unlucky"))
    assert app.run(['--seed', '1', 'find-odd', '@rainbow-triangle']) == EXIT_RANDOMNESS_FAILURE


def test_explicit_config_file(run_json, tmp_path):
    path = tmp_path / 'custom.json'
    path.write_text(json.dumps({'sz': {'trials': 3, 'seed': 11}}))
    _, report = run_json('--config', str(path), 'odd', '@rainbow-triangle')
    assert report['params']['trials'] == 3
    assert report['params']['seed'] == 11


def test_missing_explicit_config_file(app, tmp_path):
    assert app.run(['--config', str(tmp_path / 'absent.json'), 'exists', '@fig1']) == EXIT_USAGE


def test_user_config_file_and_flag_override(app, capsys, tmp_path):
    config_directory = tmp_path / 'config'
    config_directory.mkdir()
    (config_directory / CONFIG_FILE_NAME).write_text(json.dumps({'sz': {'seed': 99, 'trials': 4}}))

    app.run(['--json', 'odd', '@fig1'])
    assert json.loads(capsys.readouterr().out)['params'] == {'prime': (1 << 61) - 1, 'trials': 4, 'seed': 99}

    app.run(['--json', '--seed', '1', 'odd', '@fig1'])
    assert json.loads(capsys.readouterr().out)['params']['seed'] == 1


def test_broken_user_config_falls_back_to_defaults(app, capsys, tmp_path):
    config_directory = tmp_path / 'config'
    config_directory.mkdir()
    (config_directory / CONFIG_FILE_NAME).write_text("{ not json")

    assert app.run(['--json', '--seed', '4', 'odd', '@fig1']) == EXIT_NO
    assert json.loads(capsys.readouterr().out)['params']['trials'] == 10


def test_verbose_flag_sets_log_level(app):
    app.run(['-vv', 'exists', '@fig1'])
    assert logging.getLogger().level == logging.DEBUG
    app.run(['exists', '@fig1'])
    assert logging.getLogger().level == logging.WARNING
