# coding=utf-8
from __future__ import division

import json

import pytest

from carnotPotential.scripts.cli import run, SCHEMA_VERSION


def _run(tmp_path, *argv):
    out = str(tmp_path / 'out.json')
    code = run(list(argv) + ['--out', out])
    with open(out) as f:
        return code, json.load(f)


def test_removability(tmp_path):
    code, payload = _run(tmp_path, 'removability', '--p', '2', '--q', '3',
                         '--M', '4')
    assert code == 0
    assert payload['result']['verdict'] == 'removable_points'
    header = payload['header']
    assert header['schema_version'] == SCHEMA_VERSION
    assert header['command'] == 'removability'
    assert header['parameters']['q'] == 3


def test_removability_from_group(tmp_path):
    code, payload = _run(tmp_path, 'removability', '--p', '2', '--q', '1.5',
                         '--group', 'H1')
    assert code == 0
    assert payload['result']['M'] == 4
    assert payload['result']['verdict'] == 'non_removable_points'


def test_csv(tmp_path, capsys):
    assert run(['removability', '--p', '2', '--q', '3', '--M', '4',
                '--format', 'csv']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == '# schema_version: 1'
    assert 'key,value' in lines
    assert 'verdict,removable_points' in lines


def test_invalid_input(capsys):
    assert run(['removability', '--p', '2', '--q', '0.5', '--M', '4']) == 1
    assert 'InvalidExponents' in capsys.readouterr().err


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as err:
        run(['nothing'])
    assert err.value.code == 1


def test_group_validate(tmp_path):
    code, payload = _run(tmp_path, 'group', 'validate', '--group', 'H1',
                         '--n', '50')
    assert code == 0
    assert payload['result']['M'] == 4
    assert payload['result']['layer_dims'] == [2, 1]


def test_solve_atom_diverges(tmp_path):
    measure = tmp_path / 'atom.txt'
    measure.write_text(u'atoms\n0.2 0 0 1\n')
    code, payload = _run(tmp_path, 'solve', '--measure', str(measure),
                         '--p', '2', '--q', '2', '--spacing', '0.25')
    assert code == 2
    assert payload['result']['error'] == 'diverged'
    assert payload['result']['reason'] == 'atom'


def test_capacity_degenerate(tmp_path):
    points = tmp_path / 'E.txt'
    points.write_text(u'0 0 0\n0.1 0 0\n')
    code, payload = _run(tmp_path, 'capacity', '--set', str(points),
                         '--alpha', '2', '--s', '2')
    assert code == 0
    assert payload['result']['degeneracy'] == 'identically_zero'
    assert payload['result']['value'] == 0


def test_wolff_plot_data(tmp_path):
    plot = str(tmp_path / 'plot.csv')
    code, payload = _run(tmp_path, 'wolff', '--radius', '1', '--spacing',
                         '0.25', '--R', '2', '--emit-plot-data', plot)
    assert code == 0
    assert payload['result']['min'] > 0
    assert len(payload['rows']) == payload['result']['points']
    with open(plot) as f:
        lines = f.read().splitlines()
    assert lines[0] == 'x,y'
    assert len(lines) == payload['result']['points'] + 1


def test_dyadic_build(tmp_path):
    code, payload = _run(tmp_path, 'dyadic-build', '--spacing', '0.25',
                         '--m', '-1')
    assert code == 0
    assert [r['level'] for r in payload['rows']] == [-1, 0]
    overlap = payload['result']['max_overlap']
    assert sorted(overlap) == ['-1', '0']
    assert min(overlap.values()) >= 1


def test_out_selects_format(capsys):
    assert run(['removability', '--p', '2', '--q', '3', '--out', 'csv']) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == '# schema_version: 1'
    assert 'verdict,removable_points' in lines
    assert run(['removability', '--p', '2', '--q', '3', '--out', 'json']) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload['result']['verdict'] == 'removable_points'
    assert payload['result']['M'] == 4


def test_dyadic_build_levels(tmp_path):
    code, payload = _run(tmp_path, 'dyadic-build', '--group', 'H1',
                         '--radius', '1', '--spacing', '0.25',
                         '--lambda', '8', '--levels=-1..0')
    assert code == 0
    assert [r['level'] for r in payload['rows']] == [-1, 0]
    params = payload['header']['parameters']
    assert params['lam'] == 8
    assert (params['m'], params['k_top']) == (-1, 0)
    assert run(['dyadic-build', '--levels', '1..0']) == 1


def test_wolff_at_points(tmp_path, capsys):
    measure = tmp_path / 'm.txt'
    measure.write_text(u'atoms\n1 0 0 1\n')
    at = tmp_path / 'x.txt'
    at.write_text(u'0 0 0\n0.5 0 0\n')
    assert run(['wolff', '--group', 'H1', '--measure', str(measure),
                '--alpha', '1', '--p', '2', '--R', '2', '--at', str(at),
                '--out', 'csv']) == 0
    lines = capsys.readouterr().out.splitlines()
    head = lines.index('x,norm,wolff')
    rows = [l.split(',') for l in lines[head + 1:] if not l.startswith('#')]
    assert len(rows) == 2
    assert rows[0][0] == '0 0 0'
    assert abs(float(rows[0][2]) - 0.375) < 1e-12
    assert float(rows[1][2]) > float(rows[0][2])


def test_equiv_csv(capsys):
    assert run(['equiv', '--experiment', 'a-chain', '--trials', '4',
                '--seed', '3', '--out', 'csv']) == 0
    lines = capsys.readouterr().out.splitlines()
    head = [l for l in lines if l.startswith('trial,')]
    assert len(head) == 1
    body = lines[lines.index(head[0]) + 1:]
    assert len([l for l in body if not l.startswith('#')]) == 4


def test_capacity_json(tmp_path, capsys):
    points = tmp_path / 'E.txt'
    points.write_text(u'0 0 0\n0.1 0 0\n')
    assert run(['capacity', '--group', 'H1', '--set', str(points),
                '--alpha', '2', '--s', '1.5', '--spacing', '0.25',
                '--max-iter', '50', '--out', 'json']) == 0
    res = json.loads(capsys.readouterr().out)['result']
    assert res['degeneracy'] == 'nondegenerate'
    assert res['value'] > 0
    assert res['iterations'] >= 1


def test_solve_json(tmp_path, capsys):
    from carnotPotential.group import builtin
    from carnotPotential.potentials import GridDensity, writeMeasure
    from carnotPotential.spatial import latticeCloud
    cloud = latticeCloud(builtin('H1'), radius=0.5, spacing=0.25)
    measure = str(tmp_path / 'w.txt')
    writeMeasure(GridDensity(cloud, 1e-3), measure,
                 str(tmp_path / 'w_cloud.txt'))
    assert run(['solve', '--group', 'H1', '--measure', measure, '--p', '2',
                '--q', '2', '--R', '1', '--A', '1', '--spacing', '0.2',
                '--out', 'json']) == 0
    res = json.loads(capsys.readouterr().out)['result']
    assert res['verdict'] == 'converged'
    assert res['kappa_ok'] is True
    assert res['sup_norms'] == sorted(res['sup_norms'])


def test_liouville(capsys):
    assert run(['liouville', '--group', 'H1', '--p', '2', '--q', '2',
                '--R-schedule', '2,4,8,16,32,64', '--n-eval', '100']) == 0
    res = json.loads(capsys.readouterr().out)['result']
    assert res['R'] == [2, 4, 8, 16, 32, 64]
    assert res['q_star'] == 2
    assert res['verdict'] == 'blows_up'
