import json

import pytest

from gclink.cli import main


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv('GCLINK_WORKERS', raising=False)
    monkeypatch.delenv('GCLINK_SEED', raising=False)


def test_dpq_json_feeds_classify(capsys, tmp_path):
    assert main(['dpq', '--p', '2', '--q', '5']) == 0
    document = json.loads(capsys.readouterr().out)
    assert document['params'] == {'p': 2, 'q': 5, 'original': '2/5'}
    assert len(document['components']) == 5
    assert len(document['diagram']['crossings']) == 20
    path = tmp_path / 'd25.json'
    path.write_text(json.dumps(document))
    assert main(['classify', '--input', str(path)]) == 0
    assert json.loads(capsys.readouterr().out)['class'] == 'HYP5'


def test_dpq_svg_and_gauss(capsys):
    assert main(['dpq', '--p', '2', '--q', '5', '--out', 'svg']) == 0
    svg = capsys.readouterr().out
    assert svg.count('<polyline') == 20
    assert main(['dpq', '--p', '1', '--q', '3', '--out', 'gauss']) == 0
    assert len(capsys.readouterr().out.splitlines()) == 3


def test_domain_error_is_reported_as_json(capsys):
    assert main(['dpq', '--p', '2', '--q', '4']) == 1
    error = json.loads(capsys.readouterr().err)
    assert error['error'] == 'InvalidParams'
    assert error['code'] == 6010


def test_usage_error(capsys):
    assert main(['dpq', '--p', '2']) == 2
    assert main(['dpq', '--p', '2', '--q', '5', '--out', 'png']) == 2
    assert main([]) == 2


def test_classify_rejects_bad_json(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{not json')
    assert main(['classify', '--input', str(path)]) == 1
    assert json.loads(capsys.readouterr().err)['error'] == 'InvalidDocument'


def test_census(capsys):
    assert main(['census', '--n', '2', '--samples', '10', '--seed', '4']) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['seed'] == 4
    assert result['counts'] == {'+2': 10}
    assert main(['census', '--n', '7', '--samples', '10']) == 1


def test_census_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv('GCLINK_SEED', '9')
    assert main(['census', '--n', '3', '--samples', '5']) == 0
    assert json.loads(capsys.readouterr().out)['seed'] == 9
    monkeypatch.setenv('GCLINK_SEED', 'nine')
    assert main(['census', '--n', '3', '--samples', '5']) == 2


def test_project(capsys, tmp_path, hopf_link):
    path = tmp_path / 'hopf.json'
    path.write_text(json.dumps(hopf_link(3).to_document()))
    assert main(['project', '--input', str(path), '--fibers', '0,1,2']) == 0
    config = json.loads(capsys.readouterr().out)['configuration']
    assert config['bundle']['handedness'] == 'right'
    assert sorted(config['points']) == ['0', '1', '2']
    assert config['circles'] == {}
    assert main(['project', '--input', str(path), '--axis', '1,2']) == 2


def test_surface(capsys):
    assert main(['surface', '--p', '2', '--q', '9']) == 0
    document = json.loads(capsys.readouterr().out)
    assert document['surface']['genus'] == 3
    assert document['coannular']['count'] == 4


@pytest.mark.parametrize(
    'argv, text',
    [
        (['twobridge', 'equiv', '5/23', '18/23'], 'true'),
        (['twobridge', 'fibered', '2/7'], 'false'),
        (['twobridge', 'cf', '18/23'], '2 -2 2 -2 -2 2'),
        (['twobridge', 'cf', '1/3'], 'none'),
        (['twobridge', 'reducible', '1/3'], '6/1 -6/1'),
        (['twobridge', 'certify', '2/9', '8/1'], 'CertifiedModuloLambda'),
        (['twobridge', 'certify', '2/9', '4/1'], 'NotCertified (distance)'),
    ],
)
def test_twobridge_text(capsys, argv, text):
    assert main(argv) == 0
    assert capsys.readouterr().out == text + '\n'


def test_twobridge_json(capsys):
    assert main(['twobridge', 'certify', '2/9', '8/1', '--json']) == 0
    document = json.loads(capsys.readouterr().out)
    assert document['status']['kind'] == 'CertifiedModuloLambda'
    assert document['evidence']['deltas'] == {'1/1': 3, '-1/1': 5}


def test_twobridge_rejects_even_denominator(capsys):
    assert main(['twobridge', 'equiv', '1/4', '1/3']) == 2
