import pytest

from gclink import __version__
from gclink.config import Settings
from gclink.constants import SCHEMA
from gclink.errors import GCLINK_ERROR_MAP, InvalidParams, from_code


def test_version():
    assert __version__ == '0.1.0'


def test_error_codes():
    assert len(GCLINK_ERROR_MAP) == 16
    assert from_code(6010) is InvalidParams
    assert from_code(7000) is None
    err = InvalidParams()
    assert err.to_json() == {
        'schema': SCHEMA,
        'error': 'InvalidParams',
        'code': 6010,
        'message': 'invalid D(p/q) parameters',
    }
    assert InvalidParams('q must be odd').message == 'q must be odd'


def test_settings_from_dotenv(monkeypatch, tmp_path):
    monkeypatch.delenv('GCLINK_WORKERS', raising=False)
    monkeypatch.delenv('GCLINK_SEED', raising=False)
    path = tmp_path / '.env'
    path.write_text('GCLINK_WORKERS=3\nGCLINK_SEED=17\n')
    assert Settings.from_env(path) == Settings(workers=3, seed=17)


def test_settings_reject_bad_values(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv('GCLINK_WORKERS', '0')
    with pytest.raises(ValueError):
        Settings.from_env()
    monkeypatch.setenv('GCLINK_WORKERS', 'many')
    with pytest.raises(ValueError):
        Settings.from_env()
