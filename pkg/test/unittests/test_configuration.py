import os

from betaforge.configuration import CONFIGURATION, DEFAULT_CONFIGURATION, \
    _merge_defaults, get_max_n
from betaforge.files import atomic_write, ensure_directory_exists


def test_merge_keeps_user_values():
    config = _merge_defaults({"representability": {"max_n": 12},
                              "log_level": "DEBUG"})
    assert config["representability"]["max_n"] == 12
    assert config["log_level"] == "DEBUG"
    assert config["treepairs"] == DEFAULT_CONFIGURATION["treepairs"]
    assert config["enumeration_cap"] == 10000


def test_merge_fills_nested_keys():
    config = _merge_defaults({"verify": {"workers": 2}})
    assert config["verify"] == {"workers": 2, "parallel": False}


def test_loaded_configuration_has_defaults():
    for key in DEFAULT_CONFIGURATION:
        assert key in CONFIGURATION


def test_max_n_from_environment(monkeypatch):
    monkeypatch.setenv("BETAFORGE_MAXN", "17")
    assert get_max_n() == 17


def test_max_n_ignores_bad_environment(monkeypatch):
    config = {"representability": {"max_n": 99}}
    monkeypatch.setenv("BETAFORGE_MAXN", "lots")
    assert get_max_n(config) == 99
    monkeypatch.setenv("BETAFORGE_MAXN", "0")
    assert get_max_n(config) == 99
    monkeypatch.delenv("BETAFORGE_MAXN")
    assert get_max_n(config) == 99


def test_ensure_directory_exists(tmp_path):
    path = ensure_directory_exists(str(tmp_path), "a/b")
    assert os.path.isdir(path)
    assert path == os.path.join(str(tmp_path), "a", "b")


def test_atomic_write(tmp_path):
    target = tmp_path / "out" / "cert.json"
    atomic_write(str(target), "first\n")
    atomic_write(str(target), "second\n")
    assert target.read_text() == "second\n"
    assert [p.name for p in target.parent.iterdir()] == ["cert.json"]
