import pytest

from crystaldict.config import DEFAULT_SETTINGS_PATH, MAX_N_ENV, AppConfig, load_config, parse_contents_range


def test_default_settings_file_loads():
    config = load_config(DEFAULT_SETTINGS_PATH)
    assert config.get("app", "name") == "crystaldict"
    assert config.partitions_max_n == 30
    assert config.test_weights[0] == [0]


def test_load_config_from_yaml(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("bounds:\n  graph_max_n: 3\nlogging:\n  level: debug\n", encoding="utf-8")
    config = load_config(path)
    assert config.graph_max_n == 3
    assert config.character_max_n == 12
    assert config.log_level == "DEBUG"


def test_missing_file_gives_defaults(tmp_path):
    config = load_config(tmp_path / "absent.yaml")
    assert config.settings == {}
    assert config.multipartitions_max_n == 12
    assert config.selfcheck_level("quick")["max_n"] == 6


def test_selfcheck_level_merges_overrides():
    config = AppConfig({"selfcheck": {"full": {"max_n": 7}}})
    level = config.selfcheck_level("full")
    assert level["max_n"] == 7
    assert level["contents"] == [-3, 3]


def test_env_override_only_raises(monkeypatch):
    config = AppConfig({"bounds": {"graph_max_n": 8, "character_max_n": 12}})
    monkeypatch.setenv(MAX_N_ENV, "10")
    assert config.graph_max_n == 10
    assert config.character_max_n == 12
    assert config.partitions_max_n == 30
    monkeypatch.setenv(MAX_N_ENV, "not-a-number")
    assert config.graph_max_n == 8


def test_parse_contents_range():
    assert parse_contents_range("-3..3") == (-3, 3)
    assert parse_contents_range("0..0") == (0, 0)
    with pytest.raises(ValueError):
        parse_contents_range("3..-3")
    with pytest.raises(ValueError):
        parse_contents_range("0-3")
