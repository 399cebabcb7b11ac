from app.src.core.config import EngineConfig, env_overrides, load_config
from app.utils.constants import DEFAULT_PATHS
from pydantic import ValidationError
import json
import pytest


def test_defaults():
    config = EngineConfig()
    assert config.oracle_limit == 16
    assert config.table_limit == 5
    assert config.scalar_mode == "exact"
    assert config.log_level == "WARNING"


def test_shipped_config_matches_defaults():
    assert load_config(DEFAULT_PATHS["config"], environ={}) == EngineConfig()


def test_env_overrides_win(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"table_limit": 3, "default_seed": 1}))
    config = load_config(path, environ={"CLIFFOCK_TABLE_LIMIT": "4", "CLIFFOCK_LOG_LEVEL": "debug"})
    assert config.table_limit == 4
    assert config.default_seed == 1
    assert config.log_level == "DEBUG"


def test_env_overrides_ignore_blank_and_unknown():
    assert env_overrides({"CLIFFOCK_SEED": "3", "CLIFFOCK_ORACLE_LIMIT": ""}) == {}


@pytest.mark.parametrize(
    "data",
    [
        {"oracle_limit": 0},
        {"scalar_mode": "decimal"},
        {"log_level": "LOUD"},
    ],
)
def test_invalid_values(tmp_path, data):
    path = tmp_path / "config.json"
    path.write_text(json.dumps(data))
    with pytest.raises(ValidationError):
        load_config(path, environ={})


def test_bad_files(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / "missing.json", environ={})
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    with pytest.raises(json.JSONDecodeError):
        load_config(broken, environ={})
    listed = tmp_path / "list.json"
    listed.write_text("[1, 2]")
    with pytest.raises(ValueError):
        load_config(listed, environ={})
