# tests/conftest.py
"""测试公共夹具."""

import json

import pytest
from loguru import logger

from models.options import OptionBundle
from services.container import ServiceContainer
from services.core.config import ConfigService


@pytest.fixture(autouse=True)
def _quiet_logger():
    """测试期间只保留 ERROR 以上的 stderr 输出."""
    import sys

    logger.remove()
    handler_id = logger.add(sys.stderr, level="ERROR")
    yield
    logger.remove(handler_id)


@pytest.fixture
def options() -> OptionBundle:
    return OptionBundle()


@pytest.fixture
def config_file(tmp_path):
    """写一个最小配置文件（单进程网格，日志只到控制台）."""
    data = {
        "_comment": "测试配置",
        "grid": {"jobs": 1, "max_points": 500},
        "output": {"root_dir": str(tmp_path / "output")},
        "logging": {"level": "INFO", "console": {"enabled": True, "level": "ERROR"}, "files": []},
    }
    path = tmp_path / "config.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


@pytest.fixture
def config_service(config_file) -> ConfigService:
    return ConfigService(str(config_file))


@pytest.fixture
def container(config_service):
    c = ServiceContainer(config_service, jobs=1)
    yield c
    c.cleanup()
