import pytest

from unitsep import config
from unitsep.config import Settings


@pytest.fixture
def settings() -> Settings:
    return Settings()


@pytest.fixture(autouse=True)
def data_dir(tmp_path, monkeypatch):
    """keeps stored settings out of the real user data directory"""
    monkeypatch.setattr(config, "get_data_dir", lambda: tmp_path)
    return tmp_path
