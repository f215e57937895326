import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from census.service import get_census  # noqa: E402
from core.settings import get_settings  # noqa: E402
from providers.factory import get_providers  # noqa: E402

_ENV = (
    "CURVES_MAX_K",
    "CURVES_WORD_BUDGET",
    "CURVES_SHARD_DEPTH",
    "CURVES_STORAGE_MODE",
    "CURVES_CENSUS_DIR",
    "CURVES_THREADS",
    "CURVES_ORBIT_ENUM_LIMIT",
    "CURVES_LOG_LEVEL",
)


def _clear_caches() -> None:
    get_settings.cache_clear()
    get_providers.cache_clear()
    get_census.cache_clear()


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    for name in _ENV:
        monkeypatch.delenv(name, raising=False)
    _clear_caches()
    yield
    _clear_caches()
