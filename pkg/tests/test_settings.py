from core.settings import get_settings
from providers.factory import get_providers
from providers.impl.jobs_local_inline import LocalInlineJobRunner
from providers.impl.jobs_process_pool import ProcessPoolJobRunner
from providers.impl.storage_local_files import LocalFilesStorageProvider


def test_storage_mode_wins_over_census_dir(monkeypatch, tmp_path):
    monkeypatch.setenv("CURVES_STORAGE_MODE", "none")
    monkeypatch.setenv("CURVES_CENSUS_DIR", str(tmp_path))

    get_settings.cache_clear()
    s = get_settings()
    assert s.storage.provider == "none"


def test_census_dir_implies_local_storage(monkeypatch, tmp_path):
    monkeypatch.delenv("CURVES_STORAGE_MODE", raising=False)
    monkeypatch.setenv("CURVES_CENSUS_DIR", str(tmp_path))

    get_settings.cache_clear()
    s = get_settings()
    assert s.storage.provider == "local"
    assert s.storage.local_dir == str(tmp_path)


def test_storage_defaults_to_none():
    s = get_settings()
    assert s.storage.provider == "none"
    assert get_providers().storage is None


def test_unknown_storage_mode_falls_back_to_none(monkeypatch):
    monkeypatch.setenv("CURVES_STORAGE_MODE", "s3")

    get_settings.cache_clear()
    assert get_settings().storage.provider == "none"


def test_numeric_settings_tolerate_garbage(monkeypatch):
    monkeypatch.setenv("CURVES_MAX_K", "lots")
    monkeypatch.setenv("CURVES_THREADS", "0")
    monkeypatch.setenv("CURVES_ORBIT_ENUM_LIMIT", " ")

    get_settings.cache_clear()
    s = get_settings()
    assert s.census.max_k == 8
    assert s.jobs.threads == 1
    assert s.counting.orbit_enumeration_limit == 20_000


def test_log_level_is_normalized(monkeypatch):
    monkeypatch.setenv("CURVES_LOG_LEVEL", "debug")
    get_settings.cache_clear()
    assert get_settings().logging.level == "DEBUG"

    monkeypatch.setenv("CURVES_LOG_LEVEL", "chatty")
    get_settings.cache_clear()
    assert get_settings().logging.level == "WARNING"


def test_providers_follow_settings(monkeypatch, tmp_path):
    monkeypatch.setenv("CURVES_CENSUS_DIR", str(tmp_path))
    monkeypatch.setenv("CURVES_THREADS", "3")

    get_settings.cache_clear()
    get_providers.cache_clear()
    p = get_providers()
    assert isinstance(p.storage, LocalFilesStorageProvider)
    assert isinstance(p.jobs, ProcessPoolJobRunner)
    assert p.jobs.workers == 3


def test_single_thread_runs_inline():
    assert isinstance(get_providers().jobs, LocalInlineJobRunner)
