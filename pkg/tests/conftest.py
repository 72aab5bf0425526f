import os

import pytest
from hypothesis import settings

settings.register_profile("repo", deadline=None, max_examples=60)
settings.load_profile("repo")


@pytest.fixture
def tmp_cache(tmp_path):
    from cubic_hecke import cache

    cache.set_cache_dir(tmp_path)
    yield tmp_path
    cache.set_cache_dir(None)


def pytest_report_header(config):
    return f"cache dir: {os.environ.get('CACHE_DIR') or '~/.cache/cubic_hecke'}"
