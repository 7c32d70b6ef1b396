"""
Pytest configuration and fixtures for genext tests.
"""

import os
from collections.abc import Generator
from pathlib import Path

import pytest

from src.genext.models.results import RunConfig
from src.genext.utils import cache_utils, metrics_utils

# Cells whose sweeps take minutes are opt-in
RUN_SLOW = os.getenv("GENEXT_RUN_SLOW", "False").lower() == "true"


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    """Skip tests marked slow unless GENEXT_RUN_SLOW=true."""
    if RUN_SLOW:
        return
    skip_slow = pytest.mark.skip(reason="set GENEXT_RUN_SLOW=true to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


# ============================================================================
# Run configuration fixtures
# ============================================================================


@pytest.fixture
def run_config() -> RunConfig:
    """
    Deterministic single-worker configuration.

    Returns:
        RunConfig with the default prime and seed, one trial and one worker
    """
    return RunConfig(trials=1, workers=1, output_format="json")


@pytest.fixture
def expected_dir(run_config: RunConfig) -> Path:
    """Path of the bundled printed tables."""
    return run_config.expected_dir


# ============================================================================
# Environment Setup Fixtures
# ============================================================================


@pytest.fixture(autouse=True)
def setup_test_environment(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    """
    Start every test with an empty cache and no recorded metrics.

    Args:
        monkeypatch: Pytest monkeypatch fixture
    """
    monkeypatch.setattr(cache_utils, "CACHE_ENABLED", True)
    cache_utils.clear_cache()
    metrics_utils.reset_metrics()
    yield
    cache_utils.clear_cache()
    metrics_utils.reset_metrics()
