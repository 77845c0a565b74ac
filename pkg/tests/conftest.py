from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    """
    Directory holding the sample matrix, graph, frame and tree files.
    """
    return FIXTURES


def pytest_addoption(parser):
    parser.addoption(
        "--run-blueprint",
        action="store_true",
        default=False,
        help="Run the full-size randomized blueprint suite",
    )


def pytest_configure(config):
    # So pytest -q shows the marker nicely
    config.addinivalue_line(
        "markers",
        "blueprint: mark tests that run the full randomized property suite",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-blueprint"):
        return

    skip_blueprint = pytest.mark.skip(
        reason="use --run-blueprint to run the full property suite"
    )
    for item in items:
        if "blueprint" in item.keywords:
            item.add_marker(skip_blueprint)
