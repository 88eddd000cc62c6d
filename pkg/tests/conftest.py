"""Pytest configuration and fixtures"""

import json
import shutil
import tempfile
from pathlib import Path

import pytest

from covercrimp.arith.field import Field


@pytest.fixture(scope="session", autouse=True)
def cleanup_logs():
    """Clean up logs directory after test session"""
    yield
    logs_dir = Path("logs")
    if logs_dir.exists():
        shutil.rmtree(logs_dir)


@pytest.fixture
def temp_dir():
    """Create temporary directory for tests"""
    temp_path = Path(tempfile.mkdtemp())
    yield temp_path
    shutil.rmtree(temp_path)


@pytest.fixture
def qq():
    return Field.rationals()


@pytest.fixture
def f3():
    return Field.finite(3)


@pytest.fixture
def f5():
    return Field.finite(5)


@pytest.fixture
def f7():
    return Field.finite(7)


@pytest.fixture
def job():
    """Factory for JobConfig with only the given options set"""
    from covercrimp.cli import JobConfig

    def make(subcommand: str, document, **options):
        return JobConfig(subcommand=subcommand, input=json.dumps(document), **options)

    return make
