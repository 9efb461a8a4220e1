from __future__ import annotations

from pathlib import Path

import pytest

from dashforge.model import parse_model

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def sample_text() -> str:
    return (DATA_DIR / "sample_dashboard.json").read_text(encoding="utf-8")


@pytest.fixture()
def sample_model(sample_text):
    return parse_model(sample_text)
