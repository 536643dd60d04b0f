from __future__ import annotations

import random

import pytest

from domain.services.rr_series.service import SeriesRegistry


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240615)


@pytest.fixture
def fresh_registry() -> SeriesRegistry:
    return SeriesRegistry()
