from __future__ import annotations

import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphaut import catalog, enumerate_automorphisms, enumerate_isometric_cycles


@lru_cache(maxsize=None)
def graph(name: str):
    return catalog(name)


@lru_cache(maxsize=None)
def oracle(name: str):
    return enumerate_automorphisms(graph(name))


@lru_cache(maxsize=None)
def isocycles(name: str):
    return enumerate_isometric_cycles(graph(name))


@pytest.fixture
def get_graph():
    return graph


@pytest.fixture
def get_oracle():
    return oracle


@pytest.fixture
def get_isocycles():
    return isocycles
