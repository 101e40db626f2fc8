"""
Test fixtures and configuration
"""
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from bcinverse_engine.api.app import create_app
from bcinverse_engine.config.settings import Settings
from bcinverse_engine.engine.engine import engine_for
from bcinverse_engine.rings.base import Involution
from bcinverse_engine.rings.matrix_ring import FiniteMatrixRing
from bcinverse_engine.rings.parsing import parse_ring
from bcinverse_engine.rings.table import tabulate

DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "rings"


@pytest.fixture
def settings():
    """Defaults, independent of BCI_* variables and .env files"""
    return Settings(_env_file=None)


@pytest.fixture
def z6():
    return parse_ring("zn:6")


@pytest.fixture
def m2q():
    return parse_ring("mat:q:2")


@pytest.fixture
def m2z2():
    """M_2(Z_2) over the prime field, served by the matrix backend"""
    return parse_ring("mat:zp:2:2")


@pytest.fixture
def gf4():
    return parse_ring(f"table:{DATA_DIR / 'gf4.json'}")


@pytest.fixture
def upper_triangular():
    """Upper-triangular 2x2 matrices over Z_2: a non-commutative ring of order 8"""
    ring = FiniteMatrixRing(2, 2, Involution.NONE)
    upper = [x for x in ring.elements() if x.payload[1][0] == 0]
    return tabulate(ring, upper)


@pytest.fixture
def z6_engine(z6, settings):
    return engine_for(z6, settings)


@pytest.fixture
def m2q_engine(m2q, settings):
    return engine_for(m2q, settings)


@pytest.fixture
def client(settings):
    """Test client fixture"""
    return TestClient(create_app(settings))
