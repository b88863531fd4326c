"""
Fixtures compartidos: quantales del catalogo, ordenes pequenos y un
workspace aislado por prueba.
"""
from pathlib import Path

import pytest

from config.settings import settings
from src.closure.constructions import down_closure_space
from src.formats.json_parser import load_definition
from src.order.lordered import classical_order
from src.quantale.fixtures import fixture_quantale

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "data" / "fixtures"


@pytest.fixture
def q2():
    return fixture_quantale("boolean")


@pytest.fixture
def l3():
    return fixture_quantale("lukasiewicz-3")


@pytest.fixture
def cadena2(q2):
    """a <= b sobre Q2"""
    return classical_order("cadena2", ["a", "b"], [("a", "b")], q2)


@pytest.fixture
def anticadena(q2):
    return classical_order("anticadena", ["a", "b"], [], q2)


@pytest.fixture
def espacio_cadena():
    return load_definition(FIXTURES_DIR / "espacio_cadena.json")


@pytest.fixture
def espacio_abajo(cadena2):
    return down_closure_space(cadena2)


@pytest.fixture
def aislado(tmp_path, monkeypatch):
    """Workspace, reportes y logs en un directorio temporal"""
    for campo in ("workspace_dir", "output_dir", "logs_dir"):
        directorio = tmp_path / campo
        directorio.mkdir()
        monkeypatch.setattr(settings, campo, directorio)
    return tmp_path
