"""Pruebas del registro de objetos con nombre"""
import pytest

from config.settings import settings
from src.core.errors import AxiomError, StructuralError, UnknownObjectError
from src.formats.json_parser import DefinitionParser, load_definition
from src.workspace.registry import Workspace, kind_of, validate_object

from tests.conftest import FIXTURES_DIR


@pytest.fixture
def ws(aislado):
    return Workspace()


def test_directorio_por_defecto(ws):
    assert ws.directorio == settings.workspace_dir


def test_registrar_y_recuperar(ws, cadena2):
    ruta = ws.register("cadena", cadena2)
    assert ruta == settings.workspace_dir / "lordered" / "cadena.json"
    assert ws.names() == [("lordered", "cadena")]
    assert ws.get("cadena") == cadena2
    # otra instancia relee desde disco
    assert Workspace().get("cadena", "lordered") == cadena2


def test_nombre_duplicado(ws, cadena2, anticadena):
    ws.register("P", cadena2)
    with pytest.raises(StructuralError, match="Ya existe"):
        ws.register("P", anticadena)
    ws.register("P", anticadena, reemplazar=True)
    assert Workspace().get("P") == anticadena


def test_nombre_invalido(ws, cadena2):
    with pytest.raises(StructuralError, match="Nombre invalido"):
        ws.register("con espacio", cadena2)


def test_desconocido_con_sugerencias(ws, cadena2):
    ws.register("cadena", cadena2)
    with pytest.raises(UnknownObjectError) as info:
        ws.get("caden")
    assert info.value.sugerencias == ["cadena"]


def test_mismo_nombre_en_dos_tipos(ws, cadena2, espacio_cadena):
    ws.register("x", cadena2)
    ws.register("x", espacio_cadena)
    with pytest.raises(StructuralError, match="ambiguo"):
        ws.get("x")
    assert ws.get("x", "closure") == espacio_cadena


def test_no_registra_objetos_invalidos(ws):
    S = load_definition(FIXTURES_DIR / "espacio_gc2_corrupto.json")
    with pytest.raises(AxiomError) as info:
        ws.register("malo", S)
    assert not info.value.resultado.passed
    assert ws.names() == []


def test_referencia_por_nombre_registrado(ws):
    ws.register("q3l", load_definition(FIXTURES_DIR / "q3l.json"))
    parser = DefinitionParser(resolver=ws.resolver)
    P = parser.parse_string(
        '{"kind": "lordered", "name": "P", "quantale": "q3l", "points": ["a", "b"], "order": [["a", "b"]]}')
    assert P is not None, parser.errores
    assert P.quantale == ws.get("q3l")


def test_tipos_y_validadores(q2, cadena2, espacio_cadena):
    assert kind_of(q2) == "quantale"
    assert kind_of(espacio_cadena) == "closure"
    assert validate_object(cadena2).passed
    with pytest.raises(StructuralError):
        kind_of("texto")
