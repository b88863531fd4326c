"""Pruebas del parser de documentos de definicion y del serializador"""
import pytest

from src.core.errors import ParseError, StructuralError
from src.approx.models import ApproxRelation, ScottMap
from src.closure.models import ClosureSpace
from src.formats.json_parser import DefinitionParser, load_definition
from src.formats.serializer import dumps, save_definition, to_document
from src.order.lordered import LOrderedSet
from src.quantale.models import FiniteQuantale

from tests.conftest import FIXTURES_DIR

TIPOS = {
    "q3l.json": FiniteQuantale,
    "q3l_corrupto.json": FiniteQuantale,
    "booleano.json": FiniteQuantale,
    "cadena2.json": LOrderedSet,
    "anticadena.json": LOrderedSet,
    "difuso3.json": LOrderedSet,
    "espacio_cadena.json": ClosureSpace,
    "espacio_gc2_corrupto.json": ClosureSpace,
    "relacion_ap1_corrupta.json": ApproxRelation,
    "relacion_identidad.json": ApproxRelation,
    "mapa_scott.json": ScottMap,
}


@pytest.mark.parametrize("archivo,tipo", sorted(TIPOS.items()))
def test_fixtures_parsean(archivo, tipo):
    assert isinstance(load_definition(FIXTURES_DIR / archivo), tipo)


def test_json_invalido_acumula_error():
    parser = DefinitionParser()
    assert parser.parse_string("{") is None
    assert parser.errores and parser.errores[0].startswith("JSON invalido")


def test_kind_desconocido():
    parser = DefinitionParser()
    assert parser.parse_string('{"kind": "grupo"}') is None
    assert "kind" in parser.errores[0]


def test_documento_mal_formado_no_lanza():
    parser = DefinitionParser()
    assert parser.parse_string('{"kind": "lordered", "quantale": "boolean"}') is None
    assert parser.errores


def test_referencia_por_nombre_sin_workspace():
    parser = DefinitionParser()
    doc = '{"kind": "relation", "source": "X", "target": "X", "triples": []}'
    assert parser.parse_string(doc) is None
    assert "sin workspace" in parser.errores[0]


def test_quantale_desconocido_sugiere():
    parser = DefinitionParser()
    doc = '{"kind": "lordered", "quantale": "lukasiewicz3", "points": ["a"]}'
    assert parser.parse_string(doc) is None
    assert "lukasiewicz-3" in parser.errores[0]


def test_archivo_inexistente(tmp_path):
    with pytest.raises(ParseError, match="no encontrado"):
        load_definition(tmp_path / "nada.json")


def test_vector_de_largo_incorrecto():
    parser = DefinitionParser()
    doc = ('{"kind": "closure", "quantale": "boolean", "points": ["a", "b"], "operator": "point",'
           ' "closures": {"a": ["1"], "b": ["1", "1"]}}')
    assert parser.parse_string(doc) is None
    assert "Vector de 1 grados" in parser.errores[0]


def test_cierres_faltantes():
    parser = DefinitionParser()
    doc = ('{"kind": "closure", "quantale": "boolean", "points": ["a", "b"],'
           ' "closures": {"a": {"a": "1"}}}')
    assert parser.parse_string(doc) is None
    assert "Faltan cierres" in parser.errores[0]


def test_diagonal_omitida_vale_unidad():
    P = load_definition(FIXTURES_DIR / "difuso3.json")
    Q = P.quantale
    assert all(P.e[i][i] == Q.unit for i in range(P.size))
    assert Q.label(P.degree("b", "a")) == "1/2"


class TestSerializador:

    def test_ida_y_vuelta_l_orden(self):
        P = load_definition(FIXTURES_DIR / "difuso3.json")
        assert DefinitionParser().parse_string(dumps(P)) == P

    def test_ida_y_vuelta_espacio(self, espacio_cadena):
        doc = to_document(espacio_cadena)
        assert doc["operator"] == "point"
        assert doc["closures"]["b"] == {"a": "1", "b": "1"}
        assert DefinitionParser().parse_documento(doc) == espacio_cadena

    def test_mapa_de_scott_embebe_espacios(self, tmp_path):
        psi = load_definition(FIXTURES_DIR / "mapa_scott.json")
        ruta = save_definition(psi, tmp_path / "psi.json")
        doc = to_document(psi)
        assert doc["source"]["kind"] == "closure"
        assert load_definition(ruta) == psi

    def test_tipo_no_serializable(self):
        with pytest.raises(StructuralError, match="No se puede serializar"):
            to_document(42)
