"""Pruebas de L-subconjuntos, L-ordenes, dirigidos, supremos y L-dcpos"""
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from config.settings import settings
from src.core.errors import CarrierMismatchError, ResourceCapError, UnknownPointError
from src.formats.json_parser import load_definition
from src.order import (
    Carrier, PointMap, classical_order, down_set, enumerate_lsubsets, find_l_order_iso, from_triples,
    ideals, is_directed, is_l_dcpo, is_lower_set, is_order_preserving, is_scott_continuous,
    lsubset, powerset_order, residuation_order, subdeg, supremum, infimum, up_set, validate_l_order,
    zero_subset, zadeh_forward,
)
from src.quantale import CATALOGO_BASE, fixture_quantale
from tests.conftest import FIXTURES_DIR


class TestLSubsets:

    def test_enumeracion_completa(self, l3):
        X = Carrier("X", ["x", "y"])
        todos = list(enumerate_lsubsets(X, l3))
        assert len(todos) == 9
        assert len(set(todos)) == 9

    def test_enumeracion_con_tope(self, l3):
        X = Carrier("X", ["x", "y", "z"])
        with pytest.raises(ResourceCapError) as error:
            list(enumerate_lsubsets(X, l3, tope=10))
        assert error.value.cantidad == 27

    def test_grado_de_inclusion(self, l3):
        X = Carrier("X", ["x", "y"])
        A = lsubset(X, l3, {"x": "1"})
        B = lsubset(X, l3, {"x": "1/2"})
        assert l3.label(subdeg(A, B)) == "1/2"
        assert l3.label(subdeg(B, A)) == "1"
        assert subdeg(zero_subset(X, l3), B) == l3.top

    def test_carriers_distintos(self, q2):
        A = zero_subset(Carrier("X", ["x"]), q2)
        B = zero_subset(Carrier("Y", ["x"]), q2)
        with pytest.raises(CarrierMismatchError):
            subdeg(A, B)

    def test_punto_desconocido(self, q2):
        with pytest.raises(UnknownPointError):
            lsubset(Carrier("X", ["x"]), q2, {"z": "1"})

    def test_render_ignora_ceros(self, l3):
        X = Carrier("X", ["x", "y"])
        assert lsubset(X, l3, {"y": "1/2"}).render() == "{y:1/2}"


class TestLOrden:

    def test_cadena_valida(self, cadena2):
        assert validate_l_order(cadena2).passed

    def test_orden_difuso_valido(self):
        P = load_definition(FIXTURES_DIR / "difuso3.json")
        assert P.quantale.name == "lukasiewicz-3"
        assert validate_l_order(P).passed
        assert P.quantale.label(P.degree("b", "a")) == "1/2"

    def test_transitividad_con_testigo(self, q2):
        P = from_triples("T", ["a", "b", "c"], [("a", "b", "1"), ("b", "c", "1")], q2)
        falla = validate_l_order(P).first_failure()
        assert falla.label == "transitivity"
        assert falla.witness == ("a", "b", "c")

    def test_antisimetria_con_testigo(self, q2):
        P = from_triples("T", ["a", "b"], [("a", "b", "1"), ("b", "a", "1")], q2)
        falla = validate_l_order(P).first_failure()
        assert falla.label == "antisymmetry"
        assert falla.witness == ("a", "b")

    def test_reflexividad_con_testigo(self, q2):
        P = from_triples("T", ["a", "b"], [("a", "a", "0")], q2)
        falla = validate_l_order(P).first_failure()
        assert falla.label == "reflexivity"
        assert falla.witness == ("a",)

    @pytest.mark.parametrize("nombre", CATALOGO_BASE)
    def test_orden_de_residuacion(self, nombre):
        assert validate_l_order(residuation_order(fixture_quantale(nombre))).passed

    def test_orden_de_partes(self, q2):
        P = powerset_order(Carrier("X", ["x", "y"]), q2)
        assert P.size == 4
        assert validate_l_order(P).passed

    def test_orden_de_partes_excede_tope(self, l3):
        with pytest.raises(ResourceCapError):
            powerset_order(Carrier("X", ["x", "y"]), l3, tope=8)


class TestConjuntosPrincipales:

    def test_abajo_y_arriba(self, cadena2):
        assert down_set(cadena2, "b").to_labels() == ["1", "1"]
        assert down_set(cadena2, "a").to_labels() == ["1", "0"]
        assert up_set(cadena2, "a").to_labels() == ["1", "1"]
        assert up_set(cadena2, "b").to_labels() == ["0", "1"]

    def test_abajo_es_inferior(self, cadena2):
        for x in cadena2.points:
            assert is_lower_set(cadena2, down_set(cadena2, x)).passed

    def test_no_inferior_con_testigo(self, cadena2, q2):
        S = lsubset(cadena2.carrier, q2, {"b": "1"})
        resultado = is_lower_set(cadena2, S)
        assert not resultado.passed
        assert resultado.witness == ("a", "b")


class TestDirigidosYSupremos:

    def test_vacio_no_es_dirigido(self, cadena2, q2):
        resultado = is_directed(cadena2, zero_subset(cadena2.carrier, q2))
        assert resultado.first_failure().label == "D1"

    def test_anticadena_no_dirigida(self, anticadena, q2):
        D = lsubset(anticadena.carrier, q2, {"a": "1", "b": "1"})
        resultado = is_directed(anticadena, D)
        assert resultado.first_failure().label == "D2"
        assert resultado.witness == ("a", "b")

    def test_supremo_en_cadena(self, cadena2, q2):
        D = lsubset(cadena2.carrier, q2, {"a": "1", "b": "1"})
        assert is_directed(cadena2, D).passed
        assert supremum(cadena2, D) == "b"
        assert infimum(cadena2, D) == "a"
        assert supremum(cadena2, zero_subset(cadena2.carrier, q2)) == "a"

    def test_supremo_ausente(self, anticadena, q2):
        D = lsubset(anticadena.carrier, q2, {"a": "1", "b": "1"})
        assert supremum(anticadena, D) is None

    def test_ideales_de_cadena(self, cadena2):
        assert ideals(cadena2) == ((1, 0), (1, 1))

    def test_l_dcpo(self, cadena2, anticadena):
        assert is_l_dcpo(cadena2).passed
        assert is_l_dcpo(anticadena).passed
        assert is_l_dcpo(cadena2, mode="directed").passed

    def test_l_dcpo_excede_tope(self, q2, monkeypatch):
        P = classical_order("grande", ["a", "b", "c", "d"], [("a", "b")], q2)
        monkeypatch.setattr(settings, "cap_enumeracion", 8)
        with pytest.raises(ResourceCapError):
            is_l_dcpo(P)


class TestMapeos:

    def test_identidad_scott_continua(self, cadena2):
        assert is_scott_continuous(PointMap.identity(cadena2.carrier), cadena2, cadena2).passed

    def test_inversion_no_monotona(self, cadena2):
        f = PointMap.from_mapping(cadena2.carrier, cadena2.carrier, {"a": "b", "b": "a"})
        resultado = is_scott_continuous(f, cadena2, cadena2)
        assert resultado.first_failure().label == "order-preserving"
        assert is_order_preserving(f, cadena2, cadena2).witness == ("a", "b")

    def test_zadeh(self, cadena2, q2):
        f = PointMap.from_mapping(cadena2.carrier, cadena2.carrier, {"a": "b", "b": "b"})
        A = lsubset(cadena2.carrier, q2, {"a": "1"})
        assert zadeh_forward(f, A).to_labels() == ["0", "1"]

    def test_isomorfismo(self, cadena2, anticadena, q2):
        invertida = classical_order("C", ["x", "y"], [("y", "x")], q2)
        f = find_l_order_iso(cadena2, invertida)
        assert f is not None
        assert f.as_dict() == {"a": "y", "b": "x"}
        assert find_l_order_iso(cadena2, anticadena) is None


@hsettings(max_examples=40)
@given(st.sampled_from(["boolean", "goedel-3", "lukasiewicz-3"]), st.data())
def test_subdeg_es_transitivo(nombre, data):
    Q = fixture_quantale(nombre)
    X = Carrier("X", ["x", "y"])
    valores = st.tuples(st.integers(0, Q.size - 1), st.integers(0, Q.size - 1))
    A, B, C = (lsubset(X, Q, dict(zip(X.points, map(Q.label, data.draw(valores))))) for _ in range(3))
    assert Q.leq(Q.mul(subdeg(A, B), subdeg(B, C)), subdeg(A, C))
