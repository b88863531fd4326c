"""Pruebas del modulo quantale: catalogo, axiomas y residuacion"""
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from src.core.errors import StructuralError, UnknownFixtureError
from src.core.models import CheckStatus
from src.formats.json_parser import load_definition
from src.quantale import (
    CATALOGO_BASE, FiniteQuantale, check_residuation_laws, fixture_quantale, is_integral,
    residuate, validate_quantale,
)
from tests.conftest import FIXTURES_DIR

CATALOGO = CATALOGO_BASE + ["lukasiewicz-4", "goedel-4", "product-goedel-2x2", "product-lukasiewicz-2x3"]


@pytest.mark.parametrize("nombre", CATALOGO)
def test_catalogo_valida(nombre):
    Q = fixture_quantale(nombre)
    assert validate_quantale(Q).passed
    assert check_residuation_laws(Q).passed


def test_residuacion_lukasiewicz(l3):
    assert residuate(l3, "1/2", "0") == "1/2"
    assert residuate(l3, "1", "1/2") == "1/2"
    assert residuate(l3, "1/2", "1/2") == "1"
    assert residuate(l3, "0", "0") == "1"


def test_residuacion_goedel():
    G = fixture_quantale("goedel-3")
    assert residuate(G, "1/2", "0") == "0"
    assert residuate(G, "1", "1/2") == "1/2"
    assert residuate(G, "1/2", "1") == "1"


def test_integralidad(q2):
    assert is_integral(q2)
    N = fixture_quantale("nonintegral-3")
    assert not is_integral(N)
    assert N.label(N.unit) == "u"
    assert N.label(N.top) == "1"


def test_fixture_explicito_coincide_con_catalogo(l3):
    assert load_definition(FIXTURES_DIR / "q3l.json") == l3


def test_tensor_corrupto_falla_monotonia():
    Q = load_definition(FIXTURES_DIR / "q3l_corrupto.json")
    reporte = validate_quantale(Q)
    assert reporte.status == CheckStatus.FAIL
    falla = reporte.first_failure()
    assert falla.label == "monotonicity"
    assert falla.witness == ("1/2", "1", "1/2")


def test_fixture_desconocido_sugiere():
    with pytest.raises(UnknownFixtureError) as error:
        fixture_quantale("lukasiewich-3")
    assert "lukasiewicz-3" in error.value.sugerencias


def test_tensor_incompleto():
    with pytest.raises(StructuralError):
        FiniteQuantale(["0", "1"], [("0", "1")], {("0", "0"): "0"}, "1")


def test_orden_sin_reticulo_rechaza_distributividad():
    tensor = {(a, b): "a" for a in "ab" for b in "ab"}
    Q = FiniteQuantale(["a", "b"], [], tensor, "a", name="antichain")
    assert not Q.is_lattice
    reporte = validate_quantale(Q)
    assert reporte.first_failure().label == "lattice"
    assert reporte.find("distributivity").status == CheckStatus.REFUSED
    assert check_residuation_laws(Q).status == CheckStatus.REFUSED


def test_leyes_muestreadas_en_quantales_grandes():
    Q = fixture_quantale("lukasiewicz-5")
    reporte = check_residuation_laws(Q)
    assert reporte.status == CheckStatus.SAMPLED
    assert reporte.passed


@hsettings(max_examples=60)
@given(st.sampled_from(["lukasiewicz-3", "goedel-3", "nonintegral-3", "product-goedel-2x2"]), st.data())
def test_adjuncion(nombre, data):
    Q = fixture_quantale(nombre)
    a, b, c = (data.draw(st.integers(0, Q.size - 1)) for _ in range(3))
    assert Q.leq(Q.mul(a, c), b) == Q.leq(c, Q.imp(a, b))


@hsettings(max_examples=60)
@given(st.sampled_from(CATALOGO_BASE), st.data())
def test_residuacion_unidad(nombre, data):
    Q = fixture_quantale(nombre)
    a = data.draw(st.integers(0, Q.size - 1))
    assert Q.imp(Q.unit, a) == a
    assert Q.imp(Q.bottom, a) == Q.top
