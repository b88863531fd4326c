"""Pruebas de relaciones aproximables, transpuestas de Scott y equivalencia"""
import pytest

from src.core.errors import PreconditionError, StructuralError
from src.core.models import CheckStatus
from src.approx import (
    apply_to_closed, approximable_relations, check_composition_associativity, check_equivalence_suite,
    check_scott_map, compose_relations,
    compose_scott_maps, identity_relation, identity_scott_map, psi_of, scott_maps, theta_of,
    validate_approximable,
)
from src.approx.models import ApproxRelation
from src.closure import closure_of_domain, dir_closed_sets, down_closure_space
from src.formats.json_parser import load_definition
from tests.conftest import FIXTURES_DIR


def test_identidad_es_aproximable(espacio_cadena):
    R = identity_relation(espacio_cadena)
    assert R.theta == espacio_cadena.point_closure_table
    assert validate_approximable(R).passed


def test_fixture_de_identidad(espacio_cadena):
    R = load_definition(FIXTURES_DIR / "relacion_identidad.json")
    assert R == identity_relation(espacio_cadena)


def test_ap1_con_testigo():
    R = load_definition(FIXTURES_DIR / "relacion_ap1_corrupta.json")
    reporte = validate_approximable(R)
    falla = reporte.first_failure()
    assert falla.label == "AP1"
    assert falla.witness == ("a",)


def test_relacion_sobre_espacio_no_interpolativo():
    S = load_definition(FIXTURES_DIR / "espacio_gc2_corrupto.json")
    R = ApproxRelation(S, S, S.point_closure_table)
    with pytest.raises(PreconditionError):
        validate_approximable(R)


def test_psi_de_identidad(espacio_cadena):
    assert psi_of(identity_relation(espacio_cadena)) == identity_scott_map(espacio_cadena)


def test_relaciones_y_mapeos_en_biyeccion(espacio_cadena):
    relaciones = approximable_relations(espacio_cadena, espacio_cadena)
    mapas = scott_maps(espacio_cadena, espacio_cadena)
    assert len(relaciones) == len(mapas) == 3
    for R in relaciones:
        assert theta_of(psi_of(R)) == R
    for psi in mapas:
        assert psi_of(theta_of(psi)) == psi


def test_imagen_de_cerrados(espacio_cadena):
    R = identity_relation(espacio_cadena)
    for U in dir_closed_sets(espacio_cadena).points:
        assert apply_to_closed(R, U) == U


def test_composicion_con_identidad(espacio_cadena):
    identidad = identity_relation(espacio_cadena)
    for R in approximable_relations(espacio_cadena, espacio_cadena):
        assert compose_relations(R, identidad) == R
        assert compose_relations(identidad, R) == R
        assert psi_of(compose_relations(R, R)) == compose_scott_maps(psi_of(R), psi_of(R))


def test_composicion_incompatible(espacio_cadena, anticadena):
    otro = identity_relation(down_closure_space(anticadena))
    with pytest.raises(StructuralError):
        compose_relations(otro, identity_relation(espacio_cadena))


def test_mapa_de_scott_desde_archivo():
    psi = load_definition(FIXTURES_DIR / "mapa_scott.json")
    assert check_scott_map(psi).passed
    assert theta_of(psi) == identity_relation(psi.source)


def test_equivalencia_exhaustiva(espacio_cadena, cadena2):
    reporte = check_equivalence_suite(espacio_cadena, espacio_cadena, P=cadena2)
    assert reporte.status == CheckStatus.PASS
    assert reporte.find("essentially-surjective").passed
    assert reporte.find("associativity").status == CheckStatus.PASS


def test_equivalencia_muestreada_sobre_presupuesto(espacio_cadena):
    reporte = check_equivalence_suite(espacio_cadena, espacio_cadena, presupuesto=4)
    assert reporte.status == CheckStatus.SAMPLED
    assert reporte.find("faithful").status == CheckStatus.SAMPLED


def test_equivalencia_entre_espacios_distintos(cadena2, anticadena):
    X = closure_of_domain(cadena2)
    Y = down_closure_space(anticadena)
    assert check_equivalence_suite(X, Y).passed


def test_composicion_asociativa(espacio_cadena):
    rels = approximable_relations(espacio_cadena, espacio_cadena)
    resultado = check_composition_associativity(rels, rels, rels)
    assert resultado.status == CheckStatus.PASS
    assert resultado.trace == "27 ternas"


def test_composicion_asociativa_muestreada(espacio_cadena):
    rels = approximable_relations(espacio_cadena, espacio_cadena)
    resultado = check_composition_associativity(rels, rels, rels, limite=5)
    assert resultado.status == CheckStatus.SAMPLED
    assert resultado.trace == "5 ternas"
