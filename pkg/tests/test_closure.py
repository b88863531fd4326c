"""Pruebas de espacios de cerradura, 𝔠(X), construcciones y subespacios densos"""
import pytest

from config.settings import settings
from src.core.errors import IntegralityError, PreconditionError, ResourceCapError, StructuralError
from src.core.models import CheckStatus
from src.closure import (
    ClosureSpace, canonical_approximant, check_algebraicity_theorem, check_continuity_theorem,
    check_fixed_point_characterization, check_representation_three, close, closure_of_algebraic,
    closure_of_domain, dir_closed_sets, directed_family_over_psi, down_closure_space, identity_operator,
    is_dense_subspace, is_directed_closed, is_interpolative, is_l_closure_space, restrict_to_subspace,
    restriction_isomorphism, validate_generalized, validate_space,
)
from src.closure.models import PointGeneratedOperator, TableBackedOperator
from src.formats.json_parser import load_definition
from src.order import Carrier, classical_order, find_l_order_iso, lsubset, validate_l_order
from src.quantale import fixture_quantale
from tests.conftest import FIXTURES_DIR


class TestValidacion:

    def test_cadena_es_de_l_cerradura(self, espacio_cadena):
        reporte = validate_space(espacio_cadena)
        assert reporte.passed
        assert is_l_closure_space(espacio_cadena).passed
        assert espacio_cadena.flag("interpolative") == "pass"

    def test_gc2_corrupto(self):
        S = load_definition(FIXTURES_DIR / "espacio_gc2_corrupto.json")
        falla = validate_generalized(S).first_failure()
        assert falla.label == "GC2"
        assert falla.witness == ("a", "c")
        reporte = validate_space(S)
        assert reporte.status == CheckStatus.FAIL
        assert reporte.find("interpolative").status == CheckStatus.REFUSED

    def test_interpolacion_requiere_generalizado(self):
        S = load_definition(FIXTURES_DIR / "espacio_gc2_corrupto.json")
        with pytest.raises(PreconditionError):
            is_interpolative(S)

    def test_operador_identidad_por_tabla(self, q2):
        X = Carrier("X", ["x", "y"])
        S = ClosureSpace(X, identity_operator(X, q2))
        assert validate_space(S).passed
        A = lsubset(X, q2, {"x": "1"})
        assert close(S, A) == A

    def test_tabla_incompleta(self, q2):
        X = Carrier("X", ["x"])
        S = ClosureSpace(X, TableBackedOperator(X, q2, {(1,): (1,)}))
        with pytest.raises(StructuralError):
            close(S, lsubset(X, q2, {}))

    def test_cerradura_por_puntos(self, espacio_cadena, q2):
        A = lsubset(espacio_cadena.carrier, q2, {"b": "1"})
        assert close(espacio_cadena, A).to_labels() == ["1", "1"]

    def test_no_l_cerradura_es_informativo(self, q2):
        X = Carrier("X", ["a", "b"])
        S = ClosureSpace(X, PointGeneratedOperator(X, q2, [(0, 1), (0, 1)]))
        reporte = validate_space(S)
        assert reporte.passed
        assert reporte.find("l-closure") is None
        assert "no es L-cerradura" in reporte.find("l-closure-flag").trace


class TestCerradosDirigidos:

    def test_cerrados_de_cadena(self, espacio_abajo, cadena2):
        C = dir_closed_sets(espacio_abajo)
        assert [U.to_labels() for U in C.points] == [["1", "0"], ["1", "1"]]
        assert validate_l_order(C).passed
        assert find_l_order_iso(C, cadena2) is not None

    def test_cerrados_de_anticadena(self, anticadena):
        C = dir_closed_sets(down_closure_space(anticadena))
        assert C.size == 2
        assert find_l_order_iso(C, anticadena) is not None

    def test_dc_con_testigo(self, espacio_abajo, q2):
        U = lsubset(espacio_abajo.carrier, q2, {"b": "1"})
        assert not is_directed_closed(espacio_abajo, U).passed
        vacio = lsubset(espacio_abajo.carrier, q2, {})
        assert not is_directed_closed(espacio_abajo, vacio).passed

    def test_punto_fijo_y_aproximante(self, espacio_abajo):
        C = dir_closed_sets(espacio_abajo)
        for U in C.points:
            assert check_fixed_point_characterization(espacio_abajo, U)
            _psi, D, verificacion = directed_family_over_psi(espacio_abajo, U)
            assert verificacion.passed
            assert canonical_approximant(espacio_abajo, U).carrier == C.carrier

    def test_teoremas_de_continuidad_y_algebraicidad(self, espacio_abajo):
        assert check_continuity_theorem(espacio_abajo).passed
        assert check_algebraicity_theorem(espacio_abajo).passed

    def test_tope_de_enumeracion(self, q2, monkeypatch):
        P = classical_order("tres", ["a", "b", "c"], [("a", "b")], q2)
        S = down_closure_space(P)
        monkeypatch.setattr(settings, "cap_enumeracion", 4)
        with pytest.raises(ResourceCapError):
            dir_closed_sets(S)


class TestConstrucciones:

    def test_cerradura_de_dominio(self, cadena2):
        S = closure_of_domain(cadena2)
        assert S.point_closure_table == ((1, 0), (1, 1))
        assert S.flag("interpolative") == "pass"
        assert find_l_order_iso(dir_closed_sets(S), cadena2) is not None

    def test_cerradura_de_algebraico(self, cadena2, espacio_abajo):
        S = closure_of_algebraic(cadena2)
        assert S.size == 2
        assert S.point_closure_table == espacio_abajo.point_closure_table
        assert is_l_closure_space(S).passed

    def test_restriccion_por_puntos(self, espacio_abajo):
        Y = restrict_to_subspace(espacio_abajo, ["b"])
        assert Y.points == ("b",)
        assert Y.point_closure_table == ((1,),)

    def test_restriccion_por_tabla(self, q2):
        X = Carrier("X", ["x", "y"])
        S = ClosureSpace(X, identity_operator(X, q2))
        Y = restrict_to_subspace(S, ["y"])
        assert isinstance(Y.operator, TableBackedOperator)
        assert Y.size == 1

    def test_restriccion_vacia(self, espacio_abajo):
        with pytest.raises(StructuralError):
            restrict_to_subspace(espacio_abajo, [])


class TestSubespaciosDensos:

    def test_todo_el_carrier_es_denso(self, espacio_abajo):
        assert is_dense_subspace(espacio_abajo, ["a", "b"]).passed

    def test_subespacio_no_denso(self, espacio_abajo):
        resultado = is_dense_subspace(espacio_abajo, ["a"])
        assert not resultado.passed
        assert resultado.witness == ("b", "b")

    def test_compactos_son_densos(self, q2):
        P = classical_order("diamante", ["0", "a", "b", "1"],
                            [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], q2)
        S = closure_of_domain(P)
        assert is_dense_subspace(S, P.points).passed
        f, iso = restriction_isomorphism(S, P.points)
        assert iso.passed
        assert f.is_bijection()

    def test_quantale_no_integral(self):
        N = fixture_quantale("nonintegral-3")
        S = down_closure_space(classical_order("P", ["a", "b"], [("a", "b")], N))
        with pytest.raises(IntegralityError):
            is_dense_subspace(S, ["a"])

    def test_representacion_por_denso(self, espacio_abajo, cadena2):
        reporte = check_representation_three(espacio_abajo, ["a", "b"], cadena2)
        assert reporte.passed
        assert reporte.find("iso-P").passed
