"""Pruebas de generadores, oraculo clasico y suites de teoremas"""
import json

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from src.core.errors import AxiomError, PreconditionError, UnknownSuiteError
from src.core.models import CheckStatus
from src.core.utils import rng_for, sub_seed
from src.closure.models import ClosureSpace
from src.closure.validation import is_interpolative, is_l_closure_space, validate_generalized
from src.domain.way_below import cache_dominios
from src.formats.json_parser import DefinitionParser
from src.harness.generators import gen_interpolative_space, gen_l_dcpo, gen_l_ordered_set
from src.harness.models import GenConfig
from src.harness.oracle import classical_oracle
from src.harness import generators, suites
from src.harness.suites import SUITES, run_suite
from src.order.dcpo import is_l_dcpo
from src.order.lordered import classical_order, validate_l_order
from src.reports.suite_report import suite_json


def _cfg(**kwargs) -> GenConfig:
    base = dict(seed=7, instances=4, max_size=3, budget=64, attempts=200, workers=1)
    base.update(kwargs)
    return GenConfig(**base)


class TestGeneradores:

    def test_sub_semillas_deterministas(self):
        assert sub_seed(7, "core", 0) == sub_seed(7, "core", 0)
        assert sub_seed(7, "core", 0) != sub_seed(7, "core", 1)

    def test_misma_semilla_misma_estructura(self):
        cfg = _cfg(quantale="lukasiewicz-3")
        a = gen_l_ordered_set(cfg, rng_for(7, "P", 0))
        b = gen_l_ordered_set(cfg, rng_for(7, "P", 0))
        assert a == b

    @hsettings(max_examples=25, deadline=None)
    @given(semilla=st.integers(min_value=0, max_value=10_000),
           quantale=st.sampled_from(["boolean", "lukasiewicz-3", "goedel-3"]))
    def test_l_ordenes_generados_validan(self, semilla, quantale):
        P = gen_l_ordered_set(_cfg(quantale=quantale), rng_for(semilla, "gen"))
        assert validate_l_order(P).passed
        assert 1 <= P.size <= 3

    @hsettings(max_examples=15, deadline=None)
    @given(semilla=st.integers(min_value=0, max_value=10_000))
    def test_l_dcpos_generados(self, semilla):
        assert is_l_dcpo(gen_l_dcpo(_cfg(), rng_for(semilla, "dcpo"))).passed

    @pytest.mark.parametrize("ruta", ["domain", "lclosure", "random"])
    def test_espacios_interpolativos(self, ruta):
        S = gen_interpolative_space(_cfg(max_size=2), rng_for(11, ruta), ruta)
        assert validate_generalized(S).passed
        assert is_interpolative(S).passed

    @hsettings(max_examples=20, deadline=None)
    @given(semilla=st.integers(min_value=0, max_value=10_000))
    def test_ruta_lclosure_siempre_de_l_cerradura(self, semilla):
        S = gen_interpolative_space(_cfg(max_size=2), rng_for(semilla, "lclosure"), "lclosure")
        assert is_l_closure_space(S).passed
        assert is_interpolative(S).passed

    def test_rechazo_filtrado_por_l_cerradura(self):
        S = generators._espacio_aleatorio(_cfg(max_size=2), rng_for(3, "lc"), l_cerradura=True)
        assert S is not None
        assert is_l_closure_space(S).passed

    def test_ruta_desconocida(self):
        with pytest.raises(PreconditionError, match="Ruta desconocida"):
            gen_interpolative_space(_cfg(), rng_for(1), "otra")


class TestOraculo:

    def test_cadena_y_anticadena(self, cadena2, anticadena):
        assert classical_oracle("all", cadena2).status == CheckStatus.PASS
        assert classical_oracle("all", anticadena).status == CheckStatus.PASS

    def test_diamante(self, q2):
        D = classical_order("diamante", ["0", "a", "b", "1"],
                            [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], q2)
        assert classical_oracle("waybelow", D).passed

    def test_requiere_q2(self, l3):
        P = classical_order("c", ["a", "b"], [("a", "b")], l3)
        with pytest.raises(PreconditionError, match="Q2"):
            classical_oracle("all", P)

    def test_oraculo_desconocido(self, cadena2):
        with pytest.raises(PreconditionError, match="Oraculo desconocido"):
            classical_oracle("nada", cadena2)


class TestSuites:

    def test_core(self):
        reporte = run_suite("core", _cfg())
        assert [i.index for i in reporte.instances] == [0, 1, 2, 3]
        assert reporte.exit_code() == 0

    def test_reporte_determinista(self):
        primero = suite_json(run_suite("core", _cfg(seed=21)))
        segundo = suite_json(run_suite("core", _cfg(seed=21)))
        assert primero == segundo
        assert "phases" not in json.loads(primero)

    def test_workers_no_cambian_el_resultado(self):
        secuencial = suite_json(run_suite("core", _cfg(seed=5, instances=3)))
        paralelo = suite_json(run_suite("core", _cfg(seed=5, instances=3, workers=2)))
        assert secuencial == paralelo

    def test_suite_desconocida(self):
        with pytest.raises(UnknownSuiteError) as info:
            run_suite("oracel")
        assert "oracle" in info.value.sugerencias

    def test_oracle_rechaza_quantale_no_booleano(self):
        reporte = run_suite("oracle", _cfg(quantale="lukasiewicz-3"))
        assert reporte.status == CheckStatus.REFUSED
        assert reporte.exit_code() == 2
        assert reporte.instances == []

    def test_dense_rechaza_no_integral(self):
        reporte = run_suite("dense", _cfg(quantale="nonintegral-3"))
        assert reporte.exit_code() == 2
        assert "integral" in reporte.refusal

    @pytest.mark.parametrize("nombre", ["oracle", "waybelow", "rep1", "rep2", "dense", "rep3", "equiv"])
    def test_suites_sin_fallas(self, nombre):
        reporte = run_suite(nombre, _cfg(instances=2, max_size=2))
        assert reporte.failures() == []
        assert reporte.exit_code() in (0, 2, 3)
        assert len(reporte.instances) == 2

    def test_registro_completo(self):
        assert set(SUITES) == {"core", "oracle", "waybelow", "rep1", "rep2", "rep3", "dense", "equiv"}

    def test_axioma_violado_queda_en_el_reporte(self, monkeypatch):
        def romper(P):
            raise AxiomError(f"{P.name} no es continuo")

        monkeypatch.setattr(suites, "closure_of_domain", romper)
        reporte = run_suite("rep1", _cfg(seed=1, instances=2, max_size=2))
        assert reporte.exit_code() == 1
        assert len(reporte.failures()) == 2
        for instancia in reporte.instances:
            assert instancia.descriptor == "axioma violado"
            assert "no es continuo" in instancia.result.trace
            assert isinstance(DefinitionParser().parse_documento(instancia.serialization), ClosureSpace)

    def test_cache_de_dominios_no_sobrevive_a_la_suite(self, cadena2):
        cache_dominios.way_below(cadena2)
        assert cache_dominios.estadisticas()["tablas_ideales"] >= 1
        run_suite("waybelow", _cfg(instances=2, max_size=2))
        assert cache_dominios.estadisticas() == {"tablas_ideales": 0, "tablas_dirigidos": 0, "compactos": 0}
