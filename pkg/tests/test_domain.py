"""Pruebas de way-below, compactos, continuidad y algebraicidad"""

from hypothesis import given, settings as hsettings, strategies as st

from config.settings import settings
from src.core.models import CheckStatus
from src.domain import (
    analyze_domain, cache_dominios, check_basis_lemma, check_canonical_isos, check_compactness_criteria,
    check_way_below_lemmas, compact_elements, is_algebraic, is_continuous, k_subset, way_below, way_below_alt,
)
from src.harness.generators import gen_l_dcpo
from src.harness.models import GenConfig
from src.core.utils import rng_for
from src.order import classical_order


def test_way_below_en_cadena(cadena2):
    assert way_below(cadena2, "a").to_labels() == ["1", "0"]
    assert way_below(cadena2, "b").to_labels() == ["1", "1"]
    assert compact_elements(cadena2) == ("a", "b")


def test_formas_de_way_below_coinciden(cadena2, anticadena):
    for P in (cadena2, anticadena):
        for x in P.points:
            assert way_below(P, x) == way_below_alt(P, x)


def test_finitos_clasicos_son_algebraicos(q2):
    P = classical_order("diamante", ["0", "a", "b", "1"],
                        [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], q2)
    assert is_continuous(P).passed
    assert is_algebraic(P).passed
    assert k_subset(P, "1").to_labels() == ["1", "1", "1", "1"]


def test_lemas_de_way_below(cadena2):
    lemas = check_way_below_lemmas(cadena2)
    assert lemas.passed
    assert lemas.find("interpolation") is not None
    assert check_compactness_criteria(cadena2).passed
    assert check_basis_lemma(cadena2).passed
    assert check_canonical_isos(cadena2).passed


def test_analisis_completo(cadena2):
    analisis = analyze_domain(cadena2)
    assert analisis.is_l_dcpo
    assert analisis.is_continuous
    assert analisis.is_algebraic
    datos = analisis.to_dict()
    assert datos['compact_points'] == ["a", "b"]
    assert datos['way_below'] == {"a": ["1", "0"], "b": ["1", "1"]}


def test_analisis_parcial_por_tope(q2, monkeypatch):
    P = classical_order("ancho", ["a", "b", "c"], [], q2)
    monkeypatch.setattr(settings, "cap_enumeracion", 4)
    analisis = analyze_domain(P)
    assert analisis.l_dcpo.status == CheckStatus.REFUSED
    assert analisis.continuous.status == CheckStatus.REFUSED
    assert analisis.omisiones


def test_cache_reutiliza_tablas(cadena2):
    cache_dominios.limpiar()
    way_below(cadena2, "a")
    way_below(cadena2, "b")
    assert cache_dominios.estadisticas()['tablas_ideales'] == 1


@hsettings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from(["boolean", "goedel-3", "lukasiewicz-3"]))
def test_formas_coinciden_en_dcpos_generados(semilla, nombre):
    cfg = GenConfig(seed=semilla, quantale=nombre, max_size=3)
    P = gen_l_dcpo(cfg, rng_for(semilla, "prueba"))
    assert cache_dominios.way_below(P) == cache_dominios.way_below_alt(P)
    assert check_way_below_lemmas(P).passed
    assert check_compactness_criteria(P).passed
