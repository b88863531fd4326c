"""Pruebas de la CLI de punta a punta sobre un workspace aislado"""
import json

import pytest
from loguru import logger

from config.settings import settings
from main import configurar_logger, main

from tests.conftest import FIXTURES_DIR


def _f(nombre: str) -> str:
    return str(FIXTURES_DIR / nombre)


@pytest.fixture(autouse=True)
def _workspace(aislado):
    return aislado


class TestValidate:

    def test_quantale_valido(self, capsys):
        assert main(["validate", _f("q3l.json")]) == 0
        assert "quantale q3l.json" in capsys.readouterr().out

    def test_quantale_corrupto(self, capsys):
        assert main(["validate", _f("q3l_corrupto.json")]) == 1
        assert 'FALLA monotonicity: testigo=["1/2", "1", "1/2"]' in capsys.readouterr().out.replace("'", '"')

    def test_espacio_gc2(self, capsys):
        assert main(["validate", _f("espacio_gc2_corrupto.json")]) == 1
        assert "FALLA GC2" in capsys.readouterr().out

    def test_relacion_ap1(self, capsys):
        assert main(["validate", _f("relacion_ap1_corrupta.json")]) == 1
        assert "FALLA AP1" in capsys.readouterr().out

    @pytest.mark.parametrize("archivo", ["difuso3.json", "espacio_cadena.json", "relacion_identidad.json",
                                         "mapa_scott.json"])
    def test_validos(self, archivo):
        assert main(["validate", _f(archivo)]) == 0

    def test_archivo_inexistente(self, capsys):
        assert main(["validate", "no_existe.json"]) == 2
        assert "ERROR [PARSEO]" in capsys.readouterr().out


class TestWorkspace:

    def test_flujo_completo(self, tmp_path, capsys):
        assert main(["load", _f("cadena2.json"), "--as", "C2"]) == 0
        assert main(["analyze", "C2"]) == 0
        analisis = json.loads((settings.output_dir / "analyze_C2.json").read_text(encoding="utf-8"))
        assert analisis

        assert main(["construct", "closure-of-domain", "C2", "--as", "X"]) == 0
        assert main(["analyze", "X"]) == 0
        salida = capsys.readouterr().out
        assert "cerrados dirigidos" in salida

        ruta = tmp_path / "x.dot"
        assert main(["export-dot", "X", "-o", str(ruta)]) == 0
        assert ruta.read_text(encoding="utf-8").startswith("digraph")

    def test_load_duplicado(self, capsys):
        assert main(["load", _f("cadena2.json"), "--as", "C2"]) == 0
        assert main(["load", _f("anticadena.json"), "--as", "C2"]) == 2
        assert "Ya existe" in capsys.readouterr().out
        assert main(["load", _f("anticadena.json"), "--as", "C2", "--reemplazar"]) == 0

    def test_load_invalido(self, capsys):
        assert main(["load", _f("espacio_gc2_corrupto.json"), "--as", "malo"]) == 1
        assert "no valida" in capsys.readouterr().out

    def test_nombre_desconocido(self, capsys):
        main(["load", _f("cadena2.json"), "--as", "cadena"])
        assert main(["analyze", "caden"]) == 2
        assert "quiza: cadena" in capsys.readouterr().out

    def test_construct_aridad(self):
        main(["load", _f("cadena2.json"), "--as", "C2"])
        assert main(["construct", "compose", "C2", "--as", "Z"]) == 2


class TestSuite:

    def test_core(self, capsys):
        codigo = main(["suite", "core", "--seed", "7", "--instances", "3", "--max-size", "3", "--workers", "1"])
        assert codigo == 0
        assert "Suite core: PASS" in capsys.readouterr().out
        assert (settings.output_dir / "suite_core_7.json").exists()

    def test_suite_desconocida(self, capsys):
        assert main(["suite", "oracel"]) == 2
        assert "oracle" in capsys.readouterr().out

    def test_oracle_sobre_lukasiewicz(self, capsys):
        assert main(["suite", "oracle", "--quantale", "lukasiewicz-3", "--workers", "1"]) == 2
        assert "Rechazada" in capsys.readouterr().out


class TestLogger:

    def test_bitacora_diaria(self):
        ruta = configurar_logger()
        logger.info("hola")
        logger.remove()
        assert ruta.parent == settings.logs_dir
        assert ruta.name.startswith("workbench_")
        contenido = ruta.read_text(encoding='utf-8')
        assert "test_bitacora_diaria:" in contenido
        assert contenido.rstrip().endswith("| hola")
