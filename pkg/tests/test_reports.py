"""Pruebas de reportes de suite (texto, JSON, Excel) y exportacion DOT"""
import json

import pytest
from openpyxl import load_workbook

from config.settings import settings
from src.core.errors import ResourceCapError
from src.core.models import CheckResult
from src.harness.models import GenConfig, InstanceResult, SuiteReport
from src.order.lordered import classical_order, from_triples
from src.quantale.fixtures import fixture_quantale
from src.reports.dot_export import export_dot, to_dot, u_cut_graph
from src.reports.excel_generator import ExcelGenerator
from src.reports.suite_report import guardar_reporte, suite_detail, suite_json, suite_text


@pytest.fixture
def reporte_con_falla():
    cfg = GenConfig(seed=3, instances=2, max_size=2, workers=1)
    reporte = SuiteReport(suite="core", config=cfg)
    reporte.instances = [
        InstanceResult(0, "P |P|=1", CheckResult.all_of("core", [CheckResult.ok("l-order")])),
        InstanceResult(1, "P |P|=2", CheckResult.all_of("core", [
            CheckResult.ok("l-order"),
            CheckResult.fail("transitivity", ("a", "b", "a"), "e(a,b)⊗e(b,a) > e(a,a)"),
        ]), {"kind": "lordered"}),
    ]
    reporte.phases["instancias"] = 0.5
    return reporte


class TestDot:

    def test_cadena(self, cadena2):
        assert to_dot(cadena2) == (
            'digraph "cadena2" {\n'
            '  rankdir=BT;\n'
            '  n0 [label="a"];\n'
            '  n1 [label="b"];\n'
            '  n0 -> n1;\n'
            '}\n'
        )

    def test_reduccion_transitiva(self, q2):
        P = classical_order("c3", ["a", "b", "c"], [("a", "b"), ("b", "c")], q2)
        assert sorted(u_cut_graph(P).edges()) == [(0, 1), (1, 2)]

    def test_grado_distinto_de_la_unidad_lleva_etiqueta(self):
        Q = fixture_quantale("nonintegral-3")
        P = from_triples("P", ["a", "b"], [("a", "b", "1")], Q)
        assert '  n0 -> n1 [label="1"];' in to_dot(P)

    def test_nombres_escapados(self, q2):
        P = classical_order('con "comillas"', ["x"], [], q2)
        assert to_dot(P).startswith('digraph "con \\"comillas\\"" {')

    def test_tope(self, cadena2, monkeypatch):
        monkeypatch.setattr(settings, "max_dot", 1)
        with pytest.raises(ResourceCapError):
            to_dot(cadena2)

    def test_exportar(self, cadena2, tmp_path):
        ruta = export_dot(cadena2, tmp_path / "dot" / "cadena2.dot")
        assert ruta.read_text(encoding="utf-8") == to_dot(cadena2)


class TestReportesDeSuite:

    def test_texto(self, reporte_con_falla):
        texto = suite_text(reporte_con_falla)
        assert texto.startswith("Suite core: FAIL")
        assert "FALLA #1 [P |P|=2] transitivity" in texto
        assert "instancias: 0.50 s" in texto

    def test_detalle_incluye_arbol(self, reporte_con_falla):
        assert "[FAIL   ] transitivity" in suite_detail(reporte_con_falla)

    def test_json_sin_tiempos(self, reporte_con_falla):
        datos = json.loads(suite_json(reporte_con_falla))
        assert "phases" not in datos
        assert datos["counts"] == {"pass": 1, "fail": 1, "sampled": 0, "refused": 0}
        assert datos["instances"][1]["instance"] == {"kind": "lordered"}
        assert datos["instances"][1]["result"]["witness"] == ["a", "b", "a"]

    def test_rechazo(self):
        reporte = SuiteReport(suite="oracle", config=GenConfig(workers=1), refusal="requiere Q2")
        assert "Rechazada: requiere Q2" in suite_text(reporte)
        assert reporte.exit_code() == 2

    def test_guardar(self, reporte_con_falla, tmp_path):
        ruta_txt, ruta_json = guardar_reporte(reporte_con_falla, tmp_path)
        assert ruta_txt.name == "suite_core_3.txt"
        assert json.loads(ruta_json.read_text(encoding="utf-8"))["status"] == "fail"


class TestExcel:

    def test_hojas(self, reporte_con_falla, tmp_path):
        ruta = ExcelGenerator(tmp_path).generar(reporte_con_falla)
        wb = load_workbook(ruta)
        assert wb.sheetnames == ["Resumen", "Instancias", "Fallos"]
        assert wb["Resumen"]["A1"].value == "Suite core"
        fallos = wb["Fallos"]
        assert fallos.max_row == 2
        assert fallos.cell(row=2, column=3).value == "transitivity"
        assert json.loads(fallos.cell(row=2, column=4).value) == ["a", "b", "a"]
        assert wb["Instancias"].cell(row=3, column=3).value == "fail"
