"""
Generador de reportes Excel para ejecuciones de suites.

Genera un Excel con 3 hojas:
1. Resumen (configuracion, conteos por estado, tiempos por fase)
2. Instancias (una fila por instancia, estado coloreado)
3. Fallos (primera hoja fallida de cada instancia con su testigo)
"""
import json
from datetime import datetime
from pathlib import Path
from typing import List

from loguru import logger
from openpyxl import Workbook
from openpyxl.styles import Font, PatternFill, Alignment, Border, Side
from openpyxl.utils import get_column_letter

from src.core.models import CheckStatus, render_value
from src.harness.models import SuiteReport


# Estilos
FONT_TITULO = Font(name='Calibri', bold=True, size=14)
FONT_SUBTITULO = Font(name='Calibri', bold=True, size=11)
FONT_HEADER = Font(name='Calibri', bold=True, size=10, color='FFFFFF')
FONT_NORMAL = Font(name='Calibri', size=10)

FILL_HEADER = PatternFill(start_color='4472C4', end_color='4472C4', fill_type='solid')
FILL_EXITO = PatternFill(start_color='C6EFCE', end_color='C6EFCE', fill_type='solid')
FILL_MUESTREO = PatternFill(start_color='FFEB9C', end_color='FFEB9C', fill_type='solid')
FILL_ERROR = PatternFill(start_color='FFC7CE', end_color='FFC7CE', fill_type='solid')
FILL_RECHAZO = PatternFill(start_color='B4C6E7', end_color='B4C6E7', fill_type='solid')

FILL_ESTADO = {
    CheckStatus.PASS: FILL_EXITO,
    CheckStatus.SAMPLED: FILL_MUESTREO,
    CheckStatus.FAIL: FILL_ERROR,
    CheckStatus.REFUSED: FILL_RECHAZO,
}

ALIGN_CENTER = Alignment(horizontal='center', vertical='center')

BORDER_THIN = Border(
    left=Side(style='thin'),
    right=Side(style='thin'),
    top=Side(style='thin'),
    bottom=Side(style='thin'),
)


class ExcelGenerator:
    """Generador de reportes Excel para suites de teoremas"""

    def __init__(self, output_dir: Path):
        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def generar(self, reporte: SuiteReport) -> Path:
        """
        Generar el libro de una suite.

        Returns:
            Ruta del archivo Excel generado
        """
        wb = Workbook()
        self._hoja_resumen(wb, reporte)
        self._hoja_instancias(wb, reporte)
        self._hoja_fallos(wb, reporte)

        if 'Sheet' in wb.sheetnames:
            del wb['Sheet']

        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        ruta = self.output_dir / f"suite_{reporte.suite}_{reporte.config.seed}_{timestamp}.xlsx"
        wb.save(str(ruta))
        logger.info(f"Reporte guardado: {ruta}")
        return ruta

    def _hoja_resumen(self, wb: Workbook, reporte: SuiteReport):
        ws = wb.create_sheet("Resumen", 0)

        ws.merge_cells('A1:D1')
        celda = ws['A1']
        celda.value = f"Suite {reporte.suite}"
        celda.font = FONT_TITULO
        celda.alignment = ALIGN_CENTER

        fila = 3
        info = [("Fecha de ejecucion", datetime.now().strftime('%Y-%m-%d %H:%M:%S'))]
        info += [(clave, str(valor)) for clave, valor in reporte.config.to_dict().items()]
        info.append(("Estado", reporte.status.value.upper()))
        if reporte.refusal:
            info.append(("Rechazo", reporte.refusal))
        for label, valor in info:
            ws.cell(row=fila, column=1, value=label).font = FONT_SUBTITULO
            ws.cell(row=fila, column=2, value=valor).font = FONT_NORMAL
            fila += 1

        fila += 1
        ws.cell(row=fila, column=1, value="INSTANCIAS").font = FONT_SUBTITULO
        fila += 1
        for estado in CheckStatus:
            c1 = ws.cell(row=fila, column=1, value=estado.value)
            c2 = ws.cell(row=fila, column=2, value=reporte.counts()[estado.value])
            c1.font = FONT_NORMAL
            c2.font = FONT_SUBTITULO
            c2.alignment = ALIGN_CENTER
            c1.fill = FILL_ESTADO[estado]
            c2.fill = FILL_ESTADO[estado]
            fila += 1

        if reporte.phases:
            fila += 1
            ws.cell(row=fila, column=1, value="TIEMPOS POR FASE").font = FONT_SUBTITULO
            fila += 1
            for fase, segundos in reporte.phases.items():
                ws.cell(row=fila, column=1, value=fase).font = FONT_NORMAL
                ws.cell(row=fila, column=2, value=f"{segundos:.2f} s").font = FONT_NORMAL
                fila += 1

        ws.column_dimensions['A'].width = 30
        ws.column_dimensions['B'].width = 40

    def _hoja_instancias(self, wb: Workbook, reporte: SuiteReport):
        ws = wb.create_sheet("Instancias")
        self._escribir_headers(ws, ["Indice", "Descriptor", "Estado", "Verificaciones", "Traza"])
        fila = 2
        for instancia in reporte.instances:
            resultado = instancia.result
            datos = [
                instancia.index,
                instancia.descriptor,
                resultado.status.value,
                ", ".join(h.label for h in resultado.children),
                resultado.trace,
            ]
            for col, valor in enumerate(datos, start=1):
                celda = ws.cell(row=fila, column=col, value=valor)
                celda.font = FONT_NORMAL
                celda.border = BORDER_THIN
                if col == 3:
                    celda.fill = FILL_ESTADO[resultado.status]
            fila += 1
        self._ajustar_anchos(ws)

    def _hoja_fallos(self, wb: Workbook, reporte: SuiteReport):
        ws = wb.create_sheet("Fallos")
        self._escribir_headers(ws, ["Indice", "Descriptor", "Axioma", "Testigo", "Traza", "Instancia"])
        fila = 2
        for instancia, falla in reporte.failures():
            datos = [
                instancia.index,
                instancia.descriptor,
                falla.label,
                json.dumps(render_value(falla.witness), ensure_ascii=False),
                falla.trace,
                json.dumps(instancia.serialization, ensure_ascii=False, sort_keys=True)
                if instancia.serialization else '',
            ]
            for col, valor in enumerate(datos, start=1):
                celda = ws.cell(row=fila, column=col, value=valor)
                celda.font = FONT_NORMAL
                celda.border = BORDER_THIN
                if col == 3:
                    celda.fill = FILL_ERROR
            fila += 1
        self._ajustar_anchos(ws)

    def _escribir_headers(self, ws, headers: List[str]):
        """Escribir fila de headers con formato"""
        for col, header in enumerate(headers, start=1):
            celda = ws.cell(row=1, column=col, value=header)
            celda.font = FONT_HEADER
            celda.fill = FILL_HEADER
            celda.alignment = ALIGN_CENTER
            celda.border = BORDER_THIN

        # Filtros automaticos
        ws.auto_filter.ref = f"A1:{get_column_letter(len(headers))}1"
        # Congelar primera fila
        ws.freeze_panes = 'A2'

    def _ajustar_anchos(self, ws):
        """Ajustar ancho de columnas basado en contenido"""
        for col_cells in ws.columns:
            max_len = 0
            col_letter = get_column_letter(col_cells[0].column)

            for cell in col_cells:
                if cell.value:
                    max_len = max(max_len, len(str(cell.value)))

            # Limitar ancho maximo
            ancho = min(max_len + 2, 50)
            ancho = max(ancho, 8)
            ws.column_dimensions[col_letter].width = ancho
